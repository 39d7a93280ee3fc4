//! Reference implementations shared by the integration tests. Nothing here
//! calls into the crate's straightening or elimination code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

/// Row-reduced echelon form by plain rational Gauss–Jordan. Returns the
/// nonzero rows, each with its pivot column.
pub fn rref(mut rows: Vec<Vec<Q>>) -> Vec<(usize, Vec<Q>)> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut out: Vec<(usize, Vec<Q>)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        r += 1;
    }
    for row in rows.into_iter().take(r) {
        let pivot = row.iter().position(|v| !v.is_zero()).expect("nonzero row");
        out.push((pivot, row));
    }
    out
}

pub fn rank(rows: Vec<Vec<Q>>) -> usize {
    rref(rows).len()
}

/// Kernel basis from the reduced form: one vector per free column, 1 there
/// and 0 at the other free columns.
pub fn kernel(rows: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    let reduced = rref(rows);
    let pivots: Vec<usize> = reduced.iter().map(|(p, _)| *p).collect();
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (p, row) in &reduced {
                v[*p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Reduces `v` against a reduced echelon basis; zero iff `v` is in the span.
pub fn residue(v: &[Q], basis: &[(usize, Vec<Q>)]) -> Vec<Q> {
    let mut v = v.to_vec();
    for (p, row) in basis {
        if !v[*p].is_zero() {
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
    }
    v
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn abs_max(v: &[Q]) -> Q {
    v.iter().map(|x| x.abs()).fold(Q::zero(), |a, b| if b > a { b } else { a })
}

/// All edges `(i, j)`, `1 ≤ i < j ≤ n+1`, lexicographically.
pub fn edges(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            out.push((i, j));
        }
    }
    out
}

/// All `d`-subsets of `0..m` in lexicographic order.
pub fn subsets(m: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for x in start..m {
            cur.push(x);
            go(x + 1, m, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, d, &mut Vec::new(), &mut out);
    out
}

/// Sorts a list of distinct indices, returning the permutation sign.
pub fn sort_with_sign(v: &mut [usize]) -> i64 {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Exterior,
    Polynomial,
}

/// A degree-`d` quotient of the exterior algebra (OS) or the square-free
/// polynomial ring (VG) on the edges of `A_n`, by the ideal generated by
/// the three-term relations. Coordinates are indexed by `d`-subsets of
/// edges.
pub struct Quotient {
    pub kind: Kind,
    pub n: usize,
    pub d: usize,
    pub edges: Vec<(usize, usize)>,
    pub monomials: Vec<Vec<usize>>,
    pub ideal: Vec<(usize, Vec<Q>)>,
}

impl Quotient {
    pub fn new(kind: Kind, n: usize, d: usize) -> Self {
        let edges = edges(n);
        let monomials = subsets(edges.len(), d);
        let index = |i: usize, j: usize| edges.iter().position(|&e| e == (i, j)).unwrap();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        if d >= 2 {
            let others = subsets(edges.len(), d - 2);
            for i in 1..=n + 1 {
                for j in i + 1..=n + 1 {
                    for k in j + 1..=n + 1 {
                        let (ij, ik, jk) = (index(i, j), index(i, k), index(j, k));
                        // Exterior: e_ik e_jk − e_ij e_jk + e_ij e_ik.
                        // Polynomial: x_ij x_jk + x_jk x_ki + x_ki x_ij with
                        // x_ki = −x_ik gives x_ij x_jk − x_jk x_ik − x_ik x_ij.
                        let relation: Vec<(i64, [usize; 2])> = match kind {
                            Kind::Exterior => vec![(1, [ik, jk]), (-1, [ij, jk]), (1, [ij, ik])],
                            Kind::Polynomial => vec![(1, [ij, jk]), (-1, [jk, ik]), (-1, [ik, ij])],
                        };
                        for rest in &others {
                            let mut row = vec![Q::zero(); monomials.len()];
                            let mut any = false;
                            for (c, pair) in &relation {
                                let mut word: Vec<usize> = pair.iter().copied().chain(rest.iter().copied()).collect();
                                let mut sorted = word.clone();
                                sorted.sort();
                                sorted.dedup();
                                if sorted.len() < word.len() {
                                    continue;
                                }
                                let sign = match kind {
                                    Kind::Exterior => sort_with_sign(&mut word),
                                    Kind::Polynomial => {
                                        word.sort();
                                        1
                                    }
                                };
                                let col = monomials.binary_search(&word).unwrap();
                                row[col] += q(c * sign);
                                any = true;
                            }
                            if any {
                                rows.push(row);
                            }
                        }
                    }
                }
            }
        }
        let ideal = if rows.is_empty() { Vec::new() } else { rref(rows) };
        Quotient { kind, n, d, edges, monomials, ideal }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len() - self.ideal.len()
    }

    /// Coordinate vector of a combination of edge-subsets.
    pub fn vector(&self, terms: &[(Vec<(usize, usize)>, Q)]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.monomials.len()];
        for (word, c) in terms {
            let mut idx: Vec<usize> = word.iter().map(|e| self.edges.iter().position(|x| x == e).unwrap()).collect();
            let sign = match self.kind {
                Kind::Exterior => sort_with_sign(&mut idx),
                Kind::Polynomial => {
                    idx.sort();
                    1
                }
            };
            let col = self.monomials.binary_search(&idx).unwrap();
            v[col] += c * q(sign);
        }
        v
    }

    /// True iff the two combinations agree in the quotient.
    pub fn equal(&self, x: &[Q], y: &[Q]) -> bool {
        let diff: Vec<Q> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        is_zero(&residue(&diff, &self.ideal))
    }

    /// Rank of the given vectors modulo the ideal.
    pub fn rank_mod_ideal(&self, vectors: &[Vec<Q>]) -> usize {
        let mut rows: Vec<Vec<Q>> = self.ideal.iter().map(|(_, r)| r.clone()).collect();
        rows.extend(vectors.iter().cloned());
        rank(rows) - self.ideal.len()
    }
}

/// The NBC test written out directly: no two edges share a larger endpoint.
pub fn brute_is_nbc(word: &[(usize, usize)]) -> bool {
    let mut wrists: Vec<usize> = word.iter().map(|e| e.1).collect();
    wrists.sort();
    wrists.windows(2).all(|w| w[0] != w[1])
}
