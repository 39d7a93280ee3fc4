//! A small symmetric-function toolkit: products of complete homogeneous
//! functions `h_λ`, their Hall inner products, the Pieri rule, and explicit
//! polynomial expansions for cross-checking.
//!
//! `⟨h_λ, h_µ⟩` equals the number of nonnegative integer matrices with row
//! sums `λ` and column sums `µ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::element::Ring;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(k, 1, 1, …, 1)` with `ones` trailing ones.
    pub fn hook(k: usize, ones: usize) -> Self {
        Partition::new(std::iter::once(k).chain(std::iter::repeat_n(1, ones)))
    }

    /// All partitions of `m`, in reverse lexicographic order.
    pub fn all(m: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                go(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// `z_λ = Π_i i^{m_i} m_i!`, the centralizer order of the cycle type.
    pub fn z(&self) -> u128 {
        let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts.into_iter().map(|(i, m)| (i as u128).pow(m) * (1..=m as u128).product::<u128>()).product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `"2,1,1"`; parts must be positive and weakly decreasing.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Partition::default());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("invalid partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{s:?} is not a weakly decreasing list of positive parts")));
        }
        Ok(Partition(parts))
    }
}

/// `⟨h_λ, h_µ⟩`: nonnegative integer matrices with row sums `λ` and column
/// sums `µ`, counted by depth-first search over rows.
pub fn h_inner(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    fn fill_row(rows: &[usize], cols: &mut Vec<usize>, col: usize, left: usize) -> u64 {
        if col + 1 == cols.len() {
            if left > cols[col] {
                return 0;
            }
            cols[col] -= left;
            let r = count(&rows[1..], cols);
            cols[col] += left;
            return r;
        }
        // Remaining column capacity must be able to absorb what is left.
        let capacity: usize = cols[col + 1..].iter().sum();
        let lo = left.saturating_sub(capacity);
        let hi = left.min(cols[col]);
        let mut total = 0;
        for x in lo..=hi {
            cols[col] -= x;
            total += fill_row(rows, cols, col + 1, left - x);
            cols[col] += x;
        }
        total
    }
    fn count(rows: &[usize], cols: &mut Vec<usize>) -> u64 {
        match rows.first() {
            None => u64::from(cols.iter().all(|&c| c == 0)),
            Some(&r) => {
                if cols.is_empty() {
                    return u64::from(r == 0);
                }
                fill_row(rows, cols, 0, r)
            }
        }
    }
    let mut cols = mu.parts().to_vec();
    if cols.is_empty() {
        return u64::from(lambda.is_empty());
    }
    count(lambda.parts(), &mut cols)
}

/// Shapes `µ` with `s_{(λ1)} h_k = Σ s_µ`: at most two rows, first row at
/// least `max(λ1, k)`, second row at most `min(λ1, k)`.
pub fn pieri_single_row(lambda1: usize, k: usize) -> Vec<Partition> {
    assert!(lambda1 >= 1 && k >= 1, "pieri_single_row needs positive arguments");
    let total = lambda1 + k;
    (0..=lambda1.min(k)).map(|r2| Partition::new([total - r2, r2])).collect()
}

/// Shapes `µ ⊇ λ` with `µ/λ` a horizontal strip of `k` cells.
pub fn pieri(lambda: &Partition, k: usize) -> Vec<Partition> {
    let parts = lambda.parts();
    let rows = parts.len() + 1;
    let mut out = Vec::new();
    let mut added = vec![0usize; rows];
    fn go(parts: &[usize], row: usize, left: usize, added: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let rows = added.len();
        if row == rows {
            if left == 0 {
                let mu = (0..rows).map(|r| parts.get(r).copied().unwrap_or(0) + added[r]);
                out.push(Partition::new(mu));
            }
            return;
        }
        // Row r may grow up to the old length of row r-1.
        let cap = if row == 0 { left } else { parts[row - 1] - parts.get(row).copied().unwrap_or(0) };
        for x in (0..=cap.min(left)).rev() {
            added[row] = x;
            go(parts, row + 1, left - x, added, out);
        }
        added[row] = 0;
    }
    go(parts, 0, k, &mut added, &mut out);
    out
}

/// The Schur expansion `h_λ = Σ_ν K_{ν,λ} s_ν`, obtained by iterating the
/// Pieri rule.
pub fn h_to_schur(lambda: &Partition) -> BTreeMap<Partition, u64> {
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
    acc.insert(Partition::default(), 1);
    for &k in lambda.parts() {
        let mut next = BTreeMap::new();
        for (nu, c) in acc {
            for mu in pieri(&nu, k) {
                *next.entry(mu).or_insert(0) += c;
            }
        }
        acc = next;
    }
    acc
}

/// A formal linear combination of products `h_λ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HSum {
    terms: BTreeMap<Partition, Scalar>,
}

impl HSum {
    pub fn h(lambda: Partition) -> Self {
        HSum::term(Scalar::one(), lambda)
    }

    pub fn term(c: Scalar, lambda: Partition) -> Self {
        let mut s = HSum::default();
        s.add(lambda, c);
        s
    }

    fn add(&mut self, lambda: Partition, c: Scalar) {
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn plus(&self, other: &HSum) -> HSum {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add(l.clone(), c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter()
    }

    /// Bilinear extension of [`h_inner`].
    pub fn inner(&self, other: &HSum) -> Scalar {
        let mut acc = Scalar::zero();
        for (l, a) in &self.terms {
            for (m, b) in &other.terms {
                acc += &(&(a * b) * &Scalar::from(h_inner(l, m)));
            }
        }
        acc
    }
}

impl fmt::Display for HSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(if c.is_negative() { " − " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("−")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "h[{l}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HSum {
    type Err = Error;

    /// Terms like `"2*h[2,1,1,1]"` joined by `+` or `−`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(HSum::default());
        }
        let mut out = HSum::default();
        let mut rest = compact.as_str();
        let bad = || Error::Parse(format!("invalid h-sum {s:?}"));
        while !rest.is_empty() {
            let mut negative = false;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-').or_else(|| rest.strip_prefix('−')) {
                negative = true;
                rest = r;
            }
            let h = rest.find("h[").ok_or_else(bad)?;
            let coeff_text = rest[..h].strip_suffix('*').unwrap_or(&rest[..h]);
            let coeff = if coeff_text.is_empty() { Scalar::one() } else { coeff_text.parse::<Scalar>()? };
            let close = rest[h..].find(']').ok_or_else(bad)? + h;
            let lambda: Partition = rest[h + 2..close].parse()?;
            out.add(lambda, if negative { -coeff } else { coeff });
            rest = &rest[close + 1..];
        }
        Ok(out)
    }
}

/// Frobenius characteristic of the full ring as an `S_{n+1}`-module:
/// `2 h_2 h_1^{n-1}` for OS, `h_1^{n+1}` for VG.
pub fn frobenius_characteristic(ring: Ring, n: usize) -> HSum {
    match ring {
        Ring::OS => HSum::term(Scalar::from(2), Partition::hook(2, n - 1)),
        Ring::VG => HSum::h(Partition::new(vec![1; n + 1])),
    }
}

/// Total invariant dimensions predicted by Frobenius reciprocity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedDims {
    /// Under `S_n`: `⟨Frob, h_n h_1⟩`.
    pub restricted: u64,
    /// Under `S_{n+1}`: `⟨Frob, h_{n+1}⟩`.
    pub full: u64,
}

pub fn predicted_invariant_dims(ring: Ring, n: usize) -> Result<PredictedDims> {
    if n < 2 {
        return Err(Error::InvalidRank(n, "n >= 2"));
    }
    let frob = frobenius_characteristic(ring, n);
    let to_u64 = |s: Scalar| s.to_i64().expect("integral inner product") as u64;
    Ok(PredictedDims {
        restricted: to_u64(frob.inner(&HSum::h(Partition::new([n, 1])))),
        full: to_u64(frob.inner(&HSum::h(Partition::new([n + 1])))),
    })
}

/// Polynomials in finitely many variables with integer coefficients, used
/// only to cross-check the combinatorial rules.
pub mod poly {
    use std::collections::BTreeMap;

    use super::Partition;

    /// Exponent vector → coefficient.
    pub type Polynomial = BTreeMap<Vec<u32>, i64>;

    pub fn mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut out = Polynomial::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *out.entry(e).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    pub fn add_into(acc: &mut Polynomial, p: &Polynomial, scale: i64) {
        for (e, c) in p {
            *acc.entry(e.clone()).or_insert(0) += c * scale;
        }
        acc.retain(|_, c| *c != 0);
    }

    /// Complete homogeneous polynomial `h_k(x_1, …, x_vars)`.
    pub fn h_single(k: usize, vars: usize) -> Polynomial {
        let mut out = Polynomial::new();
        fn go(k: usize, var: usize, cur: &mut Vec<u32>, out: &mut Polynomial) {
            if var + 1 == cur.len() {
                cur[var] = k as u32;
                out.insert(cur.clone(), 1);
                cur[var] = 0;
                return;
            }
            for x in 0..=k {
                cur[var] = x as u32;
                go(k - x, var + 1, cur, out);
            }
            cur[var] = 0;
        }
        if vars == 0 {
            if k == 0 {
                out.insert(Vec::new(), 1);
            }
            return out;
        }
        go(k, 0, &mut vec![0; vars], &mut out);
        out
    }

    /// `h_λ = Π h_{λ_i}` in `vars` variables.
    pub fn h_poly(lambda: &Partition, vars: usize) -> Polynomial {
        let mut one = Polynomial::new();
        one.insert(vec![0; vars], 1);
        lambda.parts().iter().fold(one, |acc, &k| mul(&acc, &h_single(k, vars)))
    }

    /// Schur polynomial as the weight generating function of semistandard
    /// tableaux with entries in `1..=vars`.
    pub fn schur_poly(lambda: &Partition, vars: usize) -> Polynomial {
        let shape = lambda.parts();
        let cells: Vec<(usize, usize)> =
            shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
        let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
        let mut out = Polynomial::new();
        fn go(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, vars: usize, out: &mut Polynomial) {
            if idx == cells.len() {
                let mut e = vec![0u32; vars];
                for row in grid.iter() {
                    for &v in row {
                        e[v as usize - 1] += 1;
                    }
                }
                *out.entry(e).or_insert(0) += 1;
                return;
            }
            let (r, c) = cells[idx];
            // Rows weakly increase, columns strictly increase.
            let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
            let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
            for v in lo_row.max(lo_col)..=vars as u32 {
                grid[r][c] = v;
                go(idx + 1, cells, grid, vars, out);
            }
            grid[r][c] = 0;
        }
        go(0, &cells, &mut grid, vars, &mut out);
        if cells.is_empty() {
            out.insert(vec![0; vars], 1);
        }
        out
    }
}
