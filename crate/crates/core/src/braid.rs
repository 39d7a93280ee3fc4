//! Combinatorics of the braid arrangement `A_n`: hyperplanes `h_ij` as
//! edges `(i, j)` of the complete graph on `{1, …, n+1}`, NBC sets through the
//! hands-and-fingers model, and permutations of the vertex labels.
//!
//! A hand is the star at a vertex `k` (the wrist) with fingers `(i, k)`,
//! `i < k`. A set of edges is NBC exactly when it uses at most one finger of
//! each hand.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest supported rank; `C(MAX_RANK + 1, 2)` edges must fit in a `u64`.
pub const MAX_RANK: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    i: u8,
    j: u8,
}

impl Edge {
    /// The edge `(i, j)`; requires `i < j`.
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::LoopEdge(i));
        }
        if i == 0 || i > j {
            return Err(Error::Parse(format!("edge ({i},{j}) is not canonical")));
        }
        if j > MAX_RANK + 1 {
            return Err(Error::LabelOutOfRange { label: j, max: MAX_RANK + 1 });
        }
        Ok(Edge { i: i as u8, j: j as u8 })
    }

    /// The edge joining `a` and `b` in either order, together with a flag
    /// telling whether the labels had to be swapped.
    pub fn unordered(a: usize, b: usize) -> Result<(Self, bool)> {
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        if a < b {
            Ok((Edge::new(a, b)?, false))
        } else {
            Ok((Edge::new(b, a)?, true))
        }
    }

    pub fn i(self) -> usize {
        self.i as usize
    }

    pub fn j(self) -> usize {
        self.j as usize
    }

    /// The larger endpoint: the hand this edge is a finger of.
    pub fn wrist(self) -> usize {
        self.j as usize
    }

    fn check_rank(self, n: usize) -> Result<()> {
        if self.j() > n + 1 {
            Err(Error::LabelOutOfRange { label: self.j(), max: n + 1 })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

struct EdgeTable {
    index: [[u8; MAX_RANK + 2]; MAX_RANK + 2],
    edges: Vec<Edge>,
}

fn table(n: usize) -> &'static EdgeTable {
    static TABLES: OnceLock<Vec<EdgeTable>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (0..=MAX_RANK)
            .map(|n| {
                let mut index = [[u8::MAX; MAX_RANK + 2]; MAX_RANK + 2];
                let mut edges = Vec::new();
                for i in 1..=n + 1 {
                    for j in i + 1..=n + 1 {
                        index[i][j] = edges.len() as u8;
                        edges.push(Edge { i: i as u8, j: j as u8 });
                    }
                }
                EdgeTable { index, edges }
            })
            .collect()
    });
    &tables[n]
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > MAX_RANK {
        Err(Error::InvalidRank(n, "1 <= n <= 10"))
    } else {
        Ok(())
    }
}

/// All `C(n+1, 2)` hyperplanes of `A_n` in lexicographic order.
pub fn hyperplanes(n: usize) -> Result<Vec<Edge>> {
    check_rank(n)?;
    Ok(table(n).edges.clone())
}

/// Position of `e` in the lexicographic order of `hyperplanes(n)`.
pub fn edge_index(n: usize, e: Edge) -> usize {
    table(n).index[e.i()][e.j()] as usize
}

pub fn edge_at(n: usize, index: usize) -> Edge {
    table(n).edges[index]
}

/// A set of edges of `A_n`, stored as a bitmask over the lexicographic
/// edge order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Handful {
    n: u8,
    bits: u64,
}

impl Handful {
    pub fn empty(n: usize) -> Self {
        Handful { n: n as u8, bits: 0 }
    }

    /// The set of the given edges; duplicates collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        check_rank(n)?;
        let mut bits = 0u64;
        for e in edges {
            e.check_rank(n)?;
            bits |= 1 << edge_index(n, e);
        }
        Ok(Handful { n: n as u8, bits })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs.iter().map(|&(i, j)| Edge::new(i, j)).collect::<Result<Vec<_>>>()?;
        Handful::new(n, edges)
    }

    pub(crate) fn from_bits(n: usize, bits: u64) -> Self {
        Handful { n: n as u8, bits }
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn degree(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, e: Edge) -> bool {
        e.j() <= self.n() + 1 && self.bits & (1 << edge_index(self.n(), e)) != 0
    }

    pub fn is_subset(self, other: Handful) -> bool {
        self.bits & !other.bits == 0
    }

    /// Edges in lexicographic order.
    pub fn edges(self) -> impl Iterator<Item = Edge> {
        let n = self.n();
        BitIter(self.bits).map(move |k| edge_at(n, k))
    }

    /// True iff no two edges share their larger endpoint.
    pub fn is_nbc(self) -> bool {
        let mut seen = 0u32;
        for e in self.edges() {
            let w = 1u32 << e.wrist();
            if seen & w != 0 {
                return false;
            }
            seen |= w;
        }
        true
    }

    /// Formats as `"e[1,3]e[2,3]"` with the given generator letter; the
    /// empty set is `"1"`.
    pub fn to_text(self, letter: char) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.edges().map(|e| format!("{letter}{e}")).collect()
    }

    /// Parses the text form produced by [`Handful::to_text`]. The edges must
    /// be canonical (`i < j`), sorted and distinct.
    pub fn parse(n: usize, letter: char, text: &str) -> Result<Self> {
        let factors = parse_factors(letter, text)?;
        let mut edges = Vec::with_capacity(factors.len());
        for (a, b) in factors {
            edges.push(Edge::new(a, b)?);
        }
        if edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("edges of {text:?} are not strictly increasing")));
        }
        Handful::new(n, edges)
    }
}

impl fmt::Debug for Handful {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text('e'))
    }
}

pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let k = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(k)
        }
    }
}

/// Parses a product of raw factors such as `"x[2,1]x[1,3]"` into label
/// pairs, without canonicalizing. `"1"` is the empty product.
pub fn parse_factors(letter: char, text: &str) -> Result<Vec<(usize, usize)>> {
    let t = text.trim();
    if t == "1" {
        return Ok(Vec::new());
    }
    let err = || Error::Parse(format!("invalid monomial {text:?}"));
    let mut out = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        rest = rest.strip_prefix(letter).ok_or_else(err)?;
        rest = rest.strip_prefix('[').ok_or_else(err)?;
        let close = rest.find(']').ok_or_else(err)?;
        let (a, b) = rest[..close].split_once(',').ok_or_else(err)?;
        let a: usize = a.trim().parse().map_err(|_| err())?;
        let b: usize = b.trim().parse().map_err(|_| err())?;
        out.push((a, b));
        rest = &rest[close + 1..];
    }
    if out.is_empty() {
        return Err(err());
    }
    Ok(out)
}

/// `e_d(1, 2, …, n)`: the number of NBC sets of size `d`.
pub fn nbc_count(n: usize, d: usize) -> u64 {
    elementary_weights(&(1..=n as u64).collect::<Vec<_>>(), d)
}

fn elementary_weights(weights: &[u64], d: usize) -> u64 {
    let mut e = vec![0u64; d + 1];
    e[0] = 1;
    for &w in weights {
        for k in (1..=d).rev() {
            e[k] += e[k - 1] * w;
        }
    }
    e[d]
}

/// All NBC sets of size `d`, ordered lexicographically by the increasing
/// sequence of wrists and then by the finger labels.
pub fn nbc_monomials(n: usize, d: usize) -> Result<Vec<Handful>> {
    check_rank(n)?;
    let mut out = Vec::with_capacity(nbc_count(n, d) as usize);
    if d > n {
        return Ok(out);
    }
    let mut wrists: Vec<usize> = (2..2 + d).collect();
    loop {
        let mut fingers = vec![1usize; d];
        loop {
            let bits = wrists.iter().zip(&fingers).fold(0u64, |acc, (&w, &f)| acc | 1 << table(n).index[f][w]);
            out.push(Handful::from_bits(n, bits));
            // Odometer over fingers, last position fastest.
            let mut k = d;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                if fingers[k] + 1 < wrists[k] {
                    fingers[k] += 1;
                    for f in &mut fingers[k + 1..] {
                        *f = 1;
                    }
                    k = usize::MAX;
                    break;
                }
            }
            if k != usize::MAX {
                break;
            }
        }
        if !next_combination(&mut wrists, n + 1) {
            break;
        }
    }
    Ok(out)
}

/// Advances an increasing sequence over `2..=max` to its lexicographic
/// successor.
fn next_combination(c: &mut [usize], max: usize) -> bool {
    let d = c.len();
    for k in (0..d).rev() {
        if c[k] < max - (d - 1 - k) {
            c[k] += 1;
            for t in k + 1..d {
                c[t] = c[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `E[v][r]` = sum over `r`-subsets `S` of `{v, …, n+1}` of `prod (w - 1)`.
fn tail_weights(n: usize, d: usize) -> Vec<Vec<u64>> {
    let top = n + 1;
    let mut e = vec![vec![0u64; d + 1]; top + 2];
    e[top + 1][0] = 1;
    for v in (2..=top).rev() {
        e[v][0] = 1;
        for r in 1..=d {
            e[v][r] = e[v + 1][r] + (v as u64 - 1) * e[v + 1][r - 1];
        }
    }
    e
}

/// Position of an NBC set in the order of [`nbc_monomials`].
pub fn rank_nbc(h: Handful) -> Result<u64> {
    if !h.is_nbc() {
        return Err(Error::NotNbc(h.to_text('e')));
    }
    let n = h.n();
    let d = h.degree();
    let mut edges: Vec<Edge> = h.edges().collect();
    edges.sort_by_key(|e| e.wrist());
    let e = tail_weights(n, d);
    let mut offset = 0u64;
    let mut prefix = 1u64;
    let mut prev = 1usize;
    for (k, edge) in edges.iter().enumerate() {
        let remaining = d - k - 1;
        for w in prev + 1..edge.wrist() {
            offset += prefix * (w as u64 - 1) * e[w + 1][remaining];
        }
        prefix *= edge.wrist() as u64 - 1;
        prev = edge.wrist();
    }
    let mut finger_rank = 0u64;
    for edge in &edges {
        finger_rank = finger_rank * (edge.wrist() as u64 - 1) + (edge.i() as u64 - 1);
    }
    Ok(offset + finger_rank)
}

/// Inverse of [`rank_nbc`].
pub fn unrank_nbc(n: usize, d: usize, index: u64) -> Result<Handful> {
    check_rank(n)?;
    let count = nbc_count(n, d);
    if index >= count {
        return Err(Error::IndexOutOfRange { index, count });
    }
    let e = tail_weights(n, d);
    let mut rest = index;
    let mut wrists = Vec::with_capacity(d);
    let mut prefix = 1u64;
    let mut prev = 1usize;
    for k in 0..d {
        let remaining = d - k - 1;
        let mut w = prev + 1;
        loop {
            let block = prefix * (w as u64 - 1) * e[w + 1][remaining];
            if rest < block {
                break;
            }
            rest -= block;
            w += 1;
        }
        wrists.push(w);
        prefix *= w as u64 - 1;
        prev = w;
    }
    let mut fingers = vec![0usize; d];
    for k in (0..d).rev() {
        let radix = wrists[k] as u64 - 1;
        fingers[k] = (rest % radix) as usize + 1;
        rest /= radix;
    }
    let edges = wrists.iter().zip(&fingers).map(|(&w, &f)| Edge { i: f as u8, j: w as u8 });
    Handful::new(n, edges)
}

/// The size-two broken circuits `{(i,k), (j,k)}`, `i < j < k`, ordered by
/// `k`, then `i`, then `j`.
pub fn minimal_broken_circuits(n: usize) -> Result<Vec<Handful>> {
    check_rank(n)?;
    if n < 2 {
        return Err(Error::InvalidRank(n, "n >= 2"));
    }
    let mut out = Vec::new();
    for k in 3..=n + 1 {
        for i in 1..k {
            for j in i + 1..k {
                out.push(Handful::from_pairs(n, &[(i, k), (j, k)])?);
            }
        }
    }
    Ok(out)
}

/// A permutation of `{1, …, size}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// `images[k]` is the image of `k + 1`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let size = images.len();
        let mut seen = vec![false; size + 1];
        for &x in images {
            if x == 0 || x > size || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| x as u8).collect() })
    }

    pub fn identity(size: usize) -> Self {
        Permutation { images: (1..=size as u8).collect() }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(size: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > size || b > size {
            return Err(Error::InvalidPermutation(format!("({a} {b}) in S_{size}")));
        }
        let mut p = Permutation::identity(size);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Builds from disjoint cycles, e.g. `&[&[1, 2, 3]]` sends 1→2→3→1.
    pub fn from_cycles(size: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=size).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > size {
                    return Err(Error::InvalidPermutation(format!("{cycles:?}")));
                }
                images[a - 1] = b;
            }
        }
        Permutation::new(&images)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.size()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = k as u8 + 1;
        }
        Permutation { images }
    }

    pub fn fixes(&self, k: usize) -> bool {
        self.apply(k) == k
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// Every permutation of `{1, …, size}`, in lexicographic order of
    /// image sequences.
    pub fn all(size: usize) -> Vec<Permutation> {
        let mut current: Vec<u8> = (1..=size as u8).collect();
        let mut out = vec![Permutation { images: current.clone() }];
        while let Some(k) = (0..size.saturating_sub(1)).rev().find(|&k| current[k] < current[k + 1]) {
            let l = (k + 1..size).rev().find(|&l| current[k] < current[l]).unwrap();
            current.swap(k, l);
            current[k + 1..].reverse();
            out.push(Permutation { images: current.clone() });
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(n: usize, pairs: &[(usize, usize)]) -> Handful {
        Handful::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn hyperplane_listing() {
        let h2: Vec<(usize, usize)> = hyperplanes(2).unwrap().iter().map(|e| (e.i(), e.j())).collect();
        assert_eq!(h2, vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(hyperplanes(1).unwrap().len(), 1);
        assert_eq!(hyperplanes(4).unwrap().len(), 10);
        assert_eq!(hyperplanes(0), Err(Error::InvalidRank(0, "1 <= n <= 10")));
    }

    #[test]
    fn wrist_criterion() {
        assert!(hf(3, &[(1, 2), (2, 3), (2, 4)]).is_nbc());
        assert!(!hf(3, &[(1, 4), (3, 4)]).is_nbc());
        assert!(Handful::empty(3).is_nbc());
    }

    #[test]
    fn nbc_enumeration_counts() {
        assert_eq!(nbc_monomials(3, 2).unwrap().len(), 11);
        assert_eq!(nbc_monomials(3, 0).unwrap(), vec![Handful::empty(3)]);
        let total: usize = (0..=3).map(|d| nbc_monomials(3, d).unwrap().len()).sum();
        assert_eq!(total, 24);
        assert!(nbc_monomials(3, 4).unwrap().is_empty());
    }

    #[test]
    fn nbc_degree_two_matches_filter() {
        let edges = hyperplanes(3).unwrap();
        let mut brute = 0;
        for a in 0..edges.len() {
            for b in a + 1..edges.len() {
                if Handful::new(3, [edges[a], edges[b]]).unwrap().is_nbc() {
                    brute += 1;
                }
            }
        }
        assert_eq!(brute, 11);
    }

    #[test]
    fn enumeration_order() {
        let list = nbc_monomials(3, 2).unwrap();
        let texts: Vec<String> = list.iter().map(|h| h.to_text('e')).collect();
        assert_eq!(texts[0], "e[1,2]e[1,3]");
        assert_eq!(texts[1], "e[1,2]e[2,3]");
        assert_eq!(texts[2], "e[1,2]e[1,4]");
        for (k, h) in list.iter().enumerate() {
            assert_eq!(rank_nbc(*h).unwrap(), k as u64);
        }
    }

    #[test]
    fn rank_round_trip() {
        for n in 1..=5 {
            for d in 0..=n {
                for k in 0..nbc_count(n, d) {
                    let h = unrank_nbc(n, d, k).unwrap();
                    assert_eq!(rank_nbc(h).unwrap(), k);
                }
            }
        }
        assert_eq!(unrank_nbc(3, 0, 0).unwrap(), Handful::empty(3));
        assert!(unrank_nbc(3, 2, 11).is_err());
        assert!(rank_nbc(hf(3, &[(1, 4), (3, 4)])).is_err());
    }

    #[test]
    fn broken_circuits() {
        assert_eq!(minimal_broken_circuits(2).unwrap(), vec![hf(2, &[(1, 3), (2, 3)])]);
        assert_eq!(
            minimal_broken_circuits(3).unwrap(),
            vec![
                hf(3, &[(1, 3), (2, 3)]),
                hf(3, &[(1, 4), (2, 4)]),
                hf(3, &[(1, 4), (3, 4)]),
                hf(3, &[(2, 4), (3, 4)]),
            ]
        );
    }

    #[test]
    fn text_form() {
        let h = Handful::parse(3, 'e', "e[1,3]e[2,3]").unwrap();
        assert_eq!(h, hf(3, &[(1, 3), (2, 3)]));
        assert_eq!(h.to_text('e'), "e[1,3]e[2,3]");
        assert!(Handful::parse(3, 'e', "e[2,3]e[1,3]").is_err());
        assert!(Handful::parse(3, 'e', "e[3,1]").is_err());
        assert!(Handful::parse(3, 'e', "e[1,5]").is_err());
        assert_eq!(Handful::parse(3, 'e', "1").unwrap(), Handful::empty(3));
    }

    #[test]
    fn permutations() {
        let p = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        assert_eq!(p.images(), vec![2, 3, 1, 4]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.fixes(4));
        assert_eq!(Permutation::all(4).len(), 24);
        assert!(Permutation::new(&[1, 1]).is_err());
        let q = Permutation::transposition(4, 1, 4).unwrap();
        let a = p.compose(&q);
        assert_eq!(a.apply(1), p.apply(q.apply(1)));
    }
}
