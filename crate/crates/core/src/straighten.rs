//! Rewriting arbitrary monomials onto the NBC basis.
//!
//! Both rings share the same rewrite skeleton. A monomial that is not NBC
//! has two fingers `(i,k)`, `(j,k)` (`i < j`) on one hand; the pair is
//! replaced by `(i,j)(j,k) - (i,j)(i,k)`. The largest such wrist `k` is
//! handled first and the two smallest fingers on it are chosen. Each rewrite
//! lowers the sum of wrists, so processing sets in decreasing order of that
//! sum visits every intermediate set exactly once with its final
//! coefficient.
//!
//! In the exterior algebra the two fingers are first moved to the front of
//! the wedge, which costs a sign; in the commutative ring nothing is paid.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::braid::{edge_index, BitIter, Edge, MAX_RANK};
use crate::element::Ring;
use crate::error::Result;

struct HandMasks {
    /// `hands[k]`: bits of all fingers `(i, k)`.
    hands: Vec<u64>,
    /// `wrist[b]`: wrist of edge number `b`.
    wrist: Vec<u32>,
}

fn masks(n: usize) -> &'static HandMasks {
    static MASKS: OnceLock<Vec<HandMasks>> = OnceLock::new();
    let all = MASKS.get_or_init(|| {
        (0..=MAX_RANK)
            .map(|n| {
                let mut hands = vec![0u64; n + 2];
                let mut wrist = Vec::new();
                for i in 1..=n + 1 {
                    for j in i + 1..=n + 1 {
                        hands[j] |= 1 << wrist.len();
                        wrist.push(j as u32);
                    }
                }
                HandMasks { hands, wrist }
            })
            .collect()
    });
    &all[n]
}

#[inline]
fn below(set: u64, bit: usize) -> u32 {
    (set & ((1u64 << bit) - 1)).count_ones()
}

#[inline]
fn sign_of(parity: u32) -> i128 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Parity of `e_u ∧ e_v` relative to the sorted wedge of `u ∪ v`, for
/// disjoint `u`, `v`.
pub(crate) fn wedge_parity(u: u64, v: u64) -> u32 {
    BitIter(v).map(|b| (u >> b >> 1).count_ones()).sum()
}

/// Expands the set `bits` (a canonical, sorted monomial) in the NBC basis.
/// Coefficients are integers; the result is sorted by bits.
pub(crate) fn reduce_set(ring: Ring, n: usize, bits: u64) -> Vec<(u64, i128)> {
    let m = masks(n);
    let wrist_sum = |s: u64| -> u32 { BitIter(s).map(|b| m.wrist[b]).sum() };
    let mut out: BTreeMap<u64, i128> = BTreeMap::new();
    let mut work: BTreeMap<(u32, u64), i128> = BTreeMap::new();
    work.insert((wrist_sum(bits), bits), 1);

    while let Some(((ws, s), c)) = work.pop_last() {
        if c == 0 {
            continue;
        }
        let Some(k) = (2..=n + 1).rev().find(|&k| (s & m.hands[k]).count_ones() >= 2) else {
            *out.entry(s).or_insert(0) += c;
            continue;
        };
        let on_hand = s & m.hands[k];
        let ik = on_hand.trailing_zeros() as usize;
        let jk = (on_hand & (on_hand - 1)).trailing_zeros() as usize;
        let (i, j) = (edge_lookup(n, ik).i(), edge_lookup(n, jk).i());
        let ij = edge_index(n, Edge::new(i, j).expect("i < j"));
        let rest = s & !(1 << ik) & !(1 << jk);
        if rest & (1 << ij) != 0 {
            continue;
        }
        let t1 = rest | 1 << ij | 1 << jk;
        let t2 = rest | 1 << ij | 1 << ik;
        let (c1, c2) = match ring {
            Ring::OS => {
                let s0 = sign_of(below(rest, ik) + below(rest, jk));
                let s1 = sign_of(below(rest, ij) + below(rest, jk));
                let s2 = sign_of(below(rest, ij) + below(rest, ik));
                (c * s0 * s1, -(c * s0 * s2))
            }
            Ring::VG => (c, -c),
        };
        // Wrist sums: (i,j) has wrist j < k.
        let ws_new = ws - k as u32 + j as u32;
        for (t, ct) in [(t1, c1), (t2, c2)] {
            let slot = work.entry((ws_new, t)).or_insert(0);
            *slot = slot.checked_add(ct).expect("straightening coefficient overflow");
        }
    }
    out.into_iter().filter(|&(_, c)| c != 0).collect()
}

fn edge_lookup(n: usize, index: usize) -> Edge {
    crate::braid::edge_at(n, index)
}

/// Canonicalizes an ordered list of raw generator labels. Returns the sign
/// and the sorted set, or `None` when a generator repeats.
pub(crate) fn canonical_set(ring: Ring, n: usize, pairs: &[(usize, usize)]) -> Result<Option<(i128, u64)>> {
    let mut idx = Vec::with_capacity(pairs.len());
    let mut sign = 1i128;
    for &(a, b) in pairs {
        let max = n + 1;
        for label in [a, b] {
            if label == 0 || label > max {
                return Err(crate::Error::LabelOutOfRange { label, max });
            }
        }
        let (e, swapped) = Edge::unordered(a, b)?;
        if swapped && ring == Ring::VG {
            sign = -sign;
        }
        idx.push(edge_index(n, e));
    }
    let mut bits = 0u64;
    for &b in &idx {
        if bits & (1 << b) != 0 {
            return Ok(None);
        }
        bits |= 1 << b;
    }
    if ring == Ring::OS {
        let mut inversions = 0u32;
        for x in 0..idx.len() {
            for y in x + 1..idx.len() {
                if idx[x] > idx[y] {
                    inversions += 1;
                }
            }
        }
        sign *= sign_of(inversions);
    }
    Ok(Some((sign, bits)))
}

/// NBC expansion of `p · e_S` for a canonical set `S`.
pub(crate) fn act_set(ring: Ring, n: usize, bits: u64, p: &crate::braid::Permutation) -> Vec<(u64, i128)> {
    let pairs: Vec<(usize, usize)> = BitIter(bits)
        .map(|b| {
            let e = crate::braid::edge_at(n, b);
            (p.apply(e.i()), p.apply(e.j()))
        })
        .collect();
    match canonical_set(ring, n, &pairs).expect("permuted labels stay in range") {
        None => Vec::new(),
        Some((sign, set)) => reduce_set(ring, n, set).into_iter().map(|(b, c)| (b, sign * c)).collect(),
    }
}
