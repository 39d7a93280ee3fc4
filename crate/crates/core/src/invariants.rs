//! Invariant subspaces of `OS_n` and `VG_n` under symmetric groups, by
//! three routes:
//!
//! * the joint kernel of `σ − id` over adjacent transpositions (the
//!   scalable path),
//! * the image of the Reynolds projector (small `n` only),
//! * character orthogonality over conjugacy classes.

use serde::{Serialize, Serializer};

use crate::braid::{nbc_count, nbc_monomials, rank_nbc, Handful, Permutation};
use crate::element::{Element, Ring};
use crate::error::{Error, Result};
use crate::linalg::{nullspace_basis, rank, SparseMatrix, SparseVector};
use crate::par;
use crate::scalar::Scalar;
use crate::straighten::act_set;
use crate::symfunc::Partition;

/// A symmetric group acting on `{1, …, n+1}` by relabelling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `S_n`, the stabilizer of `n+1`.
    #[default]
    FixLast,
    /// `S_n`, the stabilizer of `1`.
    FixFirst,
    /// All of `S_{n+1}`.
    Full,
}

impl Symmetry {
    /// Labels the group moves.
    pub fn moved(self, n: usize) -> Vec<usize> {
        match self {
            Symmetry::FixLast => (1..=n).collect(),
            Symmetry::FixFirst => (2..=n + 1).collect(),
            Symmetry::Full => (1..=n + 1).collect(),
        }
    }

    pub fn order(self, n: usize) -> u128 {
        (1..=self.moved(n).len() as u128).product()
    }

    /// Adjacent transpositions of the moved labels.
    pub fn generators(self, n: usize) -> Vec<Permutation> {
        let moved = self.moved(n);
        moved.windows(2).map(|w| Permutation::transposition(n + 1, w[0], w[1]).expect("labels in range")).collect()
    }

    /// Every group element.
    pub fn elements(self, n: usize) -> Vec<Permutation> {
        let moved = self.moved(n);
        Permutation::all(moved.len())
            .into_iter()
            .map(|q| {
                let mut images: Vec<usize> = (1..=n + 1).collect();
                for (k, &label) in moved.iter().enumerate() {
                    images[label - 1] = moved[q.apply(k + 1) - 1];
                }
                Permutation::new(&images).expect("bijection")
            })
            .collect()
    }

    /// One representative per conjugacy class, with the class size.
    pub fn classes(self, n: usize) -> Vec<(Permutation, u128)> {
        let moved = self.moved(n);
        let order = self.order(n);
        Partition::all(moved.len())
            .into_iter()
            .map(|lambda| {
                let mut cycles: Vec<&[usize]> = Vec::new();
                let mut start = 0;
                for &len in lambda.parts() {
                    cycles.push(&moved[start..start + len]);
                    start += len;
                }
                let rep = Permutation::from_cycles(n + 1, &cycles).expect("disjoint cycles");
                (rep, order / lambda.z())
            })
            .collect()
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > crate::braid::MAX_RANK {
        Err(Error::InvalidRank(n, "1 <= n <= 10"))
    } else {
        Ok(())
    }
}

/// Matrix of `x ↦ p·x` on the degree-`d` NBC basis; column `k` holds the
/// coordinates of `p` applied to the `k`-th basis monomial.
pub fn action_matrix(ring: Ring, n: usize, d: usize, p: &Permutation) -> Result<SparseMatrix> {
    check_rank(n)?;
    let basis = nbc_monomials(n, d)?;
    let dim = basis.len();
    let columns: Vec<Vec<(usize, usize, Scalar)>> = par::map(&basis, |h| {
        let col = rank_nbc(*h).expect("basis is NBC") as usize;
        act_set(ring, n, h.bits(), p)
            .into_iter()
            .map(|(b, c)| {
                let row = rank_nbc(Handful::from_bits(n, b)).expect("reduced sets are NBC") as usize;
                (row, col, Scalar::from(c))
            })
            .collect()
    });
    Ok(SparseMatrix::from_triplets(dim, dim, columns.into_iter().flatten()))
}

/// A basis of the degree-`d` invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBasis {
    pub ring: Ring,
    pub n: usize,
    pub d: usize,
    pub vectors: Vec<Element>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// True iff `x` (homogeneous of degree `d` or zero) lies in the span.
    pub fn spans(&self, x: &Element) -> bool {
        let dim = nbc_count(self.n, self.d) as usize;
        let mut rows: Vec<SparseVector> = self.vectors.iter().map(|v| v.coordinates(self.d)).collect();
        let before = rank(&SparseMatrix::from_rows(dim, &rows));
        rows.push(x.coordinates(self.d));
        x.component(self.d) == *x && rank(&SparseMatrix::from_rows(dim, &rows)) == before
    }
}

/// Invariants of `S_n` (stabilizer of `n+1`) in degree `d`.
pub fn invariant_subspace(ring: Ring, n: usize, d: usize) -> Result<InvariantBasis> {
    invariant_subspace_for(ring, n, d, Symmetry::FixLast)
}

/// Joint kernel of `σ − id` over the adjacent transpositions generating
/// the group.
pub fn invariant_subspace_for(ring: Ring, n: usize, d: usize, sym: Symmetry) -> Result<InvariantBasis> {
    check_rank(n)?;
    let dim = nbc_count(n, d) as usize;
    let vectors = if dim == 0 {
        Vec::new()
    } else {
        let gens = sym.generators(n);
        let blocks: Vec<SparseMatrix> = gens
            .iter()
            .map(|g| action_matrix(ring, n, d, g).map(|a| a.sub(&SparseMatrix::identity(dim))))
            .collect::<Result<_>>()?;
        let stacked = if blocks.is_empty() { SparseMatrix::zeros(0, dim) } else { SparseMatrix::vstack(&blocks) };
        nullspace_basis(&stacked).iter().map(|v| Element::from_coordinates(ring, n, d, v)).collect::<Result<_>>()?
    };
    Ok(InvariantBasis { ring, n, d, vectors })
}

/// True iff every generator of the group fixes `x`.
pub fn is_invariant(x: &Element, sym: Symmetry) -> Result<bool> {
    for g in sym.generators(x.n()) {
        if x.act(&g)? != *x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The averaging projector `(1/|G|) Σ_σ σ·x`.
pub fn reynolds(x: &Element, sym: Symmetry) -> Result<Element> {
    let n = x.n();
    let elements = sym.elements(n);
    let images: Vec<Result<Element>> = par::map(&elements, |p| x.act(p));
    let mut sum = Element::zero(x.ring(), n);
    for img in images {
        sum = sum.try_add(&img?)?;
    }
    Ok(sum.scale(&Scalar::new(1, elements.len() as i64)))
}

/// Rank of the Reynolds projector on degree `d`.
pub fn reynolds_rank(ring: Ring, n: usize, d: usize, sym: Symmetry) -> Result<usize> {
    check_rank(n)?;
    let basis = nbc_monomials(n, d)?;
    if basis.is_empty() {
        return Ok(0);
    }
    let images: Vec<Result<SparseVector>> = par::map(&basis, |h| {
        let x = Element::monomial(ring, *h)?;
        Ok(reynolds(&x, sym)?.coordinates(d))
    });
    let images = images.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(rank(&SparseMatrix::from_columns(basis.len(), &images)))
}

/// Trace of `p` on the degree-`d` component.
pub fn trace(ring: Ring, n: usize, d: usize, p: &Permutation) -> Result<i128> {
    check_rank(n)?;
    let basis = nbc_monomials(n, d)?;
    Ok(par::sum_by(&basis, |h| {
        act_set(ring, n, h.bits(), p).into_iter().find(|&(b, _)| b == h.bits()).map_or(0, |(_, c)| c)
    }))
}

/// `dim` of the degree-`d` invariants as `(1/|G|) Σ_classes |C| tr(σ_C)`.
pub fn character_dim(ring: Ring, n: usize, d: usize, sym: Symmetry) -> Result<usize> {
    check_rank(n)?;
    let mut total: i128 = 0;
    for (rep, size) in sym.classes(n) {
        total += size as i128 * trace(ring, n, d, &rep)?;
    }
    let order = sym.order(n) as i128;
    assert_eq!(total % order, 0, "character sum not divisible by group order");
    Ok((total / order) as usize)
}

/// Graded dimensions, lowest degree first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HilbertPolynomial {
    coefficients: Vec<u64>,
}

impl HilbertPolynomial {
    pub fn new(mut coefficients: Vec<u64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        HilbertPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// Product of two polynomials.
    pub fn times(&self, other: &HilbertPolynomial) -> HilbertPolynomial {
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return HilbertPolynomial::default();
        }
        let mut out = vec![0u64; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HilbertPolynomial::new(out)
    }
}

impl Serialize for HilbertPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coefficients.serialize(s)
    }
}

impl std::fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Graded dimensions of the whole ring: `e_d(1, …, n)`.
pub fn hilbert_full(n: usize) -> Result<HilbertPolynomial> {
    check_rank(n)?;
    Ok(HilbertPolynomial::new((0..=n).map(|d| nbc_count(n, d)).collect()))
}

/// Graded dimensions of the `S_n`-invariants (kernel route).
pub fn hilbert_invariants(ring: Ring, n: usize) -> Result<HilbertPolynomial> {
    hilbert_invariants_for(ring, n, Symmetry::FixLast)
}

pub fn hilbert_invariants_for(ring: Ring, n: usize, sym: Symmetry) -> Result<HilbertPolynomial> {
    check_rank(n)?;
    let degrees: Vec<usize> = (0..=n).collect();
    let dims = par::map(&degrees, |&d| invariant_subspace_for(ring, n, d, sym).map(|b| b.dim() as u64));
    Ok(HilbertPolynomial::new(dims.into_iter().collect::<Result<_>>()?))
}

/// Graded dimensions of the invariants by character counting.
pub fn hilbert_characters(ring: Ring, n: usize, sym: Symmetry) -> Result<HilbertPolynomial> {
    check_rank(n)?;
    let degrees: Vec<usize> = (0..=n).collect();
    let dims = par::map(&degrees, |&d| character_dim(ring, n, d, sym).map(|x| x as u64));
    Ok(HilbertPolynomial::new(dims.into_iter().collect::<Result<_>>()?))
}
