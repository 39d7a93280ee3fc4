//! The Orlik–Solomon algebra `OS_n`: the differential and the invariant
//! elements `a`, `m`, `c`, `g`.

use crate::braid::{nbc_monomials, Handful};
use crate::element::{Element, Ring};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `⌊(n+1)/2⌋`.
pub fn p_of(n: usize) -> usize {
    n.div_ceil(2)
}

fn check(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidRank(n, "n >= 2"))
    } else {
        Ok(())
    }
}

fn gen(n: usize, i: usize, j: usize) -> Element {
    Element::generator(Ring::OS, n, i, j).expect("labels in range")
}

/// `a = Σ_{1 ≤ i < j ≤ n} e_ij`.
pub fn elem_a(n: usize) -> Result<Element> {
    check(n)?;
    let mut out = Element::zero(Ring::OS, n);
    for i in 1..=n {
        for j in i + 1..=n {
            out = &out + &gen(n, i, j);
        }
    }
    Ok(out)
}

/// `m = Σ_{1 ≤ i ≤ n} e_{i,n+1}`.
pub fn elem_m(n: usize) -> Result<Element> {
    check(n)?;
    Ok((1..=n).fold(Element::zero(Ring::OS, n), |acc, i| &acc + &gen(n, i, n + 1)))
}

/// `c = Σ_{i<j≤n} (e_ij e_{i,n+1} + e_ij e_{j,n+1})`.
pub fn elem_c(n: usize) -> Result<Element> {
    check(n)?;
    let mut out = Element::zero(Ring::OS, n);
    for i in 1..=n {
        for j in i + 1..=n {
            out = &out + &Element::straighten(Ring::OS, n, &[(i, j), (i, n + 1)])?;
            out = &out + &Element::straighten(Ring::OS, n, &[(i, j), (j, n + 1)])?;
        }
    }
    Ok(out)
}

/// `g = a·m − p·c` with `p = ⌊(n+1)/2⌋`.
pub fn elem_g(n: usize) -> Result<Element> {
    let am = &elem_a(n)? * &elem_m(n)?;
    let pc = elem_c(n)?.scale(&Scalar::from(p_of(n)));
    Ok(&am - &pc)
}

/// The omit-one-factor differential, extended linearly. Only defined on
/// `OS_n`.
pub fn differential(x: &Element) -> Result<Element> {
    if x.ring() != Ring::OS {
        return Err(Error::WrongRing(Ring::OS));
    }
    let n = x.n();
    let mut out = Element::zero(Ring::OS, n);
    for (h, c) in x.terms() {
        out = &out + &differential_of_monomial(*h).scale(c);
    }
    Ok(out)
}

fn differential_of_monomial(h: Handful) -> Element {
    let n = h.n();
    let edges: Vec<_> = h.edges().collect();
    let mut out = Element::zero(Ring::OS, n);
    for k in 0..edges.len() {
        let pairs: Vec<(usize, usize)> =
            edges.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, e)| (e.i(), e.j())).collect();
        let term = Element::straighten(Ring::OS, n, &pairs).expect("labels in range");
        out = if k % 2 == 0 { &out + &term } else { &out - &term };
    }
    out
}

/// Matrix of `∂: OS_{n,d} → OS_{n,d-1}` on the ordered NBC bases.
pub fn differential_matrix(n: usize, d: usize) -> Result<crate::linalg::SparseMatrix> {
    let cols = nbc_monomials(n, d)?;
    let rows = crate::braid::nbc_count(n, d.saturating_sub(1)) as usize;
    let columns: Vec<_> = cols.iter().map(|h| differential_of_monomial(*h).coordinates(d.saturating_sub(1))).collect();
    Ok(crate::linalg::SparseMatrix::from_columns(rows, &columns))
}
