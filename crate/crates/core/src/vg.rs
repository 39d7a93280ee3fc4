//! The Varchenko–Gel'fand ring `VG_n` and its degree-one invariant `z`.

use serde::{Deserialize, Serialize};

use crate::element::{Element, Ring};
use crate::error::{Error, Result};

/// Which label the symmetric group `S_n` fixes inside `S_{n+1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// `S_n` fixes `n+1`; `z = Σ_{i≤n} x_{i,n+1}`.
    #[default]
    FixLast,
    /// `S_n` fixes `1`; `z = Σ_{i≥2} x_{1,i}`.
    FixFirst,
}

/// The orbit-sum invariant `z` of degree one.
pub fn elem_z(n: usize) -> Result<Element> {
    elem_z_with(n, Convention::FixLast)
}

pub fn elem_z_with(n: usize, convention: Convention) -> Result<Element> {
    if n < 1 {
        return Err(Error::InvalidRank(n, "n >= 1"));
    }
    let mut out = Element::zero(Ring::VG, n);
    for i in 1..=n {
        let (a, b) = match convention {
            Convention::FixLast => (i, n + 1),
            Convention::FixFirst => (1, i + 1),
        };
        out = &out + &Element::generator(Ring::VG, n, a, b)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::Permutation;

    #[test]
    fn z_small() {
        assert_eq!(
            elem_z_with(2, Convention::FixFirst).unwrap(),
            Element::parse(Ring::VG, 2, "x[1,2] + x[1,3]").unwrap()
        );
        assert_eq!(elem_z(2).unwrap(), Element::parse(Ring::VG, 2, "x[1,3] + x[2,3]").unwrap());
    }

    #[test]
    fn z_square_n2() {
        let z = elem_z(2).unwrap();
        // (x13 + x23)^2 = 2 x13 x23, which straightens to 2 x12 x23 - 2 x12 x13.
        assert_eq!(z.pow(2), Element::parse(Ring::VG, 2, "2*x[1,2]x[2,3] − 2*x[1,2]x[1,3]").unwrap());
    }

    #[test]
    fn z_fixed_under_both_conventions() {
        for n in 2..=5 {
            let z = elem_z(n).unwrap();
            let w = elem_z_with(n, Convention::FixFirst).unwrap();
            for p in Permutation::all(n + 1) {
                if p.fixes(n + 1) {
                    assert_eq!(z.act(&p).unwrap(), z);
                }
                if p.fixes(1) {
                    assert_eq!(w.act(&p).unwrap(), w);
                }
            }
        }
    }
}
