//! Elements of the Orlik–Solomon algebra and the Varchenko–Gel'fand ring,
//! always stored on the NBC basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::braid::{nbc_count, parse_factors, rank_nbc, unrank_nbc, Handful, Permutation, MAX_RANK};
use crate::error::{Error, Result};
use crate::linalg::SparseVector;
use crate::scalar::{Scalar, MINUS};
use crate::straighten::{canonical_set, reduce_set, wedge_parity};

/// Which ring an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Ring {
    /// Orlik–Solomon algebra: graded-commutative, generators `e_ij = e_ji`.
    OS,
    /// Varchenko–Gel'fand ring: commutative, generators `x_ji = -x_ij`.
    VG,
}

impl Ring {
    /// Generator letter used in text forms.
    pub fn letter(self) -> char {
        match self {
            Ring::OS => 'e',
            Ring::VG => 'x',
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::OS => "OS",
            Ring::VG => "VG",
        })
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "os" => Ok(Ring::OS),
            "vg" => Ok(Ring::VG),
            _ => Err(Error::Parse(format!("unknown ring {s:?}"))),
        }
    }
}

/// A sparse linear combination of NBC monomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    ring: Ring,
    n: usize,
    terms: BTreeMap<Handful, Scalar>,
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > MAX_RANK {
        Err(Error::InvalidRank(n, "1 <= n <= 10"))
    } else {
        Ok(())
    }
}

impl Element {
    pub fn zero(ring: Ring, n: usize) -> Self {
        Element { ring, n, terms: BTreeMap::new() }
    }

    pub fn one(ring: Ring, n: usize) -> Self {
        Element::scalar(ring, n, Scalar::one())
    }

    pub fn scalar(ring: Ring, n: usize, c: Scalar) -> Self {
        let mut e = Element::zero(ring, n);
        e.add_term(Handful::empty(n), c);
        e
    }

    /// The basis element for an NBC set.
    pub fn monomial(ring: Ring, h: Handful) -> Result<Self> {
        if !h.is_nbc() {
            return Err(Error::NotNbc(h.to_text(ring.letter())));
        }
        let mut e = Element::zero(ring, h.n());
        e.add_term(h, Scalar::one());
        Ok(e)
    }

    /// The generator `e_ab` or `x_ab`, in either label order.
    pub fn generator(ring: Ring, n: usize, a: usize, b: usize) -> Result<Self> {
        Element::straighten(ring, n, &[(a, b)])
    }

    /// The NBC expansion of the product of the listed generators, taken in
    /// the given order.
    pub fn straighten(ring: Ring, n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_rank(n)?;
        let mut out = Element::zero(ring, n);
        if let Some((sign, bits)) = canonical_set(ring, n, pairs)? {
            for (b, c) in reduce_set(ring, n, bits) {
                out.add_term(Handful::from_bits(n, b), Scalar::from(sign * c));
            }
        }
        Ok(out)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Handful, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, h: &Handful) -> Scalar {
        self.terms.get(h).cloned().unwrap_or_default()
    }

    /// Common degree of all terms; `None` for zero or mixed-degree elements.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|h| h.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// The degree-`d` part.
    pub fn component(&self, d: usize) -> Element {
        Element {
            ring: self.ring,
            n: self.n,
            terms: self.terms.iter().filter(|(h, _)| h.degree() == d).map(|(h, c)| (*h, c.clone())).collect(),
        }
    }

    /// True iff every coefficient is positive.
    pub fn is_positive_sum(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn add_term(&mut self, h: Handful, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(h) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Element) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (h, c) in &other.terms {
            out.add_term(*h, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero(self.ring, self.n);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(h, x)| (*h, x * c)).collect();
        out
    }

    /// The ring product.
    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.check_compatible(other)?;
        let n = self.n;
        let mut acc: BTreeMap<Handful, Scalar> = BTreeMap::new();
        let mut cache: HashMap<u64, Vec<(u64, i128)>> = HashMap::new();
        for (hx, cx) in &self.terms {
            for (hy, cy) in &other.terms {
                let (u, v) = (hx.bits(), hy.bits());
                // Nothing survives above degree n.
                if u & v != 0 || (u | v).count_ones() as usize > n {
                    continue;
                }
                let sign: i128 = match self.ring {
                    Ring::OS if wedge_parity(u, v) % 2 == 1 => -1,
                    _ => 1,
                };
                let coeff = cx * cy;
                let expansion = cache.entry(u | v).or_insert_with(|| reduce_set(self.ring, n, u | v));
                for &(b, c) in expansion.iter() {
                    *acc.entry(Handful::from_bits(n, b)).or_default() += &(&coeff * &Scalar::from(sign * c));
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Element { ring: self.ring, n, terms: acc })
    }

    pub fn pow(&self, k: u32) -> Element {
        let mut out = Element::one(self.ring, self.n);
        for _ in 0..k {
            out = out.try_mul(self).expect("same ring");
        }
        out
    }

    /// The action of a permutation of `{1, …, n+1}` on labels.
    pub fn act(&self, p: &Permutation) -> Result<Element> {
        if p.size() != self.n + 1 {
            return Err(Error::InvalidPermutation(format!("{p:?} does not act on {{1..{}}}", self.n + 1)));
        }
        let mut out = Element::zero(self.ring, self.n);
        for (h, c) in &self.terms {
            let pairs: Vec<(usize, usize)> = h.edges().map(|e| (p.apply(e.i()), p.apply(e.j()))).collect();
            let image = Element::straighten(self.ring, self.n, &pairs)?;
            for (hi, ci) in image.terms {
                out.add_term(hi, ci * c);
            }
        }
        Ok(out)
    }

    /// Coordinates of the degree-`d` part on the ordered NBC basis of
    /// degree `d`.
    pub fn coordinates(&self, d: usize) -> SparseVector {
        let dim = nbc_count(self.n, d) as usize;
        SparseVector::from_pairs(
            dim,
            self.terms
                .iter()
                .filter(|(h, _)| h.degree() == d)
                .map(|(h, c)| (rank_nbc(*h).expect("stored keys are NBC") as usize, c.clone())),
        )
    }

    pub fn from_coordinates(ring: Ring, n: usize, d: usize, v: &SparseVector) -> Result<Element> {
        let mut out = Element::zero(ring, n);
        for (k, c) in v.entries() {
            out.add_term(unrank_nbc(n, d, *k as u64)?, c.clone());
        }
        Ok(out)
    }

    /// Parses the text form, e.g. `"e[1,2]e[2,3] − e[1,2]e[1,3]"`. Factors
    /// need not be NBC or canonical; each term is straightened.
    pub fn parse(ring: Ring, n: usize, text: &str) -> Result<Element> {
        check_rank(n)?;
        let letter = ring.letter();
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for ch in compact.chars() {
            let is_minus = ch == '-' || ch == MINUS;
            if (ch == '+' || is_minus) && !current.is_empty() && !current.ends_with('/') {
                terms.push((negative, std::mem::take(&mut current)));
                negative = is_minus;
            } else if (ch == '+' || is_minus) && current.is_empty() {
                if ch != '+' {
                    negative = !negative;
                }
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {text:?}")));
        }
        terms.push((negative, current));

        let mut out = Element::zero(ring, n);
        for (neg, body) in terms {
            let (coeff, mono) = match body.find(letter) {
                Some(pos) => {
                    let c = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                    let c = if c.is_empty() { Scalar::one() } else { c.parse::<Scalar>()? };
                    (c, &body[pos..])
                }
                None => (body.parse::<Scalar>()?, "1"),
            };
            let coeff = if neg { -coeff } else { coeff };
            let factors = parse_factors(letter, mono)?;
            let term = Element::straighten(ring, n, &factors)?;
            out = out.try_add(&term.scale(&coeff))?;
        }
        Ok(out)
    }
}

/// Display order: by degree, then by descending lexicographic edge list.
fn display_order(a: &Handful, b: &Handful) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        let ea: Vec<_> = a.edges().collect();
        let eb: Vec<_> = b.edges().collect();
        eb.cmp(&ea)
    })
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Handful> = self.terms.keys().collect();
        keys.sort_by(|a, b| display_order(a, b));
        for (k, h) in keys.into_iter().enumerate() {
            let c = &self.terms[h];
            match (k == 0, c.is_negative()) {
                (true, true) => write!(f, "{MINUS}")?,
                (true, false) => {}
                (false, true) => write!(f, " {MINUS} ")?,
                (false, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if h.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", h.to_text(self.ring.letter()))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}({})", self.ring, self.n, self)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("incompatible elements")
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_add(&-rhs).expect("incompatible elements")
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::from(-1))
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Ring product; panics on mismatched rings or ranks (use
/// [`Element::try_mul`] to get an error instead).
impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("incompatible elements")
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}

impl Mul<&Element> for &Scalar {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

impl Mul<&Element> for i64 {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(&Scalar::from(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn os(n: usize, s: &str) -> Element {
        Element::parse(Ring::OS, n, s).unwrap()
    }

    fn vg(n: usize, s: &str) -> Element {
        Element::parse(Ring::VG, n, s).unwrap()
    }

    #[test]
    fn arnold_relation_instance() {
        let x = Element::straighten(Ring::OS, 3, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(x.to_string(), "e[1,2]e[2,3] − e[1,2]e[1,3]");
        let y = Element::straighten(Ring::OS, 3, &[(2, 3), (1, 3)]).unwrap();
        assert_eq!(y, -&x);
        assert_eq!(y.to_string(), "−e[1,2]e[2,3] + e[1,2]e[1,3]");
        assert!(Element::straighten(Ring::OS, 3, &[(1, 2), (1, 2)]).unwrap().is_zero());
    }

    #[test]
    fn os_generator_is_symmetric() {
        assert_eq!(Element::generator(Ring::OS, 2, 2, 1).unwrap(), Element::generator(Ring::OS, 2, 1, 2).unwrap());
    }

    #[test]
    fn vg_rules() {
        assert_eq!(vg(2, "x[2,1]").to_string(), "−x[1,2]");
        assert_eq!(vg(2, "x[1,3]x[2,3]").to_string(), "x[1,2]x[2,3] − x[1,2]x[1,3]");
        assert!(vg(2, "x[1,2]x[1,2]").is_zero());
        assert_eq!(vg(2, "x[2,3]x[1,3]"), vg(2, "x[1,3]x[2,3]"));
    }

    #[test]
    fn domain_errors() {
        assert!(Element::straighten(Ring::OS, 2, &[(1, 4)]).is_err());
        assert!(Element::straighten(Ring::OS, 2, &[(2, 2)]).is_err());
        assert!(Element::straighten(Ring::VG, 2, &[(0, 1)]).is_err());
        let a = os(2, "e[1,2]");
        let b = vg(2, "x[1,2]");
        assert_eq!(a.try_mul(&b), Err(Error::RingMismatch(Ring::OS, Ring::VG)));
        let c = os(3, "e[1,2]");
        assert_eq!(a.try_mul(&c), Err(Error::RankMismatch(2, 3)));
    }

    #[test]
    fn text_round_trip_and_forms() {
        for s in ["0", "1", "e[1,2]", "−3/2*e[1,2]e[2,3] + 5", "e[1,2]e[2,3] − e[1,2]e[1,3]"] {
            let x = os(3, s);
            assert_eq!(Element::parse(Ring::OS, 3, &x.to_string()).unwrap(), x);
        }
        assert_eq!(os(3, "2e[1,2] - e[1,2]"), os(3, "e[1,2]"));
        assert_eq!(os(3, "1 + 2*e[1,2]").to_string(), "1 + 2*e[1,2]");
        assert!(Element::parse(Ring::OS, 3, "e[1,2] +").is_err());
        assert!(Element::parse(Ring::OS, 3, "x[1,2]").is_err());
    }

    #[test]
    fn unit_and_degree() {
        let x = os(3, "e[1,2]e[2,3] + e[1,4]e[2,3]");
        assert_eq!(&x * &Element::one(Ring::OS, 3), x);
        assert_eq!(x.degree(), Some(2));
        assert_eq!(os(3, "1 + e[1,2]").degree(), None);
        assert_eq!(x.pow(0), Element::one(Ring::OS, 3));
    }

    #[test]
    fn graded_commutativity_small() {
        let x = os(3, "e[1,2]");
        let y = os(3, "e[3,4]");
        assert_eq!(&x * &y, -(&y * &x));
        let u = vg(3, "x[1,2]");
        let v = vg(3, "x[3,4]");
        assert_eq!(&u * &v, &v * &u);
    }

    #[test]
    fn coordinates_round_trip() {
        let x = os(3, "e[1,2]e[2,3] − 2*e[1,2]e[1,3] + e[3,4]e[2,4]");
        let v = x.coordinates(2);
        assert_eq!(Element::from_coordinates(Ring::OS, 3, 2, &v).unwrap(), x);
    }

    #[test]
    fn action_signs() {
        let swap = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(os(2, "e[1,2]").act(&swap).unwrap(), os(2, "e[1,2]"));
        assert_eq!(vg(2, "x[1,2]").act(&swap).unwrap(), vg(2, "−x[1,2]"));
        let id = Permutation::identity(4);
        let x = os(3, "e[1,2]e[2,3] − e[1,4]");
        assert_eq!(x.act(&id).unwrap(), x);
    }
}
