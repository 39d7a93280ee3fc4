//! The free graded-commutative algebra `Q{α, µ, γ}` (`α`, `µ` odd, `γ`
//! even) and normal forms modulo the ideals `I_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::os::{elem_a, elem_g, elem_m, p_of};
use crate::scalar::{Scalar, MINUS};

/// `α^alpha µ^mu γ^gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GcMonomial {
    pub alpha: bool,
    pub mu: bool,
    pub gamma: u32,
}

impl GcMonomial {
    pub const ONE: GcMonomial = GcMonomial { alpha: false, mu: false, gamma: 0 };

    pub fn new(alpha: bool, mu: bool, gamma: u32) -> Self {
        GcMonomial { alpha, mu, gamma }
    }

    pub fn degree(self) -> usize {
        self.alpha as usize + self.mu as usize + 2 * self.gamma as usize
    }

    /// By degree, then `α` before `µ`.
    fn sort_key(self) -> (usize, bool, u32) {
        (self.degree(), !self.alpha, self.gamma)
    }

    /// Product with its sign, or `None` when an odd generator repeats.
    pub fn times(self, other: GcMonomial) -> Option<(i64, GcMonomial)> {
        if (self.alpha && other.alpha) || (self.mu && other.mu) {
            return None;
        }
        // Only µ·α needs a swap; γ is central.
        let sign = if self.mu && other.alpha { -1 } else { 1 };
        Some((
            sign,
            GcMonomial { alpha: self.alpha || other.alpha, mu: self.mu || other.mu, gamma: self.gamma + other.gamma },
        ))
    }
}

impl fmt::Display for GcMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == GcMonomial::ONE {
            return write!(f, "1");
        }
        if self.alpha {
            write!(f, "α")?;
        }
        if self.mu {
            write!(f, "µ")?;
        }
        match self.gamma {
            0 => Ok(()),
            1 => write!(f, "γ"),
            d => write!(f, "γ^{d}"),
        }
    }
}

/// A linear combination of monomials `α^ε µ^δ γ^d`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeGCElement {
    terms: BTreeMap<GcMonomial, Scalar>,
}

impl FreeGCElement {
    pub fn zero() -> Self {
        FreeGCElement::default()
    }

    pub fn one() -> Self {
        FreeGCElement::monomial(GcMonomial::ONE)
    }

    pub fn monomial(m: GcMonomial) -> Self {
        FreeGCElement::term(Scalar::one(), m)
    }

    pub fn term(c: Scalar, m: GcMonomial) -> Self {
        let mut out = FreeGCElement::zero();
        out.add_term(m, c);
        out
    }

    pub fn alpha() -> Self {
        FreeGCElement::monomial(GcMonomial::new(true, false, 0))
    }

    pub fn mu() -> Self {
        FreeGCElement::monomial(GcMonomial::new(false, true, 0))
    }

    pub fn gamma() -> Self {
        FreeGCElement::monomial(GcMonomial::new(false, false, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GcMonomial, &Scalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: GcMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = FreeGCElement::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(FreeGCElement::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for FreeGCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| m.sort_key());
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "{MINUS}")?,
                (0, false) => {}
                (_, true) => write!(f, " {MINUS} ")?,
                (_, false) => write!(f, " + ")?,
            }
            if magnitude.is_one() {
                write!(f, "{m}")?;
            } else if *m == GcMonomial::ONE {
                write!(f, "{magnitude}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeGCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GC({self})")
    }
}

impl Add for &FreeGCElement {
    type Output = FreeGCElement;
    fn add(self, other: &FreeGCElement) -> FreeGCElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &FreeGCElement {
    type Output = FreeGCElement;
    fn sub(self, other: &FreeGCElement) -> FreeGCElement {
        self + &(-other)
    }
}

impl Neg for &FreeGCElement {
    type Output = FreeGCElement;
    fn neg(self) -> FreeGCElement {
        self.scale(&Scalar::from(-1))
    }
}

impl Mul for &FreeGCElement {
    type Output = FreeGCElement;
    fn mul(self, other: &FreeGCElement) -> FreeGCElement {
        let mut out = FreeGCElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((sign, m)) = m1.times(*m2) {
                    out.add_term(m, c1 * c2 * Scalar::from(sign));
                }
            }
        }
        out
    }
}

/// The ideal `I_n`: `⟨γ^p⟩` for even `n`, and
/// `⟨γ^p, αγ^{p-1} − (p-1)µγ^{p-1}⟩` for odd `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub n: usize,
    pub p: usize,
}

impl Ideal {
    /// `I_n` with `p = ⌊(n+1)/2⌋`.
    pub fn new(n: usize) -> Result<Self> {
        Ideal::with_p(n, p_of(n))
    }

    /// The same shape of ideal with an arbitrary exponent `p ≥ 1`.
    pub fn with_p(n: usize, p: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n, "n >= 2"));
        }
        if p == 0 {
            return Err(Error::InvalidRank(p, "p >= 1"));
        }
        Ok(Ideal { n, p })
    }

    fn odd(self) -> bool {
        self.n % 2 == 1
    }

    /// Normal form of one monomial.
    ///
    /// For odd `n` the relation `r = αγ^{p-1} − (p-1)µγ^{p-1}` also gives
    /// `µ·r = −αµγ^{p-1}`, so `αµγ^{p-1}` lies in the ideal.
    fn reduce_monomial(self, m: GcMonomial) -> FreeGCElement {
        let top = (self.p - 1) as u32;
        if m.gamma as usize >= self.p {
            return FreeGCElement::zero();
        }
        if self.odd() && m.gamma == top && m.alpha {
            if m.mu {
                return FreeGCElement::zero();
            }
            return FreeGCElement::term(Scalar::from(self.p - 1), GcMonomial::new(false, true, top));
        }
        FreeGCElement::monomial(m)
    }

    pub fn reduce(self, x: &FreeGCElement) -> FreeGCElement {
        let mut out = FreeGCElement::zero();
        for (m, c) in x.terms() {
            out = &out + &self.reduce_monomial(*m).scale(c);
        }
        out
    }

    pub fn is_normal(self, m: GcMonomial) -> bool {
        self.reduce_monomial(m) == FreeGCElement::monomial(m)
    }

    /// Monomials in normal form, by degree then lexicographically.
    pub fn quotient_basis(self) -> Vec<GcMonomial> {
        let mut out: Vec<GcMonomial> = (0..self.p as u32)
            .flat_map(|d| {
                [(false, false), (true, false), (false, true), (true, true)]
                    .into_iter()
                    .map(move |(a, u)| GcMonomial::new(a, u, d))
            })
            .filter(|&m| self.is_normal(m))
            .collect();
        out.sort_by_key(|m| m.sort_key());
        out
    }

    /// Graded dimensions of the quotient.
    pub fn graded_dims(self) -> Vec<usize> {
        let basis = self.quotient_basis();
        let top = basis.iter().map(|m| m.degree()).max().unwrap_or(0);
        let mut dims = vec![0; top + 1];
        for m in basis {
            dims[m.degree()] += 1;
        }
        dims
    }
}

/// Normal form of `x` in `Q{α,µ,γ}/I_n`.
pub fn gc_reduce(x: &FreeGCElement, n: usize) -> Result<FreeGCElement> {
    Ok(Ideal::new(n)?.reduce(x))
}

/// The algebra map `α ↦ a`, `µ ↦ m`, `γ ↦ g` into `OS_n`.
#[derive(Clone, Debug)]
pub struct Phi {
    a: Element,
    m: Element,
    /// `g^0, …, g^{⌊n/2⌋}`; higher powers vanish for degree reasons.
    g_powers: Vec<Element>,
}

impl Phi {
    pub fn new(n: usize) -> Result<Self> {
        let g = elem_g(n)?;
        let mut g_powers = vec![Element::one(crate::Ring::OS, n)];
        for _ in 0..n / 2 {
            let next = g_powers.last().expect("nonempty") * &g;
            g_powers.push(next);
        }
        Ok(Phi { a: elem_a(n)?, m: elem_m(n)?, g_powers })
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn monomial(&self, mono: GcMonomial) -> Element {
        let mut out = Element::one(crate::Ring::OS, self.n());
        if mono.alpha {
            out = &out * &self.a;
        }
        if mono.mu {
            out = &out * &self.m;
        }
        match self.g_powers.get(mono.gamma as usize) {
            Some(gd) => &out * gd,
            None => Element::zero(crate::Ring::OS, self.n()),
        }
    }

    pub fn apply(&self, x: &FreeGCElement) -> Element {
        let mut out = Element::zero(crate::Ring::OS, self.n());
        for (mono, c) in x.terms() {
            out = &out + &self.monomial(*mono).scale(c);
        }
        out
    }
}
