//! Normal-ordered polynomials in the ladder operators `a`, `a†`.
//!
//! Every operator symbol in the crate is a [`WeylPoly`]: a finite sum of
//! normal-ordered words `(a†)^p a^q` with exact coefficients. Products are
//! re-normal-ordered with the closed form of the rewrite `a·a† → a†·a + 1`;
//! [`rewrite`] holds the step-by-step rewriting engine the closed form is
//! checked against.

mod generators;
pub mod rewrite;

pub use generators::{casimir, casimir_expansion, CasimirExpansion, Generator, StandardGenerators};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::field::{Coeff, Rat};
use crate::Error;

/// The normal-ordered word `(a†)^p a^q`.
///
/// Ordered by total degree, then by `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    /// power of `a†`
    pub p: u32,
    /// power of `a`
    pub q: u32,
}

impl Monomial {
    pub const IDENTITY: Monomial = Monomial { p: 0, q: 0 };

    pub fn new(p: u32, q: u32) -> Self {
        Monomial { p, q }
    }

    pub fn degree(&self) -> u32 {
        self.p + self.q
    }

    pub fn parity(&self) -> Parity {
        Parity::of_degree(self.degree())
    }

    /// Shift `p − q` of the Fock index.
    pub fn offset(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    pub fn adjoint(&self) -> Monomial {
        Monomial {
            p: self.q,
            q: self.p,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.p).cmp(&(other.degree(), other.p))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::IDENTITY {
            return write!(f, "𝟙");
        }
        match self.p {
            0 => {}
            1 => write!(f, "a†")?,
            p => write!(f, "a†^{p}")?,
        }
        match self.q {
            0 => Ok(()),
            1 => write!(f, "a"),
            q => write!(f, "a^{q}"),
        }
    }
}

/// Z₂ grading by total ladder degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(d: u32) -> Parity {
        if d.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// 0 for even, 1 for odd.
    pub fn bit(self) -> u32 {
        self as u32
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::of_degree(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Exact polynomial in `a`, `a†`, kept in normal order.
///
/// Zero coefficients are never stored, so the empty map is the zero
/// polynomial and structural equality is operator equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeylPoly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl WeylPoly {
    pub fn zero() -> Self {
        WeylPoly::default()
    }

    pub fn identity() -> Self {
        WeylPoly::scalar(Coeff::one())
    }

    pub fn scalar(c: Coeff) -> Self {
        WeylPoly::term(Monomial::IDENTITY, c)
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        WeylPoly { terms }
    }

    pub fn monomial(p: u32, q: u32) -> Self {
        WeylPoly::term(Monomial::new(p, q), Coeff::one())
    }

    /// The annihilation operator `a`.
    pub fn a() -> Self {
        WeylPoly::monomial(0, 1)
    }

    /// The creation operator `a†`.
    pub fn a_dag() -> Self {
        WeylPoly::monomial(1, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(iter: I) -> Self {
        let mut poly = WeylPoly::zero();
        for (m, c) in iter {
            poly.add_term(m, &c);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Maximum total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Parity if every monomial shares it. The zero polynomial reports `None`
    /// as it is homogeneous of either parity.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.parity().is_some()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Coeff) -> WeylPoly {
        if c.is_zero() {
            return WeylPoly::zero();
        }
        WeylPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rat) -> WeylPoly {
        self.scale(&Coeff::from_rat(r.clone()))
    }

    /// Normal-ordered product.
    pub fn multiply(&self, other: &WeylPoly) -> WeylPoly {
        let mut out = WeylPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                for (m, k) in monomial_product(*m1, *m2) {
                    out.add_term(m, &(&c * &Rat::from_integer(k)));
                }
            }
        }
        out
    }

    /// Formal dagger: `(a†)^p a^q ↦ (a†)^q a^p`; coefficients are real.
    pub fn adjoint(&self) -> WeylPoly {
        WeylPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.adjoint(), c.clone()))
                .collect(),
        }
    }

    pub fn commutator(&self, other: &WeylPoly) -> WeylPoly {
        &self.multiply(other) - &other.multiply(self)
    }

    pub fn anticommutator(&self, other: &WeylPoly) -> WeylPoly {
        &self.multiply(other) + &other.multiply(self)
    }

    pub fn pow(&self, n: u32) -> WeylPoly {
        (0..n).fold(WeylPoly::identity(), |acc, _| acc.multiply(self))
    }

    /// `Some(c)` when `self = c·other` with `other` nonzero.
    pub fn ratio_to(&self, other: &WeylPoly) -> Option<Coeff> {
        let (m0, c0) = other.terms.iter().next()?;
        let ratio = self.coeff(m0) / c0.clone();
        (self == &other.scale(&ratio)).then_some(ratio)
    }

    /// Constant value when the polynomial is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => self.terms.get(&Monomial::IDENTITY).cloned(),
            _ => None,
        }
    }
}

/// `(a†^p1 a^q1)(a†^p2 a^q2) = Σ_k k!·C(q1,k)·C(p2,k) a†^{p1+p2−k} a^{q1+q2−k}`.
///
/// `k` counts the contractions produced by moving `a^q1` through `a†^p2`.
pub fn monomial_product(x: Monomial, y: Monomial) -> Vec<(Monomial, BigInt)> {
    let kmax = x.q.min(y.p);
    let mut out = Vec::with_capacity(kmax as usize + 1);
    // weight(k) = C(q1,k) C(p2,k) k!, built incrementally
    let mut weight = BigInt::one();
    for k in 0..=kmax {
        if k > 0 {
            weight =
                weight * BigInt::from(x.q - k + 1) * BigInt::from(y.p - k + 1) / BigInt::from(k);
        }
        out.push((Monomial::new(x.p + y.p - k, x.q + y.q - k), weight.clone()));
    }
    out
}

impl Add for &WeylPoly {
    type Output = WeylPoly;
    fn add(self, rhs: &WeylPoly) -> WeylPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &WeylPoly {
    type Output = WeylPoly;
    fn sub(self, rhs: &WeylPoly) -> WeylPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Neg for &WeylPoly {
    type Output = WeylPoly;
    fn neg(self) -> WeylPoly {
        WeylPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &WeylPoly {
    type Output = WeylPoly;
    fn mul(self, rhs: &WeylPoly) -> WeylPoly {
        self.multiply(rhs)
    }
}

impl fmt::Display for WeylPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else if *m == Monomial::IDENTITY {
                write!(f, "{c}·𝟙")?;
            } else {
                write!(f, "{c}·{m}")?;
            }
        }
        Ok(())
    }
}

/// A parity-homogeneous polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedElement {
    poly: WeylPoly,
    parity: Parity,
}

impl GradedElement {
    /// Infers the parity; the zero polynomial is taken as even.
    pub fn new(poly: WeylPoly) -> Result<Self, Error> {
        if poly.is_zero() {
            return Ok(GradedElement {
                poly,
                parity: Parity::Even,
            });
        }
        let parity = poly
            .parity()
            .ok_or_else(|| Error::MixedParity(poly.to_string()))?;
        Ok(GradedElement { poly, parity })
    }

    pub fn with_parity(poly: WeylPoly, parity: Parity) -> Result<Self, Error> {
        match poly.parity() {
            Some(p) if p != parity => Err(Error::MixedParity(poly.to_string())),
            None if !poly.is_zero() => Err(Error::MixedParity(poly.to_string())),
            _ => Ok(GradedElement { poly, parity }),
        }
    }

    pub fn zero(parity: Parity) -> Self {
        GradedElement {
            poly: WeylPoly::zero(),
            parity,
        }
    }

    pub fn poly(&self) -> &WeylPoly {
        &self.poly
    }

    pub fn into_poly(self) -> WeylPoly {
        self.poly
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &Coeff) -> GradedElement {
        GradedElement {
            poly: self.poly.scale(c),
            parity: self.parity,
        }
    }

    pub fn adjoint(&self) -> GradedElement {
        GradedElement {
            poly: self.poly.adjoint(),
            parity: self.parity,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

impl BracketKind {
    /// Graded rule: anticommutator iff both entries are odd.
    pub fn graded(x: Parity, y: Parity) -> BracketKind {
        if x.is_odd() && y.is_odd() {
            BracketKind::Anticommutator
        } else {
            BracketKind::Commutator
        }
    }

    pub fn apply(self, x: &WeylPoly, y: &WeylPoly) -> WeylPoly {
        match self {
            BracketKind::Commutator => x.commutator(y),
            BracketKind::Anticommutator => x.anticommutator(y),
        }
    }
}

/// `xy − (−1)^{|x||y|} yx`.
pub fn graded_bracket(x: &GradedElement, y: &GradedElement) -> GradedElement {
    let kind = BracketKind::graded(x.parity, y.parity);
    GradedElement {
        poly: kind.apply(&x.poly, &y.poly),
        parity: x.parity + y.parity,
    }
}

/// Graded bracket on raw polynomials, rejecting inhomogeneous input.
pub fn graded_bracket_poly(x: &WeylPoly, y: &WeylPoly) -> Result<WeylPoly, Error> {
    let x = GradedElement::new(x.clone())?;
    let y = GradedElement::new(y.clone())?;
    Ok(graded_bracket(&x, &y).poly)
}
