use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use twofloat::TwoFloat;

use crate::field::{rat, rat_to_string, rat_to_twofloat, Coeff, Rat};
use crate::weyl::{Generator, Monomial, WeylPoly};

/// Exact real number `Σ cᵢ √kᵢ` with rational `cᵢ` and distinct square-free
/// radicands `kᵢ`. Zero iff no terms are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactAmplitude {
    terms: BTreeMap<BigUint, Rat>,
}

/// `√(Π factors) = outer · √radicand` with `radicand` square-free.
fn sqrt_of_product(factors: impl IntoIterator<Item = u64>) -> (BigUint, BigUint) {
    let mut exponents: BTreeMap<u64, u32> = BTreeMap::new();
    for mut f in factors {
        if f == 0 {
            return (BigUint::zero(), BigUint::one());
        }
        let mut d = 2;
        while d * d <= f {
            while f % d == 0 {
                *exponents.entry(d).or_default() += 1;
                f /= d;
            }
            d += 1;
        }
        if f > 1 {
            *exponents.entry(f).or_default() += 1;
        }
    }
    let mut outer = BigUint::one();
    let mut radicand = BigUint::one();
    for (p, e) in exponents {
        outer *= BigUint::from(p).pow(e / 2);
        if e % 2 == 1 {
            radicand *= p;
        }
    }
    (outer, radicand)
}

impl ExactAmplitude {
    pub fn zero() -> Self {
        ExactAmplitude::default()
    }

    pub fn rational(r: Rat) -> Self {
        let mut a = ExactAmplitude::zero();
        a.add_term(BigUint::one(), r);
        a
    }

    /// `√(Π factors)`, reduced to square-free form.
    pub fn sqrt_product(factors: impl IntoIterator<Item = u64>) -> Self {
        let (outer, radicand) = sqrt_of_product(factors);
        let mut a = ExactAmplitude::zero();
        a.add_term(radicand, Rat::from_integer(BigInt::from(outer)));
        a
    }

    /// `√k` for any positive integer `k`.
    pub fn sqrt(k: u64) -> Self {
        ExactAmplitude::sqrt_product([k])
    }

    fn add_term(&mut self, radicand: BigUint, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(radicand.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(radicand, coefficient)` pairs in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &ExactAmplitude) -> ExactAmplitude {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> ExactAmplitude {
        let mut out = ExactAmplitude::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * r);
        }
        out
    }

    /// Multiplication by `s = 1/√2 = ½√2`.
    pub fn mul_s(&self) -> ExactAmplitude {
        let two = BigUint::from(2u32);
        let mut out = ExactAmplitude::zero();
        for (k, c) in &self.terms {
            if k.is_even() {
                // ½√2·√(2j) = √j
                out.add_term(k / &two, c.clone());
            } else {
                out.add_term(k * &two, c / Rat::from_integer(BigInt::from(2)));
            }
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> ExactAmplitude {
        let r = self.scale_rat(&c.rational);
        if c.surd.is_zero() {
            return r;
        }
        r.add(&self.mul_s().scale_rat(&c.surd))
    }

    pub fn mul(&self, other: &ExactAmplitude) -> ExactAmplitude {
        let mut out = ExactAmplitude::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                // k1, k2 square-free: √(k1k2) = g·√((k1/g)(k2/g))
                let g = k1.gcd(k2);
                let radicand = (k1 / &g) * (k2 / &g);
                out.add_term(radicand, c1 * c2 * Rat::from_integer(BigInt::from(g)));
            }
        }
        out
    }

    /// The value as a rational, if every term has radicand 1.
    pub fn to_rational(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.to_twofloat())
    }

    pub(crate) fn to_twofloat(&self) -> TwoFloat {
        self.terms
            .iter()
            .map(|(k, c)| {
                let k = TwoFloat::from(k.to_f64().expect("radicand fits in f64"));
                rat_to_twofloat(c) * k.sqrt()
            })
            .fold(TwoFloat::from(0.0), |a, b| a + b)
    }
}

impl fmt::Display for ExactAmplitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if k.is_one() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "√{k}")?;
            } else if (-c).is_one() {
                write!(f, "-√{k}")?;
            } else {
                write!(f, "{}√{k}", c)?;
            }
        }
        Ok(())
    }
}

/// Target index and amplitude of `(a†)^p a^q |n⟩`, or `None` when the
/// annihilators exhaust the state.
pub fn monomial_amplitude(m: Monomial, n: usize) -> Option<(usize, ExactAmplitude)> {
    let (p, q) = (m.p as u64, m.q as u64);
    let n = n as u64;
    if n < q {
        return None;
    }
    // a^q: √n·√(n−1)···√(n−q+1); then a†^p: √(n−q+1)···√(n−q+p)
    let down = (0..q).map(|i| n - i);
    let up = (1..=p).map(|i| n - q + i);
    let amp = ExactAmplitude::sqrt_product(down.chain(up));
    Some(((n - q + p) as usize, amp))
}

/// Exact amplitudes of `x|n⟩`, keyed by target Fock index. Targets whose
/// contributions cancel are dropped.
pub fn ladder_amplitude(x: &WeylPoly, n: usize) -> BTreeMap<usize, ExactAmplitude> {
    let mut out: BTreeMap<usize, ExactAmplitude> = BTreeMap::new();
    for (m, c) in x.terms() {
        if let Some((target, amp)) = monomial_amplitude(*m, n) {
            let slot = out.entry(target).or_default();
            *slot = slot.add(&amp.scale(c));
        }
    }
    out.retain(|_, a| !a.is_zero());
    out
}

/// `‖x|n⟩‖²` as an exact amplitude (rational for the generators).
pub fn norm_squared(x: &WeylPoly, n: usize) -> ExactAmplitude {
    ladder_amplitude(x, n)
        .values()
        .fold(ExactAmplitude::zero(), |acc, a| acc.add(&a.mul(a)))
}

/// Norms of `K±|n⟩` next to the Casimir-based prediction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormCondition {
    pub n: usize,
    /// `K₃` eigenvalue of `|n⟩`
    pub k3: Rat,
    /// `‖K₊|n⟩‖²`
    pub plus: Rat,
    /// `‖K₋|n⟩‖²`
    pub minus: Rat,
    /// `3/16 + m(m+1)` with `m` the `K₃` eigenvalue
    pub predicted_plus: Rat,
    /// `3/16 + m(m−1)`
    pub predicted_minus: Rat,
    /// `3/16 + n(n+1)` with the Fock label in place of `m`
    pub fock_label_plus: Rat,
    /// `3/16 + n(n−1)`
    pub fock_label_minus: Rat,
}

impl NormCondition {
    pub fn pair(&self) -> (Rat, Rat) {
        (self.plus.clone(), self.minus.clone())
    }

    pub fn matches_prediction(&self) -> bool {
        self.plus == self.predicted_plus && self.minus == self.predicted_minus
    }

    pub fn non_negative(&self) -> bool {
        !self.plus.is_negative() && !self.minus.is_negative()
    }

    pub fn fock_label_agrees(&self) -> bool {
        self.plus == self.fock_label_plus && self.minus == self.fock_label_minus
    }
}

pub fn norm_condition(n: usize) -> NormCondition {
    let casimir = rat(3, 16);
    let k3 = ladder_amplitude(&Generator::K3.poly(), n)
        .get(&n)
        .and_then(ExactAmplitude::to_rational)
        .expect("K3 is diagonal with rational eigenvalues");
    let norm = |g: Generator| {
        norm_squared(&g.poly(), n)
            .to_rational()
            .expect("K± norms are rational")
    };
    let one = Rat::one();
    let label = Rat::from_integer(BigInt::from(n));
    NormCondition {
        n,
        plus: norm(Generator::KPlus),
        minus: norm(Generator::KMinus),
        predicted_plus: &casimir + &k3 * (&k3 + &one),
        predicted_minus: &casimir + &k3 * (&k3 - &one),
        fock_label_plus: &casimir + &label * (&label + &one),
        fock_label_minus: &casimir + &label * (&label - &one),
        k3,
    }
}

/// Serializable form: `(radicand, "p/q")` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmplitudeTerm {
    pub radicand: String,
    pub coefficient: String,
}

impl ExactAmplitude {
    pub fn to_terms(&self) -> Vec<AmplitudeTerm> {
        self.terms
            .iter()
            .map(|(k, c)| AmplitudeTerm {
                radicand: k.to_string(),
                coefficient: rat_to_string(c),
            })
            .collect()
    }
}
