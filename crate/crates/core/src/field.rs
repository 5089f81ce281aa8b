//! Exact coefficients.
//!
//! Operator coefficients live in `ℚ[s]/(s² − ½)`, i.e. numbers `r + t·s` with
//! `r, t` arbitrary-precision rationals and `s = 1/√2`. Since ½ is not a
//! rational square this quotient ring is a field, which is what the exact
//! span and structure-constant solves need.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use twofloat::TwoFloat;

pub type Rat = BigRational;

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `p/q` with the denominator always present (`2/1`, `-3/16`).
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses the `p/q` (or bare integer) form written by [`rat_to_string`].
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

pub(crate) fn rat_to_twofloat(r: &Rat) -> TwoFloat {
    let n = big_to_twofloat(r.numer());
    let d = big_to_twofloat(r.denom());
    n / d
}

fn big_to_twofloat(b: &BigInt) -> TwoFloat {
    // Split into 2^48 limbs so integers up to ~2^100 convert without loss.
    let limb = BigInt::from(1u64 << 48);
    let mut rest = b.abs();
    let mut scale = TwoFloat::from(1.0);
    let mut acc = TwoFloat::from(0.0);
    while !rest.is_zero() {
        let digit = (&rest % &limb).to_f64().unwrap_or(0.0);
        acc += scale * TwoFloat::from(digit);
        scale *= TwoFloat::from((1u64 << 48) as f64);
        rest /= &limb;
    }
    if b.is_negative() {
        -acc
    } else {
        acc
    }
}

/// `1/√2` in double-double precision.
pub(crate) fn inv_sqrt2() -> TwoFloat {
    TwoFloat::from(0.5).sqrt()
}

/// An element `rational + surd·s` of `ℚ[s]/(s² − ½)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coeff {
    pub rational: Rat,
    pub surd: Rat,
}

impl Coeff {
    pub fn new(rational: Rat, surd: Rat) -> Self {
        Coeff { rational, surd }
    }

    pub fn from_rat(r: Rat) -> Self {
        Coeff {
            rational: r,
            surd: Rat::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Coeff::from_rat(rat(num, den))
    }

    /// The adjoined element `s = 1/√2`.
    pub fn s() -> Self {
        Coeff {
            rational: Rat::zero(),
            surd: Rat::one(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.rational)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        // (r + t s)(r − t s) = r² − t²/2
        let norm = &self.rational * &self.rational - &self.surd * &self.surd / rat(2, 1);
        Some(Coeff {
            rational: &self.rational / &norm,
            surd: -&self.surd / &norm,
        })
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.to_twofloat())
    }

    pub(crate) fn to_twofloat(&self) -> TwoFloat {
        let mut v = rat_to_twofloat(&self.rational);
        if !self.surd.is_zero() {
            v += rat_to_twofloat(&self.surd) * inv_sqrt2();
        }
        v
    }

    /// Canonical string form: `p/q` for rationals, `p/q+r/t*s` otherwise
    /// (`s` standing for `1/√2`).
    pub fn to_exact_string(&self) -> String {
        if self.surd.is_zero() {
            rat_to_string(&self.rational)
        } else {
            let sign = if self.surd.is_negative() { '-' } else { '+' };
            format!(
                "{}{}{}*s",
                rat_to_string(&self.rational),
                sign,
                rat_to_string(&self.surd.abs())
            )
        }
    }

    pub fn parse_exact(s: &str) -> Option<Coeff> {
        let s = s.trim();
        if let Some(body) = s.strip_suffix("*s") {
            // split at the sign separating the two parts (not a leading sign)
            let idx = body
                .char_indices()
                .skip(1)
                .filter(|(_, c)| *c == '+' || *c == '-')
                .map(|(i, _)| i)
                .last()?;
            let rational = parse_rat(&body[..idx])?;
            let surd = parse_rat(body[idx..].trim_start_matches('+'))?;
            Some(Coeff { rational, surd })
        } else {
            parse_rat(s).map(Coeff::from_rat)
        }
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::default()
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::from_int(1)
    }
}

impl From<Rat> for Coeff {
    fn from(r: Rat) -> Self {
        Coeff::from_rat(r)
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_int(n)
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        &self + &rhs
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        Coeff {
            rational: &self.rational + &rhs.rational,
            surd: &self.surd + &rhs.surd,
        }
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        self.rational += &rhs.rational;
        self.surd += &rhs.surd;
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, rhs: Coeff) -> Coeff {
        &self - &rhs
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        Coeff {
            rational: &self.rational - &rhs.rational,
            surd: &self.surd - &rhs.surd,
        }
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, rhs: &Coeff) {
        self.rational -= &rhs.rational;
        self.surd -= &rhs.surd;
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        // s² = ½
        let rational = &self.rational * &rhs.rational + &self.surd * &rhs.surd / rat(2, 1);
        let surd = &self.rational * &rhs.surd + &self.surd * &rhs.rational;
        Coeff { rational, surd }
    }
}

impl Mul<&Rat> for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Rat) -> Coeff {
        Coeff {
            rational: &self.rational * rhs,
            surd: &self.surd * rhs,
        }
    }
}

impl Div for Coeff {
    type Output = Coeff;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Coeff) -> Coeff {
        let inv = rhs.inverse().expect("division by zero coefficient");
        &self * &inv
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            rational: -self.rational,
            surd: -self.surd,
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            rational: -&self.rational,
            surd: -&self.surd,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.surd.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => fmt_surd(f, &self.surd),
            (false, false) => {
                write!(f, "({} ", self.rational)?;
                if self.surd.is_negative() {
                    write!(f, "- ")?;
                    fmt_surd(f, &-&self.surd)?;
                } else {
                    write!(f, "+ ")?;
                    fmt_surd(f, &self.surd)?;
                }
                write!(f, ")")
            }
        }
    }
}

fn fmt_surd(f: &mut fmt::Formatter<'_>, t: &Rat) -> fmt::Result {
    if t.is_one() {
        write!(f, "√½")
    } else if (-t).is_one() {
        write!(f, "-√½")
    } else {
        write!(f, "{}√½", t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_squares_to_half() {
        assert_eq!(&Coeff::s() * &Coeff::s(), Coeff::frac(1, 2));
    }

    #[test]
    fn inverse_round_trips() {
        let x = Coeff::new(rat(3, 4), rat(-5, 7));
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, Coeff::one());
        assert!(Coeff::zero().inverse().is_none());
    }

    #[test]
    fn numeric_value_of_s() {
        assert!((Coeff::s().to_f64() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-16);
    }

    #[test]
    fn exact_strings_parse_back() {
        for c in [
            Coeff::frac(3, 16),
            Coeff::from_int(-2),
            Coeff::new(rat(-1, 2), rat(-3, 5)),
            Coeff::new(Rat::zero(), rat(1, 1)),
        ] {
            assert_eq!(Coeff::parse_exact(&c.to_exact_string()), Some(c.clone()));
        }
        assert_eq!(rat_to_string(&rat(2, 1)), "2/1");
    }

    #[test]
    fn big_integers_convert_exactly() {
        let big = Rat::from_integer(BigInt::from(1u128 << 90) + 1);
        let tf = rat_to_twofloat(&big);
        assert_eq!(tf.hi(), (1u128 << 90) as f64);
        assert_eq!(tf.lo(), 1.0);
    }
}
