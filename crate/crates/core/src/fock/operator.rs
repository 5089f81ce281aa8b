use std::collections::BTreeSet;

use ndarray::Array2;
use twofloat::TwoFloat;

use crate::weyl::{StandardGenerators, WeylPoly};
use crate::Error;

fn tf_zero() -> TwoFloat {
    TwoFloat::from(0.0)
}

/// `N×N` truncation of an operator on the Fock basis `|0⟩ … |N−1⟩`.
///
/// Entries are held in double-double precision so products of `O(N)`
/// entries keep absolute errors far below `1e−12` up to `N = 256`.
/// `trusted` is the number of leading indices on which products of this
/// operator reproduce the untruncated algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct FockOperator {
    dim: usize,
    entries: Array2<TwoFloat>,
    source_degree: u32,
    trusted: usize,
}

/// `N − 2d`, saturating at 0.
pub fn trusted_window(dim: usize, degree: u32) -> usize {
    dim.saturating_sub(2 * degree as usize)
}

impl FockOperator {
    fn from_entries(entries: Array2<TwoFloat>, source_degree: u32) -> Self {
        let dim = entries.nrows();
        FockOperator {
            dim,
            entries,
            source_degree,
            trusted: trusted_window(dim, source_degree),
        }
    }

    pub fn identity(dim: usize) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut e = Array2::from_elem((dim, dim), tf_zero());
        for i in 0..dim {
            e[[i, i]] = TwoFloat::from(1.0);
        }
        Ok(FockOperator::from_entries(e, 0))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn source_degree(&self) -> u32 {
        self.source_degree
    }

    pub fn trusted(&self) -> usize {
        self.trusted
    }

    /// Entry `⟨m|X|n⟩` rounded to `f64`.
    pub fn entry(&self, m: usize, n: usize) -> f64 {
        f64::from(self.entries[[m, n]])
    }

    pub fn to_f64(&self) -> Array2<f64> {
        self.entries.mapv(f64::from)
    }

    pub fn transpose(&self) -> FockOperator {
        FockOperator {
            entries: self.entries.t().to_owned(),
            ..self.clone()
        }
    }

    /// Diagonal offsets `m − n` carrying nonzero entries.
    pub fn offsets(&self) -> BTreeSet<i64> {
        self.entries
            .indexed_iter()
            .filter(|(_, v)| **v != 0.0)
            .map(|((m, n), _)| m as i64 - n as i64)
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        self.offsets().iter().all(|&o| o == 0)
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.entry(i, i)).collect()
    }

    pub fn trace(&self) -> f64 {
        let t = (0..self.dim).fold(tf_zero(), |acc, i| acc + self.entries[[i, i]]);
        f64::from(t)
    }

    fn zip_with(&self, other: &FockOperator, f: impl Fn(TwoFloat, TwoFloat) -> TwoFloat) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut entries = self.entries.clone();
        entries.zip_mut_with(&other.entries, |a, b| *a = f(*a, *b));
        FockOperator {
            dim: self.dim,
            entries,
            source_degree: self.source_degree.max(other.source_degree),
            trusted: self.trusted.min(other.trusted),
        }
    }

    pub fn add(&self, other: &FockOperator) -> FockOperator {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &FockOperator) -> FockOperator {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: f64) -> FockOperator {
        let c = TwoFloat::from(c);
        FockOperator {
            entries: self.entries.mapv(|v| v * c),
            ..self.clone()
        }
    }

    /// Matrix product, skipping structural zeros (the matrices are banded).
    pub fn matmul(&self, other: &FockOperator) -> FockOperator {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let row_support = |e: &Array2<TwoFloat>| -> Vec<Vec<usize>> {
            (0..n)
                .map(|i| (0..n).filter(|&j| e[[i, j]] != 0.0).collect())
                .collect()
        };
        let lhs = row_support(&self.entries);
        let rhs = row_support(&other.entries);
        let mut out = Array2::from_elem((n, n), tf_zero());
        for i in 0..n {
            for &k in &lhs[i] {
                let a = self.entries[[i, k]];
                for &j in &rhs[k] {
                    out[[i, j]] += a * other.entries[[k, j]];
                }
            }
        }
        FockOperator {
            dim: n,
            entries: out,
            source_degree: self.source_degree.max(other.source_degree),
            trusted: self.trusted.min(other.trusted),
        }
    }

    pub fn commutator(&self, other: &FockOperator) -> FockOperator {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn anticommutator(&self, other: &FockOperator) -> FockOperator {
        self.matmul(other).add(&other.matmul(self))
    }

    /// Max absolute entry on rows and columns `< window`.
    pub fn max_abs_in_window(&self, window: usize) -> f64 {
        let w = window.min(self.dim);
        let mut best = 0.0f64;
        for i in 0..w {
            for j in 0..w {
                best = best.max(f64::from(self.entries[[i, j]]).abs());
            }
        }
        best
    }

    /// Max absolute entry with row or column `≥ window`.
    pub fn max_abs_outside_window(&self, window: usize) -> f64 {
        self.entries
            .indexed_iter()
            .filter(|((i, j), _)| *i >= window || *j >= window)
            .map(|(_, v)| f64::from(*v).abs())
            .fold(0.0, f64::max)
    }
}

/// Matrix of `x` on `|0⟩ … |N−1⟩`:
/// `⟨m|(a†)^p a^q|n⟩ = √(n!/(n−q)!)·√((n−q+p)!/(n−q)!)` for `m = n−q+p`.
pub fn to_matrix(x: &WeylPoly, dim: usize) -> Result<FockOperator, Error> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut entries = Array2::from_elem((dim, dim), tf_zero());
    for (m, c) in x.terms() {
        let c = c.to_twofloat();
        let (p, q) = (m.p as usize, m.q as usize);
        for n in q..dim {
            let target = n - q + p;
            if target >= dim {
                break;
            }
            // product of integers below 2^106 is exact in double-double
            let mut prod = TwoFloat::from(1.0);
            for i in 0..q {
                prod *= TwoFloat::from((n - i) as f64);
            }
            for i in 1..=p {
                prod *= TwoFloat::from((n - q + i) as f64);
            }
            entries[[target, n]] += c * prod.sqrt();
        }
    }
    Ok(FockOperator::from_entries(entries, x.degree()))
}

/// `diag((−1)ⁿ)`.
pub fn parity_matrix(dim: usize) -> Result<FockOperator, Error> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut entries = Array2::from_elem((dim, dim), tf_zero());
    for n in 0..dim {
        entries[[n, n]] = TwoFloat::from(if n % 2 == 0 { 1.0 } else { -1.0 });
    }
    Ok(FockOperator::from_entries(entries, 0))
}

/// `(½(𝟙 + P), ½(𝟙 − P))`, projecting onto even and odd Fock states.
pub fn sector_projectors(dim: usize) -> Result<(FockOperator, FockOperator), Error> {
    let id = FockOperator::identity(dim)?;
    let p = parity_matrix(dim)?;
    Ok((id.add(&p).scale(0.5), id.sub(&p).scale(0.5)))
}

/// Energies `ħω(n + ½)`, `n < N`, read off the (diagonal) Hamiltonian
/// `H = 2K₃` and scaled by `ħω`; ascending.
pub fn spectrum(dim: usize, hbar_omega: f64) -> Result<Vec<f64>, Error> {
    if !(hbar_omega > 0.0 && hbar_omega.is_finite()) {
        return Err(Error::NonPositiveScale(hbar_omega));
    }
    let h = to_matrix(&StandardGenerators::new().hamiltonian(), dim)?;
    assert!(
        h.is_diagonal(),
        "the oscillator Hamiltonian is diagonal in the Fock basis"
    );
    let mut e: Vec<f64> = h.diagonal().into_iter().map(|v| v * hbar_omega).collect();
    e.sort_by(f64::total_cmp);
    Ok(e)
}
