use num_complex::Complex64;

use super::FockOperator;
use crate::Error;

/// A vector in the truncated Fock space `span{|0⟩ … |N−1⟩}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FockState {
    pub amplitudes: Vec<Complex64>,
}

impl FockState {
    /// The basis state `|n⟩`.
    pub fn basis(n: usize, dim: usize) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if n >= dim {
            return Err(Error::InvalidConfig(format!(
                "|{n}⟩ is outside a dimension-{dim} space"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[n] = Complex64::new(1.0, 0.0);
        Ok(FockState { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &FockState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn normalized(&self) -> Option<FockState> {
        let n = self.norm();
        (n > 0.0).then(|| FockState {
            amplitudes: self.amplitudes.iter().map(|a| a / n).collect(),
        })
    }

    pub fn apply(&self, op: &FockOperator) -> FockState {
        assert_eq!(op.dim(), self.dim(), "dimension mismatch");
        let m = op.to_f64();
        let amplitudes = (0..self.dim())
            .map(|i| {
                (0..self.dim())
                    .map(|j| self.amplitudes[j] * m[[i, j]])
                    .sum()
            })
            .collect();
        FockState { amplitudes }
    }
}
