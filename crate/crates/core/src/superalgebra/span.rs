use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::field::Coeff;
use crate::weyl::{Monomial, WeylPoly};

#[derive(Clone, Debug)]
struct Row {
    /// normalized so that the pivot coefficient is 1
    vector: WeylPoly,
    /// `vector = Σ combo[k] · inserted[k]`
    combo: Vec<Coeff>,
}

/// Incremental row-echelon form over `ℚ[s]` in monomial coordinates.
///
/// Rows are keyed by their pivot, the smallest monomial (degree, then `p`)
/// with a nonzero coefficient.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: BTreeMap<Monomial, Row>,
    inserted: usize,
}

fn axpy(combo: &mut Vec<Coeff>, c: &Coeff, other: &[Coeff]) {
    if combo.len() < other.len() {
        combo.resize(other.len(), Coeff::zero());
    }
    for (dst, src) in combo.iter_mut().zip(other) {
        if !src.is_zero() {
            *dst += &(c * src);
        }
    }
}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the rows; returns the residual and the
    /// combination of inserted vectors that was subtracted.
    fn reduce(&self, v: &WeylPoly) -> (WeylPoly, Vec<Coeff>) {
        let mut residual = v.clone();
        let mut combo = Vec::new();
        for (pivot, row) in &self.rows {
            let c = residual.coeff(pivot);
            if c.is_zero() {
                continue;
            }
            residual = &residual - &row.vector.scale(&c);
            axpy(&mut combo, &c, &row.combo);
        }
        (residual, combo)
    }

    pub fn contains(&self, v: &WeylPoly) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Coordinates of `v` in terms of the inserted vectors, in insertion order.
    pub fn solve(&self, v: &WeylPoly) -> Option<Vec<Coeff>> {
        let (residual, mut combo) = self.reduce(v);
        if !residual.is_zero() {
            return None;
        }
        combo.resize(self.inserted, Coeff::zero());
        Some(combo)
    }

    /// Adds `v` if it is independent of the current rows. Returns whether it
    /// was added; dependent vectors leave the span untouched.
    pub fn insert(&mut self, v: &WeylPoly) -> bool {
        let (residual, combo) = self.reduce(v);
        let Some((pivot, lead)) = residual.terms().next().map(|(m, c)| (*m, c.clone())) else {
            return false;
        };
        let inv = lead.inverse().expect("pivot is nonzero");
        let index = self.inserted;
        // residual = v − Σ combo·inserted
        let mut row_combo: Vec<Coeff> = combo.iter().map(|c| -c).collect();
        row_combo.resize(index + 1, Coeff::zero());
        row_combo[index] = Coeff::one();
        let row_combo = row_combo.iter().map(|c| c * &inv).collect();
        self.rows.insert(
            pivot,
            Row {
                vector: residual.scale(&inv),
                combo: row_combo,
            },
        );
        self.inserted += 1;
        true
    }
}
