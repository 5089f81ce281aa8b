use serde::{Deserialize, Serialize};

use super::operator::{to_matrix, trusted_window, FockOperator};
use crate::exec::Exec;
use crate::relations::{all_relations, Relation, RelationLhs};
use crate::weyl::{BracketKind, Generator};
use crate::Error;

/// Numeric check of one relation: matrix products on the left, the matrix
/// of the symbolic right-hand side on the right.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericResidual {
    pub relation: String,
    pub group: String,
    pub dim: usize,
    pub window: usize,
    /// max |lhs − rhs| over rows and columns `< window`
    pub in_window: f64,
    /// max |lhs − rhs| over the truncation boundary
    pub outside_window: f64,
}

fn matrix(g: Generator, dim: usize) -> FockOperator {
    to_matrix(&g.poly(), dim).expect("dim checked by caller")
}

/// Left-hand side of `r` built from truncated matrix products.
pub fn lhs_matrix(r: &Relation, dim: usize) -> Result<FockOperator, Error> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(match &r.lhs {
        RelationLhs::Bracket { kind, left, right } => {
            let (x, y) = (matrix(*left, dim), matrix(*right, dim));
            match kind {
                BracketKind::Commutator => x.commutator(&y),
                BracketKind::Anticommutator => x.anticommutator(&y),
            }
        }
        RelationLhs::Casimir => {
            let kp = matrix(Generator::KPlus, dim);
            let km = matrix(Generator::KMinus, dim);
            let k3 = matrix(Generator::K3, dim);
            kp.anticommutator(&km).scale(0.5).sub(&k3.matmul(&k3))
        }
    })
}

pub fn relation_residual(r: &Relation, dim: usize) -> Result<NumericResidual, Error> {
    let degree = r.operand_degree();
    let window = trusted_window(dim, degree);
    if window == 0 {
        return Err(Error::EmptyWindow { dim, degree });
    }
    let diff = lhs_matrix(r, dim)?.sub(&to_matrix(&r.rhs_poly(), dim)?);
    Ok(NumericResidual {
        relation: r.name(),
        group: r.group.to_string(),
        dim,
        window,
        in_window: diff.max_abs_in_window(window),
        outside_window: diff.max_abs_outside_window(window),
    })
}

pub fn relation_residuals(dim: usize) -> Result<Vec<NumericResidual>, Error> {
    relation_residuals_with(dim, Exec::default())
}

/// All sixteen relations at truncation `dim`; fails if any trusted window
/// is empty.
pub fn relation_residuals_with(dim: usize, exec: Exec) -> Result<Vec<NumericResidual>, Error> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let relations = all_relations();
    exec.map(&relations, |r| relation_residual(r, dim))
        .into_iter()
        .collect()
}
