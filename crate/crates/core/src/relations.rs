//! The defining relations of the oscillator superalgebra, as data.
//!
//! Each [`Relation`] is evaluated two ways: symbolically here (exact residual
//! polynomial) and by truncated matrix products in [`crate::fock::residuals`].

use std::fmt;

use crate::exec::Exec;
use crate::field::Coeff;
use crate::weyl::{casimir, BracketKind, Generator, StandardGenerators, WeylPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationLhs {
    Bracket {
        kind: BracketKind,
        left: Generator,
        right: Generator,
    },
    /// `½(K₊K₋ + K₋K₊) − K₃²`
    Casimir,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    /// Short relation-group label, e.g. `so(2,1)`.
    pub group: &'static str,
    pub lhs: RelationLhs,
    /// Right-hand side as `Σ c·generator`; empty means zero.
    pub rhs: Vec<(Coeff, Generator)>,
}

impl Relation {
    fn bracket(
        group: &'static str,
        kind: BracketKind,
        left: Generator,
        right: Generator,
        rhs: Vec<(Coeff, Generator)>,
    ) -> Self {
        Relation {
            group,
            lhs: RelationLhs::Bracket { kind, left, right },
            rhs,
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn lhs_poly(&self) -> WeylPoly {
        match &self.lhs {
            RelationLhs::Bracket { kind, left, right } => kind.apply(&left.poly(), &right.poly()),
            RelationLhs::Casimir => casimir(),
        }
    }

    pub fn rhs_poly(&self) -> WeylPoly {
        self.rhs
            .iter()
            .fold(WeylPoly::zero(), |acc, (c, g)| &acc + &g.poly().scale(c))
    }

    /// `lhs − rhs`; the relation holds iff this is the zero polynomial.
    pub fn symbolic_residual(&self) -> WeylPoly {
        &self.lhs_poly() - &self.rhs_poly()
    }

    /// Largest total degree among the operands entering matrix products,
    /// including the right-hand side. Sets the trusted window `N − 2d`.
    pub fn operand_degree(&self) -> u32 {
        let rhs = self.rhs_poly().degree();
        match &self.lhs {
            RelationLhs::Bracket { left, right, .. } => {
                left.poly().degree().max(right.poly().degree()).max(rhs)
            }
            RelationLhs::Casimir => {
                let g = StandardGenerators::new();
                g.k_plus.poly().multiply(g.k_minus.poly()).degree().max(rhs)
            }
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lhs {
            RelationLhs::Bracket {
                kind: BracketKind::Commutator,
                left,
                right,
            } => write!(f, "[{left},{right}]")?,
            RelationLhs::Bracket {
                kind: BracketKind::Anticommutator,
                left,
                right,
            } => write!(f, "{{{left},{right}}}")?,
            RelationLhs::Casimir => write!(f, "K²")?,
        }
        write!(f, " = ")?;
        if self.rhs.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, g)) in self.rhs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == Coeff::from_int(1) {
                write!(f, "{g}")?;
            } else if *c == Coeff::from_int(-1) {
                write!(f, "-{g}")?;
            } else {
                write!(f, "{c}{g}")?;
            }
        }
        Ok(())
    }
}

/// The sixteen relations: three `so(2,1)` commutators, three anticommutator
/// realizations in `a`, `a†`, six even–odd commutators, three odd
/// anticommutators and the Casimir value.
pub fn all_relations() -> Vec<Relation> {
    use BracketKind::{Anticommutator as Anti, Commutator as Comm};
    use Generator::*;
    let c = Coeff::from_int;
    let f = Coeff::frac;
    vec![
        Relation::bracket("so(2,1)", Comm, K3, KPlus, vec![(c(1), KPlus)]),
        Relation::bracket("so(2,1)", Comm, K3, KMinus, vec![(c(-1), KMinus)]),
        Relation::bracket("so(2,1)", Comm, KPlus, KMinus, vec![(c(-2), K3)]),
        Relation::bracket(
            "anticommutator-realization",
            Anti,
            A,
            ADag,
            vec![(c(4), K3)],
        ),
        Relation::bracket(
            "anticommutator-realization",
            Anti,
            ADag,
            ADag,
            vec![(c(4), KPlus)],
        ),
        Relation::bracket(
            "anticommutator-realization",
            Anti,
            A,
            A,
            vec![(c(4), KMinus)],
        ),
        Relation::bracket("k3-on-doublet", Comm, K3, QDag, vec![(f(1, 2), QDag)]),
        Relation::bracket("k3-on-doublet", Comm, K3, Q, vec![(f(-1, 2), Q)]),
        Relation::bracket("kpm-on-doublet", Comm, KPlus, QDag, vec![]),
        Relation::bracket("kpm-on-doublet", Comm, KPlus, Q, vec![(c(-1), QDag)]),
        Relation::bracket("kpm-on-doublet", Comm, KMinus, QDag, vec![(c(1), Q)]),
        Relation::bracket("kpm-on-doublet", Comm, KMinus, Q, vec![]),
        Relation::bracket("odd-anticommutators", Anti, Q, QDag, vec![(c(2), K3)]),
        Relation::bracket("odd-anticommutators", Anti, QDag, QDag, vec![(c(2), KPlus)]),
        Relation::bracket("odd-anticommutators", Anti, Q, Q, vec![(c(2), KMinus)]),
        Relation {
            group: "casimir",
            lhs: RelationLhs::Casimir,
            rhs: vec![(f(3, 16), Identity)],
        },
    ]
}

#[derive(Clone, Debug)]
pub struct SymbolicOutcome {
    pub relation: Relation,
    pub residual: WeylPoly,
}

impl SymbolicOutcome {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn check_symbolic(exec: Exec) -> Vec<SymbolicOutcome> {
    let relations = all_relations();
    exec.map(&relations, |r| SymbolicOutcome {
        relation: r.clone(),
        residual: r.symbolic_residual(),
    })
}
