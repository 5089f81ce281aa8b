//! Graded bases built from ladder polynomials: closure under the bracket,
//! structure constants and the graded Jacobi identity.

mod span;

pub use span::Span;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exec::Exec;
use crate::field::Coeff;
use crate::weyl::{graded_bracket, BracketKind, Generator, GradedElement, Parity, WeylPoly};
use crate::Error;

/// Upper bound on closure dimension when the caller has no better one.
pub const DEFAULT_MAX_DIM: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedElement {
    pub name: String,
    pub element: GradedElement,
}

impl NamedElement {
    pub fn new(name: impl Into<String>, element: GradedElement) -> Self {
        NamedElement {
            name: name.into(),
            element,
        }
    }
}

impl From<Generator> for NamedElement {
    fn from(g: Generator) -> Self {
        NamedElement::new(g.name(), g.element())
    }
}

/// The five generators `K+, K-, K3, Q, Q†` as named elements.
pub fn osp_elements() -> Vec<NamedElement> {
    Generator::OSP
        .iter()
        .map(|g| NamedElement::from(*g))
        .collect()
}

/// Ordered, linearly independent, uniquely named graded elements.
#[derive(Clone, Debug)]
pub struct AlgebraBasis {
    elements: Vec<NamedElement>,
    span: Span,
}

impl AlgebraBasis {
    pub fn new(elements: impl IntoIterator<Item = NamedElement>) -> Result<Self, Error> {
        let mut basis = AlgebraBasis {
            elements: Vec::new(),
            span: Span::new(),
        };
        for e in elements {
            basis.push(e)?;
        }
        Ok(basis)
    }

    pub fn osp() -> Self {
        AlgebraBasis::new(osp_elements()).expect("standard generators are independent")
    }

    pub fn push(&mut self, e: NamedElement) -> Result<(), Error> {
        if self.elements.iter().any(|x| x.name == e.name) {
            return Err(Error::DuplicateName(e.name));
        }
        if !self.span.insert(e.element.poly()) {
            return Err(Error::LinearlyDependent(e.name));
        }
        self.elements.push(e);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[NamedElement] {
        &self.elements
    }

    pub fn names(&self) -> Vec<&str> {
        self.elements.iter().map(|e| e.name.as_str()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e.name == name)
    }

    pub fn contains(&self, poly: &WeylPoly) -> bool {
        self.span.contains(poly)
    }

    /// Coordinates of `poly` in this basis, if it lies in the span.
    pub fn coordinates(&self, poly: &WeylPoly) -> Option<Vec<Coeff>> {
        self.span.solve(poly)
    }

    /// Whether both bases span the same subspace.
    pub fn same_span(&self, other: &AlgebraBasis) -> bool {
        self.dim() == other.dim()
            && other
                .elements
                .iter()
                .all(|e| self.contains(e.element.poly()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureMode {
    /// anticommutator on odd pairs, commutator otherwise
    Graded,
    /// plain commutator for every pair
    CommutatorOnly,
}

impl ClosureMode {
    pub fn bracket(self, x: &GradedElement, y: &GradedElement) -> GradedElement {
        match self {
            ClosureMode::Graded => graded_bracket(x, y),
            ClosureMode::CommutatorOnly => {
                GradedElement::with_parity(x.poly().commutator(y.poly()), x.parity() + y.parity())
                    .expect("commutator of homogeneous elements is homogeneous")
            }
        }
    }
}

impl fmt::Display for ClosureMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureMode::Graded => "graded",
            ClosureMode::CommutatorOnly => "commutator-only",
        })
    }
}

impl FromStr for ClosureMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "graded" => Ok(ClosureMode::Graded),
            "commutator-only" | "commutator" => Ok(ClosureMode::CommutatorOnly),
            other => Err(Error::InvalidConfig(format!(
                "unknown closure mode `{other}`"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub basis: AlgebraBasis,
    /// Number of bracket rounds that enlarged the basis.
    pub generations: usize,
    /// Names of the elements created by brackets, in creation order.
    pub added: Vec<String>,
}

/// Canonical name and representative for a new element: a standard generator
/// (or `𝟙`) if the element is a multiple of one, else `G⟨k⟩`.
fn canonical(poly: &WeylPoly, parity: Parity, taken: &[&str], fresh: usize) -> NamedElement {
    let candidates = Generator::OSP.iter().chain([Generator::Identity].iter());
    for g in candidates {
        if taken.contains(&g.name()) {
            continue;
        }
        if poly.ratio_to(&g.poly()).is_some() {
            return NamedElement::from(*g);
        }
    }
    let element =
        GradedElement::with_parity(poly.clone(), parity).expect("bracket results are homogeneous");
    NamedElement::new(format!("G⟨{fresh}⟩"), element)
}

/// Repeatedly brackets all pairs and appends results outside the current
/// span until nothing new appears.
pub fn close_under_bracket(
    seed: &[NamedElement],
    mode: ClosureMode,
    max_dim: usize,
) -> Result<ClosureResult, Error> {
    close_under_bracket_with(seed, mode, max_dim, Exec::default())
}

pub fn close_under_bracket_with(
    seed: &[NamedElement],
    mode: ClosureMode,
    max_dim: usize,
    exec: Exec,
) -> Result<ClosureResult, Error> {
    if seed.len() > max_dim {
        return Err(Error::InvalidConfig(format!(
            "max_dim {max_dim} is smaller than the seed ({} elements)",
            seed.len()
        )));
    }
    let mut basis = AlgebraBasis::new(seed.iter().cloned())?;
    let mut added = Vec::new();
    let mut generations = 0;
    let mut fresh_names = 0;
    let mut frontier = 0;
    loop {
        let n = basis.dim();
        // every pair with at least one element from the latest round
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| (0..=j).map(move |i| (i, j)))
            .filter(|&(i, j)| j >= frontier && (i != j || mode == ClosureMode::Graded))
            .collect();
        let elems = basis.elements();
        let results = exec.map(&pairs, |&(i, j)| {
            mode.bracket(&elems[i].element, &elems[j].element)
        });

        let mut grew = false;
        for r in results {
            if r.is_zero() || basis.contains(r.poly()) {
                continue;
            }
            let taken = basis.names();
            let named = canonical(r.poly(), r.parity(), &taken, fresh_names + 1);
            if named.name.starts_with('G') {
                fresh_names += 1;
            }
            added.push(named.name.clone());
            basis.push(named)?;
            grew = true;
            if basis.dim() > max_dim {
                return Err(Error::NotClosed {
                    max_dim,
                    reached: basis.dim(),
                });
            }
        }
        if !grew {
            break;
        }
        generations += 1;
        frontier = n;
    }
    Ok(ClosureResult {
        basis,
        generations,
        added,
    })
}

/// Exact check that every bracket of basis members stays in the span.
pub fn is_closed(basis: &AlgebraBasis, mode: ClosureMode) -> bool {
    let e = basis.elements();
    e.iter().all(|x| {
        e.iter()
            .all(|y| basis.contains(mode.bracket(&x.element, &y.element).poly()))
    })
}

/// `c[i][j][k]`: coefficient of basis element `k` in the graded bracket of
/// elements `i` and `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    pub names: Vec<String>,
    pub parities: Vec<Parity>,
    pub tensor: Vec<Vec<Vec<Coeff>>>,
    pub bracket_kind: Vec<Vec<BracketKind>>,
}

pub fn structure_constants(basis: &AlgebraBasis) -> Result<StructureConstants, Error> {
    structure_constants_with(basis, Exec::default())
}

pub fn structure_constants_with(
    basis: &AlgebraBasis,
    exec: Exec,
) -> Result<StructureConstants, Error> {
    let e = basis.elements();
    let n = e.len();
    let rows: Vec<Result<Vec<Vec<Coeff>>, Error>> = exec.map_range(0..n, |i| {
        (0..n)
            .map(|j| {
                let b = graded_bracket(&e[i].element, &e[j].element);
                basis
                    .coordinates(b.poly())
                    .ok_or_else(|| Error::BracketOutsideSpan(e[i].name.clone(), e[j].name.clone()))
            })
            .collect()
    });
    let tensor = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let parities: Vec<Parity> = e.iter().map(|x| x.element.parity()).collect();
    let bracket_kind = parities
        .iter()
        .map(|&a| {
            parities
                .iter()
                .map(|&b| BracketKind::graded(a, b))
                .collect()
        })
        .collect();
    Ok(StructureConstants {
        names: e.iter().map(|x| x.name.clone()).collect(),
        parities,
        tensor,
        bracket_kind,
    })
}

fn sign(bits: u32) -> Coeff {
    if bits.is_multiple_of(2) {
        Coeff::from_int(1)
    } else {
        Coeff::from_int(-1)
    }
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `c[i][j][k]` by element names; panics on an unknown name.
    pub fn get(&self, i: &str, j: &str, k: &str) -> &Coeff {
        let idx = |n: &str| {
            self.index(n)
                .unwrap_or_else(|| panic!("no basis element `{n}`"))
        };
        &self.tensor[idx(i)][idx(j)][idx(k)]
    }

    /// `c[i][j][k] = −(−1)^{|i||j|} c[j][i][k]` for all entries.
    pub fn graded_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s = sign(self.parities[i].bit() * self.parities[j].bit());
                (0..n).all(|k| self.tensor[i][j][k] == -(&s * &self.tensor[j][i][k]))
            })
        })
    }

    /// Coordinates of `[e_x, [e_y, e_z]]` computed purely from the tensor.
    fn nested(&self, x: usize, y: usize, z: usize) -> Vec<Coeff> {
        let n = self.dim();
        let mut out = vec![Coeff::zero(); n];
        for k in 0..n {
            let c = &self.tensor[y][z][k];
            if c.is_zero() {
                continue;
            }
            for (l, slot) in out.iter_mut().enumerate() {
                let d = &self.tensor[x][k][l];
                if !d.is_zero() {
                    *slot += &(c * d);
                }
            }
        }
        out
    }

    /// Graded Jacobi identity evaluated from the constants alone, so a
    /// corrupted table is caught even if the realization is associative.
    pub fn jacobi_check(&self) -> JacobiReport {
        let n = self.dim();
        let p = |i: usize| self.parities[i].bit();
        let triples = multiset_triples(n);
        let mut report = JacobiReport {
            triples: triples.len(),
            orderings: 0,
            violations: vec![],
        };
        for t in triples {
            for (x, y, z) in orderings(t) {
                report.orderings += 1;
                let mut sum = vec![Coeff::zero(); n];
                for (s, v) in [
                    (sign(p(x) * p(z)), self.nested(x, y, z)),
                    (sign(p(y) * p(x)), self.nested(y, z, x)),
                    (sign(p(z) * p(y)), self.nested(z, x, y)),
                ] {
                    for (acc, c) in sum.iter_mut().zip(v) {
                        *acc += &(&s * &c);
                    }
                }
                if sum.iter().any(|c| !c.is_zero()) {
                    let residual = sum
                        .iter()
                        .zip(&self.names)
                        .filter(|(c, _)| !c.is_zero())
                        .map(|(c, name)| format!("{c}·{name}"))
                        .collect::<Vec<_>>()
                        .join(" + ");
                    report.violations.push(JacobiViolation {
                        triple: [
                            self.names[x].clone(),
                            self.names[y].clone(),
                            self.names[z].clone(),
                        ],
                        residual,
                    });
                }
            }
        }
        report
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiViolation {
    pub triple: [String; 3],
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiReport {
    /// unordered triples (with repetition)
    pub triples: usize,
    /// distinct orderings evaluated
    pub orderings: usize,
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `i ≤ j ≤ k` index triples.
fn multiset_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                v.push((i, j, k));
            }
        }
    }
    v
}

fn orderings((a, b, c): (usize, usize, usize)) -> Vec<(usize, usize, usize)> {
    let all = [
        (a, b, c),
        (a, c, b),
        (b, a, c),
        (b, c, a),
        (c, a, b),
        (c, b, a),
    ];
    all.into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Graded Jacobi identity on the polynomial realization:
/// `(−1)^{|x||z|}[x,[y,z]] + (−1)^{|y||x|}[y,[z,x]] + (−1)^{|z||y|}[z,[x,y]] = 0`.
pub fn graded_jacobi_check(basis: &AlgebraBasis) -> JacobiReport {
    graded_jacobi_check_with(basis, Exec::default())
}

pub fn graded_jacobi_check_with(basis: &AlgebraBasis, exec: Exec) -> JacobiReport {
    let e = basis.elements();
    let triples = multiset_triples(e.len());
    let per_triple = exec.map(&triples, |&t| {
        let mut violations = Vec::new();
        let ords = orderings(t);
        for &(x, y, z) in &ords {
            let (ex, ey, ez) = (&e[x].element, &e[y].element, &e[z].element);
            let (px, py, pz) = (ex.parity().bit(), ey.parity().bit(), ez.parity().bit());
            let term = |s: u32, u: &GradedElement, v: &GradedElement, w: &GradedElement| {
                graded_bracket(u, &graded_bracket(v, w))
                    .poly()
                    .scale(&sign(s))
            };
            let sum = &(&term(px * pz, ex, ey, ez) + &term(py * px, ey, ez, ex))
                + &term(pz * py, ez, ex, ey);
            if !sum.is_zero() {
                violations.push(JacobiViolation {
                    triple: [e[x].name.clone(), e[y].name.clone(), e[z].name.clone()],
                    residual: sum.to_string(),
                });
            }
        }
        (ords.len(), violations)
    });
    let mut report = JacobiReport {
        triples: triples.len(),
        orderings: 0,
        violations: vec![],
    };
    for (count, v) in per_triple {
        report.orderings += count;
        report.violations.extend(v);
    }
    report
}
