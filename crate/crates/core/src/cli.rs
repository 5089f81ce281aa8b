//! The `sga` command set: `verify`, `closure`, `orbit`, `structure` and
//! `spectrum`. Each command builds a [`Report`]; rendering is separate so
//! the same report can be printed as text, CSV or JSON.

use std::fmt;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::exec::Exec;
use crate::field::{rat_to_string, Coeff};
use crate::fock::{
    ladder_amplitude, norm_condition, orbit_with, parity_matrix, relation_residuals_with,
    sector_projectors, spectrum, to_matrix, ExactAmplitude, FockOperator,
};
use crate::relations::{all_relations, check_symbolic, RelationLhs};
use crate::report::{
    Check, CheckMode, CheckStatus, ClosureSummary, Report, Residual, SpectrumRow, StructureTable,
};
use crate::superalgebra::{
    close_under_bracket_with, graded_jacobi_check_with, structure_constants_with, AlgebraBasis,
    ClosureMode, NamedElement, StructureConstants, DEFAULT_MAX_DIM,
};
use crate::weyl::{
    casimir, casimir_expansion, graded_bracket, Generator, GradedElement, Monomial, WeylPoly,
};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// A predefined generator set or an inline list such as `K3,Q,Q†`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GeneratorSet {
    /// `{K+, K-, K3}`
    So21,
    /// all five generators
    Osp,
    /// `{K3, Q, Q†}`
    Minimal,
    /// `{Q, Q†, 𝟙}`
    Heisenberg,
    Inline(Vec<Generator>),
}

impl GeneratorSet {
    pub fn generators(&self) -> Vec<Generator> {
        use Generator::*;
        match self {
            GeneratorSet::So21 => vec![KPlus, KMinus, K3],
            GeneratorSet::Osp => Generator::OSP.to_vec(),
            GeneratorSet::Minimal => vec![K3, Q, QDag],
            GeneratorSet::Heisenberg => vec![Q, QDag, Identity],
            GeneratorSet::Inline(gs) => gs.clone(),
        }
    }

    pub fn named_elements(&self) -> Vec<NamedElement> {
        self.generators()
            .into_iter()
            .map(NamedElement::from)
            .collect()
    }

    pub fn named_polys(&self) -> Vec<(String, WeylPoly)> {
        self.generators()
            .into_iter()
            .map(|g| (g.name().to_string(), g.poly()))
            .collect()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSet::So21 => f.write_str("so21"),
            GeneratorSet::Osp => f.write_str("osp"),
            GeneratorSet::Minimal => f.write_str("minimal"),
            GeneratorSet::Heisenberg => f.write_str("heisenberg"),
            GeneratorSet::Inline(gs) => {
                let names: Vec<_> = gs.iter().map(|g| g.name()).collect();
                f.write_str(&names.join(","))
            }
        }
    }
}

impl FromStr for GeneratorSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.trim() {
            "so21" => GeneratorSet::So21,
            "osp" => GeneratorSet::Osp,
            "minimal" => GeneratorSet::Minimal,
            "heisenberg" => GeneratorSet::Heisenberg,
            list => {
                let gs = list
                    .trim_matches(|c| c == '{' || c == '}')
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(str::parse)
                    .collect::<Result<Vec<Generator>, _>>()?;
                if gs.is_empty() {
                    return Err(Error::InvalidConfig("empty generator set".into()));
                }
                GeneratorSet::Inline(gs)
            }
        })
    }
}

impl From<GeneratorSet> for String {
    fn from(g: GeneratorSet) -> String {
        g.to_string()
    }
}

impl TryFrom<String> for GeneratorSet {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub dim: usize,
    pub hbar_omega: f64,
    pub tolerance: f64,
    pub output_format: OutputFormat,
    pub seed_state: usize,
    pub generator_set: Option<GeneratorSet>,
    pub max_dim: usize,
    pub mode: ClosureMode,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            dim: 64,
            hbar_omega: 1.0,
            tolerance: 1e-12,
            output_format: OutputFormat::Text,
            seed_state: 0,
            generator_set: None,
            max_dim: DEFAULT_MAX_DIM,
            mode: ClosureMode::Graded,
        }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<(), Error> {
        if self.dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if !(self.hbar_omega > 0.0 && self.hbar_omega.is_finite()) {
            return Err(Error::NonPositiveScale(self.hbar_omega));
        }
        Ok(())
    }

    fn set_or(&self, default: GeneratorSet) -> GeneratorSet {
        self.generator_set.clone().unwrap_or(default)
    }
}

fn casimir_value() -> String {
    let c = casimir();
    match c.as_scalar() {
        Some(k) => k.to_exact_string(),
        None => c.to_string(),
    }
}

fn residual_of(p: &WeylPoly) -> Option<String> {
    (!p.is_zero()).then(|| p.to_string())
}

/// Expected `[x,y]` for an ordered pair of the five generators, read off the
/// relation table, directly or by graded antisymmetry.
fn tabulated_bracket(x: Generator, y: Generator) -> WeylPoly {
    for r in all_relations() {
        if let RelationLhs::Bracket { left, right, .. } = r.lhs {
            if (left, right) == (x, y) {
                return r.rhs_poly();
            }
            if (left, right) == (y, x) {
                let sign = if x.parity().is_odd() && y.parity().is_odd() {
                    1
                } else {
                    -1
                };
                return r.rhs_poly().scale(&Coeff::from_int(sign));
            }
        }
    }
    WeylPoly::zero()
}

fn structure_matches_table(sc: &StructureConstants) -> Option<String> {
    let mut mismatches = Vec::new();
    for (i, x) in Generator::OSP.iter().enumerate() {
        for (j, y) in Generator::OSP.iter().enumerate() {
            let got = sc.tensor[i][j]
                .iter()
                .zip(Generator::OSP)
                .fold(WeylPoly::zero(), |acc, (c, g)| &acc + &g.poly().scale(c));
            let want = tabulated_bracket(*x, *y);
            if got != want {
                mismatches.push(format!("({x},{y}): {got} vs {want}"));
            }
        }
    }
    (!mismatches.is_empty()).then(|| mismatches.join("; "))
}

fn max_abs_diff(a: &FockOperator, b: &FockOperator, window: usize) -> f64 {
    a.sub(b).max_abs_in_window(window)
}

/// The full suite: symbolic relations, Casimir, Jacobi, structure constants,
/// closures, numeric residuals, spectrum, parity, orbits and norm conditions.
pub fn cmd_verify(config: &RunConfig) -> Result<Report, Error> {
    cmd_verify_with(config, Exec::default())
}

pub fn cmd_verify_with(config: &RunConfig, exec: Exec) -> Result<Report, Error> {
    config.validate()?;
    let dim = config.dim;
    let tol = config.tolerance;
    // numeric suite needs every relation window, the Casimir one (N − 8) being smallest
    let residuals = relation_residuals_with(dim, exec)?;

    let mut report = Report::new(config.clone(), casimir_value());
    let checks = &mut report.checks;

    for o in check_symbolic(exec) {
        checks.push(Check::symbolic(
            o.relation.name(),
            o.relation.group,
            residual_of(&o.residual),
        ));
    }

    let exp = casimir_expansion();
    let want_sym = WeylPoly::from_terms([
        (Monomial::new(2, 2), Coeff::from_int(2)),
        (Monomial::new(1, 1), Coeff::from_int(4)),
        (Monomial::IDENTITY, Coeff::from_int(2)),
    ]);
    checks.push(Check::symbolic(
        "8·½(K+K- + K-K+) = 2a†²a² + 4a†a + 2",
        "casimir",
        residual_of(&(&exp.eight_times_anticommutator_part - &want_sym)),
    ));
    let c = GradedElement::new(casimir())?;
    for g in [Generator::KPlus, Generator::KMinus, Generator::K3] {
        let b = graded_bracket(&c, &g.element());
        checks.push(Check::symbolic(
            format!("[K²,{g}] = 0"),
            "casimir",
            residual_of(b.poly()),
        ));
    }

    let adj = [
        (Generator::Q, Generator::QDag),
        (Generator::KMinus, Generator::KPlus),
        (Generator::K3, Generator::K3),
    ];
    for (x, y) in adj {
        checks.push(Check::symbolic(
            format!("adjoint({x}) = {y}"),
            "adjoint",
            residual_of(&(&x.poly().adjoint() - &y.poly())),
        ));
    }

    let basis = AlgebraBasis::osp();
    let jac = graded_jacobi_check_with(&basis, exec);
    checks.push(
        Check::symbolic(
            format!("graded Jacobi on polynomials ({} triples)", jac.triples),
            "jacobi",
            (!jac.passed()).then(|| format!("{:?}", jac.violations)),
        )
        .with_detail(format!("{} orderings evaluated", jac.orderings)),
    );
    let sc = structure_constants_with(&basis, exec)?;
    let tensor_jac = sc.jacobi_check();
    checks.push(Check::symbolic(
        format!(
            "graded Jacobi from structure constants ({} triples)",
            tensor_jac.triples
        ),
        "jacobi",
        (!tensor_jac.passed()).then(|| format!("{:?}", tensor_jac.violations)),
    ));
    checks.push(Check::symbolic(
        "structure constants match relation table",
        "structure",
        structure_matches_table(&sc),
    ));
    checks.push(Check::symbolic(
        "structure constants graded-antisymmetric",
        "structure",
        (!sc.graded_antisymmetric()).then(|| "antisymmetry violated".to_string()),
    ));

    let closure_cases = [
        (
            "closure {K3,Q,Q†} graded = osp (dim 5)",
            GeneratorSet::Minimal,
            ClosureMode::Graded,
            5,
        ),
        (
            "closure {Q,Q†} graded = osp (dim 5)",
            GeneratorSet::Inline(vec![Generator::Q, Generator::QDag]),
            ClosureMode::Graded,
            5,
        ),
        (
            "closure {K3,Q,Q†} commutator-only (dim 4, contains 𝟙)",
            GeneratorSet::Minimal,
            ClosureMode::CommutatorOnly,
            4,
        ),
        (
            "closure {K+,K-,K3} graded adds nothing",
            GeneratorSet::So21,
            ClosureMode::Graded,
            3,
        ),
    ];
    let osp_basis = AlgebraBasis::osp();
    for (name, set, mode, want) in closure_cases {
        let seed = set.named_elements();
        let problem = match close_under_bracket_with(&seed, mode, config.max_dim, exec) {
            Err(e) => Some(e.to_string()),
            Ok(r) => {
                let dim_ok = r.basis.dim() == want;
                let extra_ok = match (mode, want) {
                    (ClosureMode::Graded, 5) => r.basis.same_span(&osp_basis),
                    (ClosureMode::CommutatorOnly, _) => r.basis.contains(&WeylPoly::identity()),
                    _ => r.added.is_empty(),
                };
                (!(dim_ok && extra_ok))
                    .then(|| format!("dimension {} added {:?}", r.basis.dim(), r.added))
            }
        };
        checks.push(Check::symbolic(name, "closure", problem));
    }

    for r in &residuals {
        checks.push(
            Check::numeric(r.relation.clone(), &r.group, r.in_window, tol)
                .with_detail(format!("N = {}, trusted window {}", r.dim, r.window)),
        );
    }
    let boundary = residuals
        .iter()
        .max_by(|a, b| a.outside_window.total_cmp(&b.outside_window))
        .expect("sixteen relations");
    checks.push(
        Check::informational(
            "truncation boundary residual",
            "numeric-window",
            CheckMode::Numeric,
            format!(
                "largest residual outside the trusted window: {:.3e} for {} (window {} of {})",
                boundary.outside_window, boundary.relation, boundary.window, dim
            ),
        )
        .with_residual(Residual::Float(boundary.outside_window)),
    );

    let energies = spectrum(dim, config.hbar_omega)?;
    let spec_err = energies
        .iter()
        .enumerate()
        .map(|(n, e)| (e - config.hbar_omega * (n as f64 + 0.5)).abs())
        .fold(0.0, f64::max);
    checks.push(Check::numeric("E_n = ħω(n + ½)", "spectrum", spec_err, tol));

    let p = parity_matrix(dim)?;
    let mut comm = 0.0f64;
    for g in [Generator::KPlus, Generator::KMinus, Generator::K3] {
        comm = comm.max(
            p.commutator(&to_matrix(&g.poly(), dim)?)
                .max_abs_in_window(dim),
        );
    }
    checks.push(Check::numeric("[P, K±] = [P, K3] = 0", "parity", comm, tol));
    let q = to_matrix(&Generator::Q.poly(), dim)?;
    let qd = to_matrix(&Generator::QDag.poly(), dim)?;
    let anti = p
        .anticommutator(&q)
        .max_abs_in_window(q.trusted())
        .max(p.anticommutator(&qd).max_abs_in_window(qd.trusted()));
    checks.push(Check::numeric("{P, Q} = {P, Q†} = 0", "parity", anti, tol));
    let (plus, minus) = sector_projectors(dim)?;
    let id = FockOperator::identity(dim)?;
    let proj_err = max_abs_diff(&plus.add(&minus), &id, dim)
        .max(plus.matmul(&minus).max_abs_in_window(dim))
        .max(max_abs_diff(&plus.matmul(&plus), &plus, dim))
        .max(max_abs_diff(&minus.matmul(&minus), &minus, dim))
        .max((plus.trace() - dim.div_ceil(2) as f64).abs())
        .max((minus.trace() - (dim / 2) as f64).abs());
    checks.push(Check::numeric(
        "parity projectors complete, orthogonal, idempotent",
        "parity",
        proj_err,
        tol,
    ));

    let so21 = orbit_with(0, &GeneratorSet::So21.named_polys(), dim, exec)?;
    checks.push(
        Check::symbolic(
            "so21 orbits = parity sectors",
            "orbit",
            (!(so21.orbit_count() == 2 && so21.matches_parity_sectors()))
                .then(|| format!("{} orbits", so21.orbit_count())),
        )
        .with_detail(format!("2 orbits expected on window {}", so21.window)),
    );
    let osp = orbit_with(
        config.seed_state.min(dim.saturating_sub(5)),
        &GeneratorSet::Osp.named_polys(),
        dim,
        exec,
    )?;
    checks.push(
        Check::symbolic(
            "osp single orbit from every seed",
            "orbit",
            (osp.orbit_count() != 1).then(|| format!("{} orbits", osp.orbit_count())),
        )
        .with_detail(format!("window {}", osp.window)),
    );
    report.orbits = Some(vec![so21, osp]);
    let checks = &mut report.checks;

    let conds: Vec<_> = exec.map_range(0..dim, norm_condition);
    let bad: Vec<usize> = conds
        .iter()
        .filter(|c| !(c.non_negative() && c.matches_prediction()))
        .map(|c| c.n)
        .collect();
    checks.push(Check::symbolic(
        format!("‖K±|n⟩‖² = 3/16 + m(m±1) ≥ 0 for n < {dim}"),
        "norm",
        (!bad.is_empty()).then(|| format!("failing levels {bad:?}")),
    ));

    let amp = ladder_amplitude(&Generator::KPlus.poly(), 0)
        .remove(&2)
        .unwrap_or_default();
    let unnormalized = ExactAmplitude::sqrt(2);
    checks.push(Check::informational(
        "K+|0⟩ amplitude vs unnormalized ladder formula",
        "literal-formula",
        CheckMode::Symbolic,
        format!(
            "exact K+|0⟩ = {amp}|2⟩ from K+ = ½a†a†; the formula √((n+1)(n+2)) gives {unnormalized} at n = 0 (factor 1/2 apart at every n)"
        ),
    ));
    let c0 = norm_condition(0);
    checks.push(Check::informational(
        "norm condition: K3 eigenvalue vs Fock label",
        "literal-formula",
        CheckMode::Symbolic,
        format!(
            "n = 0: 3/16 + m(m±1) with m = {} gives ({}, {}) = computed norms; substituting the Fock label n gives ({}, {})",
            rat_to_string(&c0.k3),
            rat_to_string(&c0.predicted_plus),
            rat_to_string(&c0.predicted_minus),
            rat_to_string(&c0.fock_label_plus),
            rat_to_string(&c0.fock_label_minus),
        ),
    ));
    Ok(report)
}

/// Closure of the selected seed set (default `minimal`).
pub fn cmd_closure(config: &RunConfig) -> Result<Report, Error> {
    config.validate()?;
    let set = config.set_or(GeneratorSet::Minimal);
    let seed = set.named_elements();
    let r = close_under_bracket_with(&seed, config.mode, config.max_dim, Exec::default())?;
    let mut report = Report::new(config.clone(), casimir_value());
    report.closure = Some(ClosureSummary::new(
        seed.iter().map(|e| e.name.clone()).collect(),
        config.mode,
        &r,
    ));
    Ok(report)
}

/// Orbit of `seed_state` under the selected set (default `so21`).
pub fn cmd_orbit(config: &RunConfig) -> Result<Report, Error> {
    config.validate()?;
    let set = config.set_or(GeneratorSet::So21);
    let r = orbit_with(
        config.seed_state,
        &set.named_polys(),
        config.dim,
        Exec::default(),
    )?;
    let mut report = Report::new(config.clone(), casimir_value());
    report.orbits = Some(vec![r]);
    Ok(report)
}

/// Graded structure constants of the five-generator basis.
pub fn cmd_structure(config: &RunConfig) -> Result<Report, Error> {
    config.validate()?;
    let basis = AlgebraBasis::osp();
    let sc = structure_constants_with(&basis, Exec::default())?;
    let polys: Vec<String> = basis
        .elements()
        .iter()
        .map(|e| e.element.poly().to_string())
        .collect();
    let mut report = Report::new(config.clone(), casimir_value());
    report.structure = Some(StructureTable::from_constants(&sc, &polys));
    Ok(report)
}

/// Per-level energies, `K3` eigenvalue, parity and exact norm pair.
pub fn cmd_spectrum(config: &RunConfig) -> Result<Report, Error> {
    config.validate()?;
    let energies = spectrum(config.dim, config.hbar_omega)?;
    let rows = energies
        .into_iter()
        .enumerate()
        .map(|(n, energy)| {
            let c = norm_condition(n);
            SpectrumRow {
                n,
                energy,
                k3: rat_to_string(&c.k3),
                parity: if n % 2 == 0 { "+" } else { "-" }.to_string(),
                norm_plus: rat_to_string(&c.plus),
                norm_minus: rat_to_string(&c.minus),
            }
        })
        .collect();
    let mut report = Report::new(config.clone(), casimir_value());
    report.spectrum = Some(rows);
    Ok(report)
}

pub fn spectrum_csv(rows: &[SpectrumRow]) -> String {
    let mut out = String::from("n,E,k3,parity,norm_plus,norm_minus\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n, r.energy, r.k3, r.parity, r.norm_plus, r.norm_minus
        ));
    }
    out
}

fn status_tag(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Informational => "INFO",
    }
}

fn render_checks(report: &Report, out: &mut String) {
    for c in &report.checks {
        let mode = match c.mode {
            CheckMode::Symbolic => "symbolic",
            CheckMode::Numeric => "numeric ",
        };
        out.push_str(&format!(
            "{}  {}  {:<26} {:<55} {}\n",
            status_tag(c.status),
            mode,
            c.label,
            c.name,
            c.residual
        ));
        if let Some(d) = &c.detail {
            if c.status != CheckStatus::Pass {
                out.push_str(&format!("      {d}\n"));
            }
        }
    }
    let count = |s| report.checks.iter().filter(|c| c.status == s).count();
    out.push_str(&format!(
        "\n{} checks: {} passed, {} failed, {} informational\n",
        report.checks.len(),
        count(CheckStatus::Pass),
        count(CheckStatus::Fail),
        count(CheckStatus::Informational)
    ));
    out.push_str(&format!("casimir eigenvalue: {}\n", report.casimir));
}

fn render_orbit(o: &crate::fock::OrbitReport, out: &mut String) {
    out.push_str(&format!(
        "generators {{{}}}, N = {}, trusted window [0, {})\n",
        o.generator_names.join(", "),
        o.dim,
        o.window
    ));
    out.push_str(&format!(
        "seed |{}⟩ reaches {} of {} states\n",
        o.seed,
        o.reachable.len(),
        o.window
    ));
    let kind = match o.orbit_count() {
        1 => "single orbit: the whole window is generated from any one state".to_string(),
        2 if o.matches_parity_sectors() => "2 orbits: even and odd parity sectors".to_string(),
        k => format!("{k} orbits"),
    };
    out.push_str(&format!("{kind}\n"));
    for (i, block) in o.partition.iter().enumerate().take(8) {
        out.push_str(&format!(
            "  orbit {i}: {} states, {}\n",
            block.len(),
            summarize(block)
        ));
    }
    if o.partition.len() > 8 {
        out.push_str(&format!("  … {} more\n", o.partition.len() - 8));
    }
}

fn summarize(block: &std::collections::BTreeSet<usize>) -> String {
    let v: Vec<usize> = block.iter().copied().collect();
    if v.len() <= 6 {
        return format!("{v:?}");
    }
    let step = v[1] - v[0];
    if v.windows(2).all(|w| w[1] - w[0] == step) {
        format!(
            "{{{}, {}, …, {}}} (step {step})",
            v[0],
            v[1],
            v[v.len() - 1]
        )
    } else {
        format!("{:?} …", &v[..6])
    }
}

/// Human-readable rendering (CSV for `spectrum`).
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    if !report.checks.is_empty() {
        render_checks(report, &mut out);
    }
    if let Some(c) = &report.closure {
        out.push_str(&format!(
            "seed {{{}}}, mode {}\n",
            c.seed.join(", "),
            c.mode
        ));
        out.push_str(&format!(
            "closed basis of dimension {} after {} generation(s)\n",
            c.dimension, c.generations
        ));
        for b in &c.basis {
            let mark = if c.added.contains(&b.name) {
                "  (bracket-generated)"
            } else {
                ""
            };
            out.push_str(&format!(
                "  {:<6} {:<5} {}{}\n",
                b.name,
                b.parity.to_string(),
                b.polynomial,
                mark
            ));
        }
    }
    if report.checks.is_empty() {
        if let Some(orbits) = &report.orbits {
            for o in orbits {
                render_orbit(o, &mut out);
            }
        }
    }
    if let Some(s) = &report.structure {
        out.push_str("basis:\n");
        for b in &s.basis {
            out.push_str(&format!(
                "  {:<4} {:<5} {}\n",
                b.name,
                b.parity.to_string(),
                b.polynomial
            ));
        }
        out.push_str("graded brackets:\n");
        for e in &s.entries {
            out.push_str(&format!("  {}\n", e.render()));
        }
    }
    if let Some(rows) = &report.spectrum {
        out.push_str(&spectrum_csv(rows));
    }
    out
}

pub fn render(report: &Report) -> String {
    match report.config.output_format {
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Text => render_text(report),
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "sga",
    version,
    about = "Spectrum-generating superalgebra of the harmonic oscillator: exact and numeric checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Fock-space truncation N
    #[arg(long, global = true, default_value_t = 64)]
    pub dim: usize,

    /// Energy scale ħω
    #[arg(long = "hbar-omega", global = true, default_value_t = 1.0)]
    pub hbar_omega: f64,

    /// Absolute tolerance for numeric residuals
    #[arg(long = "tol", global = true, default_value_t = 1e-12)]
    pub tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Seed Fock index for `orbit`
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: usize,

    /// Generator set: so21 | osp | minimal | heisenberg | comma list (e.g. K3,Q,Q†)
    #[arg(long, global = true)]
    pub set: Option<String>,

    /// Closure dimension bound
    #[arg(long = "max-dim", global = true, default_value_t = DEFAULT_MAX_DIM)]
    pub max_dim: usize,

    /// Closure bracket: graded | commutator-only
    #[arg(long, global = true, default_value = "graded")]
    pub mode: String,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Run every symbolic and numeric check
    Verify,
    /// Close a generator set under the bracket
    Closure,
    /// Orbit of a Fock state under a generator set
    Orbit,
    /// Structure constants of the five-generator basis
    Structure,
    /// Energy levels with K3 eigenvalues and exact norm pairs
    Spectrum,
}

impl Cli {
    pub fn config(&self) -> Result<RunConfig, Error> {
        Ok(RunConfig {
            dim: self.dim,
            hbar_omega: self.hbar_omega,
            tolerance: self.tol,
            output_format: self.format,
            seed_state: self.seed,
            generator_set: self.set.as_deref().map(str::parse).transpose()?,
            max_dim: self.max_dim,
            mode: self.mode.parse()?,
        })
    }
}

/// Runs a parsed command line; returns the rendered output and whether the
/// command succeeded (for `verify`, whether every check passed).
pub fn run(cli: &Cli) -> Result<(String, bool), Error> {
    let config = cli.config()?;
    let report = match cli.command {
        Command::Verify => cmd_verify(&config)?,
        Command::Closure => cmd_closure(&config)?,
        Command::Orbit => cmd_orbit(&config)?,
        Command::Structure => cmd_structure(&config)?,
        Command::Spectrum => cmd_spectrum(&config)?,
    };
    Ok((render(&report), report.passed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_verify_passes() {
        let report = cmd_verify(&RunConfig::default()).unwrap();
        let failed: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.failed())
            .map(|c| &c.name)
            .collect();
        assert!(failed.is_empty(), "failed: {failed:?}");
        assert_eq!(report.casimir, "3/16");
        let info = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Informational)
            .count();
        assert_eq!(info, 3);
    }

    #[test]
    fn verify_rejects_tiny_dimension() {
        let cfg = RunConfig {
            dim: 6,
            ..RunConfig::default()
        };
        assert!(matches!(cmd_verify(&cfg), Err(Error::EmptyWindow { .. })));
    }

    #[test]
    fn closure_commands() {
        let dims = |set: GeneratorSet, mode| {
            let cfg = RunConfig {
                generator_set: Some(set),
                mode,
                ..RunConfig::default()
            };
            cmd_closure(&cfg).unwrap().closure.unwrap()
        };
        assert_eq!(
            dims(GeneratorSet::Minimal, ClosureMode::Graded).dimension,
            5
        );
        let c = dims(GeneratorSet::Minimal, ClosureMode::CommutatorOnly);
        assert_eq!(c.dimension, 4);
        assert_eq!(c.added, vec!["𝟙"]);
        assert_eq!(dims(GeneratorSet::So21, ClosureMode::Graded).dimension, 3);
    }

    #[test]
    fn unknown_names_rejected() {
        assert!(matches!(
            "K3,Z".parse::<GeneratorSet>(),
            Err(Error::UnknownGenerator(_))
        ));
        assert_eq!(
            "K3,Q,Q†"
                .parse::<GeneratorSet>()
                .unwrap()
                .generators()
                .len(),
            3
        );
    }

    #[test]
    fn orbit_commands() {
        let run = |seed, set| {
            let cfg = RunConfig {
                seed_state: seed,
                generator_set: Some(set),
                ..RunConfig::default()
            };
            cmd_orbit(&cfg).unwrap().orbits.unwrap().remove(0)
        };
        assert_eq!(run(0, GeneratorSet::So21).orbit_count(), 2);
        assert_eq!(run(7, GeneratorSet::Osp).orbit_count(), 1);
        let single = run(2, GeneratorSet::Inline(vec![Generator::K3]));
        assert_eq!(single.reachable.len(), 1);
        let cfg = RunConfig {
            seed_state: 63,
            generator_set: Some(GeneratorSet::Osp),
            ..RunConfig::default()
        };
        assert!(matches!(
            cmd_orbit(&cfg),
            Err(Error::SeedOutsideWindow { .. })
        ));
    }

    #[test]
    fn structure_entries() {
        let s = cmd_structure(&RunConfig::default())
            .unwrap()
            .structure
            .unwrap();
        assert_eq!(s.entry("Q†", "Q†").unwrap().render(), "{Q†,Q†} = 2K+");
        assert_eq!(s.entry("K3", "Q").unwrap().render(), "[K3,Q] = -1/2Q");
        assert_eq!(s.entry("Q", "K3").unwrap().render(), "[Q,K3] = 1/2Q");
        assert_eq!(s.entries.len(), 25);
    }

    #[test]
    fn spectrum_rows() {
        let cfg = RunConfig {
            dim: 4,
            ..RunConfig::default()
        };
        let rows = cmd_spectrum(&cfg).unwrap().spectrum.unwrap();
        assert_eq!(rows[0].energy, 0.5);
        assert_eq!(rows[0].parity, "+");
        assert_eq!(rows[1].k3, "3/4");
        assert_eq!(
            (rows[2].norm_plus.as_str(), rows[2].norm_minus.as_str()),
            ("3/1", "1/2")
        );
        let csv = spectrum_csv(&rows);
        assert!(csv.starts_with("n,E,k3,parity,norm_plus,norm_minus\n0,0.5,1/4,+,1/2,0/1\n"));
    }

    #[test]
    fn json_round_trip_is_lossless_and_deterministic() {
        let cfg = RunConfig {
            dim: 16,
            output_format: OutputFormat::Json,
            ..RunConfig::default()
        };
        let a = cmd_verify(&cfg).unwrap();
        let b = cmd_verify(&cfg).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let back = Report::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }
}
