//! The command implementations, generic over the scalar field.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use hopfhom_core::calculus::{
    bicovariant_calculus_from_ideal, calculus_from_crossed_submodule, calculus_isomorphism, check_calculus,
    classify_covariant_calculi, crossed_submodule_from_calculus, induced_calculus, universal_covariant_calculus,
};
use hopfhom_core::check::{Check, Report};
use hopfhom_core::examples::example;
use hopfhom_core::field::Field;
use hopfhom_core::functors::{
    fg_iso, gf_identity, regular_base_module, t1_counit_iso, t1_forward, t1_unit_iso, tensor_base_bimodule,
    FgOptions, FgOutcome,
};
use hopfhom_core::homogeneous::{
    canonical_crossed_bplus, describe_galois, hopf_galois_check, make_qhs, trivial_crossed_module,
    QuantumHomogeneousSpace,
};
use hopfhom_core::hopf::{surjection_report, FinHopfAlgebra, HopfSurjection};
use hopfhom_core::linalg::Subspace;
use hopfhom_core::module::{brute_force_stable_subspaces, quotient_module, regular_module, submodule_lattice};

use crate::formats::{matrix_to_rows, FormatError, HopfFileV1, ReportV1, SubspaceFileV1, SurjectionFileV1};

/// Failure of a command, with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// A mathematical check failed before a report could be assembled;
    /// exit code 1.
    #[error("check failed: {0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Check(_) => 1,
        }
    }
}

impl From<hopfhom_core::Error> for CliError {
    fn from(e: hopfhom_core::Error) -> Self {
        use hopfhom_core::Error as E;
        match e {
            E::LawFailed { .. } | E::ChecksFailed { .. } | E::NotStable(_) | E::NotSurjective { .. } => {
                CliError::Check(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Core(c) => c.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Where the Hopf algebra and the surjection come from.
#[derive(Clone, Debug)]
pub enum Input {
    Example(String),
    Files { p: PathBuf, pi: Option<PathBuf> },
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_hopf<F: Field>(path: &Path) -> CliResult<FinHopfAlgebra<F>> {
    Ok(HopfFileV1::parse(&read(path)?)?.to_hopf()?)
}

/// The certified surjection named by `input`.
pub fn load_surjection<F: Field>(input: &Input) -> CliResult<HopfSurjection<F>> {
    match input {
        Input::Example(name) => Ok(example(name).map_err(|e| CliError::Input(e.to_string()))?),
        Input::Files { p, pi } => {
            let p = Arc::new(load_hopf::<F>(p)?.certified()?);
            let pi = pi.as_ref().ok_or_else(|| CliError::Input("a surjection file is required".into()))?;
            Ok(SurjectionFileV1::parse(&read(pi)?)?.to_surjection(p)?)
        }
    }
}

pub fn load_subspace<F: Field>(path: &Path) -> CliResult<Subspace<F>> {
    Ok(SubspaceFileV1::parse(&read(path)?)?.to_subspace()?)
}

fn prefixed(report: &mut ReportV1, prefix: &str, r: &Report) {
    for c in &r.checks {
        let mut c = c.clone();
        c.name = format!("{prefix}: {}", c.name);
        report.push(&c);
    }
}

fn qhs<F: Field>(input: &Input) -> CliResult<QuantumHomogeneousSpace<F>> {
    Ok(make_qhs(Arc::new(load_surjection::<F>(input)?))?)
}

/// Hopf axioms of `P`, and of `H` and the surjection when given.
pub fn verify<F: Field>(input: &Input) -> CliResult<ReportV1> {
    let mut report = ReportV1::new("verify", F::name());
    let (p, rest) = match input {
        Input::Example(_) => {
            let s = load_surjection::<F>(input)?;
            let h = (**s.target()).clone();
            ((**s.source()).clone(), Some((h, s.matrix().clone())))
        }
        Input::Files { p, pi } => {
            let p = load_hopf::<F>(p)?;
            let rest = match pi {
                Some(path) => Some(SurjectionFileV1::parse(&read(path)?)?.to_parts(&p)?),
                None => None,
            };
            (p, rest)
        }
    };
    prefixed(&mut report, "P", &p.verify_axioms());
    report.set("p_name", p.name());
    report.set("p_dim", p.dim());
    if let Some((h, m)) = rest {
        prefixed(&mut report, "H", &h.verify_axioms());
        prefixed(&mut report, "π", &surjection_report(&p, &h, &m));
        report.set("h_name", h.name());
        report.set("h_dim", h.dim());
    }
    Ok(report)
}

/// `B = P^H` with its certificates.
pub fn coinvariants<F: Field>(input: &Input) -> CliResult<ReportV1> {
    let mut report = ReportV1::new("coinvariants", F::name());
    let q = qhs::<F>(input)?;
    report.extend(q.report());
    report.set("p_dim", q.p().dim());
    report.set("h_dim", q.h().dim());
    report.set("b_dim", q.b_dim());
    report.set("b_basis", matrix_to_rows(q.b().basis()));
    report.set("b_plus_dim", q.b_plus().dim());
    report.set("b_commutative", q.b_algebra().is_commutative());
    Ok(report)
}

/// Bijectivity of `χ`.
pub fn galois<F: Field>(input: &Input) -> CliResult<ReportV1> {
    let mut report = ReportV1::new("galois", F::name());
    let q = qhs::<F>(input)?;
    report.extend(q.report());
    let g = hopf_galois_check(&q)?;
    report.set("galois", g.galois);
    report.set("surjective", g.surjective);
    report.set("injective", g.injective);
    report.set("rank", g.rank);
    report.set("tensor_dim", g.tensor_dim);
    report.set("target_dim", g.target_dim);
    report.set("antipode_invertible", g.antipode_invertible);
    report.set("summary", describe_galois(&g));
    Ok(report)
}

/// Left-covariant calculi on `B` from crossed submodules of `B⁺`.
pub fn classify<F: Field>(input: &Input, cap: usize, brute: bool) -> CliResult<ReportV1> {
    let mut report = ReportV1::new("classify", F::name());
    let q = qhs::<F>(input)?;
    let cl = classify_covariant_calculi(&q, cap)?;
    let mut entries = Vec::new();
    for (k, entry) in cl.calculi.iter().enumerate() {
        prefixed(&mut report, &format!("I{k}"), &entry.report);
        let back = crossed_submodule_from_calculus(&entry.calculus, &q)?;
        report.push(&Check::from_bool(format!("I{k}: round trip"), back == entry.ideal));
        entries.push(serde_json::json!({
            "ideal_dim": entry.ideal.dim(),
            "ideal_basis": matrix_to_rows(entry.ideal.basis()),
            "omega_dim": entry.omega_dim,
            "passed": entry.report.all_passed(),
        }));
    }
    if brute {
        let x = canonical_crossed_bplus(&q)?;
        match brute_force_stable_subspaces(&x.operators(), x.dim()) {
            Some(mut oracle) => {
                oracle.sort_by(|a, b| a.canonical_cmp(b));
                let ours: Vec<_> = cl.calculi.iter().map(|c| c.ideal.clone()).collect();
                report.push(&Check::from_bool("matches brute-force oracle", ours == oracle));
                report.set("oracle_count", oracle.len());
            }
            None => report.warnings.push("brute-force oracle does not apply to this field and dimension".into()),
        }
    }
    report.set("count", cl.calculi.len());
    report.set("calculi", entries);
    report.set("lattice_complete", cl.lattice_complete);
    report.set("bijective_correspondence", cl.bijective_correspondence);
    report.set("complete", cl.complete());
    report.warnings.extend(cl.warnings);
    Ok(report)
}

/// The calculus on `B` induced by the bicovariant calculus on `P` with
/// ideal `ideal` of `P⁺` (zero when `None`).
pub fn induce<F: Field>(input: &Input, ideal: Option<Subspace<F>>) -> CliResult<ReportV1> {
    let mut report = ReportV1::new("induce", F::name());
    let q = qhs::<F>(input)?;
    let p = q.surjection().source().clone();
    let ideal = ideal.unwrap_or_else(|| Subspace::zero(p.dim() - 1));
    let gamma = bicovariant_calculus_from_ideal(&ideal, p)?;
    prefixed(&mut report, "calculus on P", &check_calculus(&gamma.calculus));
    let ind = induced_calculus(&gamma, &q)?;
    prefixed(&mut report, "induction", &ind.report);
    prefixed(&mut report, "calculus on B", &check_calculus(&ind.calculus));
    let other = calculus_from_crossed_submodule(&ind.bplus_ideal, &q)?;
    prefixed(&mut report, "agrees with crossed submodule route", &calculus_isomorphism(&ind.calculus, &other).report);
    report.set("ideal_dim", ideal.dim());
    report.set("gamma_dim", gamma.calculus.dim);
    report.set("tangent_dim", ind.tangent.dim());
    report.set("bplus_ideal_dim", ind.bplus_ideal.dim());
    report.set("sections_dim", ind.sections_dim);
    report.set("omega_dim", ind.calculus.dim);
    report.set("strict_inclusion", ind.strict_inclusion);
    if ind.strict_inclusion {
        report.warnings.push("span of a·db is strictly smaller than the sections of P ⊗ T".into());
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    T1,
    T2,
    Dchom,
    All,
}

/// The round-trip identities of the structure theorems and of the
/// calculus correspondence.
pub fn roundtrip<F: Field>(input: &Input, suite: Suite, cap: usize, gate: FgOptions) -> CliResult<ReportV1> {
    let mut report = ReportV1::new("roundtrip", F::name());
    let q = qhs::<F>(input)?;
    let bplus = canonical_crossed_bplus(&q)?;
    let lattice = submodule_lattice(&bplus, cap)?;
    report.warnings.extend(lattice.warnings.iter().cloned());
    let run = |s: Suite| suite == s || suite == Suite::All;

    if run(Suite::T1) {
        let mut objects = vec![("k".to_string(), trivial_crossed_module(&q))];
        for (k, i) in lattice.subspaces.iter().enumerate() {
            objects.push((format!("B⁺/I{k}"), quotient_module(&bplus, i)?));
        }
        for (name, x) in &objects {
            prefixed(&mut report, &format!("t1 unit {name}"), &t1_unit_iso(x)?.report);
            prefixed(&mut report, &format!("t1 counit {name}"), &t1_counit_iso(&t1_forward(x)?)?.report);
        }
        report.set("t1_objects", objects.len());
    }

    if run(Suite::T2) {
        for (name, e) in [("B", regular_base_module(&q)), ("B⊗B", tensor_base_bimodule(&q))] {
            prefixed(&mut report, &format!("GF {name}"), &gf_identity(&e, &q)?.report);
        }
        let mut gated = Vec::new();
        for (name, y) in [("P", regular_module(q.frame())), ("P⊗B⁺", t1_forward(&bplus)?)] {
            match fg_iso(&y, &q, gate)? {
                FgOutcome::Iso(iso) => prefixed(&mut report, &format!("FG {name}"), &iso.report),
                FgOutcome::NotApplicable { reasons, forward_bijective } => {
                    gated.push(serde_json::json!({
                        "object": name,
                        "reasons": reasons,
                        "forward_bijective": forward_bijective,
                    }));
                }
            }
        }
        if !gated.is_empty() {
            report.warnings.push("FG isomorphism not applicable: hypotheses fail".into());
        }
        report.set("fg_not_applicable", gated);
    }

    if run(Suite::Dchom) {
        for (k, i) in lattice.subspaces.iter().enumerate() {
            let c = calculus_from_crossed_submodule(i, &q)?;
            prefixed(&mut report, &format!("calculus I{k}"), &check_calculus(&c));
            let back = crossed_submodule_from_calculus(&c, &q)?;
            report.push(&Check::from_bool(format!("I{k} -> calculus -> I"), &back == i));
        }
        let u = universal_covariant_calculus(&q)?;
        let i = crossed_submodule_from_calculus(&u, &q)?;
        report.push(&Check::from_bool("universal calculus gives I = 0", i.is_zero()));
        let again = calculus_from_crossed_submodule(&i, &q)?;
        prefixed(&mut report, "universal -> I -> calculus", &calculus_isomorphism(&u, &again).report);
        report.set("dchom_subspaces", lattice.subspaces.len());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfhom_core::field::{Fp, Rational};

    fn ex(name: &str) -> Input {
        Input::Example(name.into())
    }

    #[test]
    fn examples_verify() {
        for name in hopfhom_core::examples::EXAMPLES {
            assert!(verify::<Rational>(&ex(name)).unwrap().passed, "{name}");
        }
    }

    #[test]
    fn coinvariant_dims() {
        let r = coinvariants::<Rational>(&ex("sweedler")).unwrap();
        assert_eq!(r.data["b_dim"], 2);
        let r = coinvariants::<Fp<7>>(&ex("fs3_k12")).unwrap();
        assert_eq!(r.data["b_dim"], 3);
    }

    #[test]
    fn classify_with_oracle() {
        let r = classify::<Fp<5>>(&ex("fs3_k12"), 64, true).unwrap();
        assert!(r.passed, "{:?}", r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
        assert!(r.checks.iter().any(|c| c.name == "matches brute-force oracle"));
    }

    #[test]
    fn roundtrip_all_suites() {
        let r = roundtrip::<Rational>(&ex("sweedler"), Suite::All, 64, FgOptions::default()).unwrap();
        assert!(r.passed);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn gated_roundtrip_still_passes() {
        let gate = FgOptions { disable_galois: true, disable_antipode_inverse: false };
        let r = roundtrip::<Rational>(&ex("fs3_k12"), Suite::T2, 64, gate).unwrap();
        assert!(r.passed);
        assert_eq!(r.data["fg_not_applicable"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn unknown_example_is_input_error() {
        assert_eq!(verify::<Rational>(&ex("nope")).unwrap_err().exit_code(), 2);
    }
}
