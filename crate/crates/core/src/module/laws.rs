//! The compatibility laws between the structures of a covariant module.
//!
//! Every law is an equality of two composite maps evaluated exactly on a
//! basis. Notation: `▷` left action, `◁` right action, `δ_L` left
//! `P`-coaction, `δ_R` right `H`-coaction. For the acting algebras, `λ` and
//! `ρ` are the maps stored on [`Acting`](super::Acting).

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{Action, Coaction, CovariantModule};
use crate::check::Check;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{Composite, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    LeftModule,
    RightModule,
    LeftComodule,
    RightComodule,
    /// `δ_L(a ▷ y) = a(1) y(-1) ⊗ a(2) ▷ y(0)`
    LeftActionLeftCoaction,
    /// `δ_R(a ▷ y) = a(1) ▷ y(0) ⊗ ρ(a)(1) y(1)`
    LeftActionRightCoaction,
    /// `(a ▷ y) ◁ b = a ▷ (y ◁ b)`
    Bimodule,
    /// `δ_L(y ◁ b) = y(-1) b(1) ⊗ y(0) ◁ b(2)`
    RightActionLeftCoaction,
    /// `(δ_L ⊗ id) δ_R = (id ⊗ δ_R) δ_L`
    Bicomodule,
    /// `δ_R(y ◁ b) = y(0) ◁ ρ(b)(0) ⊗ y(1) ρ(b)(1)`
    RightActionRightCoaction,
    /// `δ_L(a ▷ e ◁ b) = a(1) e(-1) b(1) ⊗ a(2) ▷ e(0) ◁ b(2)`
    CovariantBimodule,
    /// `y(0) ◁ b ⊗ y(1) = (y ◁ b(2))(0) ⊗ π(b(1)) (y ◁ b(2))(1)`
    Crossed,
}

impl Law {
    /// Hopf bimodules: left `P`-module and comodule, right `H`-comodule,
    /// right module over the base.
    pub const HOPF_BIMODULE: &'static [Law] = &[
        Law::LeftModule,
        Law::RightModule,
        Law::LeftComodule,
        Law::RightComodule,
        Law::LeftActionLeftCoaction,
        Law::LeftActionRightCoaction,
        Law::Bimodule,
        Law::RightActionLeftCoaction,
        Law::Bicomodule,
        Law::RightActionRightCoaction,
    ];

    /// Left-covariant bimodules over the base.
    pub const COVARIANT_BIMODULE: &'static [Law] = &[
        Law::LeftModule,
        Law::RightModule,
        Law::LeftComodule,
        Law::LeftActionLeftCoaction,
        Law::Bimodule,
        Law::RightActionLeftCoaction,
        Law::CovariantBimodule,
    ];

    /// Crossed modules: right module and right comodule tied by the
    /// crossed condition.
    pub const CROSSED: &'static [Law] = &[Law::RightModule, Law::RightComodule, Law::Crossed];

    pub const ALL: &'static [Law] = &[
        Law::LeftModule,
        Law::RightModule,
        Law::LeftComodule,
        Law::RightComodule,
        Law::LeftActionLeftCoaction,
        Law::LeftActionRightCoaction,
        Law::Bimodule,
        Law::RightActionLeftCoaction,
        Law::Bicomodule,
        Law::RightActionRightCoaction,
        Law::CovariantBimodule,
        Law::Crossed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::LeftModule => "left module",
            Law::RightModule => "right module",
            Law::LeftComodule => "left comodule",
            Law::RightComodule => "right comodule",
            Law::LeftActionLeftCoaction => "left action / left coaction",
            Law::LeftActionRightCoaction => "left action / right coaction",
            Law::Bimodule => "bimodule",
            Law::RightActionLeftCoaction => "right action / left coaction",
            Law::Bicomodule => "bicomodule",
            Law::RightActionRightCoaction => "right action / right coaction",
            Law::CovariantBimodule => "covariant bimodule",
            Law::Crossed => "crossed condition",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn need<'a, T>(law: Law, what: &str, s: &'a Option<T>) -> core::result::Result<&'a T, Check> {
    s.as_ref().ok_or_else(|| Check::fail(law.name(), Vec::new()).with_detail(format!("no {what}")))
}

fn need_map<F: Field>(law: Law, m: Result<&Matrix<F>>) -> core::result::Result<&Matrix<F>, Check> {
    m.map_err(|e| Check::fail(law.name(), Vec::new()).with_detail(format!("{e}")))
}

fn structure_check(law: Law, r: crate::check::Report) -> Check {
    match r.checks.into_iter().find(|c| !c.passed) {
        None => Check::pass(law.name()),
        Some(c) => Check { name: law.name().into(), passed: false, witness: c.witness, detail: Some(c.name) },
    }
}

impl<F: Field> CovariantModule<F> {
    /// Evaluates one law on all basis inputs.
    pub fn check_law(&self, law: Law) -> Check {
        match self.eval_law(law) {
            Ok(c) | Err(c) => c,
        }
    }

    fn eval_law(&self, law: Law) -> core::result::Result<Check, Check> {
        let n = self.dim;
        let frame = self.frame.clone();
        let (p, h) = (frame.p().dim(), frame.h().dim());
        let mp = frame.p().mult();
        let mh = frame.h().mult();
        let name = law.name();
        let al = || need(law, "left action", &self.left_action);
        let ar = || need(law, "right action", &self.right_action);
        let dl = || need(law, "left coaction", &self.left_coaction);
        let dr = || need(law, "right coaction", &self.right_coaction);
        Ok(match law {
            Law::LeftModule => structure_check(law, al()?.check_structure()),
            Law::RightModule => structure_check(law, ar()?.check_structure()),
            Law::LeftComodule => structure_check(law, dl()?.check_structure()),
            Law::RightComodule => structure_check(law, dr()?.check_structure()),
            Law::LeftActionLeftCoaction => {
                let (a, d): (&Action<F>, &Coaction<F>) = (al()?, dl()?);
                let l = a.acting.dim();
                let lam = need_map(law, a.acting.lambda())?;
                let lhs = Composite::identity(&[l, n]).apply(0, 2, &a.map, &[n]).apply(0, 1, &d.map, &[p, n]);
                let rhs = Composite::identity(&[l, n])
                    .apply(0, 1, lam, &[p, l])
                    .apply(2, 1, &d.map, &[p, n])
                    .move_factor(2, 1)
                    .apply(0, 2, mp, &[p])
                    .apply(1, 2, &a.map, &[n]);
                Check::compare_maps(name, &lhs, &rhs, &[l, n])
            }
            Law::LeftActionRightCoaction => {
                let (a, d) = (al()?, dr()?);
                let l = a.acting.dim();
                let rho = need_map(law, a.acting.rho())?;
                let lhs = Composite::identity(&[l, n]).apply(0, 2, &a.map, &[n]).apply(0, 1, &d.map, &[n, h]);
                let rhs = Composite::identity(&[l, n])
                    .apply(0, 1, rho, &[l, h])
                    .apply(2, 1, &d.map, &[n, h])
                    .move_factor(1, 2)
                    .apply(0, 2, &a.map, &[n])
                    .apply(1, 2, mh, &[h]);
                Check::compare_maps(name, &lhs, &rhs, &[l, n])
            }
            Law::Bimodule => {
                let (a, b) = (al()?, ar()?);
                let (l, r) = (a.acting.dim(), b.acting.dim());
                let lhs = Composite::identity(&[l, n, r]).apply(0, 2, &a.map, &[n]).apply(0, 2, &b.map, &[n]);
                let rhs = Composite::identity(&[l, n, r]).apply(1, 2, &b.map, &[n]).apply(0, 2, &a.map, &[n]);
                Check::compare_maps(name, &lhs, &rhs, &[l, n, r])
            }
            Law::RightActionLeftCoaction => {
                let (b, d) = (ar()?, dl()?);
                let r = b.acting.dim();
                let lam = need_map(law, b.acting.lambda())?;
                let lhs = Composite::identity(&[n, r]).apply(0, 2, &b.map, &[n]).apply(0, 1, &d.map, &[p, n]);
                let rhs = Composite::identity(&[n, r])
                    .apply(0, 1, &d.map, &[p, n])
                    .apply(2, 1, lam, &[p, r])
                    .move_factor(2, 1)
                    .apply(0, 2, mp, &[p])
                    .apply(1, 2, &b.map, &[n]);
                Check::compare_maps(name, &lhs, &rhs, &[n, r])
            }
            Law::Bicomodule => {
                let (dl, dr) = (dl()?, dr()?);
                let lhs = Composite::from_map(&dr.map, &[n, h]).apply(0, 1, &dl.map, &[p, n]);
                let rhs = Composite::from_map(&dl.map, &[p, n]).apply(1, 1, &dr.map, &[n, h]);
                Check::compare_maps(name, &lhs, &rhs, &[n])
            }
            Law::RightActionRightCoaction => {
                let (b, d) = (ar()?, dr()?);
                let r = b.acting.dim();
                let rho = need_map(law, b.acting.rho())?;
                let lhs = Composite::identity(&[n, r]).apply(0, 2, &b.map, &[n]).apply(0, 1, &d.map, &[n, h]);
                let rhs = coaction_then_act(n, r, h, &d.map, rho, &b.map, mh);
                Check::compare_maps(name, &lhs, &rhs, &[n, r])
            }
            Law::CovariantBimodule => {
                let (a, b, d) = (al()?, ar()?, dl()?);
                let (l, r) = (a.acting.dim(), b.acting.dim());
                let lam_l = need_map(law, a.acting.lambda())?;
                let lam_r = need_map(law, b.acting.lambda())?;
                let lhs = Composite::identity(&[l, n, r])
                    .apply(0, 2, &a.map, &[n])
                    .apply(0, 2, &b.map, &[n])
                    .apply(0, 1, &d.map, &[p, n]);
                let rhs = Composite::identity(&[l, n, r])
                    .apply(0, 1, lam_l, &[p, l])
                    .apply(2, 1, &d.map, &[p, n])
                    .apply(4, 1, lam_r, &[p, r])
                    .permute(&[0, 2, 4, 1, 3, 5])
                    .apply(0, 2, mp, &[p])
                    .apply(0, 2, mp, &[p])
                    .apply(1, 2, &a.map, &[n])
                    .apply(1, 2, &b.map, &[n]);
                Check::compare_maps(name, &lhs, &rhs, &[l, n, r])
            }
            Law::Crossed => {
                let (b, d) = (ar()?, dr()?);
                let r = b.acting.dim();
                let rho = need_map(law, b.acting.rho())?;
                let lam = need_map(law, b.acting.lambda())?;
                let lhs = coaction_then_act(n, r, h, &d.map, rho, &b.map, mh);
                let rhs = Composite::identity(&[n, r])
                    .apply(1, 1, lam, &[p, r])
                    .move_factor(1, 0)
                    .apply(1, 2, &b.map, &[n])
                    .apply(1, 1, &d.map, &[n, h])
                    .on(0, frame.pi())
                    .move_factor(0, 1)
                    .apply(1, 2, mh, &[h]);
                Check::compare_maps(name, &lhs, &rhs, &[n, r])
            }
        })
    }
}

/// `y ⊗ b ↦ y(0) ◁ ρ(b)(0) ⊗ y(1) ρ(b)(1)`.
fn coaction_then_act<F: Field>(
    n: usize,
    r: usize,
    h: usize,
    delta: &Matrix<F>,
    rho: &Matrix<F>,
    act: &Matrix<F>,
    mh: &Matrix<F>,
) -> Composite<F> {
    Composite::identity(&[n, r])
        .apply(0, 1, delta, &[n, h])
        .apply(2, 1, rho, &[r, h])
        .move_factor(2, 1)
        .apply(0, 2, act, &[n])
        .apply(1, 2, mh, &[h])
}
