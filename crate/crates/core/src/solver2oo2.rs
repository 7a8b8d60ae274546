//! Optimal unambiguous comparison of two systems, each in one of two pure
//! states `|ψ₁⟩`, `|ψ₂⟩` with priors `q₁`, `q₂ = 1 − q₁` and real overlap
//! `cos ϑ = ⟨ψ₁|ψ₂⟩ ∈ (0, 1)`.
//!
//! After both reduction steps the problem becomes the discrimination of the
//! two pure states `|e₁⟩` and `|γ⟩` on `H′ = span(e₁, e₃)`, with unchanged
//! priors `η_a = q₁² + q₂²`, `η_b = 2 q₁ q₂`. The optimum is
//!
//! ```text
//! P_opt = 1 − 2 √(η_a η_b) cos ϑ                    if (∗)
//!       = (n₋² / n₊²) (1 − η_b sin²ϑ / 2)            otherwise
//! ```
//!
//! with `n_± = √(1 ± cos²ϑ)` and condition (∗) given by [`condition_star`].

use serde::Serialize;

use crate::ensemble::{Outcome, Povm, PureEnsemble};
use crate::error::{Error, Result};
use crate::hermlin::{c64, kron_vec, ComplexVector, HermitianOperator};

/// Priors closer than this to 0 or 1 are rejected.
pub const MIN_PRIOR: f64 = 1e-6;

/// Which closed-form branch applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// Both hypotheses receive a conclusive element.
    ConditionHolds,
    /// Only the more likely hypothesis is identified in the reduced problem.
    ConditionFails,
}

impl Branch {
    pub fn from_condition(holds: bool) -> Self {
        if holds {
            Branch::ConditionHolds
        } else {
            Branch::ConditionFails
        }
    }

    pub fn holds(self) -> bool {
        self == Branch::ConditionHolds
    }
}

pub(crate) fn validate_prior(q1: f64) -> Result<()> {
    if !q1.is_finite() || !(MIN_PRIOR..=1.0 - MIN_PRIOR).contains(&q1) {
        return Err(Error::Domain(format!(
            "prior q1 = {q1} must lie in [{MIN_PRIOR}, {}]",
            1.0 - MIN_PRIOR
        )));
    }
    Ok(())
}

pub(crate) fn validate_overlap(cos_theta: f64) -> Result<()> {
    if !cos_theta.is_finite() || !(0.0..=1.0).contains(&cos_theta) {
        return Err(Error::Domain(format!(
            "cos(theta) = {cos_theta} outside [0, 1]"
        )));
    }
    if cos_theta == 0.0 || cos_theta == 1.0 {
        return Err(Error::DegenerateOverlap(cos_theta));
    }
    Ok(())
}

/// `η_a = q₁² + q₂²` and `η_b = 2 q₁ q₂`.
pub fn etas(q1: f64) -> (f64, f64) {
    let q2 = 1.0 - q1;
    (q1 * q1 + q2 * q2, 2.0 * q1 * q2)
}

/// A validated two-out-of-two instance.
#[derive(Clone, Debug)]
pub struct TwoTwoInstance {
    q1: f64,
    cos_theta: f64,
    psi1: ComplexVector,
    psi2: ComplexVector,
}

impl TwoTwoInstance {
    /// Canonical qubit embedding `|ψ₁⟩ = (1, 0)`, `|ψ₂⟩ = (cos ϑ, sin ϑ)`.
    pub fn new(q1: f64, cos_theta: f64) -> Result<Self> {
        validate_prior(q1)?;
        validate_overlap(cos_theta)?;
        let sin_theta = (1.0 - cos_theta * cos_theta).sqrt();
        Ok(Self {
            q1,
            cos_theta,
            psi1: ComplexVector::from_vec(vec![c64(1.0, 0.0), c64(0.0, 0.0)]),
            psi2: ComplexVector::from_vec(vec![c64(cos_theta, 0.0), c64(sin_theta, 0.0)]),
        })
    }

    /// Explicit states of any dimension; their overlap must be real.
    pub fn with_states(q1: f64, psi1: ComplexVector, psi2: ComplexVector) -> Result<Self> {
        validate_prior(q1)?;
        if psi1.len() != psi2.len() || psi1.len() < 2 {
            return Err(Error::Domain(
                "states must share a dimension of at least 2".into(),
            ));
        }
        for (name, v) in [("psi1", &psi1), ("psi2", &psi2)] {
            if (v.norm() - 1.0).abs() > 1e-10 {
                return Err(Error::Domain(format!("{name} is not normalised")));
            }
        }
        let overlap = psi1.dotc(&psi2);
        if overlap.im.abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "overlap {overlap} is not real; fix the relative phase first"
            )));
        }
        validate_overlap(overlap.re)?;
        Ok(Self {
            q1,
            cos_theta: overlap.re,
            psi1,
            psi2,
        })
    }

    pub fn q1(&self) -> f64 {
        self.q1
    }

    pub fn q2(&self) -> f64 {
        1.0 - self.q1
    }

    pub fn cos_theta(&self) -> f64 {
        self.cos_theta
    }

    pub fn sin_sq(&self) -> f64 {
        1.0 - self.cos_theta * self.cos_theta
    }

    pub fn dim(&self) -> usize {
        self.psi1.len()
    }

    pub fn psi1(&self) -> &ComplexVector {
        &self.psi1
    }

    pub fn psi2(&self) -> &ComplexVector {
        &self.psi2
    }

    pub fn etas(&self) -> (f64, f64) {
        etas(self.q1)
    }

    pub fn ensemble(&self) -> PureEnsemble {
        PureEnsemble::new(
            vec![self.psi1.clone(), self.psi2.clone()],
            vec![self.q1, self.q2()],
        )
        .expect("validated instance forms a valid ensemble")
    }

    /// Unit vectors in the plane of the two states with `ψ̄₁ ⟂ ψ₁`,
    /// `ψ̄₂ ⟂ ψ₂`, and `ψ̄₂ = U ψ̄₁` for the reflection `U` exchanging `ψ₁`
    /// and `ψ₂`.
    pub fn complements(&self) -> (ComplexVector, ComplexVector) {
        let c = c64(self.cos_theta, 0.0);
        let s = self.sin_sq().sqrt();
        // ψ₂ = c ψ₁ + s χ with χ ⟂ ψ₁ in the plane
        let chi = (&self.psi2 - &self.psi1 * c) / c64(s, 0.0);
        // U = c(|ψ₁⟩⟨ψ₁| − |χ⟩⟨χ|) + s(|ψ₁⟩⟨χ| + |χ⟩⟨ψ₁|)
        let bar1 = chi.clone();
        let bar2 = &self.psi1 * c64(s, 0.0) - &chi * c;
        (bar1, bar2)
    }

    /// The reflection exchanging `ψ₁` and `ψ₂`, acting as the identity off
    /// their plane.
    pub fn exchange_unitary(&self) -> crate::hermlin::ComplexMatrix {
        let d = self.dim();
        let c = self.cos_theta;
        let s = self.sin_sq().sqrt();
        let chi = (&self.psi2 - &self.psi1 * c64(c, 0.0)) / c64(s, 0.0);
        let p1 = &self.psi1 * self.psi1.adjoint();
        let pc = &chi * chi.adjoint();
        let cross = &self.psi1 * chi.adjoint() + &chi * self.psi1.adjoint();
        let plane = &p1 + &pc;
        crate::hermlin::ComplexMatrix::identity(d, d) - plane
            + (p1 - pc) * c64(c, 0.0)
            + cross * c64(s, 0.0)
    }
}

/// Orthonormal basis `e₁ … e₄` of the non-trivial space `H`.
#[derive(Clone, Debug)]
pub struct EBasis {
    pub e1: ComplexVector,
    pub e2: ComplexVector,
    pub e3: ComplexVector,
    pub e4: ComplexVector,
    pub n_plus: f64,
    pub n_minus: f64,
}

impl EBasis {
    pub fn vectors(&self) -> [&ComplexVector; 4] {
        [&self.e1, &self.e2, &self.e3, &self.e4]
    }
}

/// `e_{1,2} = (|ψ₁ψ₁⟩ ± |ψ₂ψ₂⟩)/(√2 n_±)`,
/// `e_{3,4} = (|ψ̄₁ψ̄₂⟩ ± |ψ̄₂ψ̄₁⟩)/(√2 n_±)`.
pub fn e_basis(instance: &TwoTwoInstance) -> EBasis {
    let c2 = instance.cos_theta * instance.cos_theta;
    let n_plus = (1.0 + c2).sqrt();
    let n_minus = (1.0 - c2).sqrt();
    let (b1, b2) = instance.complements();
    let p11 = kron_vec(&instance.psi1, &instance.psi1);
    let p22 = kron_vec(&instance.psi2, &instance.psi2);
    let b12 = kron_vec(&b1, &b2);
    let b21 = kron_vec(&b2, &b1);
    let root2 = std::f64::consts::SQRT_2;
    let plus = c64(1.0 / (root2 * n_plus), 0.0);
    let minus = c64(1.0 / (root2 * n_minus), 0.0);
    let e1 = (&p11 + &p22) * plus;
    let e2 = (&p11 - &p22) * minus;
    let mut e3 = (&b12 + &b21) * plus;
    let e4 = (&b12 - &b21) * minus;
    // fix the sign of e₃ so that ⟨e₃|γ⟩ ≥ 0
    let p12 = kron_vec(&instance.psi1, &instance.psi2);
    if e3.dotc(&p12).re < 0.0 {
        e3 = -e3;
    }
    EBasis {
        e1,
        e2,
        e3,
        e4,
        n_plus,
        n_minus,
    }
}

/// `|γ⟩ = (√2/n₊) P₊|ψ₁ψ₂⟩` and `|γ⊥⟩ ∈ span(e₁, e₃)` orthogonal to it.
/// Components are non-negative in the `(e₁, e₃)` frame.
pub fn gamma_vector(instance: &TwoTwoInstance, basis: &EBasis) -> (ComplexVector, ComplexVector) {
    let p12 = kron_vec(&instance.psi1, &instance.psi2);
    let scale = std::f64::consts::SQRT_2 / basis.n_plus;
    let g1 = basis.e1.dotc(&p12) * c64(scale, 0.0);
    let g3 = basis.e3.dotc(&p12) * c64(scale, 0.0);
    let gamma = &basis.e1 * g1 + &basis.e3 * g3;
    let gamma_perp = &basis.e1 * g3.conj() - &basis.e3 * g1.conj();
    (gamma, gamma_perp)
}

/// Closed-form magnitudes `(|⟨e₁|γ⟩|, |⟨e₃|γ⟩|) = (2c/n₊², sin²ϑ/n₊²)`.
pub fn gamma_components(cos_theta: f64) -> (f64, f64) {
    let c2 = cos_theta * cos_theta;
    let n_plus_sq = 1.0 + c2;
    (2.0 * cos_theta / n_plus_sq, (1.0 - c2) / n_plus_sq)
}

/// Right-hand side of (∗): `√(η_a/η_b) (1 − √((η_a − η_b)/η_a))`.
pub fn condition_star_threshold(eta_a: f64, eta_b: f64) -> f64 {
    (eta_a / eta_b).sqrt() * (1.0 - ((eta_a - eta_b) / eta_a).sqrt())
}

/// Condition (∗): `cos ϑ` below [`condition_star_threshold`].
pub fn condition_star(eta_a: f64, eta_b: f64, cos_theta: f64) -> bool {
    cos_theta < condition_star_threshold(eta_a, eta_b)
}

fn p_opt_unchecked(q1: f64, cos_theta: f64) -> (f64, Branch) {
    let (eta_a, eta_b) = etas(q1);
    let c2 = cos_theta * cos_theta;
    let sin_sq = 1.0 - c2;
    if condition_star(eta_a, eta_b, cos_theta) {
        (
            1.0 - 2.0 * (eta_a * eta_b).sqrt() * cos_theta,
            Branch::ConditionHolds,
        )
    } else {
        (
            sin_sq / (1.0 + c2) * (1.0 - 0.5 * eta_b * sin_sq),
            Branch::ConditionFails,
        )
    }
}

/// Optimal success probability and the branch that produced it.
pub fn p_opt(q1: f64, cos_theta: f64) -> Result<(f64, Branch)> {
    validate_prior(q1)?;
    validate_overlap(cos_theta)?;
    Ok(p_opt_unchecked(q1, cos_theta))
}

/// One-sided limits at `cos ϑ ∈ {0, 1}` for plotting; interior values agree
/// with [`p_opt`].
pub fn p_opt_limit(q1: f64, cos_theta: f64) -> Result<(f64, Branch)> {
    validate_prior(q1)?;
    if !cos_theta.is_finite() || !(0.0..=1.0).contains(&cos_theta) {
        return Err(Error::Domain(format!(
            "cos(theta) = {cos_theta} outside [0, 1]"
        )));
    }
    Ok(p_opt_unchecked(q1, cos_theta))
}

/// Optimal unambiguous discrimination of two pure states with priors
/// `eta1`, `eta2` and overlap modulus `overlap`.
pub fn jaeger_shimony(eta1: f64, eta2: f64, overlap: f64) -> f64 {
    let (lo, hi) = if eta1 <= eta2 {
        (eta1, eta2)
    } else {
        (eta2, eta1)
    };
    if overlap < (lo / hi).sqrt() {
        1.0 - 2.0 * (eta1 * eta2).sqrt() * overlap
    } else {
        hi * (1.0 - overlap * overlap)
    }
}

#[derive(Clone, Debug)]
pub struct TwoTwoSolution {
    pub p_opt: f64,
    pub branch: Branch,
    pub alpha: f64,
    pub beta: f64,
    pub povm: Povm,
    pub basis: EBasis,
    pub gamma: ComplexVector,
    pub gamma_perp: ComplexVector,
}

impl TwoTwoSolution {
    pub fn n_plus(&self) -> f64 {
        self.basis.n_plus
    }

    pub fn n_minus(&self) -> f64 {
        self.basis.n_minus
    }

    pub fn f_a(&self) -> &HermitianOperator {
        self.povm.get(Outcome::Same).expect("F_a present")
    }

    pub fn f_b(&self) -> &HermitianOperator {
        self.povm.get(Outcome::Different).expect("F_b present")
    }

    pub fn f_inconclusive(&self) -> &HermitianOperator {
        self.povm.get(Outcome::Inconclusive).expect("F_? present")
    }
}

/// Reduced-problem weights `(α, β)` for `F′_a = α|γ⊥⟩⟨γ⊥|`,
/// `F′_b = β|e₃⟩⟨e₃|`.
pub fn povm_weights(q1: f64, cos_theta: f64) -> (f64, f64) {
    let (eta_a, eta_b) = etas(q1);
    if !condition_star(eta_a, eta_b, cos_theta) {
        return (1.0, 0.0);
    }
    let (g1, g3) = gamma_components(cos_theta);
    let g3_sq = g3 * g3;
    let alpha = (1.0 - (eta_b / eta_a).sqrt() * g1) / g3_sq;
    let beta = (1.0 - (eta_a / eta_b).sqrt() * g1) / g3_sq;
    (alpha, beta)
}

/// Full optimal measurement on `C^d ⊗ C^d`:
/// `F_a = α|γ⊥⟩⟨γ⊥| + |e₂⟩⟨e₂|`, `F_b = β|e₃⟩⟨e₃| + |e₄⟩⟨e₄|`,
/// `F_? = 1 − F_a − F_b`.
pub fn assemble_povm(instance: &TwoTwoInstance) -> Result<TwoTwoSolution> {
    let (p_opt, branch) = p_opt(instance.q1, instance.cos_theta)?;
    let basis = e_basis(instance);
    let (gamma, gamma_perp) = gamma_vector(instance, &basis);
    let (alpha, beta) = povm_weights(instance.q1, instance.cos_theta);
    let d = instance.dim();
    let dims = [d, d];
    let f_a = HermitianOperator::outer(&gamma_perp, &dims)
        .scale(alpha)
        .add(&HermitianOperator::outer(&basis.e2, &dims));
    let f_b = HermitianOperator::outer(&basis.e3, &dims)
        .scale(beta)
        .add(&HermitianOperator::outer(&basis.e4, &dims));
    let povm = Povm::with_inconclusive(vec![(Outcome::Same, f_a), (Outcome::Different, f_b)])?;
    Ok(TwoTwoSolution {
        p_opt,
        branch,
        alpha,
        beta,
        povm,
        basis,
        gamma,
        gamma_perp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::{build_problem, check_unambiguous};
    use crate::hermlin::swap_operator;

    #[test]
    fn condition_threshold_at_unbalanced_prior() {
        let (ea, eb) = etas(0.9);
        assert!((ea - 0.82).abs() < 1e-15);
        let t = condition_star_threshold(ea, eb);
        assert!((t - 0.248757).abs() < 1e-6);
        assert!(condition_star(ea, eb, 0.24) && !condition_star(ea, eb, 0.26));
    }

    #[test]
    fn n_plus_minus_at_half() {
        let inst = TwoTwoInstance::new(0.5, 0.5).unwrap();
        let b = e_basis(&inst);
        assert!((b.n_plus - 1.25f64.sqrt()).abs() < 1e-15);
        assert!((b.n_minus - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn e_basis_orthonormal_and_symmetries() {
        for c in [0.05, 0.3, 0.5, 0.77, 0.99] {
            let inst = TwoTwoInstance::new(0.3, c).unwrap();
            let b = e_basis(&inst);
            let v = b.vectors();
            for i in 0..4 {
                for j in 0..4 {
                    let g = v[i].dotc(v[j]);
                    let target = if i == j { 1.0 } else { 0.0 };
                    assert!((g - c64(target, 0.0)).norm() < 1e-10, "c={c} ({i},{j})");
                }
            }
            // factor swap: e₁, e₂, e₃ symmetric, e₄ antisymmetric
            let swap = swap_operator(2);
            assert!((&swap * &b.e4 + &b.e4).norm() < 1e-12);
            for e in [&b.e1, &b.e2, &b.e3] {
                assert!((&swap * e - e).norm() < 1e-12);
            }
            // exchanging ψ₁ ↔ ψ₂: e₁, e₃ symmetric, e₂, e₄ antisymmetric
            let u = inst.exchange_unitary();
            let uu = u.kronecker(&u);
            assert!((&uu * &b.e1 - &b.e1).norm() < 1e-12);
            assert!((&uu * &b.e3 - &b.e3).norm() < 1e-12);
            assert!((&uu * &b.e2 + &b.e2).norm() < 1e-12);
            assert!((&uu * &b.e4 + &b.e4).norm() < 1e-12);
        }
    }

    #[test]
    fn gamma_components_match_closed_form() {
        let (g1, g3) = gamma_components(0.5);
        assert!((g1 - 0.8).abs() < 1e-15);
        assert!((g3 - 0.6).abs() < 1e-15);
        for c in [0.01, 0.2, 0.5, 0.9] {
            let inst = TwoTwoInstance::new(0.5, c).unwrap();
            let b = e_basis(&inst);
            let (gamma, perp) = gamma_vector(&inst, &b);
            let (g1, g3) = gamma_components(c);
            assert!((gamma.norm() - 1.0).abs() < 1e-12);
            assert!((b.e1.dotc(&gamma).re - g1).abs() < 1e-12);
            assert!((b.e3.dotc(&gamma).re - g3).abs() < 1e-12);
            assert!((g1 * g1 + g3 * g3 - 1.0).abs() < 1e-12);
            assert!(gamma.dotc(&perp).norm() < 1e-12);
            assert!(b.e2.dotc(&perp).norm() < 1e-12 && b.e4.dotc(&perp).norm() < 1e-12);
        }
        let (g1, g3) = gamma_components(1e-9);
        assert!(g1 < 1e-8 && (g3 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn condition_star_examples() {
        let (ea, eb) = etas(0.5);
        assert!((condition_star_threshold(ea, eb) - 1.0).abs() < 1e-15);
        assert!(condition_star(ea, eb, 0.999));
        let (ea, eb) = etas(0.9);
        // √(0.82/0.18)(1 − √(0.64/0.82)) evaluated directly
        let rhs = (0.82f64 / 0.18).sqrt() * (1.0 - (0.64f64 / 0.82).sqrt());
        assert!((condition_star_threshold(ea, eb) - rhs).abs() < 1e-14);
        assert!((rhs - 0.24876).abs() < 1e-5);
        assert!(!condition_star(ea, eb, 0.5));
        assert!(condition_star(ea, eb, 1e-6));
    }

    #[test]
    fn p_opt_examples() {
        let (p, branch) = p_opt(0.5, 0.3).unwrap();
        assert!((p - 0.7).abs() < 1e-15);
        assert_eq!(branch, Branch::ConditionHolds);
        let (p, branch) = p_opt(0.9, 0.5).unwrap();
        assert_eq!(branch, Branch::ConditionFails);
        assert!((p - 0.75 / 1.25 * (1.0 - 0.09 * 0.75)).abs() < 1e-15);
        assert!((p - 0.5595).abs() < 1e-12);
        let a = p_opt(0.3, 0.6).unwrap().0;
        let b = p_opt(0.7, 0.6).unwrap().0;
        assert!((a - b).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(p_opt(0.5, 1.0), Err(Error::DegenerateOverlap(_))));
        assert!(matches!(p_opt(0.5, 0.0), Err(Error::DegenerateOverlap(_))));
        assert!(matches!(p_opt(0.5, 1.2), Err(Error::Domain(_))));
        assert!(matches!(p_opt(1e-7, 0.5), Err(Error::Domain(_))));
        assert!(matches!(p_opt(1.0 - 1e-7, 0.5), Err(Error::Domain(_))));
        assert!(p_opt(f64::NAN, 0.5).is_err());
        assert!((p_opt_limit(0.5, 1.0).unwrap().0).abs() < 1e-15);
        assert!((p_opt_limit(0.7, 0.0).unwrap().0 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn jaeger_shimony_reference_cases() {
        // equal priors: 1 − overlap
        assert!((jaeger_shimony(0.5, 0.5, 0.4) - 0.6).abs() < 1e-15);
        // unbalanced, outside the two-element region: only the likelier state
        assert!((jaeger_shimony(0.9, 0.1, 0.5) - 0.9 * 0.75).abs() < 1e-15);
        assert!((jaeger_shimony(0.1, 0.9, 0.5) - 0.9 * 0.75).abs() < 1e-15);
    }

    #[test]
    fn assembled_povm_at_equal_priors() {
        let inst = TwoTwoInstance::new(0.5, 0.5).unwrap();
        let sol = assemble_povm(&inst).unwrap();
        let prob = build_problem(&inst.ensemble().to_mixed(), 2).unwrap();
        assert!((prob.success(sol.f_a(), sol.f_b()) - 0.5).abs() < 1e-12);
        assert!(sol.f_a().trace_with(&prob.rho_b).abs() < 1e-12);
        assert!(sol.f_b().trace_with(&prob.rho_a).abs() < 1e-12);
        let report = check_unambiguous(&sol.povm, &inst.ensemble().to_mixed(), 2).unwrap();
        assert!(report.passed);
        let pt = sol.f_a().partial_transpose(1).unwrap();
        assert!(pt.min_eigenvalue() < 0.0);
    }

    #[test]
    fn second_branch_drops_f_b_weight() {
        let inst = TwoTwoInstance::new(0.9, 0.5).unwrap();
        let sol = assemble_povm(&inst).unwrap();
        assert_eq!(sol.branch, Branch::ConditionFails);
        assert_eq!((sol.alpha, sol.beta), (1.0, 0.0));
        let e4 = HermitianOperator::outer(&sol.basis.e4, &[2, 2]);
        assert!(sol.f_b().max_distance(&e4) < 1e-15);
        let prob = build_problem(&inst.ensemble().to_mixed(), 2).unwrap();
        assert!((prob.success(sol.f_a(), sol.f_b()) - sol.p_opt).abs() < 1e-10);
    }

    #[test]
    fn higher_dimensional_embedding() {
        // same overlap, states living in C^3 with a complex frame
        let c: f64 = 0.4;
        let s = (1.0 - c * c).sqrt();
        let u = [
            c64(0.0, 1.0) / c64(2f64.sqrt(), 0.0),
            c64(1.0, 0.0) / c64(2f64.sqrt(), 0.0),
            c64(0.0, 0.0),
        ];
        let w = [c64(0.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0)];
        let psi1 = ComplexVector::from_vec(u.to_vec());
        let psi2 = ComplexVector::from_iterator(3, (0..3).map(|k| u[k] * c + w[k] * s));
        let inst = TwoTwoInstance::with_states(0.35, psi1, psi2).unwrap();
        let sol = assemble_povm(&inst).unwrap();
        let prob = build_problem(&inst.ensemble().to_mixed(), 2).unwrap();
        assert!((prob.success(sol.f_a(), sol.f_b()) - sol.p_opt).abs() < 1e-10);
        assert!(
            check_unambiguous(&sol.povm, &inst.ensemble().to_mixed(), 2)
                .unwrap()
                .passed
        );
    }
}
