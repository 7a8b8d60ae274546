//! Best separable (incoherent) two-out-of-two strategy and the gain of the
//! coherent optimum over it.
//!
//! The separable optimum measures each system with the optimal unambiguous
//! discrimination POVM `{F̃₁, F̃₂, F̃_?}` for `|ψ₁⟩, |ψ₂⟩` and combines the
//! outcomes: `F_a = F̃₁⊗F̃₁ + F̃₂⊗F̃₂`, `F_b = F̃₁⊗F̃₂ + F̃₂⊗F̃₁`. Measuring one
//! system leaves the other in the same average state whatever the outcome,
//! so adaptive schemes gain nothing and identical local POVMs suffice. The
//! success probability is the square of the local one.

use rayon::prelude::*;
use serde::Serialize;

use crate::ensemble::{trace_pattern, Outcome, Povm, UnambiguityReport};
use crate::error::Result;
use crate::hermlin::{ComplexVector, HermitianOperator};
use crate::solver2oo2::{self, validate_overlap, validate_prior, Branch, TwoTwoInstance};

/// Condition (∗∗): `cos ϑ < √((1 − q_max)/q_max)`.
pub fn condition_doublestar(q1: f64, cos_theta: f64) -> bool {
    let q_max = q1.max(1.0 - q1);
    cos_theta < ((1.0 - q_max) / q_max).sqrt()
}

fn p_sep_unchecked(q1: f64, cos_theta: f64) -> (f64, Branch) {
    let q_max = q1.max(1.0 - q1);
    if condition_doublestar(q1, cos_theta) {
        let local = 1.0 - 2.0 * (q1 * (1.0 - q1)).sqrt() * cos_theta;
        (local * local, Branch::ConditionHolds)
    } else {
        let sin_sq = 1.0 - cos_theta * cos_theta;
        (q_max * q_max * sin_sq * sin_sq, Branch::ConditionFails)
    }
}

/// Success probability of the best separable comparison.
pub fn p_sep(q1: f64, cos_theta: f64) -> Result<(f64, Branch)> {
    validate_prior(q1)?;
    validate_overlap(cos_theta)?;
    Ok(p_sep_unchecked(q1, cos_theta))
}

/// As [`p_sep`] but also accepting `cos ϑ ∈ {0, 1}`.
pub fn p_sep_limit(q1: f64, cos_theta: f64) -> Result<(f64, Branch)> {
    validate_prior(q1)?;
    if !cos_theta.is_finite() || !(0.0..=1.0).contains(&cos_theta) {
        return Err(crate::Error::Domain(format!(
            "cos(theta) = {cos_theta} outside [0, 1]"
        )));
    }
    Ok(p_sep_unchecked(q1, cos_theta))
}

/// `P_opt − P_sep`.
pub fn gain(q1: f64, cos_theta: f64) -> Result<f64> {
    Ok(solver2oo2::p_opt(q1, cos_theta)?.0 - p_sep(q1, cos_theta)?.0)
}

/// Optimal local unambiguous discrimination of `|ψ₁⟩`, `|ψ₂⟩`.
#[derive(Clone, Debug)]
pub struct LocalUdPovm {
    /// Identifies `ψ₁`; proportional to `|ψ̄₂⟩⟨ψ̄₂|`.
    pub f1: HermitianOperator,
    /// Identifies `ψ₂`; proportional to `|ψ̄₁⟩⟨ψ̄₁|`.
    pub f2: HermitianOperator,
    pub f_inconclusive: HermitianOperator,
    /// `⟨ψ₁|F̃₁|ψ₁⟩`.
    pub alpha: f64,
    /// `⟨ψ₂|F̃₂|ψ₂⟩`.
    pub beta: f64,
    /// Unit directions of `F̃₁` and `F̃₂`, kept for the ε-limit check.
    pub directions: (ComplexVector, ComplexVector),
    pub branch: Branch,
}

impl LocalUdPovm {
    /// `q₁ α + q₂ β`.
    pub fn success(&self, q1: f64) -> f64 {
        q1 * self.alpha + (1.0 - q1) * self.beta
    }
}

/// Local optimum. When (∗∗) fails the minority element gets weight exactly
/// zero.
pub fn local_ud_povm(instance: &TwoTwoInstance) -> LocalUdPovm {
    let q1 = instance.q1();
    let q2 = instance.q2();
    let c = instance.cos_theta();
    let sin_sq = instance.sin_sq();
    let branch = Branch::from_condition(condition_doublestar(q1, c));
    let (alpha, beta) = match branch {
        Branch::ConditionHolds => (1.0 - (q2 / q1).sqrt() * c, 1.0 - (q1 / q2).sqrt() * c),
        Branch::ConditionFails if q1 >= q2 => (sin_sq, 0.0),
        Branch::ConditionFails => (0.0, sin_sq),
    };
    let (bar1, bar2) = instance.complements();
    let d = [instance.dim()];
    // |⟨ψ₁|ψ̄₂⟩|² = |⟨ψ₂|ψ̄₁⟩|² = sin²ϑ
    let f1 = HermitianOperator::outer(&bar2, &d).scale(alpha / sin_sq);
    let f2 = HermitianOperator::outer(&bar1, &d).scale(beta / sin_sq);
    let f_inconclusive = HermitianOperator::identity(&d).sub(&f1).sub(&f2);
    LocalUdPovm {
        f1,
        f2,
        f_inconclusive,
        alpha,
        beta,
        directions: (bar2, bar1),
        branch,
    }
}

#[derive(Clone, Debug)]
pub struct SeparableSolution {
    pub p_sep: f64,
    pub branch: Branch,
    pub q_max: f64,
    pub local: LocalUdPovm,
    pub povm: Povm,
}

impl SeparableSolution {
    pub fn f_a(&self) -> &HermitianOperator {
        self.povm.get(Outcome::Same).expect("F_a present")
    }

    pub fn f_b(&self) -> &HermitianOperator {
        self.povm.get(Outcome::Different).expect("F_b present")
    }

    /// Whether one local weight vanished so that unambiguity only holds in
    /// the ε-limit.
    pub fn needs_epsilon_limit(&self) -> bool {
        self.local.alpha == 0.0 || self.local.beta == 0.0
    }
}

fn combine(
    f1: &HermitianOperator,
    f2: &HermitianOperator,
) -> (HermitianOperator, HermitianOperator) {
    let fa = f1.tensor(f1).add(&f2.tensor(f2));
    let fb = f1.tensor(f2).add(&f2.tensor(f1));
    (fa, fb)
}

/// Separable POVM on `C^d ⊗ C^d` assembled from the local optimum.
pub fn separable_solution(instance: &TwoTwoInstance) -> Result<SeparableSolution> {
    let (p_sep, branch) = p_sep(instance.q1(), instance.cos_theta())?;
    let local = local_ud_povm(instance);
    let (fa, fb) = combine(&local.f1, &local.f2);
    let povm = Povm::with_inconclusive(vec![(Outcome::Same, fa), (Outcome::Different, fb)])?;
    Ok(SeparableSolution {
        p_sep,
        branch,
        q_max: instance.q1().max(instance.q2()),
        local,
        povm,
    })
}

/// Unambiguity of the separable POVM. If a local weight is zero the pattern
/// is evaluated on the unit-weight directions of `F̃₁`, `F̃₂`: the trace
/// pattern of the ε-perturbed measurement depends only on those supports.
pub fn check_separable_unambiguous(
    instance: &TwoTwoInstance,
    solution: &SeparableSolution,
) -> Result<UnambiguityReport> {
    let ens = instance.ensemble().to_mixed();
    if !solution.needs_epsilon_limit() {
        return trace_pattern(solution.f_a(), solution.f_b(), &ens, 2);
    }
    let d = [instance.dim()];
    let (dir1, dir2) = &solution.local.directions;
    let (fa, fb) = combine(
        &HermitianOperator::outer(dir1, &d),
        &HermitianOperator::outer(dir2, &d),
    );
    let mut report = trace_pattern(&fa, &fb, &ens, 2)?;
    report.epsilon_limit = true;
    Ok(report)
}

/// One cell of the gain map.
#[derive(Clone, Copy, Debug, Serialize, PartialEq)]
pub struct GainCell {
    pub q1: f64,
    pub cos_theta: f64,
    pub p_opt: f64,
    pub p_sep: f64,
    pub gain: f64,
    pub star: bool,
    pub doublestar: bool,
}

/// Grid point `k` of `steps` over the open unit interval, inset by half a
/// step from both ends.
pub fn grid_point(k: usize, steps: usize) -> f64 {
    (k as f64 + 0.5) / steps as f64
}

/// Gain map over `steps_q × steps_c` cells, rows ordered by `q₁`.
pub fn gain_grid(steps_q: usize, steps_c: usize) -> Result<Vec<GainCell>> {
    if steps_q < 2 || steps_c < 2 {
        return Err(crate::Error::Domain(format!(
            "grid needs at least 2 steps per axis, got {steps_q}x{steps_c}"
        )));
    }
    let rows: Vec<Vec<GainCell>> = (0..steps_q)
        .into_par_iter()
        .map(|i| {
            let q1 = grid_point(i, steps_q);
            (0..steps_c)
                .map(|j| gain_cell(q1, grid_point(j, steps_c)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}

pub fn gain_cell(q1: f64, cos_theta: f64) -> Result<GainCell> {
    let (p_opt, star) = solver2oo2::p_opt(q1, cos_theta)?;
    let (p_sep, doublestar) = p_sep(q1, cos_theta)?;
    Ok(GainCell {
        q1,
        cos_theta,
        p_opt,
        p_sep,
        gain: p_opt - p_sep,
        star: star.holds(),
        doublestar: doublestar.holds(),
    })
}

/// Interior local maxima of `gain(q₁, ·)` sampled at `samples` points.
pub fn gain_row_maxima(q1: f64, samples: usize) -> Result<Vec<GainCell>> {
    let row = (0..samples)
        .map(|j| gain_cell(q1, grid_point(j, samples)))
        .collect::<Result<Vec<_>>>()?;
    Ok(row
        .windows(3)
        .filter(|w| w[1].gain > w[0].gain && w[1].gain >= w[2].gain)
        .map(|w| w[1])
        .collect())
}
