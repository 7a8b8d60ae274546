//! Two-out-of-three comparison for three equiprobable pure states with equal
//! pairwise overlap `cos ϑ`.
//!
//! The reduced space is the symmetric part `H⁺` (dimension six) and the
//! induced problem is a genuine mixed-state discrimination. A closed-form
//! optimum is only available for `cos ϑ` up to [`region_boundary`]; outside
//! that region the report carries the reduction data and no success value.

use serde::Serialize;

use crate::ensemble::{build_problem, PureEnsemble};
use crate::error::{Error, Result};
use crate::hermlin::{c64, eigh, ComplexMatrix, ComplexVector, HermitianOperator, ISECT_TOL};
use crate::reduction::{reduce, symmetry_split, ReductionResult};

/// Largest `cos ϑ` with a closed-form optimum: `(√2 − ⁴√2)/(2 − √2)`.
pub fn region_boundary() -> f64 {
    let r2 = std::f64::consts::SQRT_2;
    (r2 - r2.sqrt()) / (2.0 - r2)
}

/// `1 − (√8/9)(4 cos ϑ − cos²ϑ)`.
pub fn closed_form(cos_theta: f64) -> f64 {
    1.0 - 8f64.sqrt() / 9.0 * (4.0 * cos_theta - cos_theta * cos_theta)
}

/// Three unit vectors in `C³` with pairwise overlap `cos ϑ` and equal priors.
#[derive(Clone, Debug)]
pub struct ThreeInstance {
    cos_theta: f64,
    ensemble: PureEnsemble,
}

impl ThreeInstance {
    pub fn new(cos_theta: f64) -> Result<Self> {
        if !cos_theta.is_finite() || cos_theta <= 0.0 || cos_theta >= 1.0 {
            return Err(Error::Domain(format!(
                "cos(theta) = {cos_theta} outside (0, 1)"
            )));
        }
        let states = equal_overlap_states(3, cos_theta)?;
        let ensemble = PureEnsemble::uniform(states)?;
        Ok(Self {
            cos_theta,
            ensemble,
        })
    }

    pub fn cos_theta(&self) -> f64 {
        self.cos_theta
    }

    pub fn ensemble(&self) -> &PureEnsemble {
        &self.ensemble
    }
}

/// `n` real unit vectors in `Rⁿ` with all pairwise overlaps equal to
/// `cos_theta`: the columns of `G^{1/2}` for the Gram matrix
/// `G = (1 − c) 1 + c J`. Requires `−1/(n−1) < c < 1`.
pub fn equal_overlap_states(n: usize, cos_theta: f64) -> Result<Vec<ComplexVector>> {
    let gram = ComplexMatrix::from_fn(n, n, |i, j| c64(if i == j { 1.0 } else { cos_theta }, 0.0));
    let eig = eigh(&HermitianOperator::from_matrix(gram)?);
    if eig.values[0] <= 0.0 {
        return Err(Error::SingularGram {
            min_eigenvalue: eig.values[0],
        });
    }
    let mut root = ComplexMatrix::zeros(n, n);
    for k in 0..n {
        let v = eig.vectors.column(k);
        root += (v * v.adjoint()) * c64(eig.values[k].sqrt(), 0.0);
    }
    Ok((0..n)
        .map(|j| {
            let col: ComplexVector = root.column(j).into_owned();
            let norm = col.norm();
            col / c64(norm, 0.0)
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeReport {
    pub cos_theta: f64,
    pub dim_h_prime: usize,
    pub dim_kcap_a: usize,
    pub dim_kcap_b: usize,
    pub region_ok: bool,
    pub p_opt: Option<f64>,
    pub boundary: f64,
}

/// Reduction for the equal-overlap triple, checked against the known
/// structure: `dim H′ = 6`, `K∩_a = H⁻` (dimension three), `K∩_b = {0}`,
/// `H′ = H⁺`.
pub fn reduce3(instance: &ThreeInstance) -> Result<ReductionResult> {
    let prob = build_problem(&instance.ensemble.to_mixed(), 2)?;
    let r = reduce(&prob)?;
    let split = symmetry_split(&r.h, 3)?;
    let check = |ok: bool, what: &str, got: usize| {
        if ok {
            Ok(())
        } else {
            Err(Error::ReductionCheck(format!(
                "{what} (got {got}) at cos(theta) = {}",
                instance.cos_theta
            )))
        }
    };
    check(r.h.dim() == 9, "dim H must be 9", r.h.dim())?;
    check(r.h_prime.dim() == 6, "dim H' must be 6", r.h_prime.dim())?;
    check(r.kcap_a.dim() == 3, "dim K_a must be 3", r.kcap_a.dim())?;
    check(r.kcap_b.dim() == 0, "K_b must be trivial", r.kcap_b.dim())?;
    check(
        split.h_minus.dim() == 3,
        "dim H- must be 3",
        split.h_minus.dim(),
    )?;
    check(
        r.kcap_a.contains(&split.h_minus) && split.h_minus.contains(&r.kcap_a),
        "K_a must equal H-",
        r.kcap_a.dim(),
    )?;
    check(
        split.h_plus.containment_residual(&r.h_prime) <= ISECT_TOL
            && r.h_prime.containment_residual(&split.h_plus) <= ISECT_TOL,
        "H' must equal H+",
        r.h_prime.dim(),
    )?;
    Ok(r)
}

/// Report for an equal-overlap triple.
pub fn p_opt3(cos_theta: f64) -> Result<ThreeReport> {
    let instance = ThreeInstance::new(cos_theta)?;
    let r = reduce3(&instance)?;
    let boundary = region_boundary();
    let region_ok = cos_theta <= boundary;
    Ok(ThreeReport {
        cos_theta,
        dim_h_prime: r.h_prime.dim(),
        dim_kcap_a: r.kcap_a.dim(),
        dim_kcap_b: r.kcap_b.dim(),
        region_ok,
        p_opt: region_ok.then(|| closed_form(cos_theta)),
        boundary,
    })
}

/// Heuristic separable value: the square of the best local unambiguous
/// discrimination success found by a search over the weights of
/// `F_i = w_i |φ_i⟩⟨φ_i|` (`φ_i` the dual vectors), subject to
/// `1 − Σ F_i ⪰ 0`. Directions on a coarse grid are each scaled to the
/// feasibility boundary. Not an optimum claim.
pub fn separable_heuristic(cos_theta: f64) -> Result<f64> {
    let instance = ThreeInstance::new(cos_theta)?;
    let states = instance.ensemble.states();
    let gram = instance.ensemble.gram();
    let inv = gram.clone().try_inverse().ok_or(Error::SingularGram {
        min_eigenvalue: 0.0,
    })?;
    // dual vectors: ⟨φ_i|ψ_j⟩ ∝ δ_ij
    let duals: Vec<ComplexVector> = (0..3)
        .map(|i| {
            let mut v = ComplexVector::zeros(3);
            for (j, s) in states.iter().enumerate() {
                v += s * inv[(j, i)];
            }
            let n = v.norm();
            v / c64(n, 0.0)
        })
        .collect();
    let hits: Vec<f64> = (0..3)
        .map(|i| duals[i].dotc(&states[i]).norm_sqr())
        .collect();
    let projectors: Vec<HermitianOperator> = duals
        .iter()
        .map(|v| HermitianOperator::outer(v, &[3]))
        .collect();
    let feasible = |w: [f64; 3]| {
        let mut rest = HermitianOperator::identity(&[3]);
        for (p, &wi) in projectors.iter().zip(&w) {
            rest = rest.sub(&p.scale(wi));
        }
        rest.min_eigenvalue() >= -1e-12
    };
    let value = |w: [f64; 3]| (0..3).map(|i| w[i] * hits[i]).sum::<f64>() / 3.0;

    // largest feasible multiple of each grid direction
    const STEPS: usize = 10;
    let mut local = 0.0f64;
    for a in 0..=STEPS {
        for b in 0..=STEPS {
            for c in 0..=STEPS {
                let w = [a, b, c].map(|k| k as f64 / STEPS as f64);
                if a.max(b).max(c) != STEPS {
                    continue;
                }
                let (mut lo, mut hi) = (0.0, 1.0);
                for _ in 0..50 {
                    let mid = 0.5 * (lo + hi);
                    if feasible(w.map(|x| x * mid)) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                local = local.max(value(w.map(|x| x * lo)));
            }
        }
    }
    Ok(local * local)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_constant() {
        let b = region_boundary();
        let direct = (2f64.sqrt() - 2f64.powf(0.25)) / (2.0 - 2f64.sqrt());
        assert!((b - direct).abs() < 1e-15);
        assert!((b - 0.38411).abs() < 1e-5);
        assert!((b.acos() / std::f64::consts::PI - 0.3745).abs() < 1e-4);
        assert!(b < 0.5);
    }

    #[test]
    fn closed_form_values() {
        assert!((closed_form(1e-12) - 1.0).abs() < 1e-10);
        assert!((closed_form(0.2) - (1.0 - 8f64.sqrt() / 9.0 * 0.76)).abs() < 1e-15);
        assert!((closed_form(0.2) - 0.76115).abs() < 1e-5);
    }

    #[test]
    fn equal_overlap_construction() {
        for c in [0.1, 0.5, 0.9] {
            let s = equal_overlap_states(4, c).unwrap();
            for i in 0..4 {
                assert!((s[i].norm() - 1.0).abs() < 1e-12);
                for j in 0..i {
                    assert!((s[i].dotc(&s[j]) - c64(c, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn report_in_and_out_of_region() {
        let r = p_opt3(0.2).unwrap();
        assert!(r.region_ok);
        assert_eq!((r.dim_h_prime, r.dim_kcap_a, r.dim_kcap_b), (6, 3, 0));
        assert!((r.p_opt.unwrap() - closed_form(0.2)).abs() < 1e-15);
        let r = p_opt3(0.5).unwrap();
        assert!(!r.region_ok);
        assert!(r.p_opt.is_none());
        assert_eq!((r.dim_h_prime, r.dim_kcap_a, r.dim_kcap_b), (6, 3, 0));
        assert!(p_opt3(0.0).is_err());
        assert!(p_opt3(1.0).is_err());
    }

    #[test]
    fn reduced_states_live_in_symmetric_part() {
        let inst = ThreeInstance::new(0.3).unwrap();
        let r = reduce3(&inst).unwrap();
        let split = symmetry_split(&r.h, 3).unwrap();
        let prob = build_problem(&inst.ensemble().to_mixed(), 2).unwrap();
        let anti = HermitianOperator::projector(&split.h_minus, &[3, 3]);
        assert!(anti.trace_with(&prob.rho_a).abs() < 1e-12);
        let red = r.reduced.unwrap();
        assert!((red.rho_a.trace() - 1.0).abs() < 1e-12);
        assert!((red.rho_b.trace() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn heuristic_is_local_squared() {
        // for equiprobable equal-overlap states the local optimum is 1 − c
        let h = separable_heuristic(0.2).unwrap();
        assert!((h - 0.64).abs() < 1e-9);
        assert!(closed_form(0.2) >= h);
    }
}
