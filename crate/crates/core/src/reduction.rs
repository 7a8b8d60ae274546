//! Reduction of the induced discrimination problem to its non-trivial part.
//!
//! The first step restricts to `H = Supp ρ_a ⊕ Supp ρ_b`. The second removes
//! `K∩_a = Kern ρ_a ∩ Supp ρ_b` and `K∩_b = Kern ρ_b ∩ Supp ρ_a`, which are
//! discriminated perfectly, leaving `H′`. For two copies of pure states the
//! same spaces also follow from small linear systems in the overlap matrix,
//! which gives an independent route to their dimensions.

use crate::ensemble::DiscriminationProblem;
use crate::error::{Error, Result};
use crate::hermlin::{
    c64, eigh, null_space, subspace_intersection, subspace_sum, support, support_and_kernel,
    swap_operator, ComplexMatrix, HermitianOperator, Subspace, ORTH_TOL, RANK_TOL,
};

/// Supports below this normalisation are treated as absent from `H′`.
const ZETA_FLOOR: f64 = 1e-12;

/// The reduced problem on `H′`, in the coordinates of the `H′` basis.
#[derive(Clone, Debug)]
pub struct ReducedProblem {
    pub eta_a: f64,
    pub eta_b: f64,
    pub rho_a: HermitianOperator,
    pub rho_b: HermitianOperator,
}

#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub h: Subspace,
    pub kcap_a: Subspace,
    pub kcap_b: Subspace,
    pub h_prime: Subspace,
    pub zeta_a: f64,
    pub zeta_b: f64,
    /// `ζ = ζ_a η_a + ζ_b η_b`.
    pub zeta: f64,
    /// `None` when `H′` carries no weight of `ρ_a` or `ρ_b`: the problem is
    /// then solved perfectly on `K∩_a ⊕ K∩_b`.
    pub reduced: Option<ReducedProblem>,
}

impl ReductionResult {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.h_prime.dim(), self.kcap_a.dim(), self.kcap_b.dim())
    }
}

/// `H = Supp ρ_a + Supp ρ_b`, refusing supports that intersect.
pub fn first_reduction(prob: &DiscriminationProblem) -> Result<Subspace> {
    let (supp_a, _) = support_and_kernel(&prob.rho_a, RANK_TOL)?;
    let (supp_b, _) = support_and_kernel(&prob.rho_b, RANK_TOL)?;
    let overlap = subspace_intersection(&supp_a, &supp_b)?;
    if !overlap.is_zero() {
        return Err(Error::OverlappingSupports {
            overlap_dim: overlap.dim(),
        });
    }
    subspace_sum(&supp_a, &supp_b)
}

/// Splits off `K∩_a`, `K∩_b` and forms the reduced problem on `H′`.
pub fn second_reduction(prob: &DiscriminationProblem, h: &Subspace) -> Result<ReductionResult> {
    let (supp_a, kern_a) = support_and_kernel(&prob.rho_a, RANK_TOL)?;
    let (supp_b, kern_b) = support_and_kernel(&prob.rho_b, RANK_TOL)?;
    let kcap_a = subspace_intersection(&kern_a, &supp_b)?;
    let kcap_b = subspace_intersection(&kern_b, &supp_a)?;
    let perfect = subspace_sum(&kcap_a, &kcap_b)?;
    let h_prime = perfect.complement_in(h)?;

    let p = h_prime.projector();
    let zeta_of = |rho: &HermitianOperator| -> f64 {
        let n = rho.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (p[(i, j)] * rho.matrix()[(j, i)]).re)
            .sum()
    };
    let zeta_a = zeta_of(&prob.rho_a);
    let zeta_b = zeta_of(&prob.rho_b);
    let zeta = zeta_a * prob.eta_a + zeta_b * prob.eta_b;

    let reduced = if h_prime.dim() > 0 && zeta_a > ZETA_FLOOR && zeta_b > ZETA_FLOOR {
        let eta_a = prob.eta_a * zeta_a / zeta;
        Some(ReducedProblem {
            eta_a,
            eta_b: 1.0 - eta_a,
            rho_a: prob.rho_a.compress(&h_prime).scale(1.0 / zeta_a),
            rho_b: prob.rho_b.compress(&h_prime).scale(1.0 / zeta_b),
        })
    } else {
        None
    };

    Ok(ReductionResult {
        h: h.clone(),
        kcap_a,
        kcap_b,
        h_prime,
        zeta_a,
        zeta_b,
        zeta,
        reduced,
    })
}

/// Both reduction steps.
pub fn reduce(prob: &DiscriminationProblem) -> Result<ReductionResult> {
    let h = first_reduction(prob)?;
    second_reduction(prob, &h)
}

/// Success probability of the full problem from the reduced optimum:
/// `1 − (1 − p′) ζ`.
pub fn lift_success(p_prime: f64, zeta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p_prime) {
        return Err(Error::Domain(format!(
            "reduced success {p_prime} outside [0, 1]"
        )));
    }
    if !(zeta > 0.0 && zeta <= 1.0) {
        return Err(Error::Domain(format!("zeta {zeta} outside (0, 1]")));
    }
    let p = 1.0 - (1.0 - p_prime) * zeta;
    debug_assert!((0.0..=1.0).contains(&p));
    Ok(p)
}

/// Null-space basis of a coefficient system, one column per solution.
#[derive(Clone, Debug)]
pub struct CoefficientBasis {
    /// Index label of each unknown: `(i, j)` with `i > j` for the symmetric
    /// pair coefficients `A_ij`, `(k, k)` for the diagonal `B_k`.
    pub unknowns: Vec<(usize, usize)>,
    pub solutions: ComplexMatrix,
}

impl CoefficientBasis {
    pub fn dim(&self) -> usize {
        self.solutions.ncols()
    }
}

fn check_gram(gram: &ComplexMatrix) -> Result<()> {
    let op = HermitianOperator::from_matrix(gram.clone())?;
    let eig = eigh(&op);
    let top = eig.values.last().copied().unwrap_or(0.0);
    let low = eig.values.first().copied().unwrap_or(0.0);
    if top <= 0.0 || low <= RANK_TOL * top {
        return Err(Error::SingularGram {
            min_eigenvalue: low,
        });
    }
    Ok(())
}

/// Lower-triangular `A` with `[C A Cᵀ]_kk = 0` for all `k`: the vectors
/// `Σ_{i>j} A_ij (|ψ_iψ_j⟩ + |ψ_jψ_i⟩)` spanning `H⁺ ∩ Kern ρ_a`.
pub fn kcap_a_symmetric(gram: &ComplexMatrix) -> Result<CoefficientBasis> {
    check_gram(gram)?;
    let n = gram.nrows();
    let unknowns: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    let system = ComplexMatrix::from_fn(n, unknowns.len(), |k, u| {
        let (i, j) = unknowns[u];
        gram[(k, i)] * gram[(k, j)]
    });
    Ok(CoefficientBasis {
        solutions: null_space(&system),
        unknowns,
    })
}

/// Diagonal `B` with `[C B Cᵀ]_ij = 0` for all `i > j`: the vectors
/// `Σ_k B_k |ψ_kψ_k⟩` spanning `K∩_b`.
pub fn kcap_b_diagonal(gram: &ComplexMatrix) -> Result<CoefficientBasis> {
    check_gram(gram)?;
    let n = gram.nrows();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    let system = ComplexMatrix::from_fn(pairs.len(), n, |r, k| {
        let (i, j) = pairs[r];
        gram[(i, k)] * gram[(j, k)]
    });
    let solutions = if pairs.is_empty() {
        ComplexMatrix::identity(n, n)
    } else {
        null_space(&system)
    };
    Ok(CoefficientBasis {
        solutions,
        unknowns: (0..n).map(|k| (k, k)).collect(),
    })
}

/// Upper bound on `dim H′` for two copies drawn from `N` pure states.
pub fn h_prime_upper_bound(n: usize) -> usize {
    if n == 2 {
        2
    } else {
        2 * n
    }
}

/// Bounds `(lower, upper)` on `dim(H⁺ ∩ K∩_a)`.
pub fn kcap_a_symmetric_bounds(n: usize) -> (usize, usize) {
    (n.saturating_sub(3) * n / 2, n * (n - 1) / 2)
}

/// Bounds `(lower, upper)` on `dim K∩_b`.
pub fn kcap_b_bounds(n: usize) -> (usize, usize) {
    let lower = if n < 3 { n * (3 - n) / 2 } else { 0 };
    (lower, n)
}

/// Swap-symmetric and swap-antisymmetric parts of a subspace of
/// `C^d ⊗ C^d`.
#[derive(Clone, Debug)]
pub struct SymmetrySplit {
    pub h_plus: Subspace,
    pub h_minus: Subspace,
}

pub fn symmetry_split(h: &Subspace, local_dim: usize) -> Result<SymmetrySplit> {
    let n = local_dim * local_dim;
    if h.ambient_dim() != n {
        return Err(Error::TensorStructure(format!(
            "ambient dimension {} is not {local_dim}²",
            h.ambient_dim()
        )));
    }
    let swap = swap_operator(local_dim);
    let id = ComplexMatrix::identity(n, n);
    let half = c64(0.5, 0.0);
    let sym = support(
        &HermitianOperator::from_matrix((&id + &swap) * half)?,
        RANK_TOL,
    )?;
    let anti = sym.complement();
    let h_plus = subspace_intersection(h, &sym)?;
    let h_minus = subspace_intersection(h, &anti)?;
    if h_plus.dim() + h_minus.dim() != h.dim() {
        return Err(Error::TensorStructure(format!(
            "subspace of dimension {} is not invariant under the factor swap ({} + {})",
            h.dim(),
            h_plus.dim(),
            h_minus.dim()
        )));
    }
    debug_assert!(h_plus.overlap_with(&h_minus) <= ORTH_TOL);
    Ok(SymmetrySplit { h_plus, h_minus })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::{build_problem, PureEnsemble};
    use crate::hermlin::ComplexVector;

    fn equal_overlap_gram(n: usize, c: f64) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, n, |i, j| c64(if i == j { 1.0 } else { c }, 0.0))
    }

    fn qubit_pair(c: f64, q1: f64) -> PureEnsemble {
        let s = (1.0 - c * c).sqrt();
        PureEnsemble::new(
            vec![
                ComplexVector::from_vec(vec![c64(1.0, 0.0), c64(0.0, 0.0)]),
                ComplexVector::from_vec(vec![c64(c, 0.0), c64(s, 0.0)]),
            ],
            vec![q1, 1.0 - q1],
        )
        .unwrap()
    }

    #[test]
    fn lift_success_examples() {
        assert_eq!(lift_success(1.0, 0.3).unwrap(), 1.0);
        assert_eq!(lift_success(0.0, 1.0).unwrap(), 0.0);
        assert!((lift_success(0.5, 0.625).unwrap() - 0.6875).abs() < 1e-15);
        assert!(lift_success(1.5, 0.5).is_err());
        assert!(lift_success(0.5, 0.0).is_err());
        assert!(lift_success(0.5, 1.5).is_err());
    }

    #[test]
    fn two_state_coefficient_systems() {
        // one unknown A_21, constraint C_k2 C_k1 = c ≠ 0 for each k
        for c in [0.1, 0.5, 0.9] {
            let g = equal_overlap_gram(2, c);
            assert_eq!(kcap_a_symmetric(&g).unwrap().dim(), 0);
            assert_eq!(kcap_b_diagonal(&g).unwrap().dim(), 1);
        }
    }

    #[test]
    fn three_state_coefficient_systems() {
        let g = equal_overlap_gram(3, 0.4);
        assert_eq!(kcap_a_symmetric(&g).unwrap().dim(), 0);
        assert_eq!(kcap_b_diagonal(&g).unwrap().dim(), 0);
        let orthogonal = equal_overlap_gram(3, 0.0);
        assert_eq!(kcap_b_diagonal(&orthogonal).unwrap().dim(), 3);
    }

    #[test]
    fn four_state_kcap_a_within_bounds() {
        let g = equal_overlap_gram(4, 0.3);
        let basis = kcap_a_symmetric(&g).unwrap();
        let (lo, hi) = kcap_a_symmetric_bounds(4);
        assert!((lo..=hi).contains(&basis.dim()));
        assert_eq!(basis.dim(), 2);
    }

    #[test]
    fn singular_gram_rejected() {
        let g = equal_overlap_gram(2, 1.0);
        assert!(matches!(
            kcap_a_symmetric(&g),
            Err(Error::SingularGram { .. })
        ));
        assert!(kcap_b_diagonal(&g).is_err());
    }

    #[test]
    fn two_of_two_reduction() {
        let ens = qubit_pair(0.5, 0.5).to_mixed();
        let prob = build_problem(&ens, 2).unwrap();
        let h = first_reduction(&prob).unwrap();
        assert_eq!(h.dim(), 4);
        let r = second_reduction(&prob, &h).unwrap();
        assert_eq!(r.dims(), (2, 1, 1));
        let n_plus_sq = 1.25;
        assert!((r.zeta_a - 0.5 * n_plus_sq).abs() < 1e-12);
        assert!((r.zeta_b - 0.5 * n_plus_sq).abs() < 1e-12);
        let red = r.reduced.unwrap();
        assert!((red.eta_a - prob.eta_a).abs() < 1e-12);
        assert!((red.eta_b - prob.eta_b).abs() < 1e-12);
    }

    #[test]
    fn orthogonal_pair_has_trivial_h_prime() {
        let ens = qubit_pair(0.0, 0.5).to_mixed();
        let prob = build_problem(&ens, 2).unwrap();
        let h = first_reduction(&prob).unwrap();
        assert_eq!(h.dim(), 4);
        let r = second_reduction(&prob, &h).unwrap();
        assert_eq!(r.h_prime.dim(), 0);
        assert!(r.reduced.is_none());
    }

    #[test]
    fn symmetry_split_full_qubit_space() {
        let split = symmetry_split(&Subspace::full(4), 2).unwrap();
        assert_eq!((split.h_plus.dim(), split.h_minus.dim()), (3, 1));
        assert!(symmetry_split(&Subspace::full(5), 2).is_err());
    }

    #[test]
    fn symmetry_split_rejects_non_invariant() {
        // span(|01⟩) is mapped to span(|10⟩) by the swap
        let v = ComplexVector::from_vec(vec![
            c64(0.0, 0.0),
            c64(1.0, 0.0),
            c64(0.0, 0.0),
            c64(0.0, 0.0),
        ]);
        let h = Subspace::span(4, &[v]);
        assert!(matches!(
            symmetry_split(&h, 2),
            Err(Error::TensorStructure(_))
        ));
    }
}
