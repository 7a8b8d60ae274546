//! Ensembles, POVMs and the discrimination problem induced by a comparison
//! task, plus the support-containment feasibility test for mixed ensembles.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hermlin::{
    c64, max_abs, subspace_sum, support, support_and_kernel, ComplexMatrix, ComplexVector,
    HermitianOperator, Subspace, ISECT_TOL, ORTH_TOL, RANK_TOL,
};
use crate::rng::Xoshiro256StarStar;

/// Tolerance on `Σ q_i = 1`.
pub const PRIOR_SUM_TOL: f64 = 1e-12;
/// Tolerance on unit trace of mixed states.
pub const TRACE_TOL: f64 = 1e-10;
/// Positivity and completeness tolerance for POVM elements.
pub const POVM_TOL: f64 = 1e-10;
/// Traces at or below this count as exact zeros in unambiguity checks.
pub const ZERO_THRESHOLD: f64 = 1e-9;
/// Traces at or above this count as strictly positive.
pub const POSITIVE_THRESHOLD: f64 = 1e-9;
/// Minimal projected norm for a witness vector candidate.
pub const WITNESS_NORM_TOL: f64 = 1e-8;

fn validate_priors(priors: &[f64]) -> Result<()> {
    if priors.len() < 2 {
        return Err(Error::InvalidEnsemble(format!(
            "need at least two states, got {}",
            priors.len()
        )));
    }
    for (i, &q) in priors.iter().enumerate() {
        if !(q.is_finite() && q > 0.0) {
            return Err(Error::InvalidEnsemble(format!(
                "priors[{i}] = {q} must be strictly positive"
            )));
        }
    }
    let total: f64 = priors.iter().sum();
    if (total - 1.0).abs() > PRIOR_SUM_TOL {
        return Err(Error::InvalidEnsemble(format!(
            "priors sum to {total}, expected 1"
        )));
    }
    Ok(())
}

/// Pure states `|ψ_i⟩` with priors `q_i`.
#[derive(Clone, Debug)]
pub struct PureEnsemble {
    dim: usize,
    states: Vec<ComplexVector>,
    priors: Vec<f64>,
}

impl PureEnsemble {
    pub fn new(states: Vec<ComplexVector>, priors: Vec<f64>) -> Result<Self> {
        if states.len() != priors.len() {
            return Err(Error::InvalidEnsemble(format!(
                "{} states but {} priors",
                states.len(),
                priors.len()
            )));
        }
        validate_priors(&priors)?;
        let dim = states[0].len();
        for (i, s) in states.iter().enumerate() {
            if s.len() != dim {
                return Err(Error::InvalidEnsemble(format!(
                    "states[{i}] has dimension {}, expected {dim}",
                    s.len()
                )));
            }
            if s.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::InvalidEnsemble(format!("states[{i}] is not finite")));
            }
            let norm = s.norm();
            if (norm - 1.0).abs() > ORTH_TOL {
                return Err(Error::InvalidEnsemble(format!(
                    "states[{i}] has norm {norm}, expected 1"
                )));
            }
        }
        let ens = Self {
            dim,
            states,
            priors,
        };
        // identical rays are the same state
        check_distinct(&ens.to_mixed_unchecked().states)?;
        Ok(ens)
    }

    /// Uniform priors.
    pub fn uniform(states: Vec<ComplexVector>) -> Result<Self> {
        let n = states.len();
        Self::new(states, vec![1.0 / n as f64; n])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[ComplexVector] {
        &self.states
    }

    pub fn priors(&self) -> &[f64] {
        &self.priors
    }

    /// Overlap matrix `C_ij = ⟨ψ_i|ψ_j⟩`.
    pub fn gram(&self) -> ComplexMatrix {
        let n = self.len();
        ComplexMatrix::from_fn(n, n, |i, j| self.states[i].dotc(&self.states[j]))
    }

    fn to_mixed_unchecked(&self) -> MixedEnsemble {
        MixedEnsemble {
            dim: self.dim,
            states: self
                .states
                .iter()
                .map(|s| HermitianOperator::outer(s, &[self.dim]))
                .collect(),
            priors: self.priors.clone(),
        }
    }

    pub fn to_mixed(&self) -> MixedEnsemble {
        self.to_mixed_unchecked()
    }
}

impl From<&PureEnsemble> for MixedEnsemble {
    fn from(p: &PureEnsemble) -> Self {
        p.to_mixed()
    }
}

fn check_distinct(states: &[HermitianOperator]) -> Result<()> {
    for i in 0..states.len() {
        for j in 0..i {
            if states[i].max_distance(&states[j]) <= TRACE_TOL {
                return Err(Error::InvalidEnsemble(format!(
                    "states[{j}] and states[{i}] are identical"
                )));
            }
        }
    }
    Ok(())
}

/// Density matrices `π_i` with priors `q_i`.
#[derive(Clone, Debug)]
pub struct MixedEnsemble {
    dim: usize,
    states: Vec<HermitianOperator>,
    priors: Vec<f64>,
}

impl MixedEnsemble {
    pub fn new(states: Vec<HermitianOperator>, priors: Vec<f64>) -> Result<Self> {
        if states.len() != priors.len() {
            return Err(Error::InvalidEnsemble(format!(
                "{} states but {} priors",
                states.len(),
                priors.len()
            )));
        }
        validate_priors(&priors)?;
        let dim = states[0].dim();
        for (i, s) in states.iter().enumerate() {
            if s.dim() != dim {
                return Err(Error::InvalidEnsemble(format!(
                    "states[{i}] has dimension {}, expected {dim}",
                    s.dim()
                )));
            }
            let tr = s.trace();
            if (tr - 1.0).abs() > TRACE_TOL {
                return Err(Error::InvalidEnsemble(format!(
                    "states[{i}] has trace {tr}, expected 1"
                )));
            }
            let lowest = s.min_eigenvalue();
            if lowest < -RANK_TOL {
                return Err(Error::InvalidEnsemble(format!(
                    "states[{i}] is not positive semidefinite (min eigenvalue {lowest:.3e})"
                )));
            }
        }
        check_distinct(&states)?;
        let states = states
            .into_iter()
            .map(|s| s.with_factor_dims(vec![dim]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dim,
            states,
            priors,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[HermitianOperator] {
        &self.states
    }

    pub fn priors(&self) -> &[f64] {
        &self.priors
    }

    /// `Σ q_i π_i`.
    pub fn average(&self) -> HermitianOperator {
        self.states
            .iter()
            .zip(&self.priors)
            .fold(HermitianOperator::zeros(&[self.dim]), |acc, (s, &q)| {
                acc.add(&s.scale(q))
            })
    }

    /// All `N^copies` index tuples in lexicographic order.
    pub fn index_tuples(&self, copies: usize) -> Vec<Vec<usize>> {
        let n = self.len();
        let total = n.pow(copies as u32);
        (0..total)
            .map(|mut k| {
                let mut tuple = vec![0; copies];
                for slot in tuple.iter_mut().rev() {
                    *slot = k % n;
                    k /= n;
                }
                tuple
            })
            .collect()
    }

    /// `π_{i1} ⊗ … ⊗ π_{iC}` and its prior `q_{i1}⋯q_{iC}`.
    pub fn product_state(&self, indices: &[usize]) -> (f64, HermitianOperator) {
        let mut prior = self.priors[indices[0]];
        let mut state = self.states[indices[0]].clone();
        for &i in &indices[1..] {
            prior *= self.priors[i];
            state = state.tensor(&self.states[i]);
        }
        (prior, state)
    }
}

/// Two-hypothesis discrimination problem `(ρ_a, η_a; ρ_b, η_b)` induced by
/// comparing `copies` systems.
#[derive(Clone, Debug)]
pub struct DiscriminationProblem {
    pub rho_a: HermitianOperator,
    pub rho_b: HermitianOperator,
    pub eta_a: f64,
    pub eta_b: f64,
    pub copies: usize,
    pub local_dim: usize,
}

impl DiscriminationProblem {
    pub fn dim(&self) -> usize {
        self.rho_a.dim()
    }

    /// `η_a ρ_a + η_b ρ_b`.
    pub fn mixture(&self) -> HermitianOperator {
        self.rho_a
            .scale(self.eta_a)
            .add(&self.rho_b.scale(self.eta_b))
    }

    /// `η_a tr(F_a ρ_a) + η_b tr(F_b ρ_b)`.
    pub fn success(&self, fa: &HermitianOperator, fb: &HermitianOperator) -> f64 {
        self.eta_a * fa.trace_with(&self.rho_a) + self.eta_b * fb.trace_with(&self.rho_b)
    }
}

/// Builds `ρ_a = Σ_i (q_i π_i)^{⊗C} / η_a` and
/// `ρ_b = ((Σ_i q_i π_i)^{⊗C} − η_a ρ_a) / η_b` with `η_a = Σ_i q_i^C`.
pub fn build_problem(ens: &MixedEnsemble, copies: usize) -> Result<DiscriminationProblem> {
    if copies < 2 {
        return Err(Error::Domain(format!(
            "copies must be at least 2, got {copies}"
        )));
    }
    let factor_dims = vec![ens.dim(); copies];
    let eta_a: f64 = ens.priors().iter().map(|q| q.powi(copies as i32)).sum();
    let eta_b = 1.0 - eta_a;
    let mut same = HermitianOperator::zeros(&factor_dims);
    for (state, &q) in ens.states().iter().zip(ens.priors()) {
        same = same.add(&state.scale(q).tensor_power(copies));
    }
    let total = ens.average().tensor_power(copies);
    let rho_a = same.scale(1.0 / eta_a);
    let rho_b = total.sub(&same).scale(1.0 / eta_b);
    Ok(DiscriminationProblem {
        rho_a,
        rho_b,
        eta_a,
        eta_b,
        copies,
        local_dim: ens.dim(),
    })
}

/// Outcome label of a POVM element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Outcome {
    /// All systems carry the same state (`F_a`).
    Same,
    /// At least one system differs (`F_b`).
    Different,
    /// The single system is in state `i` (witness POVMs).
    State(usize),
    /// No conclusion (`F_?`).
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Same => write!(f, "F_a"),
            Outcome::Different => write!(f, "F_b"),
            Outcome::State(i) => write!(f, "F_{}", i + 1),
            Outcome::Inconclusive => write!(f, "F_?"),
        }
    }
}

/// Ordered, labelled positive operators summing to the identity.
#[derive(Clone, Debug)]
pub struct Povm {
    elements: Vec<(Outcome, HermitianOperator)>,
}

impl Povm {
    /// Validates positivity and completeness within [`POVM_TOL`].
    pub fn new(elements: Vec<(Outcome, HermitianOperator)>) -> Result<Self> {
        let povm = Self::new_unchecked(elements)?;
        let lowest = povm.min_eigenvalue();
        if lowest < -POVM_TOL {
            return Err(Error::InvalidPovm(format!(
                "element has negative eigenvalue {lowest:.3e}"
            )));
        }
        let defect = povm.completeness_defect();
        if defect > POVM_TOL {
            return Err(Error::InvalidPovm(format!(
                "elements do not sum to identity (defect {defect:.3e})"
            )));
        }
        Ok(povm)
    }

    /// Only checks that labels are unique and dimensions agree.
    pub fn new_unchecked(elements: Vec<(Outcome, HermitianOperator)>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidPovm("no elements".into()));
        }
        let dim = elements[0].1.dim();
        for (k, (label, op)) in elements.iter().enumerate() {
            if op.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: op.dim(),
                });
            }
            if elements[..k].iter().any(|(l, _)| l == label) {
                return Err(Error::InvalidPovm(format!("duplicate label {label}")));
            }
        }
        Ok(Self { elements })
    }

    /// Completes `elements` with `F_? = 1 − Σ F` and validates.
    pub fn with_inconclusive(elements: Vec<(Outcome, HermitianOperator)>) -> Result<Self> {
        let first = elements
            .first()
            .ok_or_else(|| Error::InvalidPovm("no elements".into()))?;
        let dims = first.1.factor_dims().to_vec();
        let rest = elements
            .iter()
            .fold(HermitianOperator::identity(&dims), |acc, (_, f)| acc.sub(f));
        let mut elements = elements;
        elements.push((Outcome::Inconclusive, rest));
        Self::new(elements)
    }

    pub fn dim(&self) -> usize {
        self.elements[0].1.dim()
    }

    pub fn elements(&self) -> &[(Outcome, HermitianOperator)] {
        &self.elements
    }

    pub fn get(&self, label: Outcome) -> Option<&HermitianOperator> {
        self.elements
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, f)| f)
    }

    /// `‖Σ F − 1‖_max`.
    pub fn completeness_defect(&self) -> f64 {
        let n = self.dim();
        let sum = self
            .elements
            .iter()
            .fold(ComplexMatrix::zeros(n, n), |acc, (_, f)| acc + f.matrix());
        max_abs(&(sum - ComplexMatrix::identity(n, n)))
    }

    /// Smallest eigenvalue over all elements.
    pub fn min_eigenvalue(&self) -> f64 {
        self.elements
            .iter()
            .map(|(_, f)| f.min_eigenvalue())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Trace pattern for one product state `π_{i1} ⊗ … ⊗ π_{iC}`.
#[derive(Clone, Debug, Serialize)]
pub struct PatternEntry {
    pub indices: Vec<usize>,
    pub all_equal: bool,
    pub tr_a: f64,
    pub tr_b: f64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnambiguityReport {
    pub entries: Vec<PatternEntry>,
    pub passed: bool,
    /// Set when the check was evaluated on the support structure of an
    /// infinitesimally perturbed measurement rather than on its weights.
    pub epsilon_limit: bool,
}

impl UnambiguityReport {
    /// Smallest trace among entries that must be strictly positive.
    pub fn min_positive(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| if e.all_equal { e.tr_a } else { e.tr_b })
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest trace among entries that must vanish.
    pub fn max_zero(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| if e.all_equal { e.tr_b } else { e.tr_a })
            .fold(0.0, f64::max)
    }
}

/// Checks the strict-positivity / zero pattern of `(F_a, F_b)` on every
/// product state. `F_a` must fire exactly on `π_m^{⊗C}`, `F_b` exactly on
/// the rest.
pub fn trace_pattern(
    fa: &HermitianOperator,
    fb: &HermitianOperator,
    ens: &MixedEnsemble,
    copies: usize,
) -> Result<UnambiguityReport> {
    let expected = ens.dim().pow(copies as u32);
    for f in [fa, fb] {
        if f.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: f.dim(),
            });
        }
    }
    let entries: Vec<PatternEntry> = ens
        .index_tuples(copies)
        .into_iter()
        .map(|indices| {
            let (_, state) = ens.product_state(&indices);
            let all_equal = indices.iter().all(|&i| i == indices[0]);
            let tr_a = fa.trace_with(&state);
            let tr_b = fb.trace_with(&state);
            let (fire, silent) = if all_equal {
                (tr_a, tr_b)
            } else {
                (tr_b, tr_a)
            };
            let ok = fire >= POSITIVE_THRESHOLD && silent.abs() <= ZERO_THRESHOLD;
            PatternEntry {
                indices,
                all_equal,
                tr_a,
                tr_b,
                ok,
            }
        })
        .collect();
    let passed = entries.iter().all(|e| e.ok);
    Ok(UnambiguityReport {
        entries,
        passed,
        epsilon_limit: false,
    })
}

/// Unambiguity of a comparison POVM: its `F_a` and `F_b` elements must
/// satisfy [`trace_pattern`]. Missing elements count as zero.
pub fn check_unambiguous(
    povm: &Povm,
    ens: &MixedEnsemble,
    copies: usize,
) -> Result<UnambiguityReport> {
    let expected = ens.dim().pow(copies as u32);
    if povm.dim() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: povm.dim(),
        });
    }
    let dims = vec![ens.dim(); copies];
    let zero = HermitianOperator::zeros(&dims);
    let fa = povm.get(Outcome::Same).unwrap_or(&zero);
    let fb = povm.get(Outcome::Different).unwrap_or(&zero);
    trace_pattern(fa, fb, ens, copies)
}

#[derive(Clone, Debug, Serialize)]
pub struct StateDiagnosis {
    pub index: usize,
    pub rank: usize,
    /// Dimension of the span of all other supports.
    pub others_dim: usize,
    /// `‖(1 − P_others) P_i‖_max`.
    pub residual: f64,
    pub contained: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparabilityReport {
    pub comparable: bool,
    pub states: Vec<StateDiagnosis>,
}

fn other_supports(supports: &[Subspace], skip: usize) -> Result<Subspace> {
    let ambient = supports[0].ambient_dim();
    supports
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != skip)
        .try_fold(Subspace::zero(ambient), |acc, (_, s)| subspace_sum(&acc, s))
}

fn state_supports(ens: &MixedEnsemble) -> Result<Vec<Subspace>> {
    ens.states().iter().map(|s| support(s, RANK_TOL)).collect()
}

/// Comparison is possible iff no support lies inside the sum of the others.
pub fn is_comparable(ens: &MixedEnsemble) -> Result<ComparabilityReport> {
    let supports = state_supports(ens)?;
    let mut states = Vec::with_capacity(supports.len());
    for (i, own) in supports.iter().enumerate() {
        let others = other_supports(&supports, i)?;
        let residual = others.containment_residual(own);
        states.push(StateDiagnosis {
            index: i,
            rank: own.dim(),
            others_dim: others.dim(),
            residual,
            contained: residual <= ISECT_TOL,
        });
    }
    let comparable = states.iter().all(|s| !s.contained);
    Ok(ComparabilityReport { comparable, states })
}

fn witness_vector(
    state: &HermitianOperator,
    others: &Subspace,
    index: usize,
) -> Option<ComplexVector> {
    let (own, _) = support_and_kernel(state, RANK_TOL).ok()?;
    let outside = others.complement();
    let try_vector = |v: &ComplexVector| {
        let phi = outside.project(v);
        let norm = phi.norm();
        (norm > WITNESS_NORM_TOL).then(|| phi / c64(norm, 0.0))
    };
    // support eigenvectors come in ascending eigenvalue order
    for j in (0..own.dim()).rev() {
        if let Some(phi) = try_vector(&own.vector(j)) {
            return Some(phi);
        }
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(0x5eed ^ index as u64);
    for _ in 0..64 {
        let coeffs = ComplexVector::from_fn(own.dim(), |_, _| {
            c64(rng.next_gaussian(), rng.next_gaussian())
        });
        if let Some(phi) = try_vector(&(own.basis() * coeffs)) {
            return Some(phi);
        }
    }
    None
}

/// Witness measurement `F̃_i = |φ_i⟩⟨φ_i| / N`, `F̃_? = 1 − Σ F̃_i`, where
/// `φ_i` is a normalised support vector of `π_i` projected off the other
/// supports. Satisfies `tr(F̃_i π_j) > 0 ⇔ i = j`.
pub fn witness_povm(ens: &MixedEnsemble) -> Result<Povm> {
    let supports = state_supports(ens)?;
    let n = ens.len();
    let mut elements = Vec::with_capacity(n + 1);
    for (i, state) in ens.states().iter().enumerate() {
        let others = other_supports(&supports, i)?;
        if others.contains(&supports[i]) {
            return Err(Error::Infeasible { state: i });
        }
        let phi = witness_vector(state, &others, i).ok_or(Error::Infeasible { state: i })?;
        let element = HermitianOperator::outer(&phi, &[ens.dim()]).scale(1.0 / n as f64);
        elements.push((Outcome::State(i), element));
    }
    Povm::with_inconclusive(elements)
}

/// `tr(F̃_i π_j)` table of a witness POVM (rows: elements, columns: states).
pub fn witness_table(povm: &Povm, ens: &MixedEnsemble) -> Vec<Vec<f64>> {
    (0..ens.len())
        .map(|i| {
            let f = povm.get(Outcome::State(i));
            ens.states()
                .iter()
                .map(|s| f.map_or(0.0, |f| f.trace_with(s)))
                .collect()
        })
        .collect()
}

/// Whether a witness table has the diagonal pattern.
pub fn witness_pattern_holds(table: &[Vec<f64>]) -> bool {
    table.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, &t)| {
            if i == j {
                t >= POSITIVE_THRESHOLD
            } else {
                t.abs() <= ZERO_THRESHOLD
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ket(data: &[f64]) -> ComplexVector {
        let v = ComplexVector::from_iterator(data.len(), data.iter().map(|&x| c64(x, 0.0)));
        let n = v.norm();
        v / c64(n, 0.0)
    }

    #[test]
    fn eta_values() {
        let ens = PureEnsemble::new(vec![ket(&[1.0, 0.0]), ket(&[1.0, 1.0])], vec![0.5, 0.5])
            .unwrap()
            .to_mixed();
        let p = build_problem(&ens, 2).unwrap();
        assert!((p.eta_a - 0.5).abs() < 1e-15 && (p.eta_b - 0.5).abs() < 1e-15);
        let p = build_problem(&ens, 3).unwrap();
        assert!((p.eta_a - 0.25).abs() < 1e-15);

        let ens = PureEnsemble::new(vec![ket(&[1.0, 0.0]), ket(&[1.0, 1.0])], vec![0.3, 0.7])
            .unwrap()
            .to_mixed();
        let p = build_problem(&ens, 2).unwrap();
        assert!((p.eta_a - 0.58).abs() < 1e-15);
        assert!((p.rho_a.trace() - 1.0).abs() < 1e-12);
        assert!((p.rho_b.trace() - 1.0).abs() < 1e-12);
        let avg = ens.average().tensor_power(2);
        assert!(p.mixture().max_distance(&avg) < 1e-10);
    }

    #[test]
    fn build_problem_rejects_single_copy() {
        let ens = PureEnsemble::uniform(vec![ket(&[1.0, 0.0]), ket(&[1.0, 1.0])])
            .unwrap()
            .to_mixed();
        assert!(matches!(build_problem(&ens, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn invalid_ensembles() {
        assert!(PureEnsemble::new(vec![ket(&[1.0, 0.0])], vec![1.0]).is_err());
        assert!(
            PureEnsemble::new(vec![ket(&[1.0, 0.0]), ket(&[0.0, 1.0])], vec![0.0, 1.0]).is_err()
        );
        assert!(
            PureEnsemble::new(vec![ket(&[1.0, 0.0]), ket(&[0.0, 1.0])], vec![0.4, 0.5]).is_err()
        );
        // same ray up to a global phase
        let minus = ket(&[1.0, 0.0]) * c64(-1.0, 0.0);
        assert!(matches!(
            PureEnsemble::uniform(vec![ket(&[1.0, 0.0]), minus]),
            Err(Error::InvalidEnsemble(_))
        ));
        let unnormalised = ComplexVector::from_vec(vec![c64(2.0, 0.0), c64(0.0, 0.0)]);
        assert!(PureEnsemble::uniform(vec![ket(&[0.0, 1.0]), unnormalised]).is_err());
    }

    #[test]
    fn empty_measurement_is_not_unambiguous() {
        let ens = PureEnsemble::uniform(vec![ket(&[1.0, 0.0]), ket(&[1.0, 1.0])])
            .unwrap()
            .to_mixed();
        let povm = Povm::new(vec![(
            Outcome::Inconclusive,
            HermitianOperator::identity(&[2, 2]),
        )])
        .unwrap();
        let report = check_unambiguous(&povm, &ens, 2).unwrap();
        assert!(!report.passed);
        let wrong_dim = Povm::new(vec![(
            Outcome::Inconclusive,
            HermitianOperator::identity(&[2]),
        )])
        .unwrap();
        assert!(check_unambiguous(&wrong_dim, &ens, 2).is_err());
    }

    #[test]
    fn povm_validation() {
        let half = HermitianOperator::identity(&[2]).scale(0.5);
        assert!(Povm::new(vec![
            (Outcome::Same, half.clone()),
            (Outcome::Different, half.clone())
        ])
        .is_ok());
        assert!(Povm::new(vec![(Outcome::Same, half.clone())]).is_err());
        assert!(Povm::new(vec![(Outcome::Same, half.clone()), (Outcome::Same, half)]).is_err());
        let neg = HermitianOperator::identity(&[2]).scale(-1.0);
        let two = HermitianOperator::identity(&[2]).scale(2.0);
        assert!(Povm::new(vec![(Outcome::Same, neg), (Outcome::Different, two)]).is_err());
    }

    #[test]
    fn comparability_examples() {
        let pure = PureEnsemble::uniform(vec![ket(&[1.0, 0.0]), ket(&[1.0, 2.0])])
            .unwrap()
            .to_mixed();
        assert!(is_comparable(&pure).unwrap().comparable);

        let rank2 = HermitianOperator::from_matrix(ComplexMatrix::from_diagonal(
            &ComplexVector::from_vec(vec![c64(0.7, 0.0), c64(0.3, 0.0)]),
        ))
        .unwrap();
        let mixed = MixedEnsemble::new(
            vec![HermitianOperator::outer(&ket(&[1.0, 0.0]), &[2]), rank2],
            vec![0.5, 0.5],
        )
        .unwrap();
        let report = is_comparable(&mixed).unwrap();
        assert!(!report.comparable);
        assert!(report.states[0].contained);
        assert!(!report.states[1].contained);
    }

    #[test]
    fn witness_orthogonal_pair() {
        let ens = PureEnsemble::uniform(vec![ket(&[1.0, 0.0]), ket(&[0.0, 1.0])])
            .unwrap()
            .to_mixed();
        let povm = witness_povm(&ens).unwrap();
        let f1 = povm.get(Outcome::State(0)).unwrap();
        assert!(f1.max_distance(&ens.states()[0].scale(0.5)) < 1e-12);
        let table = witness_table(&povm, &ens);
        assert!(witness_pattern_holds(&table));
    }

    #[test]
    fn witness_projection_example() {
        // |0⟩ and |+⟩: φ_1 ⟂ |+⟩, φ_2 ⟂ |0⟩
        let ens = PureEnsemble::uniform(vec![ket(&[1.0, 0.0]), ket(&[1.0, 1.0])])
            .unwrap()
            .to_mixed();
        let povm = witness_povm(&ens).unwrap();
        let table = witness_table(&povm, &ens);
        assert!(table[0][1].abs() < 1e-14);
        assert!(table[0][0] > 0.0);
        // φ_1 = (|0⟩ − |1⟩)/√2, so tr(F̃_1 π_1) = ½ · ½
        assert!((table[0][0] - 0.25).abs() < 1e-12);
        assert!(povm.get(Outcome::Inconclusive).unwrap().min_eigenvalue() > -1e-10);
    }

    #[test]
    fn witness_rejects_infeasible() {
        let ens = PureEnsemble::uniform(vec![ket(&[1.0, 0.0]), ket(&[0.0, 1.0]), ket(&[1.0, 1.0])])
            .unwrap()
            .to_mixed();
        assert!(matches!(witness_povm(&ens), Err(Error::Infeasible { .. })));
    }
}
