//! Dense complex Hermitian linear algebra for the small operators that appear
//! in comparison problems: spectra, supports, kernels, subspace algebra and
//! partial transposition.
//!
//! Everything here is a pure function on immutable values. Dimensions stay
//! tiny (a few dozen at most), so all routines work on dense
//! `nalgebra::DMatrix<Complex64>` storage.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type ComplexMatrix = DMatrix<Complex64>;
pub type ComplexVector = DVector<Complex64>;

/// Relative eigenvalue cutoff separating support from kernel.
pub const RANK_TOL: f64 = 1e-10;
pub const HERM_TOL: f64 = 1e-10;
pub const ORTH_TOL: f64 = 1e-10;
pub const ISECT_TOL: f64 = 1e-10;
pub const RECON_TOL: f64 = 1e-9;

#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Largest entry modulus.
pub fn max_abs(m: &ComplexMatrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// Kronecker product of two dense matrices.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}

/// Kronecker product of two column vectors.
pub fn kron_vec(a: &ComplexVector, b: &ComplexVector) -> ComplexVector {
    let mut out = ComplexVector::zeros(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i * b.len() + j] = x * y;
        }
    }
    out
}

/// Dense complex Hermitian matrix with a declared tensor-product structure.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
    factor_dims: Vec<usize>,
}

impl HermitianOperator {
    /// Validates Hermiticity within [`HERM_TOL`] (relative to the largest
    /// entry, with an absolute floor of one) and stores the exactly
    /// symmetrised matrix.
    pub fn new(matrix: ComplexMatrix, factor_dims: Vec<usize>) -> Result<Self> {
        let (rows, cols) = matrix.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if matrix
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let product: usize = factor_dims.iter().product();
        if factor_dims.is_empty() || product != rows {
            return Err(Error::TensorStructure(format!(
                "factor dimensions {factor_dims:?} do not multiply to {rows}"
            )));
        }
        let adjoint = matrix.adjoint();
        let deviation = max_abs(&(&matrix - &adjoint));
        let scale = max_abs(&matrix).max(1.0);
        if deviation > HERM_TOL * scale {
            return Err(Error::NotHermitian { deviation });
        }
        let matrix = (&matrix + adjoint) * c64(0.5, 0.0);
        Ok(Self {
            matrix,
            factor_dims,
        })
    }

    /// Operator on a single unstructured factor.
    pub fn from_matrix(matrix: ComplexMatrix) -> Result<Self> {
        let n = matrix.nrows();
        Self::new(matrix, vec![n])
    }

    pub fn zeros(factor_dims: &[usize]) -> Self {
        let n = factor_dims.iter().product();
        Self {
            matrix: ComplexMatrix::zeros(n, n),
            factor_dims: factor_dims.to_vec(),
        }
    }

    pub fn identity(factor_dims: &[usize]) -> Self {
        let n = factor_dims.iter().product();
        Self {
            matrix: ComplexMatrix::identity(n, n),
            factor_dims: factor_dims.to_vec(),
        }
    }

    /// `|v⟩⟨v|` (not normalised).
    pub fn outer(v: &ComplexVector, factor_dims: &[usize]) -> Self {
        assert_eq!(
            v.len(),
            factor_dims.iter().product::<usize>(),
            "vector length must match factor dimensions"
        );
        Self {
            matrix: v * v.adjoint(),
            factor_dims: factor_dims.to_vec(),
        }
    }

    /// Orthogonal projector onto a subspace.
    pub fn projector(space: &Subspace, factor_dims: &[usize]) -> Self {
        assert_eq!(space.ambient_dim(), factor_dims.iter().product::<usize>());
        Self {
            matrix: space.projector(),
            factor_dims: factor_dims.to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.factor_dims
    }

    pub fn with_factor_dims(mut self, factor_dims: Vec<usize>) -> Result<Self> {
        if factor_dims.iter().product::<usize>() != self.dim() || factor_dims.is_empty() {
            return Err(Error::TensorStructure(format!(
                "factor dimensions {factor_dims:?} do not multiply to {}",
                self.dim()
            )));
        }
        self.factor_dims = factor_dims;
        Ok(self)
    }

    pub fn trace(&self) -> f64 {
        self.matrix.diagonal().iter().map(|z| z.re).sum()
    }

    /// `tr(self · other)`, real for Hermitian arguments.
    pub fn trace_with(&self, other: &HermitianOperator) -> f64 {
        assert_eq!(self.dim(), other.dim(), "trace_with: dimension mismatch");
        let n = self.dim();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self.matrix[(i, j)] * other.matrix[(j, i)]).re;
            }
        }
        acc
    }

    /// `⟨v|self|v⟩`.
    pub fn expectation(&self, v: &ComplexVector) -> f64 {
        (v.adjoint() * &self.matrix * v)[(0, 0)].re
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            matrix: &self.matrix * c64(factor, 0.0),
            factor_dims: self.factor_dims.clone(),
        }
    }

    pub fn add(&self, other: &HermitianOperator) -> Self {
        assert_eq!(self.dim(), other.dim(), "add: dimension mismatch");
        Self {
            matrix: &self.matrix + &other.matrix,
            factor_dims: self.factor_dims.clone(),
        }
    }

    pub fn sub(&self, other: &HermitianOperator) -> Self {
        assert_eq!(self.dim(), other.dim(), "sub: dimension mismatch");
        Self {
            matrix: &self.matrix - &other.matrix,
            factor_dims: self.factor_dims.clone(),
        }
    }

    /// Tensor product; factor lists are concatenated.
    pub fn tensor(&self, other: &HermitianOperator) -> Self {
        let mut factor_dims = self.factor_dims.clone();
        factor_dims.extend_from_slice(&other.factor_dims);
        Self {
            matrix: kron(&self.matrix, &other.matrix),
            factor_dims,
        }
    }

    /// `self^{⊗power}`; `power` must be at least one.
    pub fn tensor_power(&self, power: usize) -> Self {
        assert!(power >= 1, "tensor power must be positive");
        let mut out = self.clone();
        for _ in 1..power {
            out = out.tensor(self);
        }
        out
    }

    /// Compresses onto a subspace: `B† A B` in the coordinates of the
    /// subspace basis `B`.
    pub fn compress(&self, space: &Subspace) -> Self {
        let b = space.basis();
        let k = b.ncols();
        Self {
            matrix: b.adjoint() * &self.matrix * b,
            factor_dims: vec![k],
        }
    }

    /// Sandwich `P A P` with the projector of `space`, in ambient coordinates.
    pub fn sandwich(&self, space: &Subspace) -> Self {
        let p = space.projector();
        let m = &p * &self.matrix * &p;
        Self {
            matrix: (&m + m.adjoint()) * c64(0.5, 0.0),
            factor_dims: self.factor_dims.clone(),
        }
    }

    pub fn eigh(&self) -> Eigh {
        eigh(self)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        if self.dim() == 0 {
            return 0.0;
        }
        self.eigh().values[0]
    }

    pub fn partial_transpose(&self, factor_index: usize) -> Result<Self> {
        partial_transpose(self, factor_index)
    }

    /// Largest entrywise distance to another operator.
    pub fn max_distance(&self, other: &HermitianOperator) -> f64 {
        max_abs(&(&self.matrix - &other.matrix))
    }
}

/// Spectral decomposition with eigenvalues in ascending order.
#[derive(Clone, Debug)]
pub struct Eigh {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl Eigh {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for j in 0..n {
            let lambda = c64(self.values[j], 0.0);
            for i in 0..n {
                scaled[(i, j)] *= lambda;
            }
        }
        scaled * self.vectors.adjoint()
    }

    pub fn max_abs_value(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |acc, l| acc.max(l.abs()))
    }
}

/// Hermitian eigendecomposition, eigenvalues ascending.
pub fn eigh(op: &HermitianOperator) -> Eigh {
    let n = op.dim();
    if n == 0 {
        return Eigh {
            values: Vec::new(),
            vectors: ComplexMatrix::zeros(0, 0),
        };
    }
    let decomposition = SymmetricEigen::new(op.matrix.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        decomposition.eigenvalues[a]
            .partial_cmp(&decomposition.eigenvalues[b])
            .expect("eigenvalues are finite")
    });
    let values = order
        .iter()
        .map(|&k| decomposition.eigenvalues[k])
        .collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| decomposition.eigenvectors[(i, order[j])]);
    Eigh { values, vectors }
}

/// Span of orthonormal columns inside `C^ambient_dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: ComplexMatrix,
}

impl Subspace {
    /// Wraps columns that are already orthonormal within [`ORTH_TOL`].
    pub fn from_orthonormal(basis: ComplexMatrix) -> Result<Self> {
        let k = basis.ncols();
        let gram = basis.adjoint() * &basis;
        let defect = max_abs(&(gram - ComplexMatrix::identity(k, k)));
        if defect > ORTH_TOL {
            return Err(Error::Domain(format!(
                "basis columns are not orthonormal (defect {defect:.3e})"
            )));
        }
        Ok(Self {
            ambient_dim: basis.nrows(),
            basis,
        })
    }

    /// Orthonormal basis for the span of arbitrary (possibly dependent)
    /// vectors.
    pub fn span(ambient_dim: usize, vectors: &[ComplexVector]) -> Self {
        let mut frame = ComplexMatrix::zeros(ambient_dim, ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "span: vector length mismatch");
            frame += v * v.adjoint();
        }
        let op = HermitianOperator {
            matrix: (&frame + frame.adjoint()) * c64(0.5, 0.0),
            factor_dims: vec![ambient_dim],
        };
        support_of_psd(&op, RANK_TOL)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: ComplexMatrix::zeros(ambient_dim, 0),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: ComplexMatrix::identity(ambient_dim, ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &ComplexMatrix {
        &self.basis
    }

    pub fn vector(&self, j: usize) -> ComplexVector {
        self.basis.column(j).into_owned()
    }

    pub fn projector(&self) -> ComplexMatrix {
        &self.basis * self.basis.adjoint()
    }

    /// Orthogonal projection of a vector onto the subspace.
    pub fn project(&self, v: &ComplexVector) -> ComplexVector {
        &self.basis * (self.basis.adjoint() * v)
    }

    /// Ortho-complement in the ambient space.
    pub fn complement(&self) -> Subspace {
        let n = self.ambient_dim;
        let rest = ComplexMatrix::identity(n, n) - self.projector();
        let op = HermitianOperator {
            matrix: (&rest + rest.adjoint()) * c64(0.5, 0.0),
            factor_dims: vec![n],
        };
        // projector spectrum is {0, 1}; a relative cutoff would keep noise
        // when `self` is the whole space
        eigenspace_above(&op, 0.5)
    }

    /// Ortho-complement of `self` inside `outer`.
    pub fn complement_in(&self, outer: &Subspace) -> Result<Subspace> {
        subspace_intersection(outer, &self.complement())
    }

    /// `‖(1 − P_self) P_other‖_max ≤ ISECT_TOL`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.containment_residual(other) <= ISECT_TOL
    }

    pub fn containment_residual(&self, other: &Subspace) -> f64 {
        let n = self.ambient_dim;
        let rest = ComplexMatrix::identity(n, n) - self.projector();
        max_abs(&(rest * other.projector()))
    }

    /// `‖P_self P_other‖_max`, zero for orthogonal subspaces.
    pub fn overlap_with(&self, other: &Subspace) -> f64 {
        max_abs(&(self.projector() * other.projector()))
    }

    pub fn is_orthogonal_to(&self, other: &Subspace) -> bool {
        self.overlap_with(other) <= ORTH_TOL
    }
}

fn support_of_psd(op: &HermitianOperator, tol: f64) -> Subspace {
    let eig = eigh(op);
    let cutoff = tol * eig.max_abs_value();
    let keep: Vec<usize> = (0..eig.values.len())
        .filter(|&k| eig.values[k] > cutoff && eig.values[k] > 0.0)
        .collect();
    columns(&eig.vectors, op.dim(), &keep)
}

fn eigenspace_above(op: &HermitianOperator, cutoff: f64) -> Subspace {
    let eig = eigh(op);
    let keep: Vec<usize> = (0..eig.values.len())
        .filter(|&k| eig.values[k] > cutoff)
        .collect();
    columns(&eig.vectors, op.dim(), &keep)
}

fn columns(vectors: &ComplexMatrix, ambient_dim: usize, keep: &[usize]) -> Subspace {
    let basis = ComplexMatrix::from_fn(ambient_dim, keep.len(), |i, j| vectors[(i, keep[j])]);
    Subspace { ambient_dim, basis }
}

/// Support and kernel of a positive semidefinite operator.
pub fn support_and_kernel(op: &HermitianOperator, tol: f64) -> Result<(Subspace, Subspace)> {
    let n = op.dim();
    let eig = eigh(op);
    let scale = eig.values.last().copied().unwrap_or(0.0).max(0.0);
    let cutoff = tol * scale;
    if let Some(&lowest) = eig.values.first() {
        if lowest < -cutoff && lowest < 0.0 && scale > 0.0 {
            return Err(Error::NotPositive {
                min_eigenvalue: lowest,
            });
        }
        if scale == 0.0 && lowest < 0.0 {
            return Err(Error::NotPositive {
                min_eigenvalue: lowest,
            });
        }
    }
    let (sup, ker): (Vec<usize>, Vec<usize>) =
        (0..n).partition(|&k| scale > 0.0 && eig.values[k] > cutoff);
    Ok((
        columns(&eig.vectors, n, &sup),
        columns(&eig.vectors, n, &ker),
    ))
}

/// Span of eigenvectors whose eigenvalue exceeds `tol × λ_max`.
pub fn support(op: &HermitianOperator, tol: f64) -> Result<Subspace> {
    support_and_kernel(op, tol).map(|(s, _)| s)
}

/// Ortho-complement of [`support`].
pub fn kernel(op: &HermitianOperator, tol: f64) -> Result<Subspace> {
    support_and_kernel(op, tol).map(|(_, k)| k)
}

fn check_ambient(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    Ok(())
}

/// Orthonormal basis of `span(a ∪ b)`, via the support of `P_a + P_b`.
pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(a, b)?;
    let sum = a.projector() + b.projector();
    let op = HermitianOperator {
        matrix: (&sum + sum.adjoint()) * c64(0.5, 0.0),
        factor_dims: vec![a.ambient_dim],
    };
    Ok(eigenspace_above(&op, RANK_TOL))
}

/// Intersection of two subspaces: eigenvalue-one eigenspace of
/// `P_a P_b P_a`.
pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(a, b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Subspace::zero(a.ambient_dim));
    }
    let pa = a.projector();
    let m = &pa * b.projector() * &pa;
    let op = HermitianOperator {
        matrix: (&m + m.adjoint()) * c64(0.5, 0.0),
        factor_dims: vec![a.ambient_dim],
    };
    let eig = eigh(&op);
    let keep: Vec<usize> = (0..eig.values.len())
        .filter(|&k| eig.values[k] >= 1.0 - ISECT_TOL)
        .collect();
    Ok(columns(&eig.vectors, a.ambient_dim, &keep))
}

/// Transposes the tensor factor `factor_index`, leaving the others intact.
pub fn partial_transpose(op: &HermitianOperator, factor_index: usize) -> Result<HermitianOperator> {
    let dims = op.factor_dims();
    if dims.len() < 2 {
        return Err(Error::TensorStructure(
            "partial transpose needs at least two tensor factors".into(),
        ));
    }
    if factor_index >= dims.len() {
        return Err(Error::TensorStructure(format!(
            "factor index {factor_index} out of range for {} factors",
            dims.len()
        )));
    }
    // stride of the chosen factor in the row-major multi-index
    let stride: usize = dims[factor_index + 1..].iter().product();
    let d = dims[factor_index];
    let n = op.dim();
    let digit = |idx: usize| (idx / stride) % d;
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        let di = digit(i);
        for j in 0..n {
            let dj = digit(j);
            let ni = i - di * stride + dj * stride;
            let nj = j - dj * stride + di * stride;
            out[(ni, nj)] = op.matrix[(i, j)];
        }
    }
    Ok(HermitianOperator {
        matrix: out,
        factor_dims: dims.to_vec(),
    })
}

/// Swap operator `|ab⟩ ↦ |ba⟩` on `C^d ⊗ C^d`.
pub fn swap_operator(d: usize) -> ComplexMatrix {
    let n = d * d;
    let mut s = ComplexMatrix::zeros(n, n);
    for a in 0..d {
        for b in 0..d {
            s[(b * d + a, a * d + b)] = c64(1.0, 0.0);
        }
    }
    s
}

/// Orthonormal basis of the null space of a (possibly rectangular) matrix,
/// using the relative singular-value cutoff [`RANK_TOL`].
pub fn null_space(m: &ComplexMatrix) -> ComplexMatrix {
    let (rows, cols) = m.shape();
    if cols == 0 {
        return ComplexMatrix::zeros(0, 0);
    }
    // pad to square so the SVD yields a complete right basis
    let size = rows.max(cols);
    let mut padded = ComplexMatrix::zeros(size, cols);
    padded.view_mut((0, 0), (rows, cols)).copy_from(m);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let sigma_max = svd.singular_values.iter().fold(0.0_f64, |a, &s| a.max(s));
    let cutoff = RANK_TOL * sigma_max;
    let null_rows: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&k| sigma_max == 0.0 || svd.singular_values[k] <= cutoff)
        .collect();
    ComplexMatrix::from_fn(cols, null_rows.len(), |i, j| v_t[(null_rows[j], i)].conj())
}
