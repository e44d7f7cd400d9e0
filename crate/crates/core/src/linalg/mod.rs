//! Matrix-free linear algebra kernels shared by the solver modules:
//! sparse symmetric storage, banded Cholesky, Lanczos (eigenpairs and
//! matrix-function actions), restarted GMRES and Arnoldi eigenvalue
//! estimation.

pub mod arnoldi;
pub mod band;
pub mod csr;
pub mod gmres;
pub mod lanczos;

pub use band::BandCholesky;
pub use csr::Csr;

/// Action of a real linear operator on vectors of a fixed dimension.
pub trait LinearOp {
    fn dim(&self) -> usize;
    fn apply(&self, x: &[f64], y: &mut [f64]);

    fn apply_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.dim()];
        self.apply(x, &mut y);
        y
    }
}

/// Wraps a closure as a [`LinearOp`].
pub struct FnOp<F: Fn(&[f64]) -> Vec<f64>> {
    dim: usize,
    f: F,
}

impl<F: Fn(&[f64]) -> Vec<f64>> FnOp<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self { dim, f }
    }
}

impl<F: Fn(&[f64]) -> Vec<f64>> LinearOp for FnOp<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        let out = (self.f)(x);
        y.copy_from_slice(&out);
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// y += alpha * x
pub fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

pub fn scale(alpha: f64, x: &mut [f64]) {
    for xi in x.iter_mut() {
        *xi *= alpha;
    }
}
