//! Jones calculus for uniform and azimuthally varying polarization elements.
//!
//! Everything works in the fixed linear basis H = (1, 0), V = (0, 1), with
//! D = (1, 1)/√2 and A = (1, −1)/√2. Waveplates and q-plates are unitary,
//! polarizers are rank-one projectors, and [`project`] is the conjugate-linear
//! inner product used by every coincidence amplitude downstream.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

/// Jones vector in the linear {H, V} basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolVector {
    pub h: Complex64,
    pub v: Complex64,
}

impl PolVector {
    pub const fn new(h: Complex64, v: Complex64) -> Self {
        Self { h, v }
    }

    /// Vector with real components.
    pub fn from_real(h: f64, v: f64) -> Self {
        Self::new(Complex64::new(h, 0.0), Complex64::new(v, 0.0))
    }

    pub fn horizontal() -> Self {
        Self::from_real(1.0, 0.0)
    }

    pub fn vertical() -> Self {
        Self::from_real(0.0, 1.0)
    }

    pub fn diagonal() -> Self {
        Self::from_real(FRAC_1_SQRT_2, FRAC_1_SQRT_2)
    }

    /// A = (H − V)/√2.
    pub fn antidiagonal() -> Self {
        Self::from_real(FRAC_1_SQRT_2, -FRAC_1_SQRT_2)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.h.norm_sqr() + self.v.norm_sqr()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    /// Unit vector with the same direction, or `None` if the norm is
    /// numerically zero.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n < 1e-24 {
            return None;
        }
        let inv = 1.0 / n.sqrt();
        Some(Self::new(self.h * inv, self.v * inv))
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self::new(self.h * c, self.v * c)
    }
}

/// Conjugate-linear inner product ū·e = conj(u.h)·e.h + conj(u.v)·e.v.
///
/// This is the bracket appearing in the coincidence amplitudes: the overlap
/// of the local field `e` with the detection polarizer axis `u`.
pub fn project(u: &PolVector, e: &PolVector) -> Complex64 {
    u.h.conj() * e.h + u.v.conj() * e.v
}

/// 2×2 Jones operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolOperator {
    m: [[Complex64; 2]; 2],
}

impl PolOperator {
    pub const fn new(m: [[Complex64; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        Self::new([
            [Complex64::new(m[0][0], 0.0), Complex64::new(m[0][1], 0.0)],
            [Complex64::new(m[1][0], 0.0), Complex64::new(m[1][1], 0.0)],
        ])
    }

    pub fn identity() -> Self {
        Self::from_real([[1.0, 0.0], [0.0, 1.0]])
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    pub fn apply(&self, x: &PolVector) -> PolVector {
        PolVector::new(
            self.m[0][0] * x.h + self.m[0][1] * x.v,
            self.m[1][0] * x.h + self.m[1][1] * x.v,
        )
    }

    /// Matrix product `self · inner` (apply `inner` first).
    pub fn compose(&self, inner: &Self) -> Self {
        let a = &self.m;
        let b = &inner.m;
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self::new(out)
    }

    pub fn adjoint(&self) -> Self {
        Self::new([
            [self.m[0][0].conj(), self.m[1][0].conj()],
            [self.m[0][1].conj(), self.m[1][1].conj()],
        ])
    }

    fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.adjoint()
            .compose(self)
            .max_abs_diff(&Self::identity())
            <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.adjoint().max_abs_diff(self) <= tol
    }

    pub fn is_idempotent(&self, tol: f64) -> bool {
        self.compose(self).max_abs_diff(self) <= tol
    }
}

/// General linear retarder: R(−θ)·diag(1, e^{iδ})·R(θ).
///
/// The phase convention carries no global prefactor, so a half-waveplate at
/// axis 0 (`waveplate(PI, 0.0)`) is diag(1, −1).
pub fn waveplate(retardance: f64, axis_angle: f64) -> PolOperator {
    let (s, c) = axis_angle.sin_cos();
    let e = Complex64::new(retardance.cos(), retardance.sin());
    // R(−θ)·diag(1, e)·R(θ) expanded.
    PolOperator::new([
        [
            Complex64::new(c * c, 0.0) + e * (s * s),
            Complex64::new(c * s, 0.0) - e * (c * s),
        ],
        [
            Complex64::new(s * c, 0.0) - e * (s * c),
            Complex64::new(s * s, 0.0) + e * (c * c),
        ],
    ])
}

/// q-plate Jones matrix at azimuthal angle `phi`.
///
/// [[cos 2q(φ−δ), sin 2q(φ−δ)], [sin 2q(φ−δ), −cos 2q(φ−δ)]]: real, unitary
/// and Hermitian at every φ. `charge` is a half-integer in practice but any
/// real value is accepted.
pub fn qplate_matrix(charge: f64, offset: f64, phi: f64) -> PolOperator {
    let (s, c) = (2.0 * charge * (phi - offset)).sin_cos();
    PolOperator::from_real([[c, s], [s, -c]])
}

/// Detection polarizer axis: (cos angle, sin angle).
///
/// angle 0 → H, π/2 → V, π/4 → D, −π/4 → A = (1, −1)/√2.
pub fn polarizer_vector(angle: f64) -> PolVector {
    let (s, c) = angle.sin_cos();
    PolVector::from_real(c, s)
}

/// Rank-one projector |u⟩⟨u| onto the polarizer axis at `angle`.
pub fn polarizer_projector(angle: f64) -> PolOperator {
    let (s, c) = angle.sin_cos();
    PolOperator::from_real([[c * c, c * s], [c * s, s * s]])
}

/// One element of a preparation chain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Element {
    Waveplate { retardance: f64, axis: f64 },
    QPlate { charge: f64, offset: f64 },
    Polarizer { angle: f64 },
}

impl Element {
    /// Jones matrix of the element at azimuthal angle `phi`. Uniform elements
    /// ignore `phi`.
    pub fn matrix_at(&self, phi: f64) -> PolOperator {
        match *self {
            Element::Waveplate { retardance, axis } => waveplate(retardance, axis),
            Element::QPlate { charge, offset } => qplate_matrix(charge, offset, phi),
            Element::Polarizer { angle } => polarizer_projector(angle),
        }
    }
}

/// Ordered sequence of elements; the first element acts first, so the matrix
/// product puts the last element leftmost.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ElementChain {
    elements: Vec<Element>,
}

impl ElementChain {
    pub fn new(elements: Vec<Element>) -> Self {
        Self { elements }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn matrix_at(&self, phi: f64) -> PolOperator {
        self.elements
            .iter()
            .fold(PolOperator::identity(), |acc, e| {
                e.matrix_at(phi).compose(&acc)
            })
    }

    pub fn apply_at(&self, phi: f64, input: &PolVector) -> PolVector {
        self.elements
            .iter()
            .fold(*input, |v, e| e.matrix_at(phi).apply(&v))
    }
}

impl From<Vec<Element>> for ElementChain {
    fn from(elements: Vec<Element>) -> Self {
        Self::new(elements)
    }
}
