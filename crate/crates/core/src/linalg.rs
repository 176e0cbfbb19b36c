//! Complex 3-vectors and 3×3 matrices over the signature-(2,1) Hermitian form
//!
//! ```text
//! <z, w> = w̄₃ z₁ + w̄₂ z₂ + w̄₁ z₃,        H = [ 0 0 1 ]
//!                                              [ 0 1 0 ]
//!                                              [ 1 0 0 ]
//! ```
//!
//! together with projective comparisons and conjugate-linear (anti-holomorphic)
//! maps. Matrices are stored dense row-major with named-entry accessors
//! `a .. j` following the layout
//!
//! ```text
//! P = [ a b c ]        P⁻¹ = [ j̄ f̄ c̄ ]
//!     [ d e f ]              [ h̄ ē b̄ ]
//!     [ g h j ]              [ ḡ d̄ ā ]
//! ```
//!
//! where the displayed inverse is valid exactly for form-preserving `P`.

use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

use crate::error::Error;
use crate::Result;

/// Default absolute tolerance on matrix sup-norm identities.
pub const MAT_TOL: f64 = 1e-9;
/// Default absolute tolerance on scalar identities.
pub const SCALAR_TOL: f64 = 1e-12;

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Column vector in `C^{2,1}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3C(pub [Complex64; 3]);

impl Vec3C {
    pub fn new(z1: Complex64, z2: Complex64, z3: Complex64) -> Self {
        Vec3C([z1, z2, z3])
    }

    pub fn z1(&self) -> Complex64 {
        self.0[0]
    }

    pub fn z2(&self) -> Complex64 {
        self.0[1]
    }

    pub fn z3(&self) -> Complex64 {
        self.0[2]
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Vec3C([self.0[0].conj(), self.0[1].conj(), self.0[2].conj()])
    }

    /// Largest entry modulus.
    pub fn sup_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Euclidean norm squared `Σ |z_i|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Vec3C([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }
}

impl Sub for Vec3C {
    type Output = Vec3C;
    fn sub(self, rhs: Vec3C) -> Vec3C {
        Vec3C([
            self.0[0] - rhs.0[0],
            self.0[1] - rhs.0[1],
            self.0[2] - rhs.0[2],
        ])
    }
}

/// Dense 3×3 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat3C(pub [[Complex64; 3]; 3]);

impl Mat3C {
    pub const IDENTITY: Self = Mat3C([
        [C_ONE, C_ZERO, C_ZERO],
        [C_ZERO, C_ONE, C_ZERO],
        [C_ZERO, C_ZERO, C_ONE],
    ]);

    pub const ZERO: Self = Mat3C([[C_ZERO; 3]; 3]);

    /// Matrix of the Hermitian form (also the involution swapping `o` and `∞`).
    pub const FORM_H: Self = Mat3C([
        [C_ZERO, C_ZERO, C_ONE],
        [C_ZERO, C_ONE, C_ZERO],
        [C_ONE, C_ZERO, C_ZERO],
    ]);

    pub fn new(m: [[Complex64; 3]; 3]) -> Self {
        Mat3C(m)
    }

    // Named entries in the a..j layout (no `i`, to keep it distinct from √-1).
    pub fn a(&self) -> Complex64 {
        self.0[0][0]
    }
    pub fn b(&self) -> Complex64 {
        self.0[0][1]
    }
    pub fn c(&self) -> Complex64 {
        self.0[0][2]
    }
    pub fn d(&self) -> Complex64 {
        self.0[1][0]
    }
    pub fn e(&self) -> Complex64 {
        self.0[1][1]
    }
    pub fn f(&self) -> Complex64 {
        self.0[1][2]
    }
    pub fn g(&self) -> Complex64 {
        self.0[2][0]
    }
    pub fn h(&self) -> Complex64 {
        self.0[2][1]
    }
    pub fn j(&self) -> Complex64 {
        self.0[2][2]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut r = Mat3C::ZERO;
        for i in 0..3 {
            for k in 0..3 {
                r.0[i][k] = self.0[k][i].conj();
            }
        }
        r
    }

    /// Entrywise conjugate (no transpose).
    pub fn conj(&self) -> Self {
        let mut r = Mat3C::ZERO;
        for i in 0..3 {
            for k in 0..3 {
                r.0[i][k] = self.0[i][k].conj();
            }
        }
        r
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Sum of the three principal 2×2 minors: the coefficient of `λ` in
    /// `det(λI − M) = λ³ − tr(M)λ² + c₂λ − det(M)`.
    pub fn second_invariant(&self) -> Complex64 {
        let m = &self.0;
        (m[0][0] * m[1][1] - m[0][1] * m[1][0])
            + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
            + (m[1][1] * m[2][2] - m[1][2] * m[2][1])
    }

    /// Largest entry modulus.
    pub fn sup_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, v: &Vec3C) -> Vec3C {
        let mut out = [C_ZERO; 3];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[i][0] * v.0[0] + self.0[i][1] * v.0[1] + self.0[i][2] * v.0[2];
        }
        Vec3C(out)
    }
}

impl Mul for Mat3C {
    type Output = Mat3C;
    fn mul(self, rhs: Mat3C) -> Mat3C {
        let mut r = Mat3C::ZERO;
        for i in 0..3 {
            for k in 0..3 {
                let mut s = C_ZERO;
                for l in 0..3 {
                    s += self.0[i][l] * rhs.0[l][k];
                }
                r.0[i][k] = s;
            }
        }
        r
    }
}

impl Mul<Vec3C> for Mat3C {
    type Output = Vec3C;
    fn mul(self, rhs: Vec3C) -> Vec3C {
        self.mul_vec(&rhs)
    }
}

impl Add for Mat3C {
    type Output = Mat3C;
    fn add(self, rhs: Mat3C) -> Mat3C {
        let mut r = Mat3C::ZERO;
        for i in 0..3 {
            for k in 0..3 {
                r.0[i][k] = self.0[i][k] + rhs.0[i][k];
            }
        }
        r
    }
}

impl Sub for Mat3C {
    type Output = Mat3C;
    fn sub(self, rhs: Mat3C) -> Mat3C {
        let mut r = Mat3C::ZERO;
        for i in 0..3 {
            for k in 0..3 {
                r.0[i][k] = self.0[i][k] - rhs.0[i][k];
            }
        }
        r
    }
}

/// Sign class of `<z, z>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignatureClass {
    Positive,
    Negative,
    Null,
}

/// The Hermitian form `<z, w> = w̄₃ z₁ + w̄₂ z₂ + w̄₁ z₃`.
///
/// Conjugate-symmetric: `<z, w> = conj(<w, z>)`, so `<z, z>` is real.
pub fn hermitian_inner(z: &Vec3C, w: &Vec3C) -> Complex64 {
    w.0[2].conj() * z.0[0] + w.0[1].conj() * z.0[1] + w.0[0].conj() * z.0[2]
}

/// Classify a nonzero vector as positive, negative or null.
///
/// `|<z,z>| ≤ tol · |z|²` counts as null.
pub fn classify_vector(z: &Vec3C, tol: f64) -> Result<SignatureClass> {
    let scale = z.norm_sqr();
    if scale == 0.0 {
        return Err(Error::ZeroVector);
    }
    let q = hermitian_inner(z, z).re;
    if q.abs() <= tol * scale {
        Ok(SignatureClass::Null)
    } else if q > 0.0 {
        Ok(SignatureClass::Positive)
    } else {
        Ok(SignatureClass::Negative)
    }
}

/// `true` iff `|P*HP − H|_∞ ≤ tol`.
pub fn is_form_preserving(p: &Mat3C, tol: f64) -> bool {
    (p.adjoint() * Mat3C::FORM_H * *p - Mat3C::FORM_H).sup_norm() <= tol
}

/// Inverse of a form-preserving matrix via the conjugate-across-antidiagonal
/// pattern. Rejects matrices that fail [`is_form_preserving`] at [`MAT_TOL`].
pub fn u21_inverse(p: &Mat3C) -> Result<Mat3C> {
    let dev = (p.adjoint() * Mat3C::FORM_H * *p - Mat3C::FORM_H).sup_norm();
    if dev > MAT_TOL {
        return Err(Error::NotFormPreserving { deviation: dev });
    }
    Ok(Mat3C([
        [p.j().conj(), p.f().conj(), p.c().conj()],
        [p.h().conj(), p.e().conj(), p.b().conj()],
        [p.g().conj(), p.d().conj(), p.a().conj()],
    ]))
}

/// Projective equality: `z = λ w` for some nonzero `λ`.
///
/// Comparison is made after dividing through by the entry of largest modulus,
/// which avoids dividing by near-zero third coordinates for points near `∞`.
pub fn projective_equal(z: &Vec3C, w: &Vec3C, tol: f64) -> bool {
    let nz = z.sup_norm();
    let nw = w.sup_norm();
    if nz == 0.0 || nw == 0.0 {
        return false;
    }
    let mut pivot = 0;
    for i in 1..3 {
        if z.0[i].norm() > z.0[pivot].norm() {
            pivot = i;
        }
    }
    if w.0[pivot].norm() <= tol * nw {
        return false;
    }
    let lambda = z.0[pivot] / w.0[pivot];
    (*z - w.scale(lambda)).sup_norm() <= tol * nz
}

/// Conjugate-linear map `z ↦ M z̄` (an anti-holomorphic isometry when `M`
/// composed with entrywise conjugation preserves the form up to conjugation).
#[derive(Clone, Copy, Debug)]
pub struct AntiHolMap {
    /// Linear part, applied after entrywise complex conjugation.
    pub linear: Mat3C,
}

impl AntiHolMap {
    pub fn new(linear: Mat3C) -> Self {
        AntiHolMap { linear }
    }

    pub fn apply(&self, z: &Vec3C) -> Vec3C {
        self.linear.mul_vec(&z.conj())
    }

    /// The square of the map is `z ↦ (M M̄) z`; it represents the identity
    /// projectively iff `M M̄` is a scalar multiple of `I`.
    pub fn is_involution(&self, tol: f64) -> bool {
        let sq = self.linear * self.linear.conj();
        let lambda = sq.trace() / Complex64::new(3.0, 0.0);
        let mut dev: f64 = 0.0;
        for i in 0..3 {
            for k in 0..3 {
                let expect = if i == k { lambda } else { C_ZERO };
                dev = dev.max((sq.0[i][k] - expect).norm());
            }
        }
        dev <= tol * sq.sup_norm().max(1.0)
    }
}
