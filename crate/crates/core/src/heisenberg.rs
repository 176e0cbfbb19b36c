//! The Heisenberg group and the boundary of complex hyperbolic 2-space.
//!
//! The Heisenberg group is `C × R` with the twisted group law
//!
//! ```text
//! (ζ₁, v₁) · (ζ₂, v₂) = (ζ₁ + ζ₂, v₁ + v₂ + 2 Im(ζ₁ ζ̄₂)),
//! ```
//!
//! and the boundary `∂H²_C` is its one-point compactification. A finite point
//! `(ζ, v)` has standard lift `(−|ζ|² + iv, √2 ζ, 1)ᵗ` in the null cone; `∞`
//! lifts to `(1, 0, 0)ᵗ`. The Cygan metric
//!
//! ```text
//! ρ₀((ζ₁,v₁), (ζ₂,v₂)) = | |ζ₁−ζ₂|² − iv₁ + iv₂ − 2i Im(ζ₁ ζ̄₂) |^{1/2}
//!                      = |<z₁, z₂>|^{1/2}
//! ```
//!
//! is left-invariant under Heisenberg translations.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::error::Error;
use crate::linalg::{hermitian_inner, Mat3C, SignatureClass, Vec3C};
use crate::Result;

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// Point of the Heisenberg group: horizontal coordinate `ζ`, vertical `v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HeisPoint {
    pub zeta: Complex64,
    pub v: f64,
}

impl HeisPoint {
    pub const ORIGIN: HeisPoint = HeisPoint {
        zeta: Complex64::new(0.0, 0.0),
        v: 0.0,
    };

    pub fn new(zeta: Complex64, v: f64) -> Self {
        HeisPoint { zeta, v }
    }

    /// Group inverse `(−ζ, −v)`.
    pub fn inverse(&self) -> Self {
        HeisPoint::new(-self.zeta, -self.v)
    }
}

/// Point of `∂H²_C`: either `∞` or a Heisenberg point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryPoint {
    Infinity,
    Finite(HeisPoint),
}

impl BoundaryPoint {
    pub fn origin() -> Self {
        BoundaryPoint::Finite(HeisPoint::ORIGIN)
    }

    pub fn finite(zeta: Complex64, v: f64) -> Self {
        BoundaryPoint::Finite(HeisPoint::new(zeta, v))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    pub fn as_finite(&self) -> Option<&HeisPoint> {
        match self {
            BoundaryPoint::Infinity => None,
            BoundaryPoint::Finite(p) => Some(p),
        }
    }
}

impl From<HeisPoint> for BoundaryPoint {
    fn from(p: HeisPoint) -> Self {
        BoundaryPoint::Finite(p)
    }
}

/// Heisenberg group law.
pub fn heis_mul(p: &HeisPoint, q: &HeisPoint) -> HeisPoint {
    HeisPoint {
        zeta: p.zeta + q.zeta,
        v: p.v + q.v + 2.0 * (p.zeta * q.zeta.conj()).im,
    }
}

/// Vertical projection `Π_V : (ζ, v) ↦ ζ`, a group homomorphism onto `C`.
pub fn vertical_projection(p: &HeisPoint) -> Complex64 {
    p.zeta
}

/// Standard lift into the null cone.
pub fn standard_lift(p: &BoundaryPoint) -> Vec3C {
    match p {
        BoundaryPoint::Infinity => Vec3C::new(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        ),
        BoundaryPoint::Finite(q) => Vec3C::new(
            Complex64::new(-q.zeta.norm_sqr(), q.v),
            q.zeta * SQRT2,
            Complex64::new(1.0, 0.0),
        ),
    }
}

/// Inverse of [`standard_lift`] on the null cone.
///
/// Returns `∞` iff `|z₃| ≤ tol · |z|`; rejects vectors that are not null at
/// relative tolerance `tol`.
pub fn from_lift(z: &Vec3C, tol: f64) -> Result<BoundaryPoint> {
    match crate::linalg::classify_vector(z, tol)? {
        SignatureClass::Null => Ok(from_lift_unchecked(z, tol)),
        _ => Err(Error::NotNull {
            form_value: hermitian_inner(z, z).re,
        }),
    }
}

/// Lift inversion without the nullity check.
///
/// Callers must ensure `z` lies (numerically) in the null cone, e.g. because
/// it is the image of a standard lift under a form-preserving matrix.
pub(crate) fn from_lift_unchecked(z: &Vec3C, tol: f64) -> BoundaryPoint {
    let sup = z.sup_norm();
    if z.z3().norm() <= tol * sup {
        return BoundaryPoint::Infinity;
    }
    let w1 = z.z1() / z.z3();
    let w2 = z.z2() / z.z3();
    BoundaryPoint::finite(w2 / SQRT2, w1.im)
}

/// Cygan distance between finite points, from the defining formula.
pub fn cygan_distance(p: &HeisPoint, q: &HeisPoint) -> f64 {
    let dz = p.zeta - q.zeta;
    let cross = 2.0 * (p.zeta * q.zeta.conj()).im;
    Complex64::new(dz.norm_sqr(), -p.v + q.v - cross).norm().sqrt()
}

/// Cygan distance as `|<z₁, z₂>|^{1/2}` of standard lifts.
///
/// Rejects `∞` arguments; agrees with [`cygan_distance`] on finite pairs.
pub fn cygan_distance_via_lift(p: &BoundaryPoint, q: &BoundaryPoint) -> Result<f64> {
    if p.is_infinity() || q.is_infinity() {
        return Err(Error::InfinitePoint);
    }
    let inner = hermitian_inner(&standard_lift(p), &standard_lift(q));
    Ok(inner.norm().sqrt())
}

/// Distance with `∞` conventions: `ρ₀(∞, ∞) = 0`, `ρ₀(∞, finite) = +∞`.
pub fn boundary_distance(p: &BoundaryPoint, q: &BoundaryPoint) -> f64 {
    match (p, q) {
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => 0.0,
        (BoundaryPoint::Infinity, _) | (_, BoundaryPoint::Infinity) => f64::INFINITY,
        (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => cygan_distance(a, b),
    }
}

/// The unique upper-triangular unipotent element taking the lift of `o` to
/// the lift of `(τ, t)`:
///
/// ```text
/// T_{(τ,t)} = [ 1  −√2 τ̄  −|τ|²+it ]
///             [ 0    1      √2 τ   ]
///             [ 0    0       1     ]
/// ```
///
/// `(τ, t) ↦ T_{(τ,t)}` is a group homomorphism.
pub fn translation_matrix(tau: Complex64, t: f64) -> Mat3C {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    Mat3C([
        [one, -tau.conj() * SQRT2, Complex64::new(-tau.norm_sqr(), t)],
        [zero, one, tau * SQRT2],
        [zero, zero, one],
    ])
}

/// Cartan angular invariant `A(z₁,z₂,z₃) = arg(−<z₁,z₂><z₂,z₃><z₃,z₁>)`,
/// reported in the principal branch `(−π, π]`.
///
/// `±π/2` means the three points lie on a common C-circle, `0` on a common
/// R-circle. Coincident points are rejected: two null lines agree exactly
/// when the pairwise inner product vanishes.
pub fn cartan_invariant(z1: &BoundaryPoint, z2: &BoundaryPoint, z3: &BoundaryPoint) -> Result<f64> {
    let l1 = standard_lift(z1);
    let l2 = standard_lift(z2);
    let l3 = standard_lift(z3);
    let p12 = hermitian_inner(&l1, &l2);
    let p23 = hermitian_inner(&l2, &l3);
    let p31 = hermitian_inner(&l3, &l1);
    let scale = |a: &Vec3C, b: &Vec3C| a.sup_norm() * b.sup_norm();
    if p12.norm() <= 1e-12 * scale(&l1, &l2)
        || p23.norm() <= 1e-12 * scale(&l2, &l3)
        || p31.norm() <= 1e-12 * scale(&l3, &l1)
    {
        return Err(Error::CoincidentPoints);
    }
    Ok((-(p12 * p23 * p31)).arg())
}

/// `true` when a Cartan invariant signals a common C-circle (`±π/2`).
pub fn is_c_circle_aligned(angle: f64, tol: f64) -> bool {
    (angle.abs() - FRAC_PI_2).abs() <= tol
}

/// `true` when a Cartan invariant signals a common R-circle (`0`).
pub fn is_r_circle_aligned(angle: f64, tol: f64) -> bool {
    angle.abs() <= tol
}

/// Projective action of a form-preserving matrix on the boundary.
pub fn apply_boundary(m: &Mat3C, p: &BoundaryPoint) -> BoundaryPoint {
    from_lift_unchecked(&m.mul_vec(&standard_lift(p)), 1e-12)
}

/// The involution swapping `o` and `∞` (the matrix of the Hermitian form).
pub fn iota_matrix() -> Mat3C {
    Mat3C::FORM_H
}

/// Boundary action of the involution: `ι(o) = ∞`, `ι(∞) = o`, and otherwise
///
/// ```text
/// ι(ζ, v) = ( ζ / (−|ζ|² + iv),  −v / | |ζ|² + iv |² ).
/// ```
///
/// `−|ζ|² + iv = 0` with `(ζ,v) ≠ (0,0)` is impossible, so the formula is
/// used whenever the input is not `o`.
pub fn iota_boundary(p: &BoundaryPoint) -> BoundaryPoint {
    match p {
        BoundaryPoint::Infinity => BoundaryPoint::origin(),
        BoundaryPoint::Finite(q) => {
            if q.zeta.norm_sqr() == 0.0 && q.v == 0.0 {
                return BoundaryPoint::Infinity;
            }
            let denom = Complex64::new(-q.zeta.norm_sqr(), q.v);
            BoundaryPoint::finite(q.zeta / denom, -q.v / denom.norm_sqr())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{classify_vector, is_form_preserving, projective_equal, MAT_TOL, SCALAR_TOL};
    use std::f64::consts::{FRAC_PI_4, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn group_law_examples() {
        let o = HeisPoint::ORIGIN;
        let p = HeisPoint::new(c(3.0, 1.0), 5.0);
        assert_eq!(heis_mul(&o, &p), p);

        let a = HeisPoint::new(c(1.0, 0.0), 0.0);
        let b = HeisPoint::new(c(0.0, 1.0), 0.0);
        let ab = heis_mul(&a, &b);
        assert_eq!(ab.zeta, c(1.0, 1.0));
        assert!((ab.v - (-2.0)).abs() < 1e-15);

        let q = HeisPoint::new(c(0.7, -2.1), 0.4);
        let prod = heis_mul(&q, &q.inverse());
        assert!(prod.zeta.norm() < 1e-15 && prod.v.abs() < 1e-15);
    }

    #[test]
    fn standard_lift_examples() {
        let o = standard_lift(&BoundaryPoint::origin());
        assert_eq!(o, Vec3C::new(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)));
        let inf = standard_lift(&BoundaryPoint::Infinity);
        assert_eq!(inf, Vec3C::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)));
        let p = standard_lift(&BoundaryPoint::finite(c(1.0, 0.0), 2.0));
        assert_eq!(p, Vec3C::new(c(-1.0, 2.0), c(SQRT2, 0.0), c(1.0, 0.0)));
        assert_eq!(
            classify_vector(&p, SCALAR_TOL).unwrap(),
            SignatureClass::Null
        );
    }

    #[test]
    fn from_lift_examples() {
        let tol = 1e-12;
        assert_eq!(
            from_lift(&Vec3C::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)), tol).unwrap(),
            BoundaryPoint::Infinity
        );
        assert_eq!(
            from_lift(&Vec3C::new(c(0.0, 0.0), c(0.0, 0.0), c(5.0, 0.0)), tol).unwrap(),
            BoundaryPoint::origin()
        );
        let z = Vec3C::new(c(-1.0, 2.0), c(SQRT2, 0.0), c(1.0, 0.0));
        assert_eq!(
            from_lift(&z, tol).unwrap(),
            BoundaryPoint::finite(c(1.0, 0.0), 2.0)
        );
        // A positive vector is rejected.
        let pos = Vec3C::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0));
        assert!(matches!(from_lift(&pos, tol), Err(Error::NotNull { .. })));
    }

    #[test]
    fn vertical_projection_is_homomorphism() {
        let p = HeisPoint::new(c(3.0, 1.0), 99.0);
        assert_eq!(vertical_projection(&p), c(3.0, 1.0));
        assert_eq!(vertical_projection(&HeisPoint::ORIGIN), c(0.0, 0.0));
        let a = HeisPoint::new(c(1.0, 0.0), 0.0);
        let b = HeisPoint::new(c(0.0, 1.0), 0.0);
        assert_eq!(vertical_projection(&heis_mul(&a, &b)), c(1.0, 1.0));
    }

    #[test]
    fn cygan_distance_examples() {
        let o = HeisPoint::ORIGIN;
        assert!((cygan_distance(&o, &HeisPoint::new(c(0.0, 0.0), 4.0)) - 2.0).abs() < 1e-15);
        let p = HeisPoint::new(c(1.0, 0.0), 0.0);
        assert_eq!(cygan_distance(&p, &p), 0.0);
        let q = HeisPoint::new(c(0.0, 1.0), 0.0);
        let expect = 2.0_f64.powf(0.75);
        assert!((cygan_distance(&p, &q) - expect).abs() < 1e-14);
    }

    #[test]
    fn cygan_distance_via_lift_matches() {
        let pairs = [
            (HeisPoint::ORIGIN, HeisPoint::new(c(0.0, 0.0), 4.0)),
            (
                HeisPoint::new(c(1.0, 0.0), 0.0),
                HeisPoint::new(c(1.0, 0.0), 0.0),
            ),
            (
                HeisPoint::new(c(1.0, 0.0), 0.0),
                HeisPoint::new(c(0.0, 1.0), 0.0),
            ),
        ];
        for (p, q) in pairs {
            let direct = cygan_distance(&p, &q);
            let via = cygan_distance_via_lift(&p.into(), &q.into()).unwrap();
            assert!((direct - via).abs() <= 1e-12 * (1.0 + direct));
        }
        assert_eq!(
            cygan_distance_via_lift(&BoundaryPoint::Infinity, &BoundaryPoint::origin()),
            Err(Error::InfinitePoint)
        );
    }

    #[test]
    fn translation_matrix_examples() {
        assert_eq!(translation_matrix(c(0.0, 0.0), 0.0), Mat3C::IDENTITY);

        let tau = c(1.0, 1.0);
        let t = translation_matrix(tau, 3.0);
        assert!(is_form_preserving(&t, MAT_TOL));
        let moved = t.mul_vec(&standard_lift(&BoundaryPoint::origin()));
        assert!(projective_equal(
            &moved,
            &standard_lift(&BoundaryPoint::finite(tau, 3.0)),
            1e-12
        ));
    }

    #[test]
    fn translation_is_homomorphism() {
        let p = HeisPoint::new(c(0.4, -1.3), 2.0);
        let q = HeisPoint::new(c(-2.0, 0.5), -0.7);
        let lhs = translation_matrix(p.zeta, p.v) * translation_matrix(q.zeta, q.v);
        let rhs = {
            let pq = heis_mul(&p, &q);
            translation_matrix(pq.zeta, pq.v)
        };
        assert!((lhs - rhs).sup_norm() < 1e-12);
    }

    #[test]
    fn cartan_invariant_examples() {
        // A(o, B⁻¹(∞), ∞) = arg(s₂² + it₂) for the lower-triangular generator;
        // with s₂ = 1, t₂ = 1 the centre is (1+i)/|…| scaled, giving π/4.
        let center = BoundaryPoint::finite(c(1.0, 0.0) / c(1.0, 1.0), 1.0 / 2.0);
        let angle = cartan_invariant(&BoundaryPoint::origin(), &center, &BoundaryPoint::Infinity)
            .unwrap();
        assert!((angle - FRAC_PI_4).abs() < 1e-12);

        // Swapping two arguments conjugates the triple product.
        let a = BoundaryPoint::finite(c(1.0, 0.5), 0.3);
        let b = BoundaryPoint::finite(c(-0.2, 1.0), -1.0);
        let d = BoundaryPoint::finite(c(0.9, -0.4), 2.0);
        let plus = cartan_invariant(&a, &b, &d).unwrap();
        let minus = cartan_invariant(&b, &a, &d).unwrap();
        assert!((plus + minus).abs() < 1e-12 || (plus + minus).abs() > 2.0 * PI - 1e-12);

        assert_eq!(
            cartan_invariant(&a, &a, &d),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn boundary_action_examples() {
        // Upper-triangular translations fix ∞ and translate o.
        let a = translation_matrix(c(0.0, 0.0), 3.0);
        assert_eq!(
            apply_boundary(&a, &BoundaryPoint::Infinity),
            BoundaryPoint::Infinity
        );
        let moved = apply_boundary(&a, &BoundaryPoint::origin());
        match moved {
            BoundaryPoint::Finite(p) => {
                assert!(p.zeta.norm() < 1e-15 && (p.v - 3.0).abs() < 1e-15);
            }
            _ => panic!("translation of o must be finite"),
        }
    }

    #[test]
    fn iota_examples() {
        assert_eq!(
            iota_boundary(&BoundaryPoint::origin()),
            BoundaryPoint::Infinity
        );
        assert_eq!(
            iota_boundary(&BoundaryPoint::Infinity),
            BoundaryPoint::origin()
        );
        let img = iota_boundary(&BoundaryPoint::finite(c(1.0, 0.0), 0.0));
        match img {
            BoundaryPoint::Finite(p) => {
                assert!((p.zeta - c(-1.0, 0.0)).norm() < 1e-15 && p.v.abs() < 1e-15);
            }
            _ => panic!(),
        }
        let q = BoundaryPoint::finite(c(2.0, 1.0), 7.0);
        let back = iota_boundary(&iota_boundary(&q));
        match (q, back) {
            (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) => {
                assert!((x.zeta - y.zeta).norm() < 1e-14 && (x.v - y.v).abs() < 1e-14);
            }
            _ => panic!(),
        }
        // Matrix action agrees with the Heisenberg formula.
        let via_matrix = apply_boundary(&iota_matrix(), &q);
        match (iota_boundary(&q), via_matrix) {
            (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) => {
                assert!((x.zeta - y.zeta).norm() < 1e-14 && (x.v - y.v).abs() < 1e-14);
            }
            _ => panic!(),
        }
    }
}
