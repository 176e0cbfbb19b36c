//! Fans in the Heisenberg group and their vertical projections.
//!
//! An infinite fan `F^(∞)_{k e^{iφ}}` is a Euclidean plane whose vertical
//! projection is the line `x cos φ + y sin φ = k`, with points
//!
//! ```text
//! f_{a,b} = ( (k + ia) e^{iφ},  b − 2ka ),       (a, b) ∈ R².
//! ```
//!
//! A finite fan `F^(o)_k` is the image of an infinite fan under the
//! involution swapping `o` and `∞` (here in the rotation-normalized position
//! `φ = 0`). Its vertical projection fills a cardioid region: for `k > 0`
//! the fans `F^(o)_{±k}` project onto
//!
//! ```text
//! r ≤ (1 ∓ cos θ) / (2k)
//! ```
//!
//! in polar coordinates, equivalently `y² ∓ 4kx(x²+y²) − 4k²(x²+y²)² ≥ 0`.
//! Both cardioids lie in the strip `|x cos φ + y sin φ| ≤ cos³(φ/3)/k` for
//! `|φ| ≤ π/2`, with tangency at the polar angles `2φ/3 + π` and `2φ/3`.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::error::Error;
use crate::heisenberg::{BoundaryPoint, HeisPoint};
use crate::util::wrap_angle;
use crate::Result;

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// Infinite fan `F^(∞)_{k e^{iφ}}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InfiniteFan {
    pub k: f64,
    pub phi: f64,
}

impl InfiniteFan {
    pub fn new(k: f64, phi: f64) -> Self {
        InfiniteFan { k, phi }
    }
}

/// Finite fan `F^(o)_k` in the rotation-normalized position, `k ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiniteFan {
    pub k: f64,
}

impl FiniteFan {
    pub fn new(k: f64) -> Result<Self> {
        if k == 0.0 {
            return Err(Error::InvalidParameter("finite fan needs k != 0"));
        }
        Ok(FiniteFan { k })
    }

    pub fn point(&self, a: f64, b: f64) -> HeisPoint {
        finite_fan_point(self.k, a, b).expect("k != 0 by construction")
    }
}

/// Cardioid `r = (1 ∓ cos θ)/(2k)`: `sign = +1` selects the branch with the
/// cusp pointing along `+x` (the projection of `F^(o)_{+k}`), `sign = −1` the
/// mirror image.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cardioid {
    pub k: f64,
    pub sign: i8,
}

impl Cardioid {
    pub fn new(k: f64, sign: i8) -> Self {
        assert!(k > 0.0, "cardioid parameter must be positive");
        assert!(sign == 1 || sign == -1);
        Cardioid { k, sign }
    }

    /// Boundary point at polar angle `theta`.
    pub fn point(&self, theta: f64) -> (f64, f64) {
        let r = cardioid_radius(self, theta);
        (r * theta.cos(), r * theta.sin())
    }
}

/// Closed strip `{ (x, y) : lo ≤ x cos φ + y sin φ ≤ hi }`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Strip {
    pub phi: f64,
    pub lo: f64,
    pub hi: f64,
}

impl Strip {
    pub fn new(phi: f64, lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "strip needs lo <= hi");
        Strip { phi, lo, hi }
    }

    /// Symmetric strip `|x cos φ + y sin φ| ≤ halfwidth`.
    pub fn symmetric(phi: f64, halfwidth: f64) -> Self {
        Strip::new(phi, -halfwidth, halfwidth)
    }

    pub fn coordinate(&self, x: f64, y: f64) -> f64 {
        x * self.phi.cos() + y * self.phi.sin()
    }

    /// Positive inside, negative outside, zero on the boundary lines.
    pub fn signed_margin(&self, x: f64, y: f64) -> f64 {
        let c = self.coordinate(x, y);
        (c - self.lo).min(self.hi - c)
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        self.signed_margin(x, y) >= 0.0
    }
}

/// Point `f_{a,b}` of an infinite fan. Its vertical projection satisfies
/// `x cos φ + y sin φ = k`.
pub fn infinite_fan_point(fan: &InfiniteFan, a: f64, b: f64) -> HeisPoint {
    HeisPoint::new(
        Complex64::new(fan.k, a) * Complex64::from_polar(1.0, fan.phi),
        b - 2.0 * fan.k * a,
    )
}

/// The generator fixing `∞` translates fans in its own direction:
/// `F^(∞)_{k e^{iθ₁}} ↦ F^(∞)_{(k+s₁) e^{iθ₁}}`, independent of `t₁`.
///
/// The fan direction must match `theta1` (mod 2π).
pub fn fan_translate_by_a(fan: &InfiniteFan, s1: f64, theta1: f64) -> Result<InfiniteFan> {
    if wrap_angle(fan.phi - theta1).abs() > 1e-9 {
        return Err(Error::FanAngleMismatch {
            expected: theta1,
            got: fan.phi,
        });
    }
    Ok(InfiniteFan::new(fan.k + s1, fan.phi))
}

/// Point of the finite fan `F^(o)_k` in coordinates `(a, b)`:
///
/// ```text
/// x = (−k u + a w)/D,  y = (−a u − k w)/D,  v = −w/D,
/// u = k² + a²,  w = b − 2ka,  D = u² + w².
/// ```
///
/// Equals the involution image of `infinite_fan_point` with `φ = 0`; the
/// denominator never vanishes since `k ≠ 0`.
pub fn finite_fan_point(k: f64, a: f64, b: f64) -> Result<HeisPoint> {
    if k == 0.0 {
        return Err(Error::InvalidParameter("finite fan needs k != 0"));
    }
    let u = k * k + a * a;
    let w = b - 2.0 * k * a;
    let d = u * u + w * w;
    Ok(HeisPoint::new(
        Complex64::new((-k * u + a * w) / d, (-a * u - k * w) / d),
        -w / d,
    ))
}

/// Polar radius of the cardioid at angle `theta`; maximal value `1/k` at
/// `θ = π` (`sign = +1`) or `θ = 0` (`sign = −1`).
pub fn cardioid_radius(c: &Cardioid, theta: f64) -> f64 {
    (1.0 - f64::from(c.sign) * theta.cos()) / (2.0 * c.k)
}

/// Closed-region membership via the quartic
/// `y² ∓ 4kx(x²+y²) − 4k²(x²+y²)² ≥ 0`, with boundary values (within
/// rounding) counted as contained.
pub fn cardioid_contains(c: &Cardioid, x: f64, y: f64) -> bool {
    cardioid_defect(c, x, y) >= -1e-12 * (1.0 + x * x + y * y).powi(2)
}

/// The quartic whose zero set is the cardioid boundary (positive inside).
pub fn cardioid_defect(c: &Cardioid, x: f64, y: f64) -> f64 {
    let r2 = x * x + y * y;
    y * y - f64::from(c.sign) * 4.0 * c.k * x * r2 - 4.0 * c.k * c.k * r2 * r2
}

/// Half-width `cos³(φ/3)/k` of the narrowest strip in direction `φ`
/// containing both cardioids `C_{±k}`; valid for `|φ| ≤ π/2`.
pub fn cardioid_strip_halfwidth(k: f64, phi: f64) -> Result<f64> {
    if k <= 0.0 {
        return Err(Error::InvalidParameter("strip half-width needs k > 0"));
    }
    if phi.abs() > FRAC_PI_2 + 1e-12 {
        return Err(Error::InvalidParameter("strip direction must satisfy |phi| <= pi/2"));
    }
    Ok((phi / 3.0).cos().powi(3) / k)
}

/// The two points of `F^(o)_{±k}` that project onto the boundary of the
/// containing strip; their lifts are
///
/// ```text
/// ( −cos³(φ/3) e^{iφ/3} / k²,  ∓√2 cos²(φ/3) e^{2iφ/3} / k,  1 )ᵗ.
/// ```
pub fn fan_strip_extreme_points(k: f64, phi: f64) -> (BoundaryPoint, BoundaryPoint) {
    assert!(k > 0.0, "extreme points need k > 0");
    let c3 = (phi / 3.0).cos();
    let zeta_mag = c3 * c3 / k;
    let v = -(c3.powi(3)) * (phi / 3.0).sin() / (k * k);
    let dir = Complex64::from_polar(1.0, 2.0 * phi / 3.0);
    (
        BoundaryPoint::finite(dir.scale(-zeta_mag), v),
        BoundaryPoint::finite(dir.scale(zeta_mag), v),
    )
}

/// Recover fan coordinates `(a, b)` of a target point of `F^(o)_k` by damped
/// Newton iteration on the horizontal part, using the analytic Jacobian of
/// the rational chart; the vertical coordinate is then checked as a residual
/// certificate. Returns `None` if the iteration fails to reach `1e-10` or
/// the vertical residual exceeds `1e-8`.
pub fn locate_on_finite_fan(k: f64, target: &HeisPoint) -> Option<(f64, f64)> {
    if k == 0.0 {
        return None;
    }
    // Seed from the involution image, which lies on the infinite fan.
    let seed = match crate::heisenberg::iota_boundary(&BoundaryPoint::Finite(*target)) {
        BoundaryPoint::Finite(q) => q,
        BoundaryPoint::Infinity => return None,
    };
    let mut a = seed.zeta.im;
    let mut b = seed.v + 2.0 * k * a;

    let chart = |a: f64, b: f64| -> (f64, f64, f64) {
        let p = finite_fan_point(k, a, b).expect("k != 0");
        (p.zeta.re, p.zeta.im, p.v)
    };
    let (tx, ty) = (target.zeta.re, target.zeta.im);
    let residual = |a: f64, b: f64| {
        let (x, y, _) = chart(a, b);
        ((x - tx).powi(2) + (y - ty).powi(2)).sqrt()
    };

    let mut res = residual(a, b);
    for _ in 0..60 {
        if res < 1e-12 {
            break;
        }
        let u = k * k + a * a;
        let w = b - 2.0 * k * a;
        let d = u * u + w * w;
        let nx = -k * u + a * w;
        let ny = -a * u - k * w;
        let (du_da, dw_da, dw_db) = (2.0 * a, -2.0 * k, 1.0);
        let dd_da = 2.0 * u * du_da + 2.0 * w * dw_da;
        let dd_db = 2.0 * w * dw_db;
        let dnx_da = -k * du_da + w + a * dw_da;
        let dnx_db = a * dw_db;
        let dny_da = -u - a * du_da - k * dw_da;
        let dny_db = -k * dw_db;
        let jxx = (dnx_da * d - nx * dd_da) / (d * d);
        let jxy = (dnx_db * d - nx * dd_db) / (d * d);
        let jyx = (dny_da * d - ny * dd_da) / (d * d);
        let jyy = (dny_db * d - ny * dd_db) / (d * d);
        let det = jxx * jyy - jxy * jyx;
        if det.abs() < 1e-300 {
            return None;
        }
        let (fx, fy) = (nx / d - tx, ny / d - ty);
        let step_a = (fx * jyy - fy * jxy) / det;
        let step_b = (fy * jxx - fx * jyx) / det;
        // Damping: halve the step until the residual decreases.
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let (na, nb) = (a - lambda * step_a, b - lambda * step_b);
            let nres = residual(na, nb);
            if nres < res {
                a = na;
                b = nb;
                res = nres;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    if res > 1e-10 {
        return None;
    }
    let (_, _, v) = chart(a, b);
    if (v - target.v).abs() > 1e-8 * (1.0 + target.v.abs()) {
        return None;
    }
    Some((a, b))
}
