//! Finite R-circles in normalized position and their Cygan diameter.
//!
//! A finite R-circle is the fixed-point set of an anti-holomorphic involution
//! and a meridian of a Cygan sphere; its radius `r` is the Cygan distance from
//! the sphere centre (here normalized to `o`) to any of its points. In
//! normalized position the circle is
//!
//! ```text
//! R = { p_{α,ε} = ( ε r √(sin 2α) e^{iα},  r² cos 2α ) : α ∈ [0, π/2], ε = ±1 },
//! ```
//!
//! fixed pointwise (projectively) by `ι_R : (z₁, z₂, z₃) ↦ (z̄₃ r², −i z̄₂, z̄₁/r²)`.
//! The Cygan distance between two of its points collapses to
//!
//! ```text
//! ρ₀(p_{α,ε}, p_{θ,η}) = √2 · r · | sin^{1/2}α cos^{1/2}θ − ηε cos^{1/2}α sin^{1/2}θ |,
//! ```
//!
//! and the maximum over `(θ, η)` — the diameter of `R` at `p_α` — is the
//! closed form `√2 · r · (cos^{2/3}α + sin^{2/3}α)^{3/4}`, checked here by an
//! independent grid + golden-section oracle.
//!
//! Arbitrary finite R-circles are handled by conjugating their data into this
//! normal form with a Cygan isometry.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::heisenberg::HeisPoint;
use crate::linalg::{AntiHolMap, Mat3C};
use crate::util::golden_section_max;

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// Finite R-circle of radius `r > 0` with `ι_R(∞) = o`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalizedRCircle {
    pub r: f64,
}

impl NormalizedRCircle {
    pub fn new(r: f64) -> Self {
        assert!(r > 0.0, "R-circle radius must be positive");
        NormalizedRCircle { r }
    }

    pub fn point(&self, alpha: f64, eps: f64) -> HeisPoint {
        rcircle_point(self.r, alpha, eps)
    }

    pub fn involution(&self) -> AntiHolMap {
        iota_r(self.r)
    }

    pub fn diameter_at(&self, alpha: f64) -> f64 {
        diameter(self.r, alpha)
    }
}

/// The point `p_{α,ε}` of the normalized R-circle.
///
/// Lies at Cygan distance `r` from `o`; its Cartan invariant against `(o, ∞)`
/// is `2α − π/2`.
pub fn rcircle_point(r: f64, alpha: f64, eps: f64) -> HeisPoint {
    debug_assert!(r > 0.0);
    debug_assert!(eps == 1.0 || eps == -1.0);
    let horizontal = eps * r * (2.0 * alpha).sin().max(0.0).sqrt();
    HeisPoint::new(
        Complex64::from_polar(1.0, alpha).scale(horizontal),
        r * r * (2.0 * alpha).cos(),
    )
}

/// The anti-holomorphic involution fixing the normalized R-circle:
/// `(z₁, z₂, z₃) ↦ (z̄₃ r², −i z̄₂, z̄₁ / r²)`. It is a conjugate-linear
/// isometry of the Hermitian form and maps the lift of `∞` to a lift of `o`.
pub fn iota_r(r: f64) -> AntiHolMap {
    debug_assert!(r > 0.0);
    let zero = Complex64::new(0.0, 0.0);
    AntiHolMap::new(Mat3C([
        [zero, zero, Complex64::new(r * r, 0.0)],
        [zero, Complex64::new(0.0, -1.0), zero],
        [Complex64::new(1.0 / (r * r), 0.0), zero, zero],
    ]))
}

/// Closed-form Cygan distance between `p_{α,ε}` and `p_{θ,η}`.
pub fn pair_distance(r: f64, alpha: f64, eps: f64, theta: f64, eta: f64) -> f64 {
    debug_assert!(r > 0.0);
    let term = alpha.sin().max(0.0).sqrt() * theta.cos().max(0.0).sqrt()
        - eta * eps * alpha.cos().max(0.0).sqrt() * theta.sin().max(0.0).sqrt();
    SQRT2 * r * term.abs()
}

/// Diameter of the R-circle at `p_α`:
/// `d_α = √2 · r · (cos^{2/3}α + sin^{2/3}α)^{3/4}` — between `√2 r` (attained
/// exactly at `α ∈ {0, π/2}`) and `2r` (attained exactly at `α = π/4`).
pub fn diameter(r: f64, alpha: f64) -> f64 {
    debug_assert!(r > 0.0 && (0.0..=FRAC_PI_2 + 1e-12).contains(&alpha));
    let s = alpha.sin().max(0.0).powf(2.0 / 3.0);
    let c = alpha.cos().max(0.0).powf(2.0 / 3.0);
    SQRT2 * r * (s + c).powf(0.75)
}

/// Brute-force oracle for [`diameter`]: maximize [`pair_distance`] over a grid
/// of `n` points of `(θ, η)` and refine each sign branch with golden-section
/// search. Independent of the closed form.
pub fn diameter_bruteforce(r: f64, alpha: f64, n: usize) -> f64 {
    assert!(n >= 100, "oracle needs at least 100 grid points");
    let mut best = 0.0_f64;
    let m = n / 2;
    for &eta in &[1.0, -1.0] {
        let f = |theta: f64| pair_distance(r, alpha, 1.0, theta, eta);
        let mut grid_best = (0.0_f64, 0.0_f64); // (value, theta)
        for i in 0..=m {
            let theta = FRAC_PI_2 * i as f64 / m as f64;
            let v = f(theta);
            if v > grid_best.0 {
                grid_best = (v, theta);
            }
        }
        // |f| is smooth and unimodal on each branch away from its zero, so a
        // golden-section pass around the grid argmax nails the maximum.
        let step = FRAC_PI_2 / m as f64;
        let lo = (grid_best.1 - 2.0 * step).max(0.0);
        let hi = (grid_best.1 + 2.0 * step).min(FRAC_PI_2);
        let (_, refined) = golden_section_max(f, lo, hi, 80);
        best = best.max(grid_best.0).max(refined);
    }
    best
}

/// Interior maximizer of `f_α(θ) = sin^{1/2}α cos^{1/2}θ + cos^{1/2}α sin^{1/2}θ`
/// on `[0, π/2]` and its value `(sin^{2/3}α + cos^{2/3}α)^{3/4}`.
///
/// The critical point satisfies `cos^{1/2}θ₀ = sin^{1/6}α / (sin^{2/3}α + cos^{2/3}α)^{1/4}`.
pub fn f_alpha_max(alpha: f64) -> (f64, f64) {
    let s = alpha.sin().max(0.0);
    let c = alpha.cos().max(0.0);
    let sum = s.powf(2.0 / 3.0) + c.powf(2.0 / 3.0);
    let cos_theta0 = (s.powf(1.0 / 3.0) / sum.sqrt()).clamp(-1.0, 1.0);
    (cos_theta0.acos(), sum.powf(0.75))
}
