//! Cygan spheres, isometric spheres and geographic coordinates.
//!
//! The isometric sphere of an element `P` with `P(∞) ≠ ∞` (entry `g ≠ 0`) is
//! the Cygan sphere of radius `1/√|g|` centred at `P⁻¹(∞)`. `P` maps it to the
//! isometric sphere of `P⁻¹` and obeys the inversion law
//!
//! ```text
//! ρ₀(P z, P ∞) · ρ₀(z, P⁻¹ ∞) = r_P².
//! ```
//!
//! Points of the sphere with centre `o` and radius `r` are parametrised by
//! geographic coordinates `(α, β) ∈ [0, π/2] × R/2πZ`:
//!
//! ```text
//! s_{α,β} = ( r √(sin 2α) e^{i(α+β)},  r² cos 2α ).
//! ```

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, TAU};

use crate::error::Error;
use crate::heisenberg::{cygan_distance, heis_mul, BoundaryPoint, HeisPoint};
use crate::linalg::Mat3C;
use crate::Result;

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// Metric sphere for the Cygan metric.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CyganSphere {
    pub center: HeisPoint,
    pub radius: f64,
}

impl CyganSphere {
    /// Radius must be strictly positive.
    pub fn new(center: HeisPoint, radius: f64) -> Self {
        assert!(radius > 0.0, "Cygan sphere radius must be positive");
        CyganSphere { center, radius }
    }

    /// Surface point at geographic coordinates `(α, β)`, obtained by left
    /// translation of the centred chart (left translations are Cygan
    /// isometries, so the result lies at distance `radius` from the centre).
    pub fn surface_point(&self, alpha: f64, beta: f64) -> HeisPoint {
        heis_mul(&self.center, &geographic_point(self.radius, alpha, beta))
    }

    /// Cygan distance from the centre, `+∞` for the point at infinity.
    pub fn distance_from_center(&self, p: &BoundaryPoint) -> f64 {
        match p {
            BoundaryPoint::Infinity => f64::INFINITY,
            BoundaryPoint::Finite(q) => cygan_distance(&self.center, q),
        }
    }

    /// Default boundary band used by [`sphere_side`].
    pub fn default_band(&self) -> f64 {
        1e-9 * (1.0 + self.radius)
    }
}

/// Position of a point relative to a sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SphereSide {
    Interior,
    Boundary,
    Exterior,
}

/// Isometric sphere of `P`: centre `P⁻¹(∞) = (h̄/(√2 ḡ), −Im(j/g))`, radius
/// `1/√|g|`. Elements fixing `∞` (`g = 0`) are rejected.
pub fn isometric_sphere(p: &Mat3C) -> Result<CyganSphere> {
    let g = p.g();
    if g.norm_sqr() == 0.0 {
        return Err(Error::FixesInfinity);
    }
    let center = HeisPoint::new(p.h().conj() / (g.conj() * SQRT2), -(p.j() / g).im);
    Ok(CyganSphere::new(center, 1.0 / g.norm().sqrt()))
}

/// Trichotomy of `ρ₀(p, centre)` against the radius, with a band of width
/// `tol` classified as `Boundary`. The point `∞` is always `Exterior`.
pub fn sphere_side(s: &CyganSphere, p: &BoundaryPoint, tol: f64) -> SphereSide {
    let d = s.distance_from_center(p);
    if d.is_infinite() {
        return SphereSide::Exterior;
    }
    if (d - s.radius).abs() <= tol {
        SphereSide::Boundary
    } else if d < s.radius {
        SphereSide::Interior
    } else {
        SphereSide::Exterior
    }
}

/// Geographic chart on the sphere with centre `o` and radius `r`.
pub fn geographic_point(r: f64, alpha: f64, beta: f64) -> HeisPoint {
    debug_assert!(r > 0.0);
    let horizontal = r * (2.0 * alpha).sin().max(0.0).sqrt();
    HeisPoint::new(
        Complex64::from_polar(horizontal, alpha + beta),
        r * r * (2.0 * alpha).cos(),
    )
}

/// Invert the geographic chart for a point on the sphere of radius `r`
/// centred at `o`: `cos 2α = v/r²`, `β = arg ζ − α`. At the poles
/// (`α ∈ {0, π/2}`) the chart is degenerate and `β` is reported as `0`.
pub fn geographic_coords(r: f64, p: &HeisPoint) -> (f64, f64) {
    let alpha = 0.5 * (p.v / (r * r)).clamp(-1.0, 1.0).acos();
    if alpha <= 0.0 || alpha >= FRAC_PI_2 || p.zeta.norm() == 0.0 {
        (alpha, 0.0)
    } else {
        (alpha, (p.zeta.arg() - alpha).rem_euclid(TAU))
    }
}

/// Largest Cygan distance from `from` to the sphere, estimated with roughly
/// `budget` surface-point evaluations.
///
/// Runs a coarse geographic grid followed by nested zooms around the best
/// cells. Only true surface points are evaluated, so the estimate approaches
/// the maximum from below.
pub fn sampled_max_distance(s: &CyganSphere, from: &HeisPoint, budget: usize) -> f64 {
    assert!(budget >= 100, "refinement needs a reasonable budget");
    let eval = |alpha: f64, beta: f64| cygan_distance(from, &s.surface_point(alpha, beta));

    // Coarse pass over the whole chart.
    let n = (((budget / 2) as f64).sqrt() as usize).clamp(8, 40);
    let mut best: Vec<(f64, f64, f64)> = Vec::new(); // (value, alpha, beta)
    let mut used = 0usize;
    for ia in 0..=n {
        let alpha = FRAC_PI_2 * ia as f64 / n as f64;
        for ib in 0..n {
            let beta = TAU * ib as f64 / n as f64;
            best.push((eval(alpha, beta), alpha, beta));
            used += 1;
        }
    }
    best.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
    best.truncate(4);

    let mut max = best[0].0;
    let per_seed = budget.saturating_sub(used) / best.len();
    let (da0, db0) = (FRAC_PI_2 / n as f64, TAU / n as f64);
    for &(_, a0, b0) in &best {
        let (mut ca, mut cb) = (a0, b0);
        let (mut wa, mut wb) = (da0, db0);
        let mut spent = 0usize;
        while spent + 81 <= per_seed && wa > 1e-12 {
            let (mut bv, mut ba, mut bb) = (f64::NEG_INFINITY, ca, cb);
            for ia in 0..9 {
                let alpha = (ca - wa + wa * ia as f64 / 4.0).clamp(0.0, FRAC_PI_2);
                for ib in 0..9 {
                    let beta = cb - wb + wb * ib as f64 / 4.0;
                    let v = eval(alpha, beta);
                    if v > bv {
                        bv = v;
                        ba = alpha;
                        bb = beta;
                    }
                }
            }
            max = max.max(bv);
            ca = ba;
            cb = bb;
            spent += 81;
            wa *= 0.35;
            wb *= 0.35;
        }
    }
    max
}
