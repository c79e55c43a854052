//! The radial Green function of the invariant Laplacian on the ball and the
//! two-point kernel built from it.
//!
//! `g(r) = (n+1)/(2n) * int_r^1 (1-t^2)^{n-1} t^{-2n+1} dt` has an exact
//! closed form through the binomial expansion of the integrand (one
//! logarithmic term); adaptive quadrature of the defining integral is kept as
//! an independent evaluation policy and oracle.

use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::geometry::{mobius_norm_sqr_raw, Point};
use crate::quad;

/// Distance to the singularity below which evaluation is an error rather
/// than a large number; potentials must exclude atoms at the evaluation
/// point explicitly.
pub const POLE_EPS: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalPolicy {
    /// Exact binomial antiderivative (default).
    ClosedForm,
    /// Adaptive quadrature of the defining integral (oracle).
    AdaptiveQuadrature,
}

/// Dimension plus evaluation policy for the radial Green function.
#[derive(Debug, Clone)]
pub struct GreenKernelParams {
    pub n: usize,
    pub policy: EvalPolicy,
    pub quad_tol: f64,
}

impl GreenKernelParams {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("dimension n must be >= 1"));
        }
        Ok(GreenKernelParams { n, policy: EvalPolicy::ClosedForm, quad_tol: 1e-12 })
    }

    pub fn with_policy(mut self, policy: EvalPolicy) -> Self {
        self.policy = policy;
        self
    }

    /// Leading coefficient of `g(r) * r^{2n-2}` as `r -> 0` for `n > 1`:
    /// the k = 0 binomial term gives `(n+1) / (4n(n-1))`.
    pub fn asymptotic_coefficient(&self) -> Option<f64> {
        if self.n > 1 {
            let n = self.n as f64;
            Some((n + 1.0) / (4.0 * n * (n - 1.0)))
        } else {
            None
        }
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut acc = 1.0f64;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc
}

/// Closed form of the defining integral via term-by-term antiderivatives of
/// the binomial expansion `(1-t^2)^{n-1} t^{1-2n} = sum_k C(n-1,k)(-1)^k
/// t^{2k-2n+1}`; the k = n-1 term integrates to `ln(1/r)`.
fn little_g_closed(n: usize, r: f64) -> f64 {
    let nf = n as f64;
    let mut acc = 0.0f64;
    for k in 0..n {
        let coeff = binomial(n - 1, k) * if k % 2 == 0 { 1.0 } else { -1.0 };
        if k + 1 == n {
            acc += coeff * (1.0 / r).ln();
        } else {
            let e = 2.0 * k as f64 - 2.0 * nf + 2.0;
            acc += coeff * (1.0 - r.powf(e)) / e;
        }
    }
    (nf + 1.0) / (2.0 * nf) * acc
}

fn little_g_quadrature(n: usize, r: f64, tol: f64) -> f64 {
    let nf = n as f64;
    let integrand = move |t: f64| (1.0 - t * t).powi(n as i32 - 1) * t.powf(1.0 - 2.0 * nf);
    (nf + 1.0) / (2.0 * nf) * quad::integrate(integrand, r, 1.0, tol)
}

/// The radial Green function at radius `r` in (0, 1].
///
/// Strictly decreasing; `g(1) = 0`; diverges at the origin (like
/// `r^{-2n+2}` for n > 1, logarithmically for n = 1).
pub fn little_g(r: f64, params: &GreenKernelParams) -> Result<f64> {
    if !(r > 0.0) || r > 1.0 {
        if r <= 0.0 {
            return Err(Error::Pole { context: format!("g pole at r = {r} (n = {})", params.n) });
        }
        return Err(Error::invalid(format!("radius {r} outside (0, 1]")));
    }
    if r < POLE_EPS {
        return Err(Error::Pole { context: format!("g evaluated within {POLE_EPS} of the origin") });
    }
    Ok(match params.policy {
        EvalPolicy::ClosedForm => little_g_closed(params.n, r),
        EvalPolicy::AdaptiveQuadrature => little_g_quadrature(params.n, r, params.quad_tol),
    })
}

/// The invariant Green kernel `G(z, w) = g(|phi_w(z)|)`; symmetric in
/// (z, w) because `|phi_w(z)| = |phi_z(w)|`.
pub fn green_g(z: &Point, w: &Point, params: &GreenKernelParams) -> Result<f64> {
    if z.dim() != w.dim() {
        return Err(Error::DimensionMismatch { expected: z.dim(), got: w.dim() });
    }
    let zn = z.norm_sqr();
    let wn = w.norm_sqr();
    if zn >= 1.0 {
        return Err(Error::OutsideOpenBall { norm: zn.sqrt() });
    }
    if wn >= 1.0 {
        return Err(Error::OutsideOpenBall { norm: wn.sqrt() });
    }
    let rho = mobius_norm_sqr_raw(z.coords(), zn, w.coords(), wn).sqrt();
    if rho < POLE_EPS {
        return Err(Error::Pole {
            context: format!("G(z, w) pole: |phi_w(z)| = {rho} below {POLE_EPS}"),
        });
    }
    little_g(rho, params)
}

/// Raw kernel evaluation on prepared coordinates (hot path for potentials).
/// Returns the pole error exactly as [`green_g`].
#[inline]
pub(crate) fn green_g_raw(
    z: &[num_complex::Complex64],
    zn: f64,
    w: &[num_complex::Complex64],
    wn: f64,
    params: &GreenKernelParams,
) -> Result<f64> {
    let rho = mobius_norm_sqr_raw(z, zn, w, wn).sqrt();
    if rho < POLE_EPS {
        return Err(Error::Pole {
            context: format!("G(z, w) pole: |phi_w(z)| = {rho} below {POLE_EPS}"),
        });
    }
    Ok(match params.policy {
        EvalPolicy::ClosedForm => little_g_closed(params.n, rho),
        EvalPolicy::AdaptiveQuadrature => little_g_quadrature(params.n, rho, params.quad_tol),
    })
}

/// Outcome of checking the explicit radial bounds at one point.
#[derive(Debug, Clone, Copy)]
pub struct LemmaBounds {
    /// `g(z) >= (n+1)/(4n^2) (1-|z|^2)^n` (exact inequality, no tolerance).
    pub lower_ok: bool,
    /// `g(z) / (1-|z|^2)^n` below a per-n constant fitted on `|z| >= 1/2`;
    /// vacuously true for `|z| < 1/2`.
    pub upper_ok: bool,
    /// `g(z) * |z|^{2n-2}`, bounded for small `|z|` when n > 1.
    pub asymp_ratio: f64,
}

/// Explicit lower-bound constant `(n+1)/(4n^2)`.
pub fn lower_bound_coefficient(n: usize) -> f64 {
    let nf = n as f64;
    (nf + 1.0) / (4.0 * nf * nf)
}

// Fitted upper-bound ratios per dimension, computed once from a dense grid
// on [1/2, 1) with a 5% margin. The ratio g/(1-r^2)^n is decreasing there,
// but fit rather than assume.
static UPPER_RATIO_CACHE: Mutex<Vec<(usize, f64)>> = Mutex::new(Vec::new());

fn upper_ratio_bound(n: usize) -> f64 {
    let mut cache = UPPER_RATIO_CACHE.lock().unwrap();
    if let Some(&(_, v)) = cache.iter().find(|(m, _)| *m == n) {
        return v;
    }
    let mut sup: f64 = 0.0;
    let steps = 4096;
    for i in 0..steps {
        let r = 0.5 + 0.5 * (i as f64 + 0.5) / steps as f64;
        let ratio = little_g_closed(n, r) / (1.0 - r * r).powi(n as i32);
        sup = sup.max(ratio);
    }
    let bound = sup * 1.05;
    cache.push((n, bound));
    bound
}

/// Check the explicit radial bounds at `z` (pre: 0 < |z| < 1).
pub fn lemma_bounds(z: &Point, params: &GreenKernelParams) -> Result<LemmaBounds> {
    let r = z.norm();
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::invalid(format!("|z| = {r} outside (0, 1)")));
    }
    let n = params.n;
    let g = little_g(r, params)?;
    let one_minus = (1.0 - r * r).powi(n as i32);
    let lower_ok = g >= lower_bound_coefficient(n) * one_minus;
    let upper_ok = if r >= 0.5 { g / one_minus <= upper_ratio_bound(n) } else { true };
    let asymp_ratio = g * r.powi(2 * n as i32 - 2);
    Ok(LemmaBounds { lower_ok, upper_ok, asymp_ratio })
}
