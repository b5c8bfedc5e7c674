//! Maps from the unit hypercube to parameter-space distributions.
//!
//! These transforms carry (R)QMC points to prior and proposal samples; they
//! are deliberately smooth coordinate-wise so the low-discrepancy structure
//! of the input survives.

use nalgebra::{Cholesky, DMatrix, DVector};

use crate::error::Error;

/// Axis-aligned box, the support of the uniform priors.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxBounds {
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl BoxBounds {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self, Error> {
        assert_eq!(lo.len(), hi.len());
        for (j, (&l, &h)) in lo.iter().zip(&hi).enumerate() {
            if !(l < h) {
                return Err(Error::InvalidBoxBounds { component: j, lo: l, hi: h });
            }
        }
        Ok(BoxBounds { lo, hi })
    }

    /// Cube `[lo, hi]^dim`.
    pub fn cube(lo: f64, hi: f64, dim: usize) -> Result<Self, Error> {
        Self::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[f64] {
        &self.lo
    }

    pub fn hi(&self) -> &[f64] {
        &self.hi
    }

    pub fn volume(&self) -> f64 {
        self.lo.iter().zip(&self.hi).map(|(l, h)| h - l).product()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(&v, (&l, &h))| v >= l && v <= h)
    }
}

/// A Gaussian in mean/Cholesky form; `chol * chol^T` is the covariance.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianParams {
    mean: DVector<f64>,
    chol: DMatrix<f64>, // lower triangular
    log_norm: f64,      // -d/2 log(2 pi) - sum log diag(chol)
}

impl GaussianParams {
    pub fn new(mean: DVector<f64>, chol: DMatrix<f64>) -> Self {
        let d = mean.len();
        debug_assert!((0..d).all(|i| chol[(i, i)] > 0.0));
        let log_det_half: f64 = (0..d).map(|i| chol[(i, i)].ln()).sum();
        let log_norm = -0.5 * d as f64 * (2.0 * std::f64::consts::PI).ln() - log_det_half;
        GaussianParams { mean, chol, log_norm }
    }

    /// Factor a covariance matrix, adding diagonal jitter if the plain
    /// Cholesky fails (near-degenerate weighted particle sets).
    pub fn from_mean_cov(mean: DVector<f64>, cov: DMatrix<f64>) -> Result<Self, Error> {
        let d = mean.len();
        if let Some(c) = Cholesky::new(cov.clone()) {
            return Ok(Self::new(mean, c.unpack()));
        }
        let trace: f64 = (0..d).map(|i| cov[(i, i)]).sum();
        let mut jitter = 1e-10 * trace / d as f64;
        if jitter <= 0.0 {
            jitter = 1e-12;
        }
        for _ in 0..40 {
            let mut jittered = cov.clone();
            for i in 0..d {
                jittered[(i, i)] += jitter;
            }
            if let Some(c) = Cholesky::new(jittered) {
                return Ok(Self::new(mean, c.unpack()));
            }
            jitter *= 10.0;
        }
        Err(Error::DegenerateCovariance)
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn mean(&self) -> &DVector<f64> {
        &self.mean
    }

    pub fn chol(&self) -> &DMatrix<f64> {
        &self.chol
    }

    pub fn covariance(&self) -> DMatrix<f64> {
        &self.chol * self.chol.transpose()
    }

    /// Log density at `x`, via one triangular solve.
    pub fn log_density(&self, x: &[f64]) -> f64 {
        let diff = DVector::from_row_slice(x) - &self.mean;
        let z = self
            .chol
            .solve_lower_triangular(&diff)
            .expect("cholesky factor has positive diagonal");
        self.log_norm - 0.5 * z.norm_squared()
    }

    pub fn density(&self, x: &[f64]) -> f64 {
        self.log_density(x).exp()
    }
}

/// Standard-normal quantile, AS 241 (PPND16).
///
/// Absolute error is below 1e-15 for p in (0, 1), comfortably inside the
/// 1e-9 contract.
pub fn inverse_normal_cdf(p: f64) -> Result<f64, Error> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::QuantileOutOfRange(p));
    }
    Ok(ppnd16(p))
}

fn ppnd16(p: f64) -> f64 {
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        return q * poly(&A_CENTRAL, r) / poly(&B_CENTRAL, r);
    }
    let r = if q < 0.0 { p } else { 1.0 - p };
    let r = (-r.ln()).sqrt();
    let x = if r <= 5.0 {
        let r = r - 1.6;
        poly(&C_MIDDLE, r) / poly(&D_MIDDLE, r)
    } else {
        let r = r - 5.0;
        poly(&E_TAIL, r) / poly(&F_TAIL, r)
    };
    if q < 0.0 {
        -x
    } else {
        x
    }
}

fn poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

const A_CENTRAL: [f64; 8] = [
    3.3871328727963666080e0,
    1.3314166789178437745e2,
    1.9715909503065514427e3,
    1.3731693765509461125e4,
    4.5921953931549871457e4,
    6.7265770927008700853e4,
    3.3430575583588128105e4,
    2.5090809287301226727e3,
];
const B_CENTRAL: [f64; 8] = [
    1.0,
    4.2313330701600911252e1,
    6.8718700749205790830e2,
    5.3941960214247511077e3,
    2.1213794301586595867e4,
    3.9307895800092710610e4,
    2.8729085735721942674e4,
    5.2264952788528545610e3,
];
const C_MIDDLE: [f64; 8] = [
    1.42343711074968357734e0,
    4.63033784615654529590e0,
    5.76949722146069140550e0,
    3.64784832476320460504e0,
    1.27045825245236838258e0,
    2.41780725177450611770e-1,
    2.27238449892691845833e-2,
    7.74545014278341407640e-4,
];
const D_MIDDLE: [f64; 8] = [
    1.0,
    2.05319162663775882187e0,
    1.67638483018380384940e0,
    6.89767334985100004550e-1,
    1.48103976427480074590e-1,
    1.51986665636164571966e-2,
    5.47593808499534494600e-4,
    1.05075007164441684324e-9,
];
const E_TAIL: [f64; 8] = [
    6.65790464350110377720e0,
    5.46378491116411436990e0,
    1.78482653991729133580e0,
    2.96560571828504891230e-1,
    2.65321895265761230930e-2,
    1.24266094738807843860e-3,
    2.71155556874348757815e-5,
    2.01033439929228813265e-7,
];
const F_TAIL: [f64; 8] = [
    1.0,
    5.99832206555887937690e-1,
    1.36929880922735805310e-1,
    1.48753612908506148525e-2,
    7.86869131145613259100e-4,
    1.84631831751005468180e-5,
    1.42151175831644588870e-7,
    2.04426310338993978564e-15,
];

/// Clamp a unit-cube coordinate into the band where the quantile transform
/// is finite; matches the clamp applied to randomized point sets.
#[inline]
pub(crate) fn clamp_for_quantile(u: f64) -> f64 {
    u.clamp(crate::lds::UNIT_CLAMP, 1.0 - crate::lds::UNIT_CLAMP)
}

/// Componentwise affine map of a unit point onto a box.
pub fn box_map(u: &[f64], b: &BoxBounds) -> Vec<f64> {
    debug_assert_eq!(u.len(), b.dim());
    u.iter()
        .zip(b.lo.iter().zip(&b.hi))
        .map(|(&ui, (&l, &h))| l + ui * (h - l))
        .collect()
}

/// `mean + chol * Phi^{-1}(u)` componentwise; the quantile transform that
/// carries a point set onto a Gaussian while preserving its structure.
pub fn gaussian_map(u: &[f64], g: &GaussianParams) -> Vec<f64> {
    debug_assert_eq!(u.len(), g.dim());
    let z = DVector::from_iterator(u.len(), u.iter().map(|&ui| ppnd16(clamp_for_quantile(ui))));
    (g.mean() + &g.chol * z).iter().copied().collect()
}

/// Measure-preserving map of the unit square onto the triangle
/// `{0 < gamma < alpha, alpha + gamma < 1}` (constant density 4).
///
/// Built as the inverse Rosenblatt transform: `alpha` through the inverse
/// marginal CDF of `u1`, then `gamma` uniform on `(0, min(alpha, 1-alpha))`.
/// Both coordinates are strictly monotone in their inputs, so the map is
/// injective on the open square.
pub fn triangle_map(u: [f64; 2]) -> (f64, f64) {
    let [u1, u2] = u;
    // marginal density of alpha is 4*min(a, 1-a); CDF 2a^2 on [0, 1/2]
    let alpha = if u1 <= 0.5 {
        (u1 / 2.0).sqrt()
    } else {
        1.0 - ((1.0 - u1) / 2.0).sqrt()
    };
    let gamma = u2 * alpha.min(1.0 - alpha);
    (alpha, gamma)
}

/// Density of the triangle prior at `(alpha, gamma)`: 4 on the support,
/// 0 outside.
pub fn triangle_density(alpha: f64, gamma: f64) -> f64 {
    if gamma >= 0.0 && gamma < alpha && alpha + gamma <= 1.0 {
        4.0
    } else {
        0.0
    }
}
