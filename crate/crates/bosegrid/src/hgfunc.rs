//! Hermite-Gauss functions: the boson number states in the field amplitude
//! basis, their Fourier transforms, tail weights and tail-weight bounds.
//!
//! `phi_n(phi) = (m0/pi)^{1/4} (2^n n!)^{-1/2} exp(-m0 phi^2/2) H_n(sqrt(m0) phi)`
//!
//! Evaluation runs the normalized three-term recurrence on the scaled
//! function itself, never on `H_n` and the Gaussian separately: the bare
//! polynomial overflows near `n = 90` while the scaled recurrence with
//! exponent tracking stays finite past `n = 1000` and for arguments deep in
//! the Gaussian tail.

use crate::quad::integrate_tail;
use crate::{Error, Result};
use num_complex::Complex64;

const LN_2: f64 = std::f64::consts::LN_2;
const PI: f64 = std::f64::consts::PI;

/// Rescale the running pair whenever magnitudes leave `[2^-512, 2^512]`.
const RESCALE_EXP: i32 = 512;

/// A family of Hermite-Gauss functions with a fixed boson mass, evaluable up
/// to `max_order`.
#[derive(Debug, Clone, Copy)]
pub struct HGBasis {
    pub mass: f64,
    pub max_order: usize,
}

impl HGBasis {
    pub fn new(mass: f64, max_order: usize) -> Result<Self> {
        if !(mass > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "boson mass must be positive, got {mass}"
            )));
        }
        Ok(Self { mass, max_order })
    }

    pub fn eval(&self, n: usize, phi: f64) -> f64 {
        assert!(n <= self.max_order);
        eval_hg(n, self.mass, phi)
    }

    pub fn eval_ft(&self, n: usize, kappa: f64) -> Complex64 {
        assert!(n <= self.max_order);
        eval_hg_ft(n, self.mass, kappa)
    }
}

/// Unit-mass Hermite function `psi_n(x)` via the scaled recurrence
/// `psi_{n+1} = sqrt(2/(n+1)) x psi_n - sqrt(n/(n+1)) psi_{n-1}`,
/// with a power-of-two exponent carried separately.
fn eval_unit(n: usize, x: f64) -> f64 {
    let ln_scale = -0.5 * x * x - 0.25 * PI.ln();
    if n == 0 {
        return ln_scale.exp();
    }
    let mut prev = 1.0_f64; // psi_0 / e^{ln_scale}
    let mut cur = std::f64::consts::SQRT_2 * x;
    let mut exp2 = 0i64;
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        let mag = cur.abs().max(prev.abs());
        if mag > f64::powi(2.0, RESCALE_EXP) || (mag > 0.0 && mag < f64::powi(2.0, -RESCALE_EXP)) {
            let shift = -(mag.log2().round() as i64);
            let factor = f64::powi(2.0, shift.clamp(-1000, 1000) as i32);
            cur *= factor;
            prev *= factor;
            exp2 -= shift;
        }
    }
    if cur == 0.0 {
        return 0.0;
    }
    let total = ln_scale + exp2 as f64 * LN_2 + cur.abs().ln();
    cur.signum() * total.exp()
}

/// All orders `0..=n_max` at one argument, single recurrence pass.
///
/// Entries whose magnitude underflows double precision come back as zero.
fn eval_unit_all(n_max: usize, x: f64, out: &mut [f64]) {
    debug_assert!(out.len() == n_max + 1);
    let ln_scale = -0.5 * x * x - 0.25 * PI.ln();
    // scale = e^{ln_scale} * 2^{exp2}, applied lazily to each emitted value
    let mut exp2 = 0i64;
    let mut scale = ln_scale.exp();
    let mut prev = 1.0_f64;
    let mut cur = std::f64::consts::SQRT_2 * x;
    out[0] = prev * scale;
    if n_max == 0 {
        return;
    }
    out[1] = cur * scale;
    for k in 1..n_max {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        let mag = cur.abs().max(prev.abs());
        if mag > f64::powi(2.0, RESCALE_EXP) || (mag > 0.0 && mag < f64::powi(2.0, -RESCALE_EXP)) {
            let shift = -(mag.log2().round() as i64);
            let factor = f64::powi(2.0, shift.clamp(-1000, 1000) as i32);
            cur *= factor;
            prev *= factor;
            exp2 -= shift;
            let total = ln_scale + exp2 as f64 * LN_2;
            scale = total.exp();
        }
        out[k + 1] = cur * scale;
    }
}

/// `phi_n(phi)` for boson mass `m0`.
pub fn eval_hg(n: usize, m0: f64, phi: f64) -> f64 {
    debug_assert!(m0 > 0.0);
    m0.powf(0.25) * eval_unit(n, m0.sqrt() * phi)
}

/// `phi_n(phi_i)` for all orders `0..=n_max` at one field value.
pub fn eval_hg_all(n_max: usize, m0: f64, phi: f64, out: &mut [f64]) {
    debug_assert!(m0 > 0.0);
    eval_unit_all(n_max, m0.sqrt() * phi, out);
    let amp = m0.powf(0.25);
    for v in out.iter_mut() {
        *v *= amp;
    }
}

/// Fourier transform of `phi_n`: `(-i)^n` times a Hermite-Gauss of inverse
/// mass, `hat phi_n(kappa) = (-i)^n phi_n(kappa; 1/m0)`.
pub fn eval_hg_ft(n: usize, m0: f64, kappa: f64) -> Complex64 {
    let magnitude = eval_hg(n, 1.0 / m0, kappa);
    phase_minus_i_pow(n) * magnitude
}

/// `(-i)^n` as an exact complex unit.
pub fn phase_minus_i_pow(n: usize) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

/// Tail weight `||w_F^{phi_n}||`: the L2 norm of `phi_n` outside `[-F, F]`.
///
/// The conjugate-side weight is the same quantity at inverse mass:
/// `||w_K|| = tail_weight(n, 1/m0, K)`.
pub fn tail_weight(n: usize, m0: f64, window: f64) -> Result<f64> {
    if !(window > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tail window must be positive, got {window}"
        )));
    }
    // even integrand: twice the right tail
    let sq = integrate_tail(|phi| eval_hg(n, m0, phi).powi(2), window, 1e-15, 1e-11)?;
    Ok((2.0 * sq).max(0.0).sqrt())
}

/// Tail weight of `phi * phi_n(phi)` outside `[-F, F]` (the `r_F` moment).
pub fn tail_moment(n: usize, m0: f64, window: f64) -> Result<f64> {
    if !(window > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tail window must be positive, got {window}"
        )));
    }
    let sq = integrate_tail(
        |phi| (phi * eval_hg(n, m0, phi)).powi(2),
        window,
        1e-15,
        1e-11,
    )?;
    Ok((2.0 * sq).max(0.0).sqrt())
}

/// Field- and conjugate-side tail data of a wavefunction on windows `F`, `K`.
#[derive(Debug, Clone, Copy, Default)]
pub struct TailWeights {
    /// `||w_F||`, field tail weight.
    pub w_f: f64,
    /// `||w_K||`, conjugate-field tail weight.
    pub w_k: f64,
    /// second-moment field tail `r_F`
    pub r_f: f64,
    /// second-moment conjugate tail `r_K`
    pub r_k: f64,
    /// `|f(-F)|^2, |f(F)|^2`
    pub boundary_f: [f64; 2],
    /// `|fhat(-K)|^2, |fhat(K)|^2`
    pub boundary_fhat: [f64; 2],
}

impl TailWeights {
    /// Tail data of the Hermite-Gauss state `phi_n` with mass `m0`.
    ///
    /// Conjugate-side quantities follow from the inverse-mass symmetry of
    /// the Fourier transform.
    pub fn of_hg(n: usize, m0: f64, window_f: f64, window_k: f64) -> Result<Self> {
        let w_f = tail_weight(n, m0, window_f)?;
        let w_k = tail_weight(n, 1.0 / m0, window_k)?;
        let r_f = tail_moment(n, m0, window_f)?;
        let r_k = tail_moment(n, 1.0 / m0, window_k)?;
        let bf = eval_hg(n, m0, window_f).powi(2);
        let bk = eval_hg(n, 1.0 / m0, window_k).powi(2);
        Ok(Self {
            w_f,
            w_k,
            r_f,
            r_k,
            boundary_f: [bf, bf],
            boundary_fhat: [bk, bk],
        })
    }
}

fn ln_factorial(n: usize) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

/// Stirling-form tail bound on `||w^{phi_n}||` for the symmetric window
/// `F = L/sqrt(m0)`, `K = L sqrt(m0)`:
/// `eps_w^2 <= (1/(L sqrt(pi))) 2^n L^{2n} e^{-L^2} / n!`.
pub fn tail_bound(n: usize, l: f64) -> f64 {
    assert!(l > 0.0, "window parameter must be positive");
    let nf = n as f64;
    let ln_sq = -l.ln() - 0.5 * PI.ln() + nf * LN_2 + 2.0 * nf * l.ln() - ln_factorial(n) - l * l;
    (0.5 * ln_sq).exp()
}

/// Grid form of the tail bound at `L^2 = pi N_phi / 2`:
/// `eps_w ~ pi^{-3/2} e^{-pi N/4} N^{(2n-1)/4} n^{-n/2} (pi e)^{n/2} n^{-1/4}`.
///
/// The Stirling factors are singular at `n = 0`; there the pre-Stirling form
/// (exact `0! = 1`) is used instead.
pub fn tail_bound_grid(n: usize, n_phi: usize) -> f64 {
    assert!(n_phi >= 2);
    let big_n = n_phi as f64;
    if n == 0 {
        let l = (0.5 * PI * big_n).sqrt();
        return tail_bound(0, l);
    }
    let nf = n as f64;
    let ln_val = -1.5 * PI.ln() - 0.25 * PI * big_n + 0.25 * (2.0 * nf - 1.0) * big_n.ln()
        - 0.5 * nf * nf.ln()
        + 0.5 * nf * (PI.ln() + 1.0)
        - 0.25 * nf.ln();
    ln_val.exp()
}
