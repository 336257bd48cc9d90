//! Nyquist-Shannon sampling on symmetric half-integer grids: sinc
//! reconstruction, the finite Fourier transform with half-integer phase
//! convention, aliased functions, and the sampling-error bounds (single site
//! and lattice).

use crate::hgfunc::TailWeights;
use crate::{Error, Result};
use num_complex::Complex64;

const PI: f64 = std::f64::consts::PI;
const TAU: f64 = std::f64::consts::TAU;

/// `sin(pi x)/(pi x)`, series-stabilized near zero and exactly zero at
/// nonzero integers (argument reduction would otherwise leave `~eps`-size
/// residue at the sampling nodes).
pub fn sinc(x: f64) -> f64 {
    if x != 0.0 && x == x.round() {
        return 0.0;
    }
    let z = PI * x;
    if z.abs() < 1e-4 {
        let z2 = z * z;
        1.0 - z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sin() / z
    }
}

/// Discretization geometry: `N_phi` points at half-integer indices
/// `j = -(N-1)/2 .. (N-1)/2`, field spacing `delta_phi`, conjugate spacing
/// `delta_kappa`, with `delta_phi * delta_kappa = 2 pi / N_phi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingGrid {
    pub n_points: usize,
    pub delta_phi: f64,
    pub delta_kappa: f64,
}

impl SamplingGrid {
    pub fn new(n_points: usize, delta_phi: f64, delta_kappa: f64) -> Result<Self> {
        if n_points < 2 || n_points % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "grid size must be even and >= 2, got {n_points}"
            )));
        }
        if !(delta_phi > 0.0) || !(delta_kappa > 0.0) {
            return Err(Error::InvalidArgument(
                "grid spacings must be positive".into(),
            ));
        }
        let product = delta_phi * delta_kappa;
        let want = TAU / n_points as f64;
        if ((product - want) / want).abs() > 1e-14 {
            return Err(Error::InvalidArgument(format!(
                "delta_phi * delta_kappa = {product:e} differs from 2 pi / N = {want:e}"
            )));
        }
        Ok(Self {
            n_points,
            delta_phi,
            delta_kappa,
        })
    }

    /// Grid for boson mass `m0`: `delta_phi = sqrt(2 pi/(N m0))`,
    /// `delta_kappa = sqrt(2 pi m0/N)`.
    pub fn for_mass(n_points: usize, m0: f64) -> Result<Self> {
        if !(m0 > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "boson mass must be positive, got {m0}"
            )));
        }
        let n = n_points as f64;
        Self::new(n_points, (TAU / (n * m0)).sqrt(), (TAU * m0 / n).sqrt())
    }

    /// Half-integer index of storage slot `t`.
    pub fn index(&self, t: usize) -> f64 {
        t as f64 - (self.n_points as f64 - 1.0) / 2.0
    }

    pub fn phi_at(&self, t: usize) -> f64 {
        self.index(t) * self.delta_phi
    }

    pub fn kappa_at(&self, t: usize) -> f64 {
        self.index(t) * self.delta_kappa
    }

    /// Field half-window `F = N delta_phi / 2`.
    pub fn window_f(&self) -> f64 {
        self.n_points as f64 * self.delta_phi / 2.0
    }

    /// Conjugate half-window `K = N delta_kappa / 2`.
    pub fn window_k(&self) -> f64 {
        self.n_points as f64 * self.delta_kappa / 2.0
    }

    /// The grid's boson mass `m = K/F = delta_kappa/delta_phi`.
    pub fn mass(&self) -> f64 {
        self.delta_kappa / self.delta_phi
    }

    /// Forward finite Fourier transform of a sample vector:
    /// `out_p = N^{-1/2} sum_j in_j exp(-i 2 pi j p / N)` with half-integer
    /// `j`, `p`.
    pub fn fft_forward(&self, values: &[Complex64]) -> Vec<Complex64> {
        self.fft_impl(values, -1.0)
    }

    /// Inverse transform (conjugate phases).
    pub fn fft_inverse(&self, values: &[Complex64]) -> Vec<Complex64> {
        self.fft_impl(values, 1.0)
    }

    fn fft_impl(&self, values: &[Complex64], sign: f64) -> Vec<Complex64> {
        let n = self.n_points;
        assert_eq!(values.len(), n);
        let norm = 1.0 / (n as f64).sqrt();
        (0..n)
            .map(|u| {
                let ju = self.index(u);
                let mut acc = Complex64::new(0.0, 0.0);
                for (t, v) in values.iter().enumerate() {
                    let phase = sign * TAU * self.index(t) * ju / n as f64;
                    acc += v * Complex64::from_polar(1.0, phase);
                }
                acc * norm
            })
            .collect()
    }
}

/// Raw samples `f(phi_i)` on a grid (no `sqrt(delta_phi)` factor).
#[derive(Debug, Clone)]
pub struct SampledFunction {
    pub grid: SamplingGrid,
    pub values: Vec<Complex64>,
}

impl SampledFunction {
    pub fn new(grid: SamplingGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n_points {
            return Err(Error::DimensionMismatch(format!(
                "{} samples on a {}-point grid",
                values.len(),
                grid.n_points
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn sample(grid: SamplingGrid, f: impl Fn(f64) -> Complex64) -> Self {
        let values = (0..grid.n_points).map(|t| f(grid.phi_at(t))).collect();
        Self { grid, values }
    }
}

/// Truncated sinc series `sum_i f(phi_i) sinc((phi - phi_i)/delta_phi)`.
pub fn reconstruct(s: &SampledFunction, phi: f64) -> Complex64 {
    let d = s.grid.delta_phi;
    s.values
        .iter()
        .enumerate()
        .map(|(t, v)| v * sinc((phi - s.grid.phi_at(t)) / d))
        .sum()
}

/// A wavefunction with evaluable field and conjugate-field forms plus tail
/// data; the closed interface the sampling bounds need.
pub trait FieldFunction {
    fn eval(&self, phi: f64) -> Complex64;
    fn eval_ft(&self, kappa: f64) -> Complex64;
    fn tail_weights(&self, window_f: f64, window_k: f64) -> Result<TailWeights>;
}

/// A Hermite-Gauss state as a [`FieldFunction`].
#[derive(Debug, Clone, Copy)]
pub struct HGState {
    pub n: usize,
    pub m0: f64,
}

impl FieldFunction for HGState {
    fn eval(&self, phi: f64) -> Complex64 {
        Complex64::new(crate::hgfunc::eval_hg(self.n, self.m0, phi), 0.0)
    }

    fn eval_ft(&self, kappa: f64) -> Complex64 {
        crate::hgfunc::eval_hg_ft(self.n, self.m0, kappa)
    }

    fn tail_weights(&self, window_f: f64, window_k: f64) -> Result<TailWeights> {
        TailWeights::of_hg(self.n, self.m0, window_f, window_k)
    }
}

/// Right-hand sides of the sampling-error bounds on `||f - f~_phi||` (field
/// reconstruction) and `||f - f~_kappa||` (conjugate reconstruction):
///
/// `||w_K|| + ||w_F|| + pi r_K/(2K) + sqrt(pi/(2K) (|f(-F)|^2 + |f(F)|^2))`
///
/// and the mirrored expression with `F` and `K` exchanged.
pub fn sampling_error_bound(t: &TailWeights, window_f: f64, window_k: f64) -> (f64, f64) {
    let field_side = t.w_k
        + t.w_f
        + PI * t.r_k / (2.0 * window_k)
        + (PI / (2.0 * window_k) * (t.boundary_f[0] + t.boundary_f[1])).sqrt();
    let conj_side = t.w_k
        + t.w_f
        + PI * t.r_f / (2.0 * window_f)
        + (PI / (2.0 * window_f) * (t.boundary_fhat[0] + t.boundary_fhat[1])).sqrt();
    (field_side, conj_side)
}

/// Convergence cutoff for the alias sums: a shifted copy whose largest
/// modulus falls below this is dropped.
const ALIAS_TERM_FLOOR: f64 = 1e-16;
const ALIAS_MAX_PERIODS: i64 = 64;

/// Field-side aliased samples
/// `f_a(phi_i) = sqrt(delta_phi) sum_n (-1)^n f(phi_i + n N delta_phi)`.
pub fn alias(f: &dyn FieldFunction, grid: &SamplingGrid) -> Result<Vec<Complex64>> {
    alias_impl(grid, grid.delta_phi, |x| f.eval(x))
}

/// Conjugate-side aliased samples
/// `fhat_a(kappa_p) = sqrt(delta_kappa) sum_n (-1)^n fhat(kappa_p + n N delta_kappa)`.
pub fn alias_ft(f: &dyn FieldFunction, grid: &SamplingGrid) -> Result<Vec<Complex64>> {
    alias_impl(grid, grid.delta_kappa, |x| f.eval_ft(x))
}

fn alias_impl(
    grid: &SamplingGrid,
    delta: f64,
    eval: impl Fn(f64) -> Complex64,
) -> Result<Vec<Complex64>> {
    let n = grid.n_points;
    let period = n as f64 * delta;
    let mut acc: Vec<Complex64> = (0..n).map(|t| eval(grid.index(t) * delta)).collect();
    for shift in 1..=ALIAS_MAX_PERIODS {
        let sign = if shift % 2 == 0 { 1.0 } else { -1.0 };
        let offset = shift as f64 * period;
        let mut term_max = 0.0f64;
        for (t, a) in acc.iter_mut().enumerate() {
            let x = grid.index(t) * delta;
            let term = eval(x + offset) + eval(x - offset);
            term_max = term_max.max(term.norm());
            *a += sign * term;
        }
        if term_max < ALIAS_TERM_FLOOR {
            let amp = delta.sqrt();
            return Ok(acc.into_iter().map(|v| v * amp).collect());
        }
    }
    Err(Error::SeriesNonConvergence(format!(
        "alias series still above {ALIAS_TERM_FLOOR:e} after {ALIAS_MAX_PERIODS} periods"
    )))
}

/// Left and right sides of the FFT-versus-continuous-transform bound:
/// `lhs = delta_kappa sum_p |(F~ f)(kappa_p) - fhat(kappa_p)|^2`, `rhs` the
/// tail-weight expression it is bounded by.
pub fn fft_vs_continuous_error(f: &dyn FieldFunction, grid: &SamplingGrid) -> Result<(f64, f64)> {
    let samples: Vec<Complex64> = (0..grid.n_points).map(|t| f.eval(grid.phi_at(t))).collect();
    let transformed = grid.fft_forward(&samples);
    // fhat(kappa_p) ~ sqrt(delta_phi/delta_kappa) (F~ f)_p
    let amp = (grid.delta_phi / grid.delta_kappa).sqrt();
    let lhs: f64 = (0..grid.n_points)
        .map(|p| (amp * transformed[p] - f.eval_ft(grid.kappa_at(p))).norm_sqr())
        .sum::<f64>()
        * grid.delta_kappa;
    let t = f.tail_weights(grid.window_f(), grid.window_k())?;
    let rhs = 2.0 * (t.w_f * t.w_f + t.w_k * t.w_k)
        + PI / grid.window_k() * (t.boundary_f[0] + t.boundary_f[1])
        + PI / grid.window_f() * (t.boundary_fhat[0] + t.boundary_fhat[1]);
    Ok((lhs, rhs))
}

/// Per-site tail data of a lattice state, taken from the local density
/// matrix: tail weights and tail moments of the local field/conjugate
/// distributions, boundary densities, and full second moments.
#[derive(Debug, Clone, Copy)]
pub struct SiteTails {
    /// `w_jF`: sqrt of the local field-density tail beyond `F`
    pub w_f: f64,
    /// `w_jK`: sqrt of the local conjugate-density tail beyond `K`
    pub w_k: f64,
    /// local field density at `-F`, `+F`
    pub boundary_rho_f: [f64; 2],
    /// local conjugate density at `-K`, `+K`
    pub boundary_rho_k: [f64; 2],
    /// tail moment `r_jF` of `phi^2 rho_j(phi)` beyond `F`
    pub r_f: f64,
    /// tail moment `r_jK` of `kappa^2 rho_j(kappa)` beyond `K`
    pub r_k: f64,
    /// full `<Phi^2>` in the local state
    pub moment_phi2: f64,
    /// full `<Pi^2>` in the local state
    pub moment_kappa2: f64,
}

/// The multi-site residual moment `r`, decomposed over which site carries
/// the out-of-window excursion: `r^2 <= sum_j r_j^2 prod_{l != j} M2_l`.
fn multi_moment(sites: &[SiteTails], pick_r: impl Fn(&SiteTails) -> f64, pick_m2: impl Fn(&SiteTails) -> f64) -> f64 {
    let mut total = 0.0;
    for (j, site) in sites.iter().enumerate() {
        let mut term = pick_r(site).powi(2);
        for (l, other) in sites.iter().enumerate() {
            if l != j {
                term *= pick_m2(other);
            }
        }
        total += term;
    }
    total.sqrt()
}

/// Lattice sampling-error bound, field-reconstruction side:
/// `sum_j [w_jK + w_jF + sqrt(pi/(2K)(rho_j(-F)+rho_j(F)))]
///  + (pi^2/4+1)^{N/2} r_K / K^N`.
pub fn lattice_error_bound(sites: &[SiteTails], window_k: f64) -> f64 {
    let n_sites = sites.len() as f64;
    let per_site: f64 = sites
        .iter()
        .map(|s| {
            s.w_k
                + s.w_f
                + (PI / (2.0 * window_k) * (s.boundary_rho_f[0] + s.boundary_rho_f[1])).sqrt()
        })
        .sum();
    let r_multi = multi_moment(sites, |s| s.r_k, |s| s.moment_kappa2);
    let residual = (PI * PI / 4.0 + 1.0).powf(n_sites / 2.0) * r_multi / window_k.powf(n_sites);
    per_site + residual
}

/// Conjugate-side analogue of [`lattice_error_bound`].
pub fn lattice_error_bound_conjugate(sites: &[SiteTails], window_f: f64) -> f64 {
    let n_sites = sites.len() as f64;
    let per_site: f64 = sites
        .iter()
        .map(|s| {
            s.w_f
                + s.w_k
                + (PI / (2.0 * window_f) * (s.boundary_rho_k[0] + s.boundary_rho_k[1])).sqrt()
        })
        .sum();
    let r_multi = multi_moment(sites, |s| s.r_f, |s| s.moment_phi2);
    let residual = (PI * PI / 4.0 + 1.0).powf(n_sites / 2.0) * r_multi / window_f.powf(n_sites);
    per_site + residual
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hgfunc::eval_hg;
    use proptest::prelude::*;

    fn grid64() -> SamplingGrid {
        SamplingGrid::for_mass(64, 1.0).unwrap()
    }

    #[test]
    fn grid_geometry() {
        let g = grid64();
        assert!((g.delta_phi * g.delta_kappa - TAU / 64.0).abs() < 1e-16);
        assert!((g.window_f() - (32.0 * PI).sqrt()).abs() < 1e-12);
        // half-integer symmetric indices, none at zero
        for t in 0..g.n_points {
            let j = g.index(t);
            assert!(j != 0.0 && (j - j.floor() - 0.5).abs() < 1e-15);
            assert_eq!(g.index(g.n_points - 1 - t), -j);
        }
        let g2 = SamplingGrid::for_mass(8, 2.0).unwrap();
        assert!((g2.mass() - 2.0).abs() < 1e-15);
        assert!(SamplingGrid::new(5, 1.0, 1.0).is_err());
        assert!(SamplingGrid::new(4, 1.0, 1.0).is_err());
    }

    #[test]
    fn reconstruct_is_exact_at_nodes() {
        let g = grid64();
        let s = SampledFunction::sample(g, |phi| Complex64::new((0.3 * phi).sin(), phi * 0.01));
        for t in [0usize, 13, 31, 32, 63] {
            let v = reconstruct(&s, g.phi_at(t));
            assert!((v - s.values[t]).norm() < 1e-12);
        }
    }

    #[test]
    fn reconstruct_hg_between_nodes() {
        let g = grid64();
        let s = SampledFunction::sample(g, |phi| Complex64::new(eval_hg(0, 1.0, phi), 0.0));
        let phi = 0.5 * g.delta_phi * 3.3;
        let got = reconstruct(&s, phi).re;
        let want = eval_hg(0, 1.0, phi);
        assert!((got - want).abs() < 1e-4, "got {got}, want {want}");
    }

    #[test]
    fn pure_sinc_reconstructs_itself() {
        let g = grid64();
        let mut values = vec![Complex64::new(0.0, 0.0); 64];
        values[20] = Complex64::new(1.0, 0.0);
        let s = SampledFunction::new(g, values).unwrap();
        let center = g.phi_at(20);
        for k in 0..100 {
            let phi = -12.0 + 24.0 * k as f64 / 99.0;
            let want = sinc((phi - center) / g.delta_phi);
            let got = reconstruct(&s, phi);
            assert!((got.re - want).abs() < 1e-12 && got.im == 0.0);
        }
    }

    #[test]
    fn fft_transform_of_discrete_ground_state_is_self_similar() {
        // samples of the m0=1 HG ground state map onto conjugate samples of
        // the same Gaussian, up to the sampling error
        let g = grid64();
        let samples: Vec<Complex64> = (0..64)
            .map(|t| Complex64::new(eval_hg(0, 1.0, g.phi_at(t)), 0.0))
            .collect();
        let out = g.fft_forward(&samples);
        let amp = (g.delta_phi / g.delta_kappa).sqrt();
        for p in 0..64 {
            let want = crate::hgfunc::eval_hg_ft(0, 1.0, g.kappa_at(p));
            assert!((amp * out[p] - want).norm() < 1e-12);
        }
    }

    #[test]
    fn parseval_and_roundtrip() {
        let g = SamplingGrid::for_mass(32, 0.7).unwrap();
        let v: Vec<Complex64> = (0..32)
            .map(|t| Complex64::new((t as f64 * 0.37).sin(), (t as f64 * 0.11).cos()))
            .collect();
        let fw = g.fft_forward(&v);
        let norm_in: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        let norm_out: f64 = fw.iter().map(|z| z.norm_sqr()).sum();
        assert!((norm_in - norm_out).abs() < 1e-12 * norm_in);
        let back = g.fft_inverse(&fw);
        let max_err = v
            .iter()
            .zip(&back)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(max_err < 1e-13);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn fft_roundtrip_random(seed in 0u64..1000) {
            let g = SamplingGrid::for_mass(16, 1.3).unwrap();
            let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1);
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
            };
            let v: Vec<Complex64> = (0..16).map(|_| Complex64::new(next(), next())).collect();
            let back = g.fft_inverse(&g.fft_forward(&v));
            for (a, b) in v.iter().zip(&back) {
                prop_assert!((a - b).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn error_bound_zero_tails_and_monotone() {
        let zero = TailWeights::default();
        assert_eq!(sampling_error_bound(&zero, 5.0, 5.0), (0.0, 0.0));

        // doubling windows with a Schwartz input strictly decreases the bound
        let g = grid64();
        let (f1, k1) = (g.window_f(), g.window_k());
        let t1 = TailWeights::of_hg(3, 1.0, f1, k1).unwrap();
        let t2 = TailWeights::of_hg(3, 1.0, 2.0 * f1, 2.0 * k1).unwrap();
        let b1 = sampling_error_bound(&t1, f1, k1);
        let b2 = sampling_error_bound(&t2, 2.0 * f1, 2.0 * k1);
        assert!(b2.0 < b1.0 && b2.1 < b1.1);
    }

    #[test]
    fn bound_dominates_direct_reconstruction_error() {
        // ||f - f~_phi|| by dense quadrature against the bound (1.5x slack
        // for the dropped Euler-Maclaurin terms). The reconstruction sum has
        // a ~1e-15 cancellation floor, so the n=0 case (true error 1e-22)
        // only checks the floor; n=25 exercises the bound for real.
        let g = grid64();
        for (n, floor) in [(0usize, 5e-15), (25, 0.0)] {
            let state = HGState { n, m0: 1.0 };
            let s = SampledFunction::sample(g, |phi| state.eval(phi));
            let diff_sq = crate::quad::integrate_panels(
                |phi| (reconstruct(&s, phi) - state.eval(phi)).norm_sqr(),
                -30.0,
                30.0,
                0.1,
            );
            let direct = diff_sq.sqrt();
            let t = state.tail_weights(g.window_f(), g.window_k()).unwrap();
            let (bound, _) = sampling_error_bound(&t, g.window_f(), g.window_k());
            assert!(
                direct <= (1.5 * bound).max(floor),
                "n={n}: direct {direct:e} vs bound {bound:e}"
            );
        }
    }

    #[test]
    fn alias_of_band_limited_input_is_plain_samples() {
        // a single sinc centred on a node is band-limited: only the n=0
        // alias term survives on the conjugate side
        let g = grid64();
        #[derive(Clone, Copy)]
        struct Sinc {
            grid: SamplingGrid,
            center: usize,
        }
        impl FieldFunction for Sinc {
            fn eval(&self, phi: f64) -> Complex64 {
                Complex64::new(
                    sinc((phi - self.grid.phi_at(self.center)) / self.grid.delta_phi),
                    0.0,
                )
            }
            fn eval_ft(&self, kappa: f64) -> Complex64 {
                // rectangular spectrum, support |kappa| <= K
                if kappa.abs() > self.grid.window_k() {
                    return Complex64::new(0.0, 0.0);
                }
                let d = self.grid.delta_phi;
                Complex64::from_polar(d / TAU.sqrt(), -kappa * self.grid.phi_at(self.center))
            }
            fn tail_weights(&self, _f: f64, _k: f64) -> crate::Result<TailWeights> {
                unimplemented!("not needed here")
            }
        }
        let f = Sinc { grid: g, center: 40 };
        let a = alias_ft(&f, &g).unwrap();
        for p in 0..64 {
            let want = g.delta_kappa.sqrt() * f.eval_ft(g.kappa_at(p));
            assert!((a[p] - want).norm() < 1e-14);
        }
        // the FFT of the raw samples (a Kronecker delta at the center node)
        // lands on the same conjugate samples
        let samples: Vec<Complex64> = (0..64).map(|t| f.eval(g.phi_at(t))).collect();
        let lhs = g.fft_forward(&samples);
        let amp = g.delta_phi.sqrt();
        for p in 0..64 {
            assert!((amp * lhs[p] - a[p]).norm() < 1e-12);
        }
    }

    #[test]
    fn alias_of_gaussian_obeys_fft_identity() {
        let g = grid64();
        let state = HGState { n: 2, m0: 1.0 };
        let fa = alias(&state, &g).unwrap();
        let fka = alias_ft(&state, &g).unwrap();
        let lhs = g.fft_forward(&fa);
        for p in 0..64 {
            assert!(
                (lhs[p] - fka[p]).norm() < 1e-12,
                "p={p}: {} vs {}",
                lhs[p],
                fka[p]
            );
        }
        // alias differs from raw samples by at most the Euler-Maclaurin-level
        // tail expression
        let t = state.tail_weights(g.window_f(), g.window_k()).unwrap();
        let c12 = t.w_f * t.w_f + g.delta_phi / 2.0 * (t.boundary_f[0] + t.boundary_f[1]);
        let diff: f64 = (0..64)
            .map(|i| (fa[i] - g.delta_phi.sqrt() * state.eval(g.phi_at(i))).norm_sqr())
            .sum();
        assert!(diff <= 1.5 * c12.max(1e-30), "diff {diff:e} vs c12 {c12:e}");
    }

    #[test]
    fn alias_rejects_non_decaying_input() {
        struct Constant;
        impl FieldFunction for Constant {
            fn eval(&self, _phi: f64) -> Complex64 {
                Complex64::new(1.0, 0.0)
            }
            fn eval_ft(&self, _kappa: f64) -> Complex64 {
                Complex64::new(1.0, 0.0)
            }
            fn tail_weights(&self, _f: f64, _k: f64) -> crate::Result<TailWeights> {
                unimplemented!()
            }
        }
        assert!(alias(&Constant, &grid64()).is_err());
    }

    #[test]
    fn fft_error_bounded_by_tail_expression() {
        let g = grid64();
        for n in [0usize, 10] {
            let state = HGState { n, m0: 1.0 };
            let (lhs, rhs) = fft_vs_continuous_error(&state, &g).unwrap();
            assert!(lhs <= 1.5 * rhs.max(1e-30), "n={n}: lhs {lhs:e} rhs {rhs:e}");
        }
        // higher order has larger tails on the same grid
        let (l0, _) = fft_vs_continuous_error(&HGState { n: 0, m0: 1.0 }, &g).unwrap();
        let (l10, _) = fft_vs_continuous_error(&HGState { n: 10, m0: 1.0 }, &g).unwrap();
        assert!(l10 > l0);
    }

    fn gaussian_site(scale: f64) -> (SamplingGrid, TailWeights, SiteTails) {
        let g = grid64();
        let t = TailWeights::of_hg(0, 1.0, scale * g.window_f(), scale * g.window_k()).unwrap();
        let site = SiteTails {
            w_f: t.w_f,
            w_k: t.w_k,
            boundary_rho_f: t.boundary_f,
            boundary_rho_k: t.boundary_fhat,
            r_f: t.r_f,
            r_k: t.r_k,
            moment_phi2: 0.5,
            moment_kappa2: 0.5,
        };
        (g, t, site)
    }

    #[test]
    fn lattice_bound_single_site_stays_close_to_local_form() {
        let (g, t, site) = gaussian_site(1.0);
        let lattice = lattice_error_bound(&[site], g.window_k());
        let (local, _) = sampling_error_bound(&t, g.window_f(), g.window_k());
        // same tail and boundary terms; the residual constants differ by
        // (pi^2/4+1)^{1/2} vs pi/2
        assert!(lattice > 0.0 && local > 0.0);
        assert!((lattice / local) < 10.0 && (lattice / local) > 0.1);
    }

    #[test]
    fn lattice_bound_two_gaussian_sites_and_monotone() {
        let (g, t, site) = gaussian_site(1.0);
        let b2 = lattice_error_bound(&[site, site], g.window_k());
        let per_site_terms = 2.0
            * (site.w_k
                + site.w_f
                + (PI / (2.0 * g.window_k()) * (t.boundary_f[0] + t.boundary_f[1])).sqrt());
        let cross = (PI * PI / 4.0 + 1.0) * (2.0 * site.r_k * site.r_k * 0.5).sqrt()
            / g.window_k().powi(2);
        assert!((b2 - per_site_terms - cross).abs() < 1e-12 * b2);

        // monotone decreasing in the windows
        let (_, _, site_wide) = gaussian_site(1.3);
        let b2_wide = lattice_error_bound(&[site_wide, site_wide], 1.3 * g.window_k());
        assert!(b2_wide < b2);
    }
}
