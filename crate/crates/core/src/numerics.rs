//! Numerical kernels: semi-infinite quadrature, Hermitian eigenvalues,
//! log-Gamma and log-log slope fitting.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

const MIN_REL_TOL: f64 = 1e-14;
const MAX_REL_TOL: f64 = 1e-4;
const MAX_EVALUATIONS: usize = 400_000;
/// The cutoff is never accepted below this abscissa.
const MIN_CUTOFF: f64 = 16.0;
const MAX_CUTOFF: f64 = 1e12;

// 21-point Gauss-Kronrod abscissae and weights; the odd-indexed abscissae are
// the embedded 10-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_720_303_654_620,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn eval<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let y = f(x);
    if y.is_nan() {
        return Err(Error::NanIntegrand(x));
    }
    Ok(y)
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = eval(f, center)?;
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    for i in 0..10 {
        let dx = half * XGK[i];
        let pair = eval(f, center - dx)? + eval(f, center + dx)?;
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Ok(Panel { a, b, value, error })
}

struct Adaptive<'f, F> {
    f: &'f F,
    panels: Vec<Panel>,
    evaluations: usize,
}

impl<'f, F: Fn(f64) -> f64> Adaptive<'f, F> {
    fn new(f: &'f F) -> Self {
        Adaptive {
            f,
            panels: Vec::new(),
            evaluations: 0,
        }
    }

    fn push(&mut self, a: f64, b: f64) -> Result<Panel> {
        let p = gauss_kronrod(self.f, a, b)?;
        self.evaluations += 21;
        self.panels.push(p);
        Ok(p)
    }

    fn totals(&self) -> (f64, f64) {
        self.panels
            .iter()
            .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error))
    }

    fn partial(&self) -> Error {
        let (estimate, error_estimate) = self.totals();
        Error::NonConvergence {
            estimate,
            error_estimate,
            evaluations: self.evaluations,
        }
    }

    /// Bisects the worst panel until the summed error meets `rel_tol`.
    fn refine(&mut self, rel_tol: f64) -> Result<()> {
        loop {
            let (value, error) = self.totals();
            let floor = 64.0 * f64::EPSILON * value.abs();
            if error <= (rel_tol * value.abs()).max(floor) {
                return Ok(());
            }
            if self.evaluations >= MAX_EVALUATIONS {
                return Err(self.partial());
            }
            let worst = self
                .panels
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
                .map(|(i, _)| i)
                .expect("at least one panel");
            let Panel { a, b, .. } = self.panels.swap_remove(worst);
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                // Interval cannot be split further in double precision.
                return Err(self.partial());
            }
            self.push(a, mid)?;
            self.push(mid, b)?;
        }
    }
}

/// Integrates `f` over `[a, b]` by globally adaptive 21-point Gauss-Kronrod.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<QuadratureResult> {
    check_tolerance(rel_tol)?;
    if !(a.is_finite() && b.is_finite()) || b <= a {
        return Err(Error::range("interval", format!("need finite a < b, got [{a}, {b}]")));
    }
    let mut q = Adaptive::new(&f);
    q.push(a, b)?;
    q.refine(rel_tol)?;
    let (value, error_estimate) = q.totals();
    Ok(QuadratureResult {
        value,
        error_estimate,
        evaluations: q.evaluations,
    })
}

/// Integrates `f` over `(0, ∞)`.
///
/// The integrand must decay at least exponentially. The upper cutoff starts
/// at 1 and doubles; each new panel `[X, 2X]` is first probed, and the
/// cutoff is accepted once the probe contributes less than `rel_tol / 10` of
/// the running total.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, rel_tol: f64) -> Result<QuadratureResult> {
    check_tolerance(rel_tol)?;
    let mut q = Adaptive::new(&f);
    let mut upper = 1.0;
    q.push(0.0, upper)?;
    loop {
        q.refine(rel_tol)?;
        let probe = q.push(upper, 2.0 * upper)?;
        upper *= 2.0;
        let (total, _) = q.totals();
        if upper >= MIN_CUTOFF && probe.value.abs() + probe.error <= 0.1 * rel_tol * total.abs() {
            break;
        }
        if upper > MAX_CUTOFF || q.evaluations >= MAX_EVALUATIONS {
            return Err(q.partial());
        }
    }
    q.refine(rel_tol)?;
    let (value, error) = q.totals();
    // The last probe also bounds the tail beyond the cutoff.
    let tail = q
        .panels
        .iter()
        .filter(|p| p.b == upper)
        .map(|p| p.value.abs())
        .sum::<f64>();
    Ok(QuadratureResult {
        value,
        error_estimate: error + tail,
        evaluations: q.evaluations,
    })
}

fn check_tolerance(rel_tol: f64) -> Result<()> {
    if !(MIN_REL_TOL..=MAX_REL_TOL).contains(&rel_tol) {
        return Err(Error::range(
            "rel_tol",
            format!("must lie in [{MIN_REL_TOL:e}, {MAX_REL_TOL:e}], got {rel_tol:e}"),
        ));
    }
    Ok(())
}

/// Dense square complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_row_major(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::range(
                "matrix entries",
                format!("expected {} entries for dimension {dim}, got {}", dim * dim, data.len()),
            ));
        }
        Ok(ComplexMatrix { dim, data })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn outer(state: &[Complex64]) -> Self {
        Self::from_fn(state.len(), |i, j| state[i] * state[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: f64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> Result<Self> {
        self.same_dim(rhs)?;
        Ok(ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn matmul(&self, rhs: &ComplexMatrix) -> Result<Self> {
        self.same_dim(rhs)?;
        let n = self.dim;
        Ok(Self::from_fn(n, |i, j| (0..n).map(|k| self[(i, k)] * rhs[(k, j)]).sum()))
    }

    /// Largest `|H_ij − conj(H_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    fn same_dim(&self, rhs: &ComplexMatrix) -> Result<()> {
        if self.dim != rhs.dim {
            return Err(Error::range(
                "matrix dimension",
                format!("{} vs {}", self.dim, rhs.dim),
            ));
        }
        Ok(())
    }

    fn off_diagonal_norm_sq(&self) -> f64 {
        let n = self.dim;
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += self[(i, j)].norm_sqr();
                }
            }
        }
        s
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

pub const MAX_HERMITIAN_DIM: usize = 64;
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues of a Hermitian matrix, sorted descending, by cyclic complex
/// Jacobi rotations.
pub fn eigvals_hermitian(h: &ComplexMatrix) -> Result<Vec<f64>> {
    let n = h.dim();
    if n == 0 || n > MAX_HERMITIAN_DIM {
        return Err(Error::range(
            "matrix dimension",
            format!("must be in 1..={MAX_HERMITIAN_DIM}, got {n}"),
        ));
    }
    if h.data.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::NonFinite("matrix entry"));
    }
    let defect = h.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }

    let mut a = h.clone();
    // Symmetrize so that round-off in the input does not leak into rotations.
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let mean = 0.5 * (a[(i, j)] + a[(j, i)].conj());
            a[(i, j)] = mean;
            a[(j, i)] = mean.conj();
        }
    }

    let total: f64 = a.data.iter().map(|z| z.norm_sqr()).sum();
    let target = (f64::EPSILON * f64::EPSILON * total).max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        if a.off_diagonal_norm_sq() <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

/// Annihilates `a[p][q]` with `U = D·R`, where `D = diag(1, e^{-iφ})` makes
/// the pivot real and `R` is the real Jacobi rotation.
fn rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = 0.5 * (2.0 * r).atan2(app - aqq);
    let (s, c) = theta.sin_cos();
    let pc = phase.conj();
    let u00 = Complex64::new(c, 0.0);
    let u01 = Complex64::new(-s, 0.0);
    let u10 = pc * s;
    let u11 = pc * c;
    let n = a.dim();
    for k in 0..n {
        let hp = a[(k, p)];
        let hq = a[(k, q)];
        a[(k, p)] = hp * u00 + hq * u10;
        a[(k, q)] = hp * u01 + hq * u11;
    }
    for k in 0..n {
        let rp = a[(p, k)];
        let rq = a[(q, k)];
        a[(p, k)] = u00.conj() * rp + u10.conj() * rq;
        a[(q, k)] = u01.conj() * rp + u11.conj() * rq;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0` (Lanczos, g = 7).
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite("x"));
    }
    if x <= 0.0 {
        return Err(Error::range("x", format!("log_gamma needs x > 0, got {x}")));
    }
    if x < 0.5 {
        return Ok(lanczos(x + 1.0) - x.ln());
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut sum = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + sum.ln()
}

/// `Γ(n/2)` split as `rational · √π^k` with `k ∈ {0, 1}`, so callers can
/// cancel factors of `√π` symbolically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfGamma {
    pub rational: f64,
    pub has_sqrt_pi: bool,
}

impl HalfGamma {
    pub fn value(&self) -> f64 {
        if self.has_sqrt_pi {
            self.rational * PI.sqrt()
        } else {
            self.rational
        }
    }
}

/// Exact `Γ(n/2)` for integer `n ≥ 1`.
pub fn gamma_half(n: u32) -> Result<HalfGamma> {
    if n == 0 {
        return Err(Error::range("n", "Γ(n/2) needs n ≥ 1"));
    }
    if n.is_multiple_of(2) {
        let rational = (1..n / 2).map(f64::from).product();
        Ok(HalfGamma {
            rational,
            has_sqrt_pi: false,
        })
    } else {
        let rational = (1..=(n - 1) / 2).map(|j| f64::from(j) - 0.5).product();
        Ok(HalfGamma {
            rational,
            has_sqrt_pi: true,
        })
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < 3 {
        return Err(Error::range(
            "points",
            format!("need at least 3 points, got {}", points.len()),
        ));
    }
    for w in points.windows(2) {
        if w[1].0 <= w[0].0 {
            return Err(Error::range("points", "x must be strictly increasing"));
        }
    }
    let mut logs = Vec::with_capacity(points.len());
    for &(x, y) in points {
        if !(x > 0.0 && y > 0.0) || !x.is_finite() || !y.is_finite() {
            return Err(Error::range("points", format!("need finite x, y > 0, got ({x}, {y})")));
        }
        logs.push((x.ln(), y.ln()));
    }
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

/// `n` log-spaced points from `lo` to `hi` inclusive.
pub fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}
