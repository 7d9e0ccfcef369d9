//! Shannon and von Neumann entropies, ensemble mixing and the Holevo cap on
//! accessible information.

use std::f64::consts::LOG2_E;
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{eigvals_hermitian, ComplexMatrix, HERMITIAN_TOL, MAX_HERMITIAN_DIM};

/// Tolerance on trace, Hermiticity and eigenvalue positivity.
pub const STATE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum EntropyUnit {
    #[default]
    Nats,
    Bits,
}

impl EntropyUnit {
    /// Converts a value in nats.
    pub fn from_nats(self, nats: f64) -> f64 {
        match self {
            EntropyUnit::Nats => nats,
            EntropyUnit::Bits => nats * LOG2_E,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            EntropyUnit::Nats => "nats",
            EntropyUnit::Bits => "bits",
        }
    }
}

/// `−p ln p` with `0 ln 0 = 0`.
fn entropy_term(p: f64) -> f64 {
    if p == 0.0 {
        0.0
    } else {
        -p * p.ln()
    }
}

fn check_distribution(probs: &[f64]) -> Result<()> {
    if probs.is_empty() {
        return Err(Error::InvalidDistribution("empty".into()));
    }
    if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
        return Err(Error::InvalidDistribution(format!("entry {p} is not a probability")));
    }
    let sum: f64 = probs.iter().sum();
    if (sum - 1.0).abs() > STATE_TOL {
        return Err(Error::InvalidDistribution(format!("sums to {sum}, not 1")));
    }
    Ok(())
}

/// `−Σ p_i log p_i` in the requested unit.
pub fn shannon_entropy(probs: &[f64], unit: EntropyUnit) -> Result<f64> {
    check_distribution(probs)?;
    Ok(unit.from_nats(probs.iter().copied().map(entropy_term).sum()))
}

/// A Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    eigenvalues: Vec<f64>,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let d = matrix.dim();
        if d == 0 || d > MAX_HERMITIAN_DIM {
            return Err(Error::InvalidDensityMatrix(format!(
                "dimension must be in 1..={MAX_HERMITIAN_DIM}, got {d}"
            )));
        }
        let defect = matrix.hermiticity_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::NotHermitian(defect));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > STATE_TOL || tr.im.abs() > STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace is {tr}, not 1")));
        }
        let eigenvalues = eigvals_hermitian(&matrix)?;
        if let Some(&min) = eigenvalues.last() {
            if min < -STATE_TOL {
                return Err(Error::InvalidDensityMatrix(format!(
                    "negative eigenvalue {min:e}"
                )));
            }
        }
        Ok(DensityMatrix { matrix, eigenvalues })
    }

    /// `|ψ⟩⟨ψ|` for the normalized `state`.
    pub fn pure(state: &[Complex64]) -> Result<Self> {
        let norm = state.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::InvalidDensityMatrix("state vector has zero or non-finite norm".into()));
        }
        let unit: Vec<Complex64> = state.iter().map(|z| z / norm).collect();
        DensityMatrix::new(ComplexMatrix::outer(&unit))
    }

    /// The maximally mixed state `I/d`.
    pub fn maximally_mixed(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDensityMatrix("dimension must be ≥ 1".into()));
        }
        DensityMatrix::new(ComplexMatrix::identity(d).scale(1.0 / d as f64))
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Eigenvalues, descending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvalues with round-off negatives in `[−tol, 0)` set to zero.
    pub fn clipped_eigenvalues(&self) -> Vec<f64> {
        self.eigenvalues.iter().map(|&l| l.max(0.0)).collect()
    }

    /// Parses the text format: the dimension `d`, then `d²` whitespace
    /// separated `re,im` pairs in row-major order. Lines starting with `#`
    /// are comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);
        let d: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("missing dimension".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad dimension: {e}")))?;
        if d == 0 || d > MAX_HERMITIAN_DIM {
            return Err(Error::Parse(format!("dimension must be in 1..={MAX_HERMITIAN_DIM}, got {d}")));
        }
        let mut entries = Vec::with_capacity(d * d);
        for token in tokens {
            let (re, im) = token
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("entry `{token}` is not `re,im`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Parse(format!("entry `{token}`: {e}")))
            };
            entries.push(Complex64::new(parse(re)?, parse(im)?));
        }
        if entries.len() != d * d {
            return Err(Error::Parse(format!(
                "expected {} entries for d = {d}, found {}",
                d * d,
                entries.len()
            )));
        }
        DensityMatrix::new(ComplexMatrix::from_row_major(d, entries)?)
    }

    /// Writes the format read by [`DensityMatrix::parse`].
    pub fn to_text(&self) -> String {
        let d = self.dim();
        let mut out = format!("{d}\n");
        for i in 0..d {
            let row: Vec<String> = (0..d)
                .map(|j| {
                    let z = self.matrix[(i, j)];
                    format!("{:e},{:e}", z.re, z.im)
                })
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

/// Probability-weighted states of one dimension.
#[derive(Debug, Clone)]
pub struct Ensemble {
    members: Vec<(f64, DensityMatrix)>,
}

impl Ensemble {
    pub fn new(members: Vec<(f64, DensityMatrix)>) -> Result<Self> {
        let probs: Vec<f64> = members.iter().map(|m| m.0).collect();
        check_distribution(&probs)?;
        let d = members[0].1.dim();
        if let Some((_, bad)) = members.iter().find(|(_, s)| s.dim() != d) {
            return Err(Error::InvalidDensityMatrix(format!(
                "ensemble mixes dimensions {d} and {}",
                bad.dim()
            )));
        }
        Ok(Ensemble { members })
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.members.iter().map(|m| m.0).collect()
    }

    pub fn members(&self) -> &[(f64, DensityMatrix)] {
        &self.members
    }
}

/// `ρ = Σ p_i ρ_i`.
pub fn mix_ensemble(e: &Ensemble) -> Result<DensityMatrix> {
    let d = e.members[0].1.dim();
    let mut acc = ComplexMatrix::zeros(d);
    for (p, state) in &e.members {
        acc = acc.add(&state.matrix.scale(*p))?;
    }
    DensityMatrix::new(acc)
}

/// `−Tr ρ ln ρ` over clipped eigenvalues.
pub fn von_neumann_entropy(rho: &DensityMatrix, unit: EntropyUnit) -> f64 {
    let nats: f64 = rho.clipped_eigenvalues().into_iter().map(entropy_term).sum();
    unit.from_nats(nats)
}

/// `Tr ρ²`.
pub fn purity(rho: &DensityMatrix) -> f64 {
    let m = &rho.matrix;
    m.entries().iter().map(|z| z.norm_sqr()).sum()
}

/// Upper bound, in bits, on the information readable from `rho`: `S log₂e`.
pub fn accessible_info_bound(rho: &DensityMatrix) -> f64 {
    von_neumann_entropy(rho, EntropyUnit::Nats) * LOG2_E
}

/// The four spin-½ states up, down (along z) and right, left (along x).
pub fn spin_half_states() -> [Vec<Complex64>; 4] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let c = |x: f64| Complex64::new(x, 0.0);
    [
        vec![c(1.0), c(0.0)],
        vec![c(0.0), c(1.0)],
        vec![c(r), c(r)],
        vec![c(r), c(-r)],
    ]
}

/// The four spin-½ states with probability ¼ each.
pub fn spin_half_ensemble() -> Ensemble {
    let members = spin_half_states()
        .iter()
        .map(|s| (0.25, DensityMatrix::pure(s).expect("unit spinor")))
        .collect();
    Ensemble::new(members).expect("uniform four-state ensemble")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn shannon_examples() {
        assert_eq!(shannon_entropy(&[0.25; 4], EntropyUnit::Bits).unwrap(), 2.0);
        assert_eq!(shannon_entropy(&[1.0], EntropyUnit::Bits).unwrap(), 0.0);
        assert_eq!(shannon_entropy(&[1.0], EntropyUnit::Nats).unwrap(), 0.0);
        assert!((shannon_entropy(&[0.5, 0.5], EntropyUnit::Nats).unwrap() - LN_2).abs() < 1e-16);
        assert!((shannon_entropy(&[0.5, 0.5, 0.0], EntropyUnit::Nats).unwrap() - LN_2).abs() < 1e-16);
    }

    #[test]
    fn shannon_rejects_invalid() {
        assert!(shannon_entropy(&[0.5, 0.4], EntropyUnit::Bits).is_err());
        assert!(shannon_entropy(&[1.5, -0.5], EntropyUnit::Bits).is_err());
        assert!(shannon_entropy(&[], EntropyUnit::Bits).is_err());
        assert!(shannon_entropy(&[f64::NAN], EntropyUnit::Bits).is_err());
    }

    #[test]
    fn spin_half_mixture() {
        let rho = mix_ensemble(&spin_half_ensemble()).unwrap();
        let expected = ComplexMatrix::identity(2).scale(0.5);
        for (a, b) in rho.matrix().entries().iter().zip(expected.entries()) {
            assert!((a - b).norm() < 1e-15);
        }
        let ev = rho.eigenvalues();
        assert!((ev[0] - 0.5).abs() < 1e-12 && (ev[1] - 0.5).abs() < 1e-12);
        assert!((von_neumann_entropy(&rho, EntropyUnit::Nats) - LN_2).abs() < 1e-12);
        assert!((accessible_info_bound(&rho) - 1.0).abs() < 1e-12);
        let naive = shannon_entropy(&spin_half_ensemble().probabilities(), EntropyUnit::Bits).unwrap();
        assert_eq!(naive, 2.0);
    }

    #[test]
    fn single_pure_state_mix() {
        let psi = [c(0.6), Complex64::new(0.0, 0.8)];
        let pure = DensityMatrix::pure(&psi).unwrap();
        let mixed = mix_ensemble(&Ensemble::new(vec![(1.0, pure.clone())]).unwrap()).unwrap();
        assert_eq!(mixed, pure);
        assert!(von_neumann_entropy(&pure, EntropyUnit::Nats).abs() < 1e-12);
        assert!((purity(&pure) - 1.0).abs() < 1e-12);
        assert!(accessible_info_bound(&pure).abs() < 1e-12);
    }

    #[test]
    fn classical_mixture() {
        let up = DensityMatrix::new(ComplexMatrix::diagonal(&[1.0, 0.0])).unwrap();
        let down = DensityMatrix::new(ComplexMatrix::diagonal(&[0.0, 1.0])).unwrap();
        let rho = mix_ensemble(&Ensemble::new(vec![(0.5, up), (0.5, down)]).unwrap()).unwrap();
        assert_eq!(rho.matrix(), &ComplexMatrix::identity(2).scale(0.5));
        assert_eq!(purity(&rho), 0.5);
    }

    #[test]
    fn maximally_mixed_states() {
        let rho4 = DensityMatrix::maximally_mixed(4).unwrap();
        let oracle = shannon_entropy(&[0.25; 4], EntropyUnit::Nats).unwrap();
        assert!((von_neumann_entropy(&rho4, EntropyUnit::Nats) - oracle).abs() < 1e-12);
        assert!((von_neumann_entropy(&rho4, EntropyUnit::Nats) - 4f64.ln()).abs() < 1e-12);
        assert!((purity(&rho4) - 0.25).abs() < 1e-15);
        for k in 1..=5u32 {
            let rho = DensityMatrix::maximally_mixed(1 << k).unwrap();
            assert!((accessible_info_bound(&rho) - f64::from(k)).abs() < 1e-12);
        }
    }

    #[test]
    fn invalid_states() {
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::diagonal(&[0.5, 0.6])),
            Err(Error::InvalidDensityMatrix(_))
        ));
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::diagonal(&[1.5, -0.5])),
            Err(Error::InvalidDensityMatrix(_))
        ));
        let mut m = ComplexMatrix::identity(2).scale(0.5);
        m[(0, 1)] = Complex64::new(0.0, 0.1);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotHermitian(_))));
        assert!(DensityMatrix::pure(&[c(0.0), c(0.0)]).is_err());
    }

    #[test]
    fn ensemble_rejects_dimension_mismatch() {
        let a = DensityMatrix::maximally_mixed(2).unwrap();
        let b = DensityMatrix::maximally_mixed(3).unwrap();
        assert!(Ensemble::new(vec![(0.5, a.clone()), (0.5, b)]).is_err());
        assert!(Ensemble::new(vec![(0.5, a.clone()), (0.6, a)]).is_err());
    }

    #[test]
    fn text_format() {
        let rho = DensityMatrix::parse("2\n0.5,0 0,0.1\n0,-0.1 0.5,0\n").unwrap();
        assert_eq!(rho.dim(), 2);
        assert_eq!(rho.matrix()[(0, 1)], Complex64::new(0.0, 0.1));
        let again = DensityMatrix::parse(&rho.to_text()).unwrap();
        assert_eq!(again, rho);
        let commented = DensityMatrix::parse("# spin\n1 # dim\n1,0\n").unwrap();
        assert_eq!(commented.dim(), 1);
        assert!(matches!(DensityMatrix::parse("2\n1,0 0,0 0,0"), Err(Error::Parse(_))));
        assert!(matches!(DensityMatrix::parse("2\n1 0 0 0"), Err(Error::Parse(_))));
        assert!(matches!(DensityMatrix::parse(""), Err(Error::Parse(_))));
        assert!(matches!(DensityMatrix::parse("x"), Err(Error::Parse(_))));
    }
}
