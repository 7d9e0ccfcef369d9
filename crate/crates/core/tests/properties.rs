use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

use holobound::blackhole::{
    bh_rate_vs_power, emission_entropy_rate, emission_power, hawking_flux, luminosity, BlackHole, SpeciesEmission,
};
use holobound::bounds::{
    bousso_bound, kerr_newman_check, universal_bound, verlinde_bound, KerrNewmanSpec, SystemSpec, VerlindeInput,
};
use holobound::channel::{
    one_way_power, pulse_info_bound, redshift_transform, ChannelSpec, PulseSpec, Statistics,
};
use holobound::gedanken::{audit, GedankenConfig};
use holobound::numerics::{eigvals_hermitian, log_gamma, ComplexMatrix};
use holobound::qinfo::{mix_ensemble, shannon_entropy, von_neumann_entropy, DensityMatrix, EntropyUnit, Ensemble};
use holobound::units::{from_internal, to_internal, Dimension, Quantity, UnitSystem};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn random_state(rng: &mut StdRng, d: usize) -> Vec<Complex64> {
    (0..d).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

/// Random unitary from Gram-Schmidt on the columns of a random complex matrix.
fn random_unitary(rng: &mut StdRng, d: usize) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::new();
    while cols.len() < d {
        let mut v = random_state(rng, d);
        for c in &cols {
            let overlap: Complex64 = c.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vi, ci) in v.iter_mut().zip(c) {
                *vi -= overlap * ci;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    ComplexMatrix::from_fn(d, |i, j| cols[j][i])
}

fn random_density(rng: &mut StdRng, d: usize) -> DensityMatrix {
    let k = rng.gen_range(1..=d);
    let members = (0..k)
        .map(|_| (rng.gen_range(0.05..1.0), DensityMatrix::pure(&random_state(rng, d)).unwrap()))
        .collect::<Vec<_>>();
    let total: f64 = members.iter().map(|m| m.0).sum();
    let e = Ensemble::new(members.into_iter().map(|(w, r)| (w / total, r)).collect()).unwrap();
    mix_ensemble(&e).unwrap()
}

#[test]
fn eigenvalues_of_ten_thousand_states_sum_to_one() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..10_000 {
        let d = rng.gen_range(1..=6);
        let rho = random_density(&mut rng, d);
        let ev = eigvals_hermitian(rho.matrix()).unwrap();
        let sum: f64 = ev.iter().sum();
        assert!((sum - 1.0).abs() < 1e-12, "sum {sum}");
        assert!(ev.iter().all(|l| *l > -1e-12));
        assert!(ev.windows(2).all(|w| w[0] >= w[1]));
    }
}

fn dimension() -> impl Strategy<Value = Dimension> {
    (-2i8..=2, -2i8..=2, -2i8..=2, -2i8..=2).prop_map(|(l, t, m, th)| Dimension::new(l, t, m, th))
}

proptest! {
    #[test]
    fn unit_round_trip(v in 1e-6f64..1e6, dim in dimension(), sys in 0usize..3) {
        let system = [UnitSystem::Si, UnitSystem::Geometrized, UnitSystem::Planck][sys];
        let [.., th] = dim.exponents();
        prop_assume!(!(system == UnitSystem::Geometrized && th != 0.0));
        let q = to_internal(v, dim, system).unwrap();
        let back = from_internal(q, system).unwrap();
        prop_assert!(rel(back, v) < 1e-12);
    }

    #[test]
    fn overflow_is_an_error_not_infinity(v in 1e100f64..1e300) {
        let dim = Dimension::new(3, 3, 0, 0);
        prop_assert!(to_internal(v, dim, UnitSystem::Si).is_err());
    }

    #[test]
    fn dimension_algebra(a in dimension(), b in dimension()) {
        prop_assert_eq!((a * b) / b, a);
        prop_assert!((a / a).is_dimensionless());
    }

    #[test]
    fn basis_invariance(seed in any::<u64>(), d in 1usize..=5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let rho = random_density(&mut rng, d);
        let u = random_unitary(&mut rng, d);
        let rotated = u.matmul(rho.matrix()).unwrap().matmul(&u.adjoint()).unwrap();
        let rotated = DensityMatrix::new(rotated).unwrap();
        let a = von_neumann_entropy(&rho, EntropyUnit::Nats);
        let b = von_neumann_entropy(&rotated, EntropyUnit::Nats);
        prop_assert!((a - b).abs() < 1e-10, "{} vs {}", a, b);
    }

    #[test]
    fn mixture_entropy_below_preparation_entropy(seed in any::<u64>(), d in 1usize..=4, k in 1usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let weights: Vec<f64> = (0..k).map(|_| rng.gen_range(0.01..1.0)).collect();
        let total: f64 = weights.iter().sum();
        let members = weights
            .iter()
            .map(|w| (w / total, DensityMatrix::pure(&random_state(&mut rng, d)).unwrap()))
            .collect::<Vec<_>>();
        let e = Ensemble::new(members).unwrap();
        let s = von_neumann_entropy(&mix_ensemble(&e).unwrap(), EntropyUnit::Nats);
        let h = shannon_entropy(&e.probabilities(), EntropyUnit::Nats).unwrap();
        prop_assert!(s <= h + 1e-10);
        prop_assert!(s <= (d as f64).ln() + 1e-10);
        prop_assert!(s >= -1e-12);
    }

    #[test]
    fn shannon_bits_and_nats(p in prop::collection::vec(0.01f64..1.0, 1..20)) {
        let total: f64 = p.iter().sum();
        let p: Vec<f64> = p.iter().map(|x| x / total).collect();
        let nats = shannon_entropy(&p, EntropyUnit::Nats).unwrap();
        let bits = shannon_entropy(&p, EntropyUnit::Bits).unwrap();
        prop_assert!(rel(bits, nats * std::f64::consts::LOG2_E) < 1e-12 || nats == 0.0);
        prop_assert!(nats <= (p.len() as f64).ln() + 1e-12);
    }

    #[test]
    fn universal_scales_quadratically(e in 1e-5f64..1e5, r in 1e-5f64..1e5, lambda in 1e-3f64..1e3) {
        let a = universal_bound(&SystemSpec::planck(e, r, 3).unwrap()).nats;
        let b = universal_bound(&SystemSpec::planck(lambda * e, lambda * r, 3).unwrap()).nats;
        prop_assert!(rel(b, lambda * lambda * a) < 1e-12);
    }

    #[test]
    fn bousso_reduces_to_universal(e in 1e-8f64..1e8, r in 1e-8f64..1e8, n in 3u32..12) {
        let s = SystemSpec::planck(e, r, n).unwrap();
        prop_assert!(rel(bousso_bound(&s).unwrap().nats, universal_bound(&s).nats) < 1e-12);
    }

    #[test]
    fn verlinde_never_exceeds_universal(e in 1e-6f64..1e6, f in 0.0f64..=1.0, r in 1e-6f64..1e6, n in 3u32..12) {
        let v = verlinde_bound(&VerlindeInput::planck(e, 2.0 * e * f, r, n).unwrap()).nats;
        let u = universal_bound(&SystemSpec::planck(e, r, n).unwrap()).nats;
        prop_assert!(v <= u * (1.0 + 1e-12));
        prop_assert!(v <= 2.0 * PI * r * e / f64::from(n) * (1.0 + 1e-12));
    }

    #[test]
    fn kerr_newman_below_bound(m in 1e-3f64..1e3, x in 0.0f64..1.0, phi in 0.0f64..(PI / 2.0)) {
        let (a, q) = (m * x * phi.cos(), m * x * phi.sin());
        let k = kerr_newman_check(&KerrNewmanSpec::planck(m, a, q).unwrap());
        prop_assert!(k.entropy <= k.bound * (1.0 + 1e-12));
    }

    #[test]
    fn drop_distance_monotone(
        e in 1.0f64..1e3, r in 1.0f64..1e3, zeta in 1.0f64..9.0, n in 1.0f64..90.0, bump in 1.01f64..1.1,
    ) {
        let d = |e: f64, r: f64, z: f64, n: f64| {
            audit(&GedankenConfig::planck(e, r, z, n).unwrap()).unwrap().distance_over_mass
        };
        let base = d(e, r, zeta, n);
        prop_assert!(d(e * bump, r, zeta, n) > base);
        prop_assert!(d(e, r * bump, zeta, n) > base);
        prop_assert!(d(e, r, (zeta * bump).min(10.0), n) > base);
        prop_assert!(d(e, r, zeta, n * bump) < base);
    }

    #[test]
    fn cap_substitution(e in 1e-3f64..1e6, r in 1e-3f64..1e6) {
        let cfg = GedankenConfig::planck(e, r, 1.0, 1.0).unwrap();
        let rep = audit(&cfg).unwrap();
        let m = rep.mass;
        prop_assert!(rel(rep.force_ratio_at_cap, r * r / (7680.0 * PI * m * m)) < 1e-12);
    }

    #[test]
    fn log_gamma_recurrence(x in 0.01f64..150.0) {
        let lhs = log_gamma(x + 1.0).unwrap();
        let rhs = log_gamma(x).unwrap() + x.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn channel_statistics_ratio(t in 1e-2f64..1e2) {
        let t = Quantity::planck(t, Dimension::TEMPERATURE);
        let b = one_way_power(&ChannelSpec::vacuum(Statistics::Boson), t).unwrap().value();
        let f = one_way_power(&ChannelSpec::vacuum(Statistics::Fermion), t).unwrap().value();
        prop_assert!((f / b - 0.5).abs() < 1e-9);
    }

    #[test]
    fn pulse_envelope_monotone(xi in 1e-6f64..1e6, bump in 1.0001f64..10.0) {
        let a = pulse_info_bound(&PulseSpec::planck(xi, 1.0).unwrap()).unwrap();
        let b = pulse_info_bound(&PulseSpec::planck(xi * bump, 1.0).unwrap()).unwrap();
        prop_assert!(b.envelope >= a.envelope);
        let crossover = 1.0 / (3.0 * PI);
        if xi < crossover {
            prop_assert_eq!(a.envelope, a.linear);
        } else if xi > crossover * (1.0 + 1e-12) {
            prop_assert_eq!(a.envelope, a.steady);
        }
    }

    #[test]
    fn redshift_invariance(e in 1e-4f64..1e4, tau in 1e-4f64..1e4, alpha in 1e-3f64..1e3) {
        let p = PulseSpec::planck(e, tau).unwrap();
        let q = redshift_transform(&p, alpha).unwrap();
        let (a, b) = (pulse_info_bound(&p).unwrap(), pulse_info_bound(&q).unwrap());
        prop_assert!(rel(b.linear, a.linear) < 1e-12);
        prop_assert!(rel(b.steady, a.steady) < 1e-12);
        prop_assert!(rel(b.envelope, a.envelope) < 1e-12);
    }

    #[test]
    fn luminosity_independent_of_radius(m in 1e-3f64..1e3, k in 1.001f64..1e6, n in 0.1f64..100.0) {
        let bh = BlackHole::planck(m).unwrap();
        let r = 2.0 * m * k;
        let f = hawking_flux(Quantity::planck(r, Dimension::LENGTH), &bh, n).unwrap().value();
        prop_assert!(rel(4.0 * PI * r * r * f, luminosity(&bh, n).unwrap().value()) < 1e-12);
    }

    #[test]
    fn elimination_consistency(m in 1e-4f64..1e8, neutrino in any::<bool>()) {
        let sp = if neutrino { SpeciesEmission::neutrino() } else { SpeciesEmission::photon() };
        let bh = BlackHole::planck(m).unwrap();
        let p = emission_power(&bh, &sp).unwrap();
        let via = bh_rate_vs_power(p, &sp).unwrap().value();
        prop_assert!(rel(via, emission_entropy_rate(&bh, &sp).unwrap().value()) < 1e-10);
    }
}
