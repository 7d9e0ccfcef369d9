//! Four spin-half states prepared with equal weight carry two bits of
//! preparation entropy, yet the mixture is maximally mixed and yields at most
//! one bit to any measurement.

use holobound::qinfo::{
    accessible_info_bound, mix_ensemble, purity, shannon_entropy, spin_half_ensemble, von_neumann_entropy,
    EntropyUnit,
};

fn main() -> holobound::Result<()> {
    let ensemble = spin_half_ensemble();
    let rho = mix_ensemble(&ensemble)?;

    let prepared = shannon_entropy(&ensemble.probabilities(), EntropyUnit::Bits)?;
    println!("preparation entropy   {prepared:.6} bits");
    println!("mixture eigenvalues   {:?}", rho.eigenvalues());
    println!("mixture purity        {:.6}", purity(&rho));
    println!("von Neumann entropy   {:.6} bits", von_neumann_entropy(&rho, EntropyUnit::Bits));
    println!("accessible info cap   {:.6} bits", accessible_info_bound(&rho));
    println!();
    println!("density matrix:\n{}", rho.to_text());
    Ok(())
}
