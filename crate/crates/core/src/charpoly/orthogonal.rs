//! Irreducible characters of the o(n) factor of g0.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::charpoly::character::{Character, Cutoff};
use crate::charpoly::laurent::{self, Laurent};
use crate::charpoly::weyl::weyl_group;
use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::weightspace::Algebra;

/// Positive roots of o(n): the even positive roots other than 2δ.
pub fn orthogonal_positive_roots(alg: Algebra) -> Vec<Weight> {
    alg.positive_roots()
        .even
        .into_iter()
        .filter(|r| r.twice()[0] == 0)
        .collect()
}

/// `ch L^{(0)}_ν = e^{ν0·δ} · ch 𝓛_{ν_o(n)}`, exact and finite.
///
/// The o(n) part is the Weyl character formula evaluated as an alternating sum
/// over W(o(n)) divided factor by factor by `1 − e^{−α}`.
pub fn o_n_character(alg: Algebra, nu: &Weight) -> Result<Character> {
    alg.check_rank(nu)?;
    if !alg.is_orthogonal_dominant(nu) {
        return Err(Error::NotOrthogonalDominant(nu.clone()));
    }
    let eps = orthogonal_eps_character(alg, &nu.eps_part())?;
    let shift = {
        let mut d = alg.zero();
        d.set_coord(0, nu.delta_coord());
        d
    };
    Ok(Character::from_terms(
        alg,
        Cutoff::Exact,
        eps.iter().map(|(w, &k)| (w + &shift, k)),
    ))
}

/// The ε-only character, cached per (algebra, highest weight).
pub(crate) fn orthogonal_eps_character(alg: Algebra, eps_part: &Weight) -> Result<Arc<Laurent>> {
    type Cache = Mutex<HashMap<(Algebra, Weight), Arc<Laurent>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (alg, eps_part.clone());
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let computed = Arc::new(weyl_character_eps(alg, eps_part)?);
    Ok(cache.lock().unwrap().entry(key).or_insert(computed).clone())
}

fn weyl_character_eps(alg: Algebra, nu: &Weight) -> Result<Laurent> {
    let rho_o = alg.rho().eps_part();
    let shifted = nu + &rho_o;
    let mut numerator = Laurent::new();
    for w in weyl_group(alg).iter().filter(|w| w.fixes_delta()) {
        laurent::add_into(&mut numerator, &w.act(&shifted) - &rho_o, w.sign());
    }
    let mut q = numerator;
    for alpha in orthogonal_positive_roots(alg) {
        q = laurent::divide_one_minus(&q, &alpha)?;
    }
    Ok(q)
}

/// Weyl dimension formula `Π (ν+ρ, α) / (ρ, α)` over the o(n) positive roots.
pub fn o_n_dimension(alg: Algebra, nu: &Weight) -> Result<i128> {
    alg.check_rank(nu)?;
    if !alg.is_orthogonal_dominant(nu) {
        return Err(Error::NotOrthogonalDominant(nu.clone()));
    }
    let rho = alg.rho().eps_part();
    let shifted = &nu.eps_part() + &rho;
    let (mut num, mut den) = (1i128, 1i128);
    for alpha in orthogonal_positive_roots(alg) {
        num *= alg.form_times4(&shifted, &alpha) as i128;
        den *= alg.form_times4(&rho, &alpha) as i128;
    }
    if num % den != 0 {
        return Err(Error::Internal(format!(
            "non-integral o(n) dimension for {nu}"
        )));
    }
    Ok(num / den)
}
