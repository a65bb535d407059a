//! Generalized Verma characters and the typical character formula.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::charpoly::character::{Character, Cutoff};
use crate::charpoly::laurent::{self, Laurent};
use crate::charpoly::orthogonal::orthogonal_eps_character;
use crate::charpoly::weyl::weyl_group;
use crate::error::{Error, Result};
use crate::weight::{HalfInt, Weight};
use crate::weightspace::Algebra;

/// `Π_{α ∈ Δ1+} (1 + e^{−α})`, fully expanded.
pub(crate) fn odd_product(alg: Algebra) -> Arc<Laurent> {
    static CACHE: OnceLock<Mutex<HashMap<Algebra, Arc<Laurent>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&alg) {
        return hit.clone();
    }
    let mut p = Laurent::from([(alg.zero(), 1)]);
    for alpha in alg.positive_roots().odd {
        let factor = Laurent::from([(alg.zero(), 1), (-&alpha, 1)]);
        p = laurent::multiply(&p, &factor);
    }
    let p = Arc::new(p);
    cache.lock().unwrap().entry(alg).or_insert(p).clone()
}

/// `ch M_ν = Π(1+e^{−α}) / (1−e^{−2δ}) · ch L^{(0)}_ν`, truncated at `min_delta`.
///
/// ν only needs an o(n)-dominant ε-part. Every factor lowers or keeps the
/// δ-coordinate, so the truncation is exact above the cutoff.
pub fn verma_character(alg: Algebra, nu: &Weight, min_delta: HalfInt) -> Result<Character> {
    alg.check_rank(nu)?;
    if !alg.is_orthogonal_dominant(nu) {
        return Err(Error::NotOrthogonalDominant(nu.clone()));
    }
    let mut out = Character::zero(alg, Cutoff::Delta(min_delta));
    if nu.delta_coord() < min_delta {
        return Ok(out);
    }
    let eps = orthogonal_eps_character(alg, &nu.eps_part())?;
    let odd = odd_product(alg);
    let mut top = nu.clone();
    top.twice_mut()[1..].fill(0);
    let two_delta = &alg.delta() * 2;
    for (x, &c) in odd.iter() {
        let head = &top + x;
        for (y, &d) in eps.iter() {
            let mut w = &head + y;
            while w.delta_coord() >= min_delta {
                out.add_term(w.clone(), c * d);
                w -= &two_delta;
            }
        }
    }
    Ok(out)
}

/// `Σ c_ν ch M_ν` over a finite list of Verma terms, truncated at `min_delta`.
///
/// Sums the g0-characters first and applies the odd product and the `2δ`
/// series once, which is much cheaper than adding Verma characters one by one.
pub fn verma_combination<'a>(
    alg: Algebra,
    terms: impl IntoIterator<Item = (&'a Weight, i64)>,
    min_delta: HalfInt,
) -> Result<Character> {
    let mut g0 = Laurent::new();
    for (nu, c) in terms {
        alg.check_rank(nu)?;
        if !alg.is_orthogonal_dominant(nu) {
            return Err(Error::NotOrthogonalDominant(nu.clone()));
        }
        if c == 0 || nu.delta_coord() < min_delta {
            continue;
        }
        let mut top = nu.clone();
        top.twice_mut()[1..].fill(0);
        for (y, &d) in orthogonal_eps_character(alg, &nu.eps_part())?.iter() {
            laurent::add_into(&mut g0, &top + y, c * d);
        }
    }
    let odd = odd_product(alg);
    let mut lowered = Laurent::new();
    for (x, &c) in &g0 {
        for (y, &d) in odd.iter() {
            let w = x + y;
            if w.delta_coord() >= min_delta {
                laurent::add_into(&mut lowered, w, c * d);
            }
        }
    }
    let two_delta = &alg.delta() * 2;
    let mut out = Character::zero(alg, Cutoff::Delta(min_delta));
    for (x, c) in lowered {
        let mut w = x;
        while w.delta_coord() >= min_delta {
            out.add_term(w.clone(), c);
            w -= &two_delta;
        }
    }
    Ok(out)
}

/// Kac's character for a typical dominant λ, evaluated as `ch M_λ − ch M_{λ^δ}`.
pub fn kac_typical_character(
    alg: Algebra,
    lambda: &Weight,
    min_delta: HalfInt,
) -> Result<Character> {
    alg.require_dominant(lambda)?;
    if !alg.is_typical(lambda) {
        return Err(Error::Atypical(lambda.clone()));
    }
    let top = verma_character(alg, lambda, min_delta)?;
    let bottom = verma_character(alg, &alg.delta_involution(lambda), min_delta)?;
    top.sub(&bottom)
}

/// The Weyl-sum form
/// `Π(e^{α/2}+e^{−α/2}) / Π(e^{α/2}−e^{−α/2}) · Σ_W ε(w) e^{w(λ+ρ)}`,
/// evaluated directly with half-root exponents. Finite whenever λ ∈ P and
/// `λ0 > (n−2)/2`.
pub fn weyl_sum_character(alg: Algebra, lambda: &Weight) -> Result<Character> {
    alg.require_dominant(lambda)?;
    if 2 * lambda.int(0) <= alg.n() as i64 - 2 {
        return Err(Error::domain(
            "weyl_sum_character",
            lambda,
            "needs λ0 > (n-2)/2 for a finite quotient",
        ));
    }
    let shifted = lambda + &alg.rho();
    let mut sum = Laurent::new();
    for w in weyl_group(alg).iter() {
        laurent::add_into(&mut sum, w.act(&shifted), w.sign());
    }
    let roots = alg.positive_roots();
    let half =
        |a: &Weight| Weight::from_twice(&a.twice().iter().map(|t| t / 2).collect::<Vec<_>>());
    // Odd factors first: in type B the δ/2 factor is needed before the 2δ
    // denominator divides exactly.
    for alpha in &roots.odd {
        let h = half(alpha);
        let factor = Laurent::from([(h.clone(), 1), (-&h, 1)]);
        sum = laurent::multiply(&sum, &factor);
    }
    for alpha in &roots.even {
        // e^{α/2} − e^{−α/2} = e^{α/2} (1 − e^{−α})
        sum = laurent::divide_one_minus(&sum, alpha)?;
        let h = half(alpha);
        sum = sum.into_iter().map(|(w, k)| (&w - &h, k)).collect();
    }
    Ok(Character::from_terms(alg, Cutoff::Exact, sum))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    fn h(n: i64) -> HalfInt {
        HalfInt::from_int(n)
    }

    /// Independent expansion: enumerate subsets of odd roots and k directly.
    fn verma_coefficient_oracle(alg: Algebra, nu: &Weight, target: &Weight) -> i64 {
        let odd = alg.positive_roots().odd;
        let eps = crate::charpoly::o_n_character(alg, &nu.eps_part()).unwrap();
        let mut total = 0;
        for mask in 0u32..(1 << odd.len()) {
            let mut x = alg.zero();
            x.set_coord(0, nu.delta_coord());
            for (i, r) in odd.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x -= r;
                }
            }
            for k in 0..20 {
                let y = &x - &(&alg.delta() * (2 * k));
                let rest = target - &y;
                total += eps.coeff(&rest);
            }
        }
        total
    }

    #[test]
    fn highest_weight_coefficient_is_one() {
        for alg in [Algebra::d(2), Algebra::b(2)] {
            for nu in [w(&[0, 0, 0]), w(&[3, 1, 0]), w(&[-2, 2, 0])] {
                assert_eq!(verma_character(alg, &nu, h(-6)).unwrap().coeff(&nu), 1);
            }
        }
    }

    #[test]
    fn minus_two_delta_coefficient() {
        // pairs {δ−ε1, δ+ε1}, {δ−ε2, δ+ε2} plus the 2δ series term
        let a = Algebra::d(2);
        let c = verma_character(a, &a.zero(), h(-2)).unwrap();
        assert_eq!(c.coeff(&w(&[-2, 0, 0])), 3);
        assert_eq!(verma_coefficient_oracle(a, &a.zero(), &w(&[-2, 0, 0])), 3);
    }

    #[test]
    fn agrees_with_subset_oracle() {
        for alg in [Algebra::d(2), Algebra::b(2), Algebra::b(1)] {
            for nu in [w(&[1, 1, 0][..alg.m() + 1]), w(&[-1, 2, 0][..alg.m() + 1])] {
                let c = verma_character(alg, &nu, h(-5)).unwrap();
                for (x, k) in c.iter() {
                    assert_eq!(
                        k,
                        verma_coefficient_oracle(alg, &nu, x),
                        "{alg} {nu:?} at {x:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn first_level_count() {
        // weights at δ-level ν0 − 1 with multiplicity: |Δ1+| · dim L^{(0)}_ν
        for alg in [Algebra::d(2), Algebra::b(2)] {
            let nu = w(&[2, 1, 0]);
            let c = verma_character(alg, &nu, h(-3)).unwrap();
            let level: i64 = c
                .iter()
                .filter(|(x, _)| x.int(0) == 1)
                .map(|(_, k)| k)
                .sum();
            let dim = crate::charpoly::o_n_dimension(alg, &nu).unwrap() as i64;
            let odd = alg
                .positive_roots()
                .odd
                .iter()
                .filter(|r| r.int(0) == 1)
                .count() as i64;
            assert_eq!(level, odd * dim);
        }
    }

    #[test]
    fn truncation_is_consistent() {
        let a = Algebra::d(3);
        let nu = w(&[1, 1, 1, 0]);
        let deep = verma_character(a, &nu, h(-7)).unwrap();
        for cut in [-6, -3, 0, 1, 2] {
            let shallow = verma_character(a, &nu, h(cut)).unwrap();
            assert_eq!(deep.restrict(Cutoff::Delta(h(cut))), shallow);
        }
        assert!(verma_character(a, &nu, h(2)).unwrap().is_empty());
    }

    #[test]
    fn combination_matches_termwise_sum() {
        for alg in [Algebra::d(2), Algebra::b(2)] {
            let terms = [
                (w(&[2, 1, 0]), 1),
                (w(&[0, 1, 0]), -1),
                (w(&[-1, 2, 0]), 3),
                (w(&[1, 0, 0]), 0),
            ];
            let fast = verma_combination(alg, terms.iter().map(|(x, k)| (x, *k)), h(-4)).unwrap();
            let mut slow = Character::zero(alg, Cutoff::Delta(h(-4)));
            for (x, k) in &terms {
                slow.add_scaled(&verma_character(alg, x, h(-4)).unwrap(), *k)
                    .unwrap();
            }
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn typical_formula_rejects_atypical() {
        let a = Algebra::d(2);
        assert!(matches!(
            kac_typical_character(a, &a.zero(), h(-3)),
            Err(Error::Atypical(_))
        ));
        assert!(kac_typical_character(a, &w(&[0, 1, 0]), h(-3)).is_err());
    }

    #[test]
    fn typical_character_is_finite_and_symmetric() {
        let a = Algebra::d(2);
        let lambda = w(&[3, 0, 0]);
        assert!(a.is_typical(&lambda));
        let c1 = kac_typical_character(a, &lambda, h(-6)).unwrap();
        let c2 = kac_typical_character(a, &lambda, h(-11)).unwrap();
        assert_eq!(c2.restrict(Cutoff::Delta(h(-6))), c1);
        let support: Vec<_> = c1.iter().map(|(x, _)| x.int(0)).collect();
        assert!(support.iter().all(|d| (-3..=3).contains(d)));
        assert_eq!(c1.coeff(&lambda), 1);
        for g in weyl_group(a).iter() {
            for (x, k) in c1.iter() {
                assert_eq!(c1.coeff(&g.act(x)), k);
            }
        }
    }

    #[test]
    fn weyl_sum_matches_verma_difference() {
        for alg in [Algebra::d(2), Algebra::b(2)] {
            for lambda in alg.dominant_weights(6) {
                if lambda.int(0) < alg.m() as i64 {
                    continue;
                }
                let direct = weyl_sum_character(alg, &lambda).unwrap();
                let cut = h(-lambda.int(0) - 2);
                let top = verma_character(alg, &lambda, cut).unwrap();
                let bottom = verma_character(alg, &alg.delta_involution(&lambda), cut).unwrap();
                assert_eq!(
                    top.sub(&bottom).unwrap(),
                    direct.restrict(Cutoff::Delta(cut)),
                    "{alg} {lambda:?}"
                );
            }
        }
    }
}
