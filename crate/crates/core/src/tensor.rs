//! Tensor products with the natural module `L_δ`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::phi;
use crate::weight::Weight;
use crate::weightspace::Algebra;

/// Highest weights of the o(n)-summands of `𝓛_ν ⊗ 𝓛_{ε1}` (ε-parts only;
/// the δ-coordinate of ν is carried along unchanged).
pub fn o_n_pieri(alg: Algebra, nu: &Weight) -> Result<Vec<Weight>> {
    alg.check_rank(nu)?;
    if !alg.is_orthogonal_dominant(nu) {
        return Err(Error::NotOrthogonalDominant(nu.clone()));
    }
    let mut out = BTreeSet::new();
    for i in 1..=alg.m() {
        for mu in [nu + &alg.eps(i), nu - &alg.eps(i)] {
            if alg.is_orthogonal_dominant(&mu) {
                out.insert(mu);
            }
        }
    }
    if !alg.is_d() && nu.twice()[alg.m()] != 0 {
        out.insert(nu.clone());
    }
    Ok(sorted(out))
}

/// `M_ν ⊗ L_δ = M_{ν+δ} + M_{ν−δ} + Σ_{μ} M_μ`, μ running over the Pieri set.
///
/// Every coefficient is +1; a weight may repeat only if the Pieri set
/// contains `ν ± δ`, which it never does.
pub fn verma_tensor_natural(alg: Algebra, nu: &Weight) -> Result<Vec<(Weight, i64)>> {
    let mut out = vec![(nu + &alg.delta(), 1), (nu - &alg.delta(), 1)];
    out.extend(o_n_pieri(alg, nu)?.into_iter().map(|mu| (mu, 1)));
    Ok(out)
}

/// The candidate sets `(P_{λ+}, P_{λ−})`.
pub fn p_lambda(alg: Algebra, lambda: &Weight) -> Result<(Vec<Weight>, Vec<Weight>)> {
    alg.require_dominant(lambda)?;
    let m = alg.m();
    let lm = lambda.twice()[m];
    let d = alg.delta();
    let mut plus = vec![lambda + &d];
    let mut minus = vec![lambda - &d];
    for i in 1..m {
        plus.push(lambda + &alg.eps(i));
        minus.push(lambda - &alg.eps(i));
    }
    let em = alg.eps(m);
    if alg.is_d() {
        if lm >= 0 {
            plus.push(lambda + &em);
        }
        if lm <= 0 {
            plus.push(lambda - &em);
        }
        if lm < 0 {
            minus.push(lambda + &em);
        }
        if lm > 0 {
            minus.push(lambda - &em);
        }
    } else {
        plus.push(lambda + &em);
        minus.push(lambda - &em);
        if lm != 0 {
            plus.push(lambda.clone());
            minus.push(lambda.clone());
        }
    }
    let keep = |v: Vec<Weight>| sorted(v.into_iter().filter(|w| alg.is_dominant_integral(w)));
    Ok((keep(plus), keep(minus)))
}

/// `P_λ = P_{λ+} ∪ P_{λ−}` as a set.
pub fn p_lambda_union(alg: Algebra, lambda: &Weight) -> Result<Vec<Weight>> {
    let (plus, minus) = p_lambda(alg, lambda)?;
    Ok(sorted(plus.into_iter().chain(minus)))
}

/// Composition factors of `L_λ ⊗ L_δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorDecomposition {
    pub alg: Algebra,
    pub lambda: Weight,
    pub constituents: BTreeMap<Weight, i64>,
    pub completely_reducible: bool,
    /// `a_μ` for μ ∈ P_λ; only for typical λ.
    pub a_coefficients: Option<BTreeMap<Weight, i64>>,
    /// Same-block pairs in P_λ of equal height, where `≻` cannot decide.
    pub height_ties: Vec<(Weight, Weight)>,
}

impl TensorDecomposition {
    /// Constituents in display order.
    pub fn sorted_constituents(&self) -> Vec<(Weight, i64)> {
        let mut v: Vec<_> = self
            .constituents
            .iter()
            .map(|(w, &k)| (w.clone(), k))
            .collect();
        v.sort_by(|a, b| a.0.display_cmp(&b.0));
        v
    }

    pub fn to_json(&self) -> TensorJson {
        let render = |m: &BTreeMap<Weight, i64>| {
            let mut v: Vec<_> = m.iter().collect();
            v.sort_by(|a, b| a.0.display_cmp(b.0));
            v.into_iter()
                .map(|(w, k)| ConstituentJson {
                    weight: w.to_string(),
                    multiplicity: k.to_string(),
                })
                .collect()
        };
        TensorJson {
            algebra: self.alg,
            lambda: self.lambda.to_string(),
            constituents: render(&self.constituents),
            completely_reducible: self.completely_reducible,
            a_coefficients: self.a_coefficients.as_ref().map(render),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub algebra: Algebra,
    pub lambda: String,
    pub constituents: Vec<ConstituentJson>,
    pub completely_reducible: bool,
    pub a_coefficients: Option<Vec<ConstituentJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituentJson {
    pub weight: String,
    pub multiplicity: String,
}

/// Decomposes `L_λ ⊗ L_δ` into irreducible composition factors.
pub fn tensor_decompose(alg: Algebra, lambda: &Weight) -> Result<TensorDecomposition> {
    let candidates = p_lambda_union(alg, lambda)?;
    let height_ties = height_ties(alg, &candidates)?;
    let mut constituents = BTreeMap::new();
    let mut bump = |w: &Weight, k: i64| *constituents.entry(w.clone()).or_insert(0) += k;

    if !alg.is_typical(lambda) {
        let excluded = atypical_exclusions(alg, lambda);
        for mu in candidates.iter().filter(|mu| !excluded.contains(mu)) {
            bump(mu, 1);
        }
        return Ok(TensorDecomposition {
            alg,
            lambda: lambda.clone(),
            constituents,
            completely_reducible: true,
            a_coefficients: None,
            height_ties,
        });
    }

    // In type B with λ0 = m the self term M_λ of M_λ ⊗ L_δ cancels against
    // M_{λ^δ+δ}, so λ itself is not a constituent.
    let self_cancels = !alg.is_d() && lambda.int(0) == alg.m() as i64;
    let candidates: Vec<Weight> = candidates
        .into_iter()
        .filter(|mu| !(self_cancels && mu == lambda))
        .collect();
    let mut a = BTreeMap::new();
    for mu in &candidates {
        let dominated = candidates
            .iter()
            .any(|other| alg.block_order(other, mu).unwrap_or(false));
        let a_mu = if dominated { 2 } else { 1 };
        a.insert(mu.clone(), a_mu);
        bump(mu, a_mu);
        if a_mu == 2 {
            if let Some(f) = phi(alg, mu).filter(|f| alg.is_dominant_integral(f)) {
                bump(&f, 1);
                let fd = alg.delta_involution(&f);
                if fd != f && alg.is_dominant_integral(&fd) {
                    bump(&fd, 1);
                }
            }
        }
    }
    let completely_reducible = a.values().all(|&k| k == 1);
    Ok(TensorDecomposition {
        alg,
        lambda: lambda.clone(),
        constituents,
        completely_reducible,
        a_coefficients: Some(a),
        height_ties,
    })
}

/// Weights of P_λ that drop out for atypical λ.
fn atypical_exclusions(alg: Algebra, lambda: &Weight) -> Vec<Weight> {
    let d = alg.delta();
    let m = alg.m();
    let v = lambda + &alg.rho();
    for i in 1..=m {
        let root = &d + &alg.eps(i);
        if alg.form_times4(&v, &root) == 0 && alg.is_dominant_integral(&(lambda - &root)) {
            return vec![lambda - &d, lambda - &alg.eps(i)];
        }
    }
    if alg.is_d() {
        let root = &d - &alg.eps(m);
        if alg.form_times4(&v, &root) == 0 && alg.is_dominant_integral(&(lambda - &root)) {
            return vec![lambda - &d, lambda + &alg.eps(m)];
        }
    }
    Vec::new()
}

fn height_ties(alg: Algebra, candidates: &[Weight]) -> Result<Vec<(Weight, Weight)>> {
    let mut ties = Vec::new();
    for (i, x) in candidates.iter().enumerate() {
        for y in &candidates[i + 1..] {
            if x.height() == y.height() && alg.same_block(x, y)? {
                ties.push((x.clone(), y.clone()));
            }
        }
    }
    Ok(ties)
}

fn sorted(v: impl IntoIterator<Item = Weight>) -> Vec<Weight> {
    let mut v: Vec<Weight> = v.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    v.sort_by(|a, b| a.display_cmp(b));
    v
}
