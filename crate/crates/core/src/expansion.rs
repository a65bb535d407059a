//! Irreducible characters as finite-plus-periodic combinations of generalized
//! Verma characters, and the dimensions they imply.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::charpoly::{verma_combination, Character, Cutoff, TermJson};
use crate::error::{Error, Result};
use crate::weight::{HalfInt, Weight};
use crate::weightspace::Algebra;

/// `Σ_{q=start}^{end} s·(−1)^{q−start}·c · M_{base − (q−start)·step}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VermaSeries {
    pub base: Weight,
    pub step: Weight,
    pub start_q: i64,
    /// `None` for an infinite tail.
    pub end_q: Option<i64>,
    pub sign_at_start: i64,
    pub magnitude: i64,
}

impl VermaSeries {
    /// Builds a series, checking that every term has an o(n)-dominant ε-part
    /// and that δ-coordinates strictly decrease along it.
    pub fn new(
        alg: Algebra,
        base: Weight,
        step: Weight,
        start_q: i64,
        end_q: Option<i64>,
        sign_at_start: i64,
        magnitude: i64,
    ) -> Result<Self> {
        alg.check_rank(&base)?;
        alg.check_rank(&step)?;
        let bad = |w: &Weight, why: &str| Err(Error::domain("VermaSeries::new", w, why));
        if sign_at_start.abs() != 1 {
            return bad(&base, "sign_at_start must be ±1");
        }
        if magnitude <= 0 {
            return bad(&base, "magnitude must be positive");
        }
        if step.delta_coord() <= HalfInt::ZERO {
            return bad(&base, "step must have positive δ-coordinate");
        }
        if end_q.is_some_and(|e| e < start_q) {
            return bad(&base, "empty range");
        }
        let s = VermaSeries {
            base,
            step,
            start_q,
            end_q,
            sign_at_start,
            magnitude,
        };
        let dominant = match end_q {
            Some(e) => (start_q..=e).all(|q| alg.is_orthogonal_dominant(&s.term(q))),
            // dominant + dominant stays dominant
            None => {
                alg.is_orthogonal_dominant(&s.base)
                    && alg.is_orthogonal_dominant(&(-&s.step).eps_part())
            }
        };
        if !dominant {
            return bad(&s.base, "series leaves the o(n)-dominant chamber");
        }
        Ok(s)
    }

    pub fn term(&self, q: i64) -> Weight {
        &self.base - &(&self.step * (q - self.start_q))
    }

    /// Signed coefficient of `term(q)`; zero outside the range.
    pub fn coeff(&self, q: i64) -> i64 {
        if q < self.start_q || self.end_q.is_some_and(|e| q > e) {
            return 0;
        }
        let alt = if (q - self.start_q) % 2 == 0 { 1 } else { -1 };
        self.sign_at_start * alt * self.magnitude
    }

    /// The index `q` with `term(q) = w`, if any.
    pub fn index_of(&self, w: &Weight) -> Option<i64> {
        let drop = self.base.twice()[0] - w.twice()[0];
        let s0 = self.step.twice()[0];
        if drop < 0 || drop % s0 != 0 {
            return None;
        }
        let q = self.start_q + drop / s0;
        (self.term(q) == *w && self.coeff(q) != 0).then_some(q)
    }

    /// Every term whose δ-coordinate is at least `min_delta`.
    pub fn terms_down_to(&self, min_delta: HalfInt) -> Vec<(Weight, i64)> {
        let mut out = Vec::new();
        let mut q = self.start_q;
        loop {
            if self.end_q.is_some_and(|e| q > e) {
                break;
            }
            let w = self.term(q);
            if w.delta_coord() < min_delta {
                break;
            }
            out.push((w, self.coeff(q)));
            q += 1;
        }
        out
    }

    fn mirror(&self) -> VermaSeries {
        VermaSeries {
            base: self.base.mirror(),
            step: self.step.mirror(),
            ..self.clone()
        }
    }

    fn key(&self) -> SeriesKey {
        (
            self.base.clone(),
            self.step.clone(),
            self.start_q,
            self.end_q,
        )
    }
}

type SeriesKey = (Weight, Weight, i64, Option<i64>);

/// The Verma expansion `ch L_λ = Σ_ν c_ν ch M_ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaExpansion {
    pub alg: Algebra,
    pub lambda: Weight,
    pub finite_terms: BTreeMap<Weight, i64>,
    pub tails: Vec<VermaSeries>,
}

/// Accumulates signed Verma terms and merges identical series.
#[derive(Default)]
struct Terms {
    finite: BTreeMap<Weight, i64>,
    tails: BTreeMap<SeriesKey, i64>,
}

impl Terms {
    fn add(&mut self, w: Weight, k: i64) {
        let slot = self.finite.entry(w.clone()).or_insert(0);
        *slot += k;
        if *slot == 0 {
            self.finite.remove(&w);
        }
    }

    fn add_series(&mut self, s: &VermaSeries, k: i64) {
        let key = s.key();
        let slot = self.tails.entry(key.clone()).or_insert(0);
        *slot += k * s.sign_at_start * s.magnitude;
        if *slot == 0 {
            self.tails.remove(&key);
        }
    }

    fn add_expansion(&mut self, e: &VermaExpansion, k: i64) {
        for (w, &c) in &e.finite_terms {
            self.add(w.clone(), k * c);
        }
        for s in &e.tails {
            self.add_series(s, k);
        }
    }

    fn finish(self, alg: Algebra, lambda: Weight) -> VermaExpansion {
        let tails = self
            .tails
            .into_iter()
            .map(|((base, step, start_q, end_q), signed)| VermaSeries {
                base,
                step,
                start_q,
                end_q,
                sign_at_start: signed.signum(),
                magnitude: signed.abs(),
            })
            .collect();
        VermaExpansion {
            alg,
            lambda,
            finite_terms: self.finite,
            tails,
        }
    }
}

impl VermaExpansion {
    /// The total coefficient of `ch M_ν`.
    pub fn coeff(&self, nu: &Weight) -> i64 {
        let tails: i64 = self
            .tails
            .iter()
            .filter_map(|s| s.index_of(nu).map(|q| s.coeff(q)))
            .sum();
        self.finite_terms.get(nu).copied().unwrap_or(0) + tails
    }

    /// All Verma terms with δ-coordinate at least `min_delta`, merged.
    pub fn terms_down_to(&self, min_delta: HalfInt) -> BTreeMap<Weight, i64> {
        let mut t = Terms::default();
        for (w, &c) in &self.finite_terms {
            if w.delta_coord() >= min_delta {
                t.add(w.clone(), c);
            }
        }
        for s in &self.tails {
            for (w, c) in s.terms_down_to(min_delta) {
                t.add(w, c);
            }
        }
        t.finite
    }

    /// Flips the sign of the ε_m coordinate in every weight.
    pub fn mirror(&self) -> VermaExpansion {
        let mut t = Terms::default();
        for (w, &c) in &self.finite_terms {
            t.add(w.mirror(), c);
        }
        for s in &self.tails {
            t.add_series(&s.mirror(), 1);
        }
        t.finish(self.alg, self.lambda.mirror())
    }

    /// Finite terms in display order.
    pub fn sorted_finite_terms(&self) -> Vec<(Weight, i64)> {
        let mut v: Vec<_> = self
            .finite_terms
            .iter()
            .map(|(w, &k)| (w.clone(), k))
            .collect();
        v.sort_by(|a, b| a.0.display_cmp(&b.0));
        v
    }

    /// Every weight appearing with a nonzero coefficient above `min_delta`.
    pub fn support_down_to(&self, min_delta: HalfInt) -> Vec<Weight> {
        self.terms_down_to(min_delta).into_keys().collect()
    }

    pub fn to_json(&self) -> ExpansionJson {
        ExpansionJson {
            algebra: self.alg,
            lambda: self.lambda.to_string(),
            finite_terms: self
                .sorted_finite_terms()
                .into_iter()
                .map(|(w, k)| TermJson {
                    weight: w.to_string(),
                    coeff: k.to_string(),
                })
                .collect(),
            tails: self
                .tails
                .iter()
                .map(|s| SeriesJson {
                    base: s.base.to_string(),
                    step: s.step.to_string(),
                    start_q: s.start_q,
                    end_q: s.end_q,
                    sign_at_start: s.sign_at_start,
                    magnitude: s.magnitude,
                })
                .collect(),
        }
    }

    pub fn from_json(j: &ExpansionJson) -> Result<VermaExpansion> {
        let alg = j.algebra;
        let lambda = alg.parse_weight(&j.lambda)?;
        let mut t = Terms::default();
        for term in &j.finite_terms {
            let k = term.coeff.trim().parse::<i64>().map_err(|_| Error::Parse {
                input: term.coeff.clone(),
                reason: "coefficient must be a decimal integer".into(),
            })?;
            t.add(alg.parse_weight(&term.weight)?, k);
        }
        for s in &j.tails {
            let series = VermaSeries::new(
                alg,
                alg.parse_weight(&s.base)?,
                alg.parse_weight(&s.step)?,
                s.start_q,
                s.end_q,
                s.sign_at_start,
                s.magnitude,
            )?;
            t.add_series(&series, 1);
        }
        Ok(t.finish(alg, lambda))
    }
}

impl fmt::Display for VermaExpansion {
    /// Plain-text form `L_λ = M_ν + … + Σ_{q≥…} …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L_({}) =", self.lambda)?;
        let mut first = true;
        let mut sign = |f: &mut fmt::Formatter<'_>, k: i64| -> fmt::Result {
            let s = match (first, k < 0) {
                (true, false) => " ",
                (true, true) => " -",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            first = false;
            f.write_str(s)
        };
        for (w, k) in self.sorted_finite_terms() {
            sign(f, k)?;
            if k.abs() != 1 {
                write!(f, "{}·", k.abs())?;
            }
            write!(f, "M_({w})")?;
        }
        for s in &self.tails {
            sign(f, s.sign_at_start)?;
            if s.magnitude != 1 {
                write!(f, "{}·", s.magnitude)?;
            }
            let upper = s.end_q.map_or("∞".to_string(), |e| e.to_string());
            write!(
                f,
                "Σ_{{q={}}}^{{{}}} (-1)^(q-{}) M_(({}) - (q-{})·({}))",
                s.start_q, upper, s.start_q, s.base, s.start_q, s.step
            )?;
        }
        if first {
            f.write_str(" 0")?;
        }
        Ok(())
    }
}

/// Wire form of a [`VermaExpansion`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub algebra: Algebra,
    pub lambda: String,
    pub finite_terms: Vec<TermJson>,
    pub tails: Vec<SeriesJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub base: String,
    pub step: String,
    pub start_q: i64,
    pub end_q: Option<i64>,
    pub sign_at_start: i64,
    pub magnitude: i64,
}

/// Which closed formula governs `ch L_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    /// Kac's formula: `M_λ − M_{λ^δ}`.
    Typical,
    /// `λ0 ≤ m−2` (D) or `λ0 ≤ m−1` (B): one tail plus a finite double sum.
    LowDelta,
    /// D with `λ0 = m−1`: as `LowDelta` plus the ε_m-mirrored copy.
    SelfDual,
    /// `λ0 ≥ m`, atypical, `λ^δ ∈ P`: `M_λ − M_{λ^δ} + L_{λ^δ}`.
    Reflected,
    /// Atypical with `λ^δ ∉ P`: the φ-chain down to a tail typical weight.
    TailTypical,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Typical => "typical",
            Branch::LowDelta => "low-delta",
            Branch::SelfDual => "self-dual",
            Branch::Reflected => "reflected",
            Branch::TailTypical => "tail-typical",
        })
    }
}

/// Classifies a dominant weight.
pub fn branch(alg: Algebra, lambda: &Weight) -> Result<Branch> {
    alg.require_dominant(lambda)?;
    let m = alg.m() as i64;
    let l0 = lambda.int(0);
    let low_limit = if alg.is_d() { m - 2 } else { m - 1 };
    let b = if alg.is_typical(lambda) {
        Branch::Typical
    } else if l0 <= low_limit {
        Branch::LowDelta
    } else if alg.is_d() && l0 == m - 1 {
        Branch::SelfDual
    } else if alg.is_dominant_integral(&alg.delta_involution(lambda)) {
        Branch::Reflected
    } else {
        Branch::TailTypical
    };
    // typical weights sit strictly above the reflecting line
    if b == Branch::Typical && (l0 < m || alg.is_dominant_integral(&alg.delta_involution(lambda))) {
        return Err(Error::Internal(format!(
            "typical weight {lambda} below λ0 = m or with λ^δ ∈ P"
        )));
    }
    Ok(b)
}

/// The chain weight `λ^{j,q}` (or its ε_m-mirror `λ^{j,q}_−`).
///
/// ε-part `(λ1,…,λj, q, λ_{j+1}+1, …, λ_{λ0}+1, 0, …)` and δ-coordinate `j − q`.
pub fn lambda_jq(alg: Algebra, lambda: &Weight, j: usize, q: i64, minus: bool) -> Result<Weight> {
    alg.require_dominant(lambda)?;
    let m = alg.m();
    let l0 = lambda.int(0);
    if l0 > m as i64 - 1 {
        return Err(Error::domain("lambda_jq", lambda, "needs λ0 ≤ m−1"));
    }
    let l0 = l0 as usize;
    if j > l0 {
        return Err(Error::domain(
            "lambda_jq",
            lambda,
            format!("j = {j} exceeds λ0 = {l0}"),
        ));
    }
    if minus && !(alg.is_d() && l0 == m - 1) {
        return Err(Error::domain(
            "lambda_jq",
            lambda,
            "the minus variant needs type D and λ0 = m−1",
        ));
    }
    let mut coords = vec![0i64; m + 1];
    coords[0] = j as i64 - q;
    for (i, c) in coords.iter_mut().enumerate().take(j + 1).skip(1) {
        *c = lambda.int(i);
    }
    coords[j + 1] = q;
    for i in (j + 1)..=l0 {
        coords[i + 1] = lambda.int(i) + 1;
    }
    let w = Weight::from_ints(&coords);
    Ok(if minus { w.mirror() } else { w })
}

/// One step of the reduction toward a tail typical weight.
///
/// Defined when λ is (δ+ε_k)-atypical with `λ_k ≠ 0`, or (type D)
/// (δ−ε_m)-atypical with `λ_m ≠ 0`; `None` otherwise.
pub fn phi(alg: Algebra, lambda: &Weight) -> Option<Weight> {
    if !alg.is_dominant_integral(lambda) {
        return None;
    }
    let m = alg.m();
    let d = alg.delta();
    for alpha in alg.atypical_roots(lambda) {
        let (k, sign) = alpha.twice()[1..]
            .iter()
            .enumerate()
            .find(|(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, c.signum()))
            .expect("odd root has an ε-component");
        let lk = lambda.int(k);
        if lk == 0 {
            continue;
        }
        if sign < 0 {
            if alg.is_d() && k == m {
                return Some(&(lambda - &d) + &alg.eps(m));
            }
            continue;
        }
        if alg.is_d() && lambda.int(m) == -lk && k < m {
            let mut w = lambda - &(&d * (m - k + 1) as i64);
            for i in k..m {
                w -= &alg.eps(i);
            }
            return Some(&w + &alg.eps(m));
        }
        let t = (k..=m)
            .rev()
            .find(|&i| lambda.int(i).abs() == lk)
            .unwrap_or(k);
        let mut w = lambda - &(&d * (t - k + 1) as i64);
        for i in k..=t {
            w -= &alg.eps(i);
        }
        return Some(w);
    }
    None
}

/// The φ-chain `[λ, φ(λ), …, φ^θ(λ)]` and `λ^T = φ^θ(λ)^δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailTypical {
    pub lambda_t: Weight,
    pub theta: usize,
    pub chain: Vec<Weight>,
}

pub fn tail_typical(alg: Algebra, lambda: &Weight) -> Result<TailTypical> {
    if branch(alg, lambda)? != Branch::TailTypical {
        return Err(Error::domain(
            "tail_typical",
            lambda,
            "needs an atypical weight with λ^δ outside P",
        ));
    }
    let mut chain = vec![lambda.clone()];
    while let Some(next) = phi(alg, chain.last().unwrap()) {
        if !alg.is_dominant_integral(&next) || !alg.same_block(&next, lambda)? {
            return Err(Error::Internal(format!("φ left P or the block at {next}")));
        }
        chain.push(next);
        if chain.len() > 4 * (lambda.height().twice() as usize + 2) {
            return Err(Error::Internal(format!(
                "φ-chain from {lambda} does not terminate"
            )));
        }
    }
    let theta = chain.len() - 1;
    let lambda_t = alg.delta_involution(chain.last().unwrap());
    if theta == 0 || !alg.is_dominant_integral(&lambda_t) {
        return Err(Error::Internal(format!(
            "φ-chain from {lambda} ends at {} with θ = {theta}",
            chain.last().unwrap()
        )));
    }
    Ok(TailTypical {
        lambda_t,
        theta,
        chain,
    })
}

/// `Σ_{q>λ1}(−1)^q M_{λ^{0,q}} + Σ_{j=1}^{k} Σ_{q=λ_{j+1}+1}^{λ_j} (−1)^q M_{λ^{j,q}}`.
fn low_delta_parts(alg: Algebra, lambda: &Weight) -> Result<Terms> {
    let mut t = Terms::default();
    let l1 = lambda.int(1);
    let start = l1 + 1;
    let base = lambda_jq(alg, lambda, 0, start, false)?;
    let step = &alg.delta() - &alg.eps(1);
    let sign = if start % 2 == 0 { 1 } else { -1 };
    t.add_series(&VermaSeries::new(alg, base, step, start, None, sign, 1)?, 1);
    let k = alg.last_nonzero(lambda);
    for j in 1..=k {
        for q in (lambda.int(j + 1) + 1)..=lambda.int(j) {
            let sign = if q % 2 == 0 { 1 } else { -1 };
            t.add(lambda_jq(alg, lambda, j, q, false)?, sign);
        }
    }
    Ok(t)
}

/// `M_λ` plus the low-δ parts of `λ^δ`: the non-recursive form of a reflected expansion.
pub(crate) fn reflected_closed_form(alg: Algebra, lambda: &Weight) -> Result<VermaExpansion> {
    let mut t = Terms::default();
    t.add(lambda.clone(), 1);
    merge(
        &mut t,
        &low_delta_parts(alg, &alg.delta_involution(lambda))?,
        1,
    );
    Ok(t.finish(alg, lambda.clone()))
}

fn mirrored(t: &Terms) -> Terms {
    let mut out = Terms::default();
    for (w, &c) in &t.finite {
        out.add(w.mirror(), c);
    }
    for ((base, step, start, end), &signed) in &t.tails {
        let s = VermaSeries {
            base: base.clone(),
            step: step.clone(),
            start_q: *start,
            end_q: *end,
            sign_at_start: signed.signum(),
            magnitude: signed.abs(),
        };
        out.add_series(&s.mirror(), 1);
    }
    out
}

fn merge(into: &mut Terms, from: &Terms, k: i64) {
    for (w, &c) in &from.finite {
        into.add(w.clone(), k * c);
    }
    for (key, &signed) in &from.tails {
        let slot = into.tails.entry(key.clone()).or_insert(0);
        *slot += k * signed;
        if *slot == 0 {
            into.tails.remove(key);
        }
    }
}

type Memo = RwLock<HashMap<(Algebra, Weight), Arc<VermaExpansion>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The expansion of `ch L_λ` into generalized Verma characters. Memoized.
pub fn verma_expansion(alg: Algebra, lambda: &Weight) -> Result<Arc<VermaExpansion>> {
    alg.require_dominant(lambda)?;
    let key = (alg, lambda.clone());
    if let Some(hit) = memo().read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let computed = Arc::new(compute_expansion(alg, lambda)?);
    check_expansion(&computed)?;
    Ok(memo()
        .write()
        .unwrap()
        .entry(key)
        .or_insert(computed)
        .clone())
}

fn compute_expansion(alg: Algebra, lambda: &Weight) -> Result<VermaExpansion> {
    let dual = alg.delta_involution(lambda);
    let mut t = Terms::default();
    match branch(alg, lambda)? {
        Branch::Typical => {
            t.add(lambda.clone(), 1);
            t.add(dual, -1);
        }
        Branch::LowDelta => {
            t.add(lambda.clone(), 1);
            merge(&mut t, &low_delta_parts(alg, lambda)?, 1);
        }
        Branch::SelfDual => {
            let parts = low_delta_parts(alg, lambda)?;
            t.add(lambda.clone(), 1);
            merge(&mut t, &parts, 1);
            merge(&mut t, &mirrored(&parts), 1);
        }
        Branch::Reflected => {
            t.add(lambda.clone(), 1);
            t.add(dual.clone(), -1);
            t.add_expansion(&*verma_expansion(alg, &dual)?, 1);
        }
        Branch::TailTypical => {
            let tt = tail_typical(alg, lambda)?;
            for (i, w) in tt.chain[..tt.theta].iter().enumerate() {
                let s = if i % 2 == 0 { 1 } else { -1 };
                t.add(w.clone(), s);
                t.add(alg.delta_involution(w), -s);
            }
            let s = if tt.theta % 2 == 0 { 1 } else { -1 };
            let lt = &tt.lambda_t;
            let m = alg.m() as i64;
            if alg.is_d() && lt.int(0) == m - 1 {
                let parts = low_delta_parts(alg, lt)?;
                t.add(lt.clone(), s);
                merge(&mut t, &parts, s);
                merge(&mut t, &mirrored(&parts), s);
            } else {
                if branch(alg, lt)? != Branch::LowDelta {
                    return Err(Error::Internal(format!(
                        "tail typical weight {lt} of {lambda} is not in the low-δ range"
                    )));
                }
                t.add(lt.clone(), s);
                t.add(alg.delta_involution(lt), s);
                merge(&mut t, &low_delta_parts(alg, lt)?, 2 * s);
            }
        }
    }
    Ok(t.finish(alg, lambda.clone()))
}

fn check_expansion(e: &VermaExpansion) -> Result<()> {
    if e.finite_terms.get(&e.lambda) != Some(&1) {
        return Err(Error::Internal(format!(
            "coefficient of M_{} is not 1",
            e.lambda
        )));
    }
    for w in e.finite_terms.keys().chain(e.tails.iter().map(|s| &s.base)) {
        if !e.alg.is_orthogonal_dominant(w) {
            return Err(Error::Internal(format!(
                "Verma term {w} is not o(n)-dominant"
            )));
        }
    }
    Ok(())
}

type CharCache = Mutex<HashMap<(Algebra, Weight, HalfInt), Arc<Character>>>;

/// `ch L_λ`, exact for δ-coordinates at least `min_delta`.
pub fn irreducible_character(
    alg: Algebra,
    lambda: &Weight,
    min_delta: HalfInt,
) -> Result<Character> {
    static CACHE: OnceLock<CharCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (alg, lambda.clone(), min_delta);
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok((**hit).clone());
    }
    let e = verma_expansion(alg, lambda)?;
    let terms = e.terms_down_to(min_delta);
    let c = verma_combination(alg, terms.iter().map(|(w, &k)| (w, k)), min_delta)?;
    let c = Arc::new(c);
    Ok((**cache.lock().unwrap().entry(key).or_insert(c)).clone())
}

/// `ch L_λ` evaluated down to its full support, which lies in `[−λ0, λ0]`.
///
/// Weights of `L_λ` are at most λ and every positive root has δ-coordinate
/// at least 0, so nothing sits above `λ0`; the δ-flip in W mirrors that below.
pub fn finite_character(alg: Algebra, lambda: &Weight) -> Result<Character> {
    alg.require_dominant(lambda)?;
    let top = lambda.int(0);
    for extra in [1, 3, 5] {
        let c = irreducible_character(alg, lambda, HalfInt::from_int(-top - extra))?;
        let floor = HalfInt::from_int(-top);
        let stable = c.iter().all(|(w, k)| {
            let d = w.delta_coord();
            if d < floor {
                return false;
            }
            let mut flipped = w.clone();
            flipped.set_coord(0, HalfInt::ZERO - d);
            c.coeff(&flipped) == k
        });
        if stable {
            return Ok(c.restrict(Cutoff::Delta(floor)).into_exact());
        }
    }
    Err(Error::Internal(format!(
        "character of {lambda} does not stabilise"
    )))
}

/// `dim L_λ` (super-dimension ignored: even plus odd).
pub fn dimension(alg: Algebra, lambda: &Weight) -> Result<i128> {
    Ok(finite_character(alg, lambda)?
        .iter()
        .map(|(_, k)| k as i128)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    fn algebras() -> [Algebra; 4] {
        [Algebra::d(2), Algebra::d(3), Algebra::b(1), Algebra::b(2)]
    }

    #[test]
    fn lambda_jq_examples() {
        let a = Algebra::d(3);
        for q in 0..4 {
            assert_eq!(
                lambda_jq(a, &a.zero(), 0, q, false).unwrap(),
                w(&[-q, q, 0, 0])
            );
        }
        let lambda = w(&[2, 2, 1, 0]);
        assert_eq!(lambda_jq(a, &lambda, 2, 0, false).unwrap(), lambda);
        for j in 1..=2 {
            let lj = lambda.int(j);
            assert_eq!(
                lambda_jq(a, &lambda, j, lj + 1, false).unwrap(),
                lambda_jq(a, &lambda, j - 1, lj, false).unwrap()
            );
        }
        assert_eq!(
            lambda_jq(a, &lambda, 2, 3, true).unwrap(),
            w(&[-1, 2, 1, -3])
        );
        assert!(lambda_jq(a, &lambda, 3, 0, false).is_err());
        assert!(lambda_jq(a, &w(&[1, 1, 0, 0]), 0, 1, true).is_err());
    }

    #[test]
    fn chain_weights_share_the_block() {
        for alg in algebras() {
            for lambda in alg.dominant_weights(5) {
                let l0 = lambda.int(0);
                if l0 > alg.m() as i64 - 1 {
                    continue;
                }
                for j in 0..=l0 as usize {
                    for q in -3..5 {
                        let mu = lambda_jq(alg, &lambda, j, q, false).unwrap();
                        assert!(
                            alg.same_block(&lambda, &mu).unwrap(),
                            "{alg} {lambda} {j} {q}"
                        );
                        if alg.is_d() && l0 == alg.m() as i64 - 1 {
                            let mu = lambda_jq(alg, &lambda, j, q, true).unwrap();
                            assert!(alg.same_block(&lambda, &mu).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn phi_examples() {
        let a = Algebra::d(2);
        assert_eq!(phi(a, &w(&[2, 1, 1])), Some(w(&[1, 1, 0])));
        assert_eq!(phi(a, &w(&[2, 1, -1])), Some(w(&[1, 1, 0])));
        assert_eq!(phi(a, &w(&[1, 1, 0])), None);
        assert_eq!(phi(a, &a.zero()), None);
    }

    #[test]
    fn tail_typical_example() {
        let a = Algebra::d(2);
        let tt = tail_typical(a, &w(&[2, 1, 1])).unwrap();
        assert_eq!(tt.theta, 1);
        assert_eq!(tt.chain, vec![w(&[2, 1, 1]), w(&[1, 1, 0])]);
        assert_eq!(tt.lambda_t, w(&[1, 1, 0]));
        assert!(tail_typical(a, &a.zero()).is_err());
        assert!(tail_typical(a, &w(&[3, 0, 0])).is_err());
    }

    #[test]
    fn chains_are_well_formed() {
        for alg in algebras() {
            for lambda in alg.dominant_weights(8) {
                if branch(alg, &lambda).unwrap() != Branch::TailTypical {
                    assert_eq!(phi(alg, &lambda), None, "{alg} {lambda}");
                    continue;
                }
                let tt = tail_typical(alg, &lambda).unwrap();
                for pair in tt.chain.windows(2) {
                    assert!(pair[0].height() >= pair[1].height() + HalfInt::from_int(2));
                    assert!(alg.is_dominant_integral(&pair[1]));
                }
                assert!(tt.lambda_t.int(0) < alg.m() as i64);
            }
        }
    }

    #[test]
    fn trivial_module_expansion() {
        for alg in algebras() {
            let e = verma_expansion(alg, &alg.zero()).unwrap();
            assert_eq!(e.finite_terms.len(), 1);
            assert_eq!(e.tails.len(), 1);
            for q in 1..6 {
                let sign = if q % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    e.coeff(&lambda_jq(alg, &alg.zero(), 0, q, false).unwrap()),
                    sign
                );
            }
            let c = irreducible_character(alg, &alg.zero(), HalfInt::from_int(-8)).unwrap();
            assert_eq!(c.len(), 1);
            assert_eq!(c.coeff(&alg.zero()), 1);
        }
    }

    #[test]
    fn natural_module() {
        let a = Algebra::d(2);
        let c = finite_character(a, &a.delta()).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.iter().all(|(_, k)| k == 1));
        for alg in algebras() {
            assert_eq!(dimension(alg, &alg.delta()).unwrap(), alg.n() as i128 + 2);
        }
    }

    #[test]
    fn typical_expansions_have_two_terms() {
        let a = Algebra::d(2);
        // (3;1,0) is (δ+ε1)-atypical here
        assert!(!a.is_typical(&w(&[3, 1, 0])));
        let lambda = w(&[3, 0, 0]);
        let e = verma_expansion(a, &lambda).unwrap();
        assert!(e.tails.is_empty());
        assert_eq!(
            e.finite_terms,
            BTreeMap::from([(lambda.clone(), 1), (a.delta_involution(&lambda), -1)])
        );
    }

    #[test]
    fn self_dual_tail_example() {
        // L_(2;1,1) = M_(2;1,1) − M_(0;1,1) − L_(1;1,0)
        let a = Algebra::d(2);
        let e = verma_expansion(a, &w(&[2, 1, 1])).unwrap();
        let low = verma_expansion(a, &w(&[1, 1, 0])).unwrap();
        let mut t = Terms::default();
        t.add(w(&[2, 1, 1]), 1);
        t.add(w(&[0, 1, 1]), -1);
        t.add_expansion(&low, -1);
        assert_eq!(*e, t.finish(a, w(&[2, 1, 1])));
        assert_eq!(low.tails.len(), 2);
    }

    #[test]
    fn reflected_branch_matches_closed_form() {
        for alg in algebras() {
            for lambda in alg.dominant_weights(6) {
                if branch(alg, &lambda).unwrap() != Branch::Reflected {
                    continue;
                }
                let closed = reflected_closed_form(alg, &lambda).unwrap();
                assert_eq!(
                    *verma_expansion(alg, &lambda).unwrap(),
                    closed,
                    "{alg} {lambda}"
                );
            }
        }
    }

    #[test]
    fn tail_typical_first_step() {
        for alg in algebras() {
            for lambda in alg.dominant_weights(7) {
                if branch(alg, &lambda).unwrap() != Branch::TailTypical {
                    continue;
                }
                let next = phi(alg, &lambda).unwrap();
                let next_dual = alg.delta_involution(&next);
                let mut t = Terms::default();
                t.add(lambda.clone(), 1);
                t.add(alg.delta_involution(&lambda), -1);
                t.add_expansion(&verma_expansion(alg, &next).unwrap(), -1);
                if alg.is_dominant_integral(&next_dual) && next_dual != next {
                    t.add_expansion(&verma_expansion(alg, &next_dual).unwrap(), -1);
                }
                let expected = t.finish(alg, lambda.clone());
                let got = verma_expansion(alg, &lambda).unwrap();
                let cut = HalfInt::from_int(-12);
                assert_eq!(
                    got.terms_down_to(cut),
                    expected.terms_down_to(cut),
                    "{alg} {lambda}"
                );
            }
        }
    }

    #[test]
    fn mirror_symmetry_in_type_d() {
        for alg in [Algebra::d(2), Algebra::d(3)] {
            for lambda in alg.dominant_weights(5) {
                let lhs = verma_expansion(alg, &lambda.mirror()).unwrap();
                let rhs = verma_expansion(alg, &lambda).unwrap().mirror();
                assert_eq!(*lhs, rhs, "{alg} {lambda}");
            }
        }
    }

    #[test]
    fn terms_share_the_block_and_sit_below() {
        for alg in algebras() {
            for lambda in alg.dominant_weights(5) {
                let e = verma_expansion(alg, &lambda).unwrap();
                for nu in e.support_down_to(HalfInt::from_int(-6)) {
                    assert!(alg.same_block(&nu, &lambda).unwrap(), "{alg} {lambda} {nu}");
                    assert!(
                        nu == lambda || alg.natural_order(&lambda, &nu),
                        "{alg} {lambda} {nu}"
                    );
                }
            }
        }
    }

    #[test]
    fn characters_are_positive_and_symmetric() {
        for alg in [Algebra::d(2), Algebra::b(1), Algebra::b(2)] {
            let gens = crate::charpoly::weyl_generators(alg);
            for lambda in alg.dominant_weights(5) {
                let c = finite_character(alg, &lambda).unwrap();
                assert_eq!(c.coeff(&lambda), 1);
                for (x, k) in c.iter() {
                    assert!(k > 0, "{alg} {lambda}: {x} has {k}");
                    for g in &gens {
                        assert_eq!(c.coeff(&g.act(x)), k, "{alg} {lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for alg in algebras() {
            for lambda in alg.dominant_weights(4) {
                let e = verma_expansion(alg, &lambda).unwrap();
                let text = serde_json::to_string(&e.to_json()).unwrap();
                let back: ExpansionJson = serde_json::from_str(&text).unwrap();
                assert_eq!(VermaExpansion::from_json(&back).unwrap(), *e);
            }
        }
    }

    #[test]
    fn display_mentions_tail() {
        let a = Algebra::d(2);
        let text = verma_expansion(a, &a.zero()).unwrap().to_string();
        assert!(
            text.starts_with("L_(0;0,0) = M_(0;0,0) - Σ_{q=1}^{∞}"),
            "{text}"
        );
    }
}
