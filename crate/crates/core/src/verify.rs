//! Independent oracles for the closed formulas.
//!
//! Every check returns a [`VerificationReport`]. A case that fails records the
//! weight, both sides and a command line that reruns it.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charpoly::{
    kac_typical_character, o_n_dimension, verma_character, weyl_group, weyl_sum_character,
};
use crate::charpoly::{Character, Cutoff};
use crate::error::{Error, Result};
use crate::expansion::{
    branch, dimension, finite_character, irreducible_character, reflected_closed_form,
    verma_expansion, Branch,
};
use crate::tensor::tensor_decompose;
use crate::weight::{HalfInt, Weight};
use crate::weightspace::Algebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Telescoping,
    Natural,
    Typical,
    Tensor,
    Cohomology,
    Blocks,
    Mirror,
    Reflected,
    Peel,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Telescoping,
        Suite::Natural,
        Suite::Typical,
        Suite::Tensor,
        Suite::Cohomology,
        Suite::Blocks,
        Suite::Mirror,
        Suite::Reflected,
        Suite::Peel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Telescoping => "telescoping",
            Suite::Natural => "natural",
            Suite::Typical => "typical",
            Suite::Tensor => "tensor",
            Suite::Cohomology => "cohomology",
            Suite::Blocks => "blocks",
            Suite::Mirror => "mirror",
            Suite::Reflected => "reflected",
            Suite::Peel => "peel",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown verification suite".into(),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub weight: String,
    pub expected: String,
    pub actual: String,
    pub repro: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub algebra: Algebra,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Diagnostics that are not failures.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: Suite, algebra: Algebra) -> Self {
        VerificationReport {
            suite,
            algebra,
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, other: VerificationReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    /// Counts one case and records a failure unless `expected == actual`.
    fn check<T: PartialEq + fmt::Debug>(
        &mut self,
        weight: &Weight,
        expected: T,
        actual: T,
        repro: &str,
    ) {
        self.cases += 1;
        if expected != actual {
            self.fail(
                weight,
                format!("{expected:?}"),
                format!("{actual:?}"),
                repro,
            );
        }
    }

    fn fail(&mut self, weight: &Weight, expected: String, actual: String, repro: &str) {
        self.failures.push(Failure {
            weight: weight.to_string(),
            expected,
            actual,
            repro: repro.to_string(),
        });
    }

    fn error(&mut self, weight: &Weight, err: Error, repro: &str) {
        self.cases += 1;
        self.fail(weight, "no error".into(), err.to_string(), repro);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} {}: {} cases, {} failures",
            self.suite,
            self.algebra,
            self.cases,
            self.failures.len()
        )?;
        for x in &self.failures {
            write!(
                f,
                "\n  ({}) expected {} got {}\n    rerun: {}",
                x.weight, x.expected, x.actual, x.repro
            )?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

fn repro(alg: Algebra, suite: Suite, weight: Option<&Weight>, extra: &str) -> String {
    let mut s = format!(
        "ospchar verify --family {} --m {} --suite {suite}",
        alg.family(),
        alg.m()
    );
    if let Some(w) = weight {
        s.push_str(&format!(" --weight \"{w}\""));
    }
    s.push_str(extra);
    s
}

fn sweep(
    alg: Algebra,
    suite: Suite,
    weights: Vec<Weight>,
    case: impl Fn(&Weight) -> VerificationReport + Sync + Send,
) -> VerificationReport {
    let parts: Vec<VerificationReport> = weights.par_iter().map(case).collect();
    let mut out = VerificationReport::new(suite, alg);
    for p in parts {
        out.absorb(p);
    }
    out
}

fn diff_summary(a: &Character, b: &Character) -> String {
    let mut keys: Vec<&Weight> = a.iter().chain(b.iter()).map(|(w, _)| w).collect();
    keys.sort();
    keys.dedup();
    let diffs: Vec<String> = keys
        .into_iter()
        .filter(|w| a.coeff(w) != b.coeff(w))
        .take(4)
        .map(|w| format!("{w}: {} vs {}", a.coeff(w), b.coeff(w)))
        .collect();
    diffs.join("; ")
}

fn compare_characters(
    r: &mut VerificationReport,
    weight: &Weight,
    expected: &Character,
    actual: &Character,
    rerun: &str,
) {
    r.cases += 1;
    let cut = expected.min_delta().max(actual.min_delta());
    let (e, a) = (expected.restrict(cut), actual.restrict(cut));
    if e != a {
        r.fail(
            weight,
            format!("character above δ = {cut}"),
            diff_summary(&e, &a),
            rerun,
        );
    }
}

// ---------------------------------------------------------------- blocks

/// Every weight reachable from λ by atypical shifts `t_α` (α = ±δ±εi) and dot
/// moves `t_w`, never passing through a weight of height above the bound.
pub fn block_reach(
    alg: Algebra,
    lambda: &Weight,
    height_bound: HalfInt,
) -> Result<HashSet<Weight>> {
    alg.check_rank(lambda)?;
    if !lambda.is_integral() {
        return Err(Error::NotIntegral(lambda.clone()));
    }
    let (d, group) = (alg.delta(), weyl_group(alg));
    let mut shifts = Vec::new();
    for i in 1..=alg.m() {
        for s in [1, -1] {
            let a = &d - &(&alg.eps(i) * s);
            shifts.push(-&a);
            shifts.push(a);
        }
    }
    let mut seen = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(x) = queue.pop_front() {
        let shifted = shifts
            .iter()
            .map(|a| alg.t_alpha(&x, a))
            .collect::<Result<Vec<_>>>()?;
        let dotted = group.iter().map(|w| alg.t_w(&x, w));
        for y in shifted.into_iter().chain(dotted) {
            if y.height() <= height_bound && !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Whether μ is reached from λ by block moves within the height bound.
///
/// `true` is certain. `false` only means no path stays under the bound.
pub fn brute_force_block(
    alg: Algebra,
    lambda: &Weight,
    mu: &Weight,
    height_bound: HalfInt,
) -> Result<bool> {
    alg.check_rank(mu)?;
    Ok(block_reach(alg, lambda, height_bound)?.contains(mu))
}

/// Compares `same_block` with the search on every pair of dominant weights of
/// height at most `max_height`, with bound `max(ht λ, ht μ) + slack`.
pub fn check_blocks(alg: Algebra, max_height: i64, slack: i64) -> VerificationReport {
    let weights = alg.dominant_weights(max_height);
    let rerun = repro(
        alg,
        Suite::Blocks,
        None,
        &format!(" --max-height {max_height}"),
    );
    let mut out = sweep(alg, Suite::Blocks, weights.clone(), |lambda| {
        let mut r = VerificationReport::new(Suite::Blocks, alg);
        let bound = lambda.height() + HalfInt::from_int(slack);
        let reach = match block_reach(alg, lambda, bound) {
            Ok(x) => x,
            Err(e) => {
                r.error(lambda, e, &rerun);
                return r;
            }
        };
        for mu in weights.iter().filter(|mu| mu.height() <= lambda.height()) {
            match alg.same_block(lambda, mu) {
                Ok(key) => {
                    r.cases += 1;
                    if key != reach.contains(mu) {
                        r.fail(
                            lambda,
                            format!("search says ({mu}) linked = {}", reach.contains(mu)),
                            format!("block keys say {key}"),
                            &rerun,
                        );
                    }
                }
                Err(e) => r.error(mu, e, &rerun),
            }
        }
        r
    });
    out.notes.push(format!(
        "search bound is max height + {slack}; a negative search answer is only relative to it"
    ));
    out
}

// ---------------------------------------------------------------- cohomology

fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn monomials(vars: usize, degree: usize) -> Vec<Vec<u8>> {
    fn go(i: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i + 1 == cur.len() {
            cur[i] = left as u8;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u8;
            go(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    go(0, degree, &mut vec![0; vars], &mut out);
    out
}

const PRIME: u64 = 2_147_483_647;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    acc
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = pow_mod(rows[rank][c], PRIME - 2);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % PRIME;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + PRIME - f * y % PRIME) % PRIME;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of multiplication by the quadratic `Σ_{α+β=2δ} x_α x_β` from degree
/// `q−2` to degree `q` in the polynomial ring on the positive odd roots.
fn coboundary_rank(alg: Algebra, q: usize) -> usize {
    let roots = alg.positive_roots().odd;
    let two_delta = &alg.delta() * 2;
    let mut quad: Vec<(usize, usize)> = Vec::new();
    for i in 0..roots.len() {
        for j in i..roots.len() {
            if &roots[i] + &roots[j] == two_delta {
                quad.push((i, j));
            }
        }
    }
    let target = monomials(roots.len(), q);
    let index: HashMap<&Vec<u8>, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let rows = monomials(roots.len(), q - 2)
        .into_iter()
        .map(|m| {
            let mut row = vec![0u64; target.len()];
            for &(i, j) in &quad {
                let mut t = m.clone();
                t[i] += 1;
                t[j] += 1;
                row[index[&t]] += 1;
            }
            row
        })
        .collect();
    rank_mod_p(rows)
}

/// `dim Z^q − dim B^q` against `dim L^{(0)}_{qε1}` for `q ≤ q_max`, with the
/// coboundary dimension recomputed as an explicit rank for `2 ≤ q ≤ 6`.
pub fn check_trivial_cohomology(alg: Algebra, q_max: usize) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Cohomology, alg);
    let n = alg.positive_roots().odd.len() as i64;
    for q in 0..=q_max as i64 {
        let w = &alg.eps(1) * q;
        let rerun = repro(alg, Suite::Cohomology, None, &format!(" --q-max {q}"));
        let z = binomial(n + q - 1, q);
        let b = binomial(n + q - 3, q - 2);
        match o_n_dimension(alg, &w) {
            Ok(d) => r.check(&w, d, z - b, &rerun),
            Err(e) => r.error(&w, e, &rerun),
        }
        if (2..=6).contains(&q) {
            let rank = coboundary_rank(alg, q as usize) as i128;
            r.check(&w, b, rank, &rerun);
            r.check(
                &w,
                z,
                monomials(n as usize, q as usize).len() as i128,
                &rerun,
            );
        }
    }
    r
}

// ---------------------------------------------------------------- typical

/// For typical λ: the expansion, Kac's formula and the Weyl-sum evaluation
/// agree above `min_delta`. For atypical λ: Kac's formula refuses and the
/// dispatcher does not call λ typical.
pub fn check_typical(alg: Algebra, lambda: &Weight, min_delta: HalfInt) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Typical, alg);
    let rerun = repro(
        alg,
        Suite::Typical,
        Some(lambda),
        &format!(" --min-delta {min_delta}"),
    );
    if !alg.is_typical(lambda) {
        let refused = matches!(
            kac_typical_character(alg, lambda, min_delta),
            Err(Error::Atypical(_))
        );
        r.check(lambda, true, refused, &rerun);
        r.check(
            lambda,
            true,
            branch(alg, lambda).is_ok_and(|b| b != Branch::Typical),
            &rerun,
        );
        return r;
    }
    r.check(
        lambda,
        false,
        alg.delta_involution(lambda) == *lambda,
        &rerun,
    );
    let run = || -> Result<(Character, Character, Character)> {
        Ok((
            irreducible_character(alg, lambda, min_delta)?,
            kac_typical_character(alg, lambda, min_delta)?,
            weyl_sum_character(alg, lambda)?.restrict(Cutoff::Delta(min_delta)),
        ))
    };
    match run() {
        Ok((irr, kac, weyl)) => {
            compare_characters(&mut r, lambda, &kac, &irr, &rerun);
            compare_characters(&mut r, lambda, &weyl, &irr, &rerun);
        }
        Err(e) => r.error(lambda, e, &rerun),
    }
    r
}

pub fn sweep_typical(alg: Algebra, max_height: i64) -> VerificationReport {
    sweep(
        alg,
        Suite::Typical,
        alg.dominant_weights(max_height),
        |lambda| {
            let cut = HalfInt::from_int(-lambda.int(0) - 2);
            let mut r = check_typical(alg, lambda, cut);
            r.absorb(check_positive_symmetric(alg, lambda));
            r
        },
    )
}

/// Nonnegative coefficients and a support invariant under every element of W.
pub fn check_positive_symmetric(alg: Algebra, lambda: &Weight) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Typical, alg);
    let rerun = repro(alg, Suite::Typical, Some(lambda), "");
    let c = match finite_character(alg, lambda) {
        Ok(c) => c,
        Err(e) => {
            r.error(lambda, e, &rerun);
            return r;
        }
    };
    r.cases += 1;
    if let Some((w, k)) = c.iter().find(|(_, k)| *k < 0) {
        r.fail(
            lambda,
            "nonnegative coefficients".into(),
            format!("{k} at {w}"),
            &rerun,
        );
    }
    r.cases += 1;
    for g in weyl_group(alg).iter() {
        if let Some((w, k)) = c.iter().find(|(w, k)| c.coeff(&g.act(w)) != *k) {
            r.fail(
                lambda,
                format!("W-invariant coefficients, {k} at {w}"),
                format!("{} at {}", c.coeff(&g.act(w)), g.act(w)),
                &rerun,
            );
            break;
        }
    }
    r
}

// ---------------------------------------------------------------- tensor

/// `ch L_λ · ch L_δ = Σ mult · ch L_μ` above the propagated cutoff, and the
/// matching dimension count.
pub fn check_tensor_identity(
    alg: Algebra,
    lambda: &Weight,
    min_delta: HalfInt,
) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Tensor, alg);
    let rerun = repro(
        alg,
        Suite::Tensor,
        Some(lambda),
        &format!(" --min-delta {min_delta}"),
    );
    let mut run = || -> Result<()> {
        let natural = finite_character(alg, &alg.delta())?;
        let lhs = irreducible_character(alg, lambda, min_delta)?.mul_finite(&natural)?;
        let cut = match lhs.min_delta() {
            Cutoff::Delta(c) => c,
            Cutoff::Exact => min_delta,
        };
        let t = tensor_decompose(alg, lambda)?;
        let mut rhs = Character::zero(alg, Cutoff::Delta(cut));
        let mut dims = 0i128;
        for (mu, k) in t.sorted_constituents() {
            rhs.add_scaled(&irreducible_character(alg, &mu, cut)?, k)?;
            dims += k as i128 * dimension(alg, &mu)?;
        }
        compare_characters(&mut r, lambda, &lhs, &rhs, &rerun);
        let n2 = alg.n() as i128 + 2;
        r.check(lambda, dimension(alg, lambda)? * n2, dims, &rerun);
        for (a, b) in &t.height_ties {
            r.notes.push(format!(
                "({lambda}): ({a}) and ({b}) share a block and a height"
            ));
        }
        Ok(())
    };
    if let Err(e) = run() {
        r.error(lambda, e, &rerun);
    }
    r
}

pub fn sweep_tensor(alg: Algebra, max_height: i64) -> VerificationReport {
    sweep(
        alg,
        Suite::Tensor,
        alg.dominant_weights(max_height),
        |lambda| {
            let mut r = check_tensor_identity(alg, lambda, HalfInt::from_int(-lambda.int(0) - 2));
            r.absorb(check_positive_symmetric(alg, lambda));
            r
        },
    )
}

fn peel_functional(alg: Algebra, w: &Weight) -> i64 {
    let m = alg.m() as i64;
    let t = w.twice();
    (m + 1) * t[0]
        + t[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| (m - i as i64) * c)
            .sum::<i64>()
}

/// Composition factors of `L_λ ⊗ L_δ` found by repeatedly removing the
/// character of the highest remaining weight.
pub fn peel_decomposition(alg: Algebra, lambda: &Weight) -> Result<BTreeMap<Weight, i64>> {
    let natural = finite_character(alg, &alg.delta())?;
    let mut rest = finite_character(alg, lambda)?.mul_finite(&natural)?;
    let mut out = BTreeMap::new();
    while let Some((top, k)) = rest
        .iter()
        .max_by_key(|(w, _)| peel_functional(alg, w))
        .map(|(w, k)| (w.clone(), k))
    {
        if k <= 0 || !alg.is_dominant_integral(&top) {
            return Err(Error::Internal(format!(
                "peeling ({lambda}) ⊗ L_δ left {k}·e^({top}) on top"
            )));
        }
        rest = rest.sub(&finite_character(alg, &top)?.scale(k))?;
        out.insert(top, k);
    }
    Ok(out)
}

/// `tensor_decompose` against the peeled composition factors.
pub fn check_tensor_peel(alg: Algebra, lambda: &Weight) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Peel, alg);
    let rerun = repro(alg, Suite::Peel, Some(lambda), "");
    match (
        peel_decomposition(alg, lambda),
        tensor_decompose(alg, lambda),
    ) {
        (Ok(truth), Ok(t)) => r.check(lambda, truth, t.constituents, &rerun),
        (Err(e), _) | (_, Err(e)) => r.error(lambda, e, &rerun),
    }
    r
}

pub fn sweep_peel(alg: Algebra, max_height: i64) -> VerificationReport {
    sweep(alg, Suite::Peel, alg.dominant_weights(max_height), |l| {
        check_tensor_peel(alg, l)
    })
}

// ---------------------------------------------------------------- small suites

/// `ch L_0 = e^0` above `min_delta`, and again five levels deeper.
pub fn check_trivial_telescoping(alg: Algebra, min_delta: HalfInt) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Telescoping, alg);
    let zero = alg.zero();
    for cut in [min_delta, min_delta - HalfInt::from_int(5)] {
        let rerun = repro(
            alg,
            Suite::Telescoping,
            None,
            &format!(" --min-delta {cut}"),
        );
        match irreducible_character(alg, &zero, cut) {
            Ok(c) => r.check(&zero, vec![(zero.clone(), 1)], c.sorted_terms(), &rerun),
            Err(e) => r.error(&zero, e, &rerun),
        }
    }
    r
}

/// `dim L_δ = n + 2`.
pub fn check_natural_dimension(alg: Algebra) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Natural, alg);
    let d = alg.delta();
    let rerun = repro(alg, Suite::Natural, None, "");
    match dimension(alg, &d) {
        Ok(x) => r.check(&d, alg.n() as i128 + 2, x, &rerun),
        Err(e) => r.error(&d, e, &rerun),
    }
    r
}

/// Type D: the expansion of the mirrored weight is the mirrored expansion.
pub fn check_mirror(alg: Algebra, lambda: &Weight) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Mirror, alg);
    if !alg.is_d() {
        return r;
    }
    let rerun = repro(alg, Suite::Mirror, Some(lambda), "");
    match (
        verma_expansion(alg, &lambda.mirror()),
        verma_expansion(alg, lambda),
    ) {
        (Ok(a), Ok(b)) => r.check(lambda, b.mirror().to_string(), a.to_string(), &rerun),
        (Err(e), _) | (_, Err(e)) => r.error(lambda, e, &rerun),
    }
    r
}

pub fn sweep_mirror(alg: Algebra, max_height: i64) -> VerificationReport {
    sweep(alg, Suite::Mirror, alg.dominant_weights(max_height), |l| {
        check_mirror(alg, l)
    })
}

/// For reflected λ the expansion is `M_λ − M_{λ^δ} + expansion(λ^δ)`. Checked
/// against the closed form termwise and as characters built from scratch.
pub fn check_reflected(alg: Algebra, lambda: &Weight) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Reflected, alg);
    if !matches!(branch(alg, lambda), Ok(Branch::Reflected)) {
        return r;
    }
    let rerun = repro(alg, Suite::Reflected, Some(lambda), "");
    let run = |r: &mut VerificationReport| -> Result<()> {
        let dual = alg.delta_involution(lambda);
        let cut = HalfInt::from_int(-lambda.int(0) - 4);
        let e = verma_expansion(alg, lambda)?;
        let mut rec = verma_expansion(alg, &dual)?.terms_down_to(cut);
        for (w, k) in [(lambda.clone(), 1), (dual.clone(), -1)] {
            *rec.entry(w).or_insert(0) += k;
        }
        rec.retain(|_, k| *k != 0);
        r.check(lambda, rec, e.terms_down_to(cut), &rerun);
        r.check(
            lambda,
            reflected_closed_form(alg, lambda)?,
            (*e).clone(),
            &rerun,
        );
        let mut built = verma_character(alg, lambda, cut)?;
        built.add_scaled(&verma_character(alg, &dual, cut)?, -1)?;
        built.add_scaled(&irreducible_character(alg, &dual, cut)?, 1)?;
        compare_characters(
            r,
            lambda,
            &built,
            &irreducible_character(alg, lambda, cut)?,
            &rerun,
        );
        Ok(())
    };
    if let Err(e) = run(&mut r) {
        r.error(lambda, e, &rerun);
    }
    r
}

pub fn sweep_reflected(alg: Algebra, max_height: i64) -> VerificationReport {
    sweep(
        alg,
        Suite::Reflected,
        alg.dominant_weights(max_height),
        |l| check_reflected(alg, l),
    )
}

/// Knobs for [`run_suite`]. Unset fields take the documented sweep defaults.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Check one weight instead of sweeping (per-weight suites only).
    pub weight: Option<Weight>,
    pub max_height: Option<i64>,
    pub q_max: Option<usize>,
    /// Cutoff for per-weight checks; defaults to `−λ0 − 2`.
    pub min_delta: Option<HalfInt>,
}

/// Runs one suite with its default sweep size, or on a single weight.
pub fn run_suite(alg: Algebra, suite: Suite, opts: &SuiteOptions) -> Result<VerificationReport> {
    if let Some(w) = &opts.weight {
        alg.require_dominant(w)?;
    }
    let cut = |l: &Weight| opts.min_delta.unwrap_or(HalfInt::from_int(-l.int(0) - 2));
    let per_weight =
        |f: &(dyn Fn(&Weight) -> VerificationReport + Sync), default: i64| match &opts.weight {
            Some(w) => f(w),
            None => sweep(
                alg,
                suite,
                alg.dominant_weights(opts.max_height.unwrap_or(default)),
                f,
            ),
        };
    Ok(match suite {
        Suite::Telescoping => {
            check_trivial_telescoping(alg, opts.min_delta.unwrap_or(HalfInt::from_int(-8)))
        }
        Suite::Natural => check_natural_dimension(alg),
        Suite::Cohomology => check_trivial_cohomology(alg, opts.q_max.unwrap_or(10)),
        Suite::Blocks => check_blocks(alg, opts.max_height.unwrap_or(6), 6),
        Suite::Typical => per_weight(
            &|l| {
                let mut r = check_typical(alg, l, cut(l));
                r.absorb(check_positive_symmetric(alg, l));
                r
            },
            6,
        ),
        Suite::Tensor => per_weight(
            &|l| {
                let mut r = check_tensor_identity(alg, l, cut(l));
                r.absorb(check_positive_symmetric(alg, l));
                r
            },
            5,
        ),
        Suite::Peel => per_weight(&|l| check_tensor_peel(alg, l), 5),
        Suite::Mirror => per_weight(&|l| check_mirror(alg, l), 5),
        Suite::Reflected => per_weight(&|l| check_reflected(alg, l), 6),
    })
}
