//! Root data, the bilinear form, dominance, atypicality and blocks for
//! osp(2m|2) = D(m|1) and osp(2m+1|2) = B(m|1).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::charpoly::WeylElement;
use crate::error::{Error, Result};
use crate::weight::{HalfInt, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::B => "B",
            Family::D => "D",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "family must be B or D".into(),
            }),
        }
    }
}

/// One of the superalgebras B(m|1) or D(m|1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AlgebraRepr", into = "AlgebraRepr")]
pub struct Algebra {
    family: Family,
    m: usize,
}

#[derive(Serialize, Deserialize)]
struct AlgebraRepr {
    family: Family,
    m: usize,
}

impl TryFrom<AlgebraRepr> for Algebra {
    type Error = Error;
    fn try_from(r: AlgebraRepr) -> Result<Self> {
        Algebra::new(r.family, r.m)
    }
}

impl From<Algebra> for AlgebraRepr {
    fn from(a: Algebra) -> Self {
        AlgebraRepr {
            family: a.family,
            m: a.m,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}|1)", self.family, self.m)
    }
}

/// Positive even and odd roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoots {
    pub even: Vec<Weight>,
    pub odd: Vec<Weight>,
}

impl PositiveRoots {
    pub fn all(&self) -> impl Iterator<Item = &Weight> {
        self.even.iter().chain(&self.odd)
    }
}

/// Canonical token for the block (∼-class) of an integral weight.
///
/// Built from `v = λ + ρ`. The Weyl group permutes and sign-flips the
/// ε-coordinates of `v` and flips `v0`; an atypical move slides a matched pair
/// `|v0| = |vi|` jointly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BlockKey {
    Typical {
        /// `2|v0|`
        delta_abs: i64,
        /// Sorted `2|vi|`.
        eps_abs: Vec<i64>,
        parity: SignClass,
    },
    Atypical {
        /// Sorted `2|vj|` with one matched entry removed.
        rest: Vec<i64>,
    },
}

/// Sign data that survives the D-type Weyl group (even sign changes only).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SignClass {
    /// All sign patterns are reachable.
    Free,
    Positive,
    Negative,
}

impl fmt::Display for BlockKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[i64]| {
            v.iter()
                .map(|t| HalfInt::from_twice(*t).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            BlockKey::Typical {
                delta_abs,
                eps_abs,
                parity,
            } => write!(
                f,
                "typical |v0|={} |v|={{{}}} signs={:?}",
                HalfInt::from_twice(*delta_abs),
                list(eps_abs),
                parity
            ),
            BlockKey::Atypical { rest } => write!(f, "atypical rest={{{}}}", list(rest)),
        }
    }
}

impl Algebra {
    pub fn new(family: Family, m: usize) -> Result<Self> {
        let min = match family {
            Family::B => 1,
            Family::D => 2,
        };
        if m < min {
            return Err(Error::InvalidRank {
                family: if family == Family::B { 'B' } else { 'D' },
                m,
            });
        }
        Ok(Algebra { family, m })
    }

    /// Shorthand for tests and examples. Panics on an invalid rank.
    pub fn b(m: usize) -> Self {
        Self::new(Family::B, m).expect("valid B rank")
    }

    /// Shorthand for tests and examples. Panics on an invalid rank.
    pub fn d(m: usize) -> Self {
        Self::new(Family::D, m).expect("valid D rank")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_d(&self) -> bool {
        self.family == Family::D
    }

    /// `n` in osp(n|2).
    pub fn n(&self) -> usize {
        match self.family {
            Family::B => 2 * self.m + 1,
            Family::D => 2 * self.m,
        }
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.m)
    }

    pub fn delta(&self) -> Weight {
        Weight::delta(self.m)
    }

    pub fn eps(&self, i: usize) -> Weight {
        Weight::eps(self.m, i)
    }

    /// Integer-coordinate weight, checking the rank.
    pub fn weight(&self, coords: &[i64]) -> Result<Weight> {
        self.check_rank(&Weight::from_ints(coords))
            .map(|_| Weight::from_ints(coords))
    }

    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        Weight::parse_with_rank(s, self.m)
    }

    pub(crate) fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.m {
            return Err(Error::RankMismatch {
                expected: self.m,
                found: w.rank(),
            });
        }
        Ok(())
    }

    pub fn positive_roots(&self) -> PositiveRoots {
        let m = self.m;
        let d = self.delta();
        let mut even = Vec::new();
        for j in 1..=m {
            for k in (j + 1)..=m {
                even.push(&self.eps(j) - &self.eps(k));
                even.push(&self.eps(j) + &self.eps(k));
            }
        }
        if self.family == Family::B {
            even.extend((1..=m).map(|i| self.eps(i)));
        }
        even.push(&d * 2);

        let mut odd = Vec::new();
        for i in 1..=m {
            odd.push(&d - &self.eps(i));
            odd.push(&d + &self.eps(i));
        }
        if self.family == Family::B {
            odd.push(d);
        }
        PositiveRoots { even, odd }
    }

    /// Odd positive roots other than δ; these drive atypicality.
    pub fn atypicality_roots(&self) -> Vec<Weight> {
        let d = self.delta();
        let mut out = Vec::with_capacity(2 * self.m);
        for i in 1..=self.m {
            out.push(&d - &self.eps(i));
            out.push(&d + &self.eps(i));
        }
        out
    }

    /// `(x, y) = −x0·y0 + Σ xi·yi`.
    pub fn form(&self, x: &Weight, y: &Weight) -> Rational64 {
        Rational64::new(self.form_times4(x, y), 4)
    }

    /// Four times the form, as an exact integer.
    pub(crate) fn form_times4(&self, x: &Weight, y: &Weight) -> i64 {
        let (a, b) = (x.twice(), y.twice());
        -a[0] * b[0] + a[1..].iter().zip(&b[1..]).map(|(p, q)| p * q).sum::<i64>()
    }

    /// ρ = ρ0 − ρ1 in the δε-basis.
    pub fn rho(&self) -> Weight {
        let m = self.m as i64;
        let mut twice = Vec::with_capacity(self.m + 1);
        match self.family {
            Family::D => {
                twice.push(2 * (1 - m));
                twice.extend((0..m).rev().map(|c| 2 * c));
            }
            Family::B => {
                twice.push(1 - 2 * m);
                twice.extend((0..m).rev().map(|c| 2 * c + 1));
            }
        }
        Weight::from_twice(&twice)
    }

    pub fn height(&self, w: &Weight) -> HalfInt {
        w.height()
    }

    /// Whether the ε-part is a dominant integral o(n) weight.
    pub fn is_orthogonal_dominant(&self, w: &Weight) -> bool {
        if w.rank() != self.m || !w.twice()[1..].iter().all(|t| t % 2 == 0) {
            return false;
        }
        let m = self.m;
        let eps: Vec<i64> = (1..=m).map(|i| w.int(i)).collect();
        let decreasing = eps
            .windows(2)
            .take(m.saturating_sub(2))
            .all(|p| p[0] >= p[1]);
        match self.family {
            Family::B => eps.windows(2).all(|p| p[0] >= p[1]) && eps[m - 1] >= 0,
            Family::D => {
                decreasing && eps[..m - 1].iter().all(|&c| c >= 0) && eps[m - 2] >= eps[m - 1].abs()
            }
        }
    }

    /// Membership in P: integral and finite-dimensional highest weight.
    pub fn is_dominant_integral(&self, w: &Weight) -> bool {
        if w.rank() != self.m || !w.is_integral() || !self.is_orthogonal_dominant(w) {
            return false;
        }
        let l0 = w.int(0);
        let t = (1..=self.m).rev().find(|&i| w.int(i) != 0).unwrap_or(0) as i64;
        l0 >= 0 && l0 >= t
    }

    pub(crate) fn require_dominant(&self, w: &Weight) -> Result<()> {
        self.check_rank(w)?;
        if !self.is_dominant_integral(w) {
            return Err(Error::NotDominant(w.clone()));
        }
        Ok(())
    }

    /// Largest index `k` with `λk ≠ 0`, or 0.
    pub fn last_nonzero(&self, w: &Weight) -> usize {
        (1..=self.m).rev().find(|&i| w.twice()[i] != 0).unwrap_or(0)
    }

    /// The odd roots `α ≠ δ` with `(λ+ρ, α) = 0`.
    pub fn atypical_roots(&self, lambda: &Weight) -> Vec<Weight> {
        let v = lambda + &self.rho();
        self.atypicality_roots()
            .into_iter()
            .filter(|a| self.form_times4(&v, a) == 0)
            .collect()
    }

    pub fn is_typical(&self, lambda: &Weight) -> bool {
        self.atypical_roots(lambda).is_empty()
    }

    /// λ^δ: replaces λ0 with `n − 2 − λ0`.
    pub fn delta_involution(&self, lambda: &Weight) -> Weight {
        let mut out = lambda.clone();
        let n = self.n() as i64;
        out.set_coord(0, HalfInt::from_int(n - 2) - lambda.delta_coord());
        out
    }

    fn is_odd_atypicality_root(&self, alpha: &Weight) -> bool {
        let t = alpha.twice();
        if t[0].abs() != 2 {
            return false;
        }
        let nonzero: Vec<i64> = t[1..].iter().copied().filter(|&c| c != 0).collect();
        nonzero.len() == 1 && nonzero[0].abs() == 2
    }

    /// `t_α(λ) = λ + α` when `(λ+ρ, α) = 0`, else λ. For negative α this is
    /// the inverse of `t_{−α}`.
    pub fn t_alpha(&self, lambda: &Weight, alpha: &Weight) -> Result<Weight> {
        self.check_rank(alpha)?;
        if !self.is_odd_atypicality_root(alpha) {
            return Err(Error::NotOddRoot(alpha.clone()));
        }
        let v = lambda + &self.rho();
        Ok(if self.form_times4(&v, alpha) == 0 {
            lambda + alpha
        } else {
            lambda.clone()
        })
    }

    /// The dot action `w(λ+ρ) − ρ`.
    pub fn t_w(&self, lambda: &Weight, w: &WeylElement) -> Weight {
        let rho = self.rho();
        &w.act(&(lambda + &rho)) - &rho
    }

    pub fn block_key(&self, lambda: &Weight) -> Result<BlockKey> {
        self.check_rank(lambda)?;
        if !lambda.is_integral() {
            return Err(Error::NotIntegral(lambda.clone()));
        }
        let v = lambda + &self.rho();
        let t = v.twice();
        let a = t[0].abs();
        let mut abs: Vec<i64> = t[1..].iter().map(|c| c.abs()).collect();
        abs.sort_unstable();
        if let Some(pos) = abs.iter().position(|&c| c == a) {
            abs.remove(pos);
            return Ok(BlockKey::Atypical { rest: abs });
        }
        let parity = if self.family == Family::D && t[1..].iter().all(|&c| c != 0) {
            if t[1..].iter().filter(|&&c| c < 0).count() % 2 == 0 {
                SignClass::Positive
            } else {
                SignClass::Negative
            }
        } else {
            SignClass::Free
        };
        Ok(BlockKey::Typical {
            delta_abs: a,
            eps_abs: abs,
            parity,
        })
    }

    pub fn same_block(&self, lambda: &Weight, mu: &Weight) -> Result<bool> {
        Ok(self.block_key(lambda)? == self.block_key(mu)?)
    }

    /// `λ ≻ μ`: same block and strictly greater height.
    pub fn block_order(&self, lambda: &Weight, mu: &Weight) -> Result<bool> {
        Ok(self.same_block(lambda, mu)? && lambda.height() > mu.height())
    }

    /// `λ > μ`: `λ − μ` is a nonzero `ℤ≥0`-combination of positive roots.
    pub fn natural_order(&self, lambda: &Weight, mu: &Weight) -> bool {
        let diff = lambda - mu;
        if diff.twice().iter().all(|&c| c == 0) || !diff.is_integral() {
            return false;
        }
        let roots: Vec<Weight> = self.positive_roots().all().cloned().collect();
        let mut dead = HashSet::new();
        self.cone_feasible(&diff, &roots, &mut dead)
    }

    /// A linear functional strictly positive on every positive root.
    fn positivity(&self, w: &Weight) -> i64 {
        let m = self.m as i64;
        let t = w.twice();
        (m + 1) * t[0]
            + t[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| (m - i as i64) * c)
                .sum::<i64>()
    }

    fn cone_feasible(&self, x: &Weight, roots: &[Weight], dead: &mut HashSet<Weight>) -> bool {
        if x.twice().iter().all(|&c| c == 0) {
            return true;
        }
        if self.positivity(x) <= 0 || dead.contains(x) {
            return false;
        }
        for r in roots {
            if self.cone_feasible(&(x - r), roots, dead) {
                return true;
            }
        }
        dead.insert(x.clone());
        false
    }

    /// Every weight in P with height at most `max_height`, in a fixed order.
    pub fn dominant_weights(&self, max_height: i64) -> Vec<Weight> {
        let mut out = Vec::new();
        let mut eps = vec![0i64; self.m];
        self.fill_eps(0, max_height, &mut eps, &mut out);
        out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        out
    }

    fn fill_eps(&self, idx: usize, budget: i64, eps: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if idx == self.m {
            for l0 in 0..=budget {
                let mut coords = vec![l0];
                coords.extend_from_slice(eps);
                let w = Weight::from_ints(&coords);
                if self.is_dominant_integral(&w) {
                    out.push(w);
                }
            }
            return;
        }
        for c in -budget..=budget {
            eps[idx] = c;
            self.fill_eps(idx + 1, budget - c.abs(), eps, out);
        }
        eps[idx] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    fn sorted(mut v: Vec<Weight>) -> Vec<Weight> {
        v.sort();
        v
    }

    #[test]
    fn construction_bounds() {
        assert!(Algebra::new(Family::D, 1).is_err());
        assert!(Algebra::new(Family::B, 0).is_err());
        assert!(Algebra::new(Family::B, 1).is_ok());
    }

    #[test]
    fn root_sets() {
        let r = Algebra::d(2).positive_roots();
        assert_eq!(
            sorted(r.odd.clone()),
            sorted(vec![
                w(&[1, -1, 0]),
                w(&[1, 1, 0]),
                w(&[1, 0, -1]),
                w(&[1, 0, 1])
            ])
        );
        assert_eq!(
            sorted(r.even.clone()),
            sorted(vec![w(&[0, 1, -1]), w(&[0, 1, 1]), w(&[2, 0, 0])])
        );

        let r = Algebra::b(1).positive_roots();
        assert_eq!(
            sorted(r.odd),
            sorted(vec![w(&[1, -1]), w(&[1, 1]), w(&[1, 0])])
        );
        assert_eq!(sorted(r.even), sorted(vec![w(&[0, 1]), w(&[2, 0])]));

        let r = Algebra::b(2).positive_roots();
        assert_eq!((r.even.len(), r.odd.len()), (5, 5));

        for m in 2..6 {
            let d = Algebra::d(m).positive_roots();
            assert_eq!(d.even.len(), m * (m - 1) + 1);
            assert_eq!(d.odd.len(), 2 * m);
            let b = Algebra::b(m).positive_roots();
            assert_eq!(b.even.len(), m * m + 1);
            assert_eq!(b.odd.len(), 2 * m + 1);
        }
    }

    #[test]
    fn form_values() {
        let a = Algebra::d(2);
        let r = |n, d| Rational64::new(n, d);
        assert_eq!(a.form(&a.delta(), &a.delta()), r(-1, 1));
        assert_eq!(a.form(&a.eps(1), &a.eps(2)), r(0, 1));
        assert_eq!(a.form(&a.eps(2), &a.eps(2)), r(1, 1));
        assert_eq!(a.form(&w(&[1, -1, 0]), &w(&[1, 1, 0])), r(-2, 1));
    }

    #[test]
    fn rho_values() {
        assert_eq!(Algebra::d(2).rho(), w(&[-1, 1, 0]));
        assert_eq!(Algebra::b(1).rho().to_string(), "-1/2;1/2");
        assert_eq!(Algebra::b(2).rho().to_string(), "-3/2;3/2,1/2");
        assert_eq!(Algebra::d(4).rho(), w(&[-3, 3, 2, 1, 0]));
    }

    #[test]
    fn dominance_examples() {
        let a = Algebra::d(2);
        assert!(a.is_dominant_integral(&w(&[1, 0, 0])));
        assert!(!a.is_dominant_integral(&w(&[0, 1, 0])));
        assert!(a.is_dominant_integral(&w(&[2, 1, -1])));
        assert!(!a.is_dominant_integral(&w(&[2, 1, 2])));
        assert!(!a.is_dominant_integral(&w(&[-1, 0, 0])));
        let b = Algebra::b(2);
        assert!(!b.is_dominant_integral(&w(&[2, 1, -1])));
        assert!(b.is_dominant_integral(&w(&[2, 1, 1])));
        assert!(!b.is_dominant_integral(&Weight::from_twice(&[2, 1, 1])));
        for alg in [Algebra::d(2), Algebra::d(3), Algebra::b(1), Algebra::b(4)] {
            assert!(alg.is_dominant_integral(&alg.delta()));
            assert_eq!(alg.delta().height(), HalfInt::from_int(1));
        }
    }

    #[test]
    fn atypicality_examples() {
        let a = Algebra::d(2);
        assert_eq!(a.atypical_roots(&a.zero()), vec![w(&[1, -1, 0])]);
        assert_eq!(
            sorted(a.atypical_roots(&w(&[1, 1, 0]))),
            sorted(vec![w(&[1, 0, -1]), w(&[1, 0, 1])])
        );
        // λ+ρ = (3/2; 5/2, 1/2): |v0| matches no |vi|.
        let b = Algebra::b(2);
        assert!(b.atypical_roots(&w(&[3, 1, 0])).is_empty());
        let v = &w(&[3, 1, 0]) + &b.rho();
        for alpha in b.atypicality_roots() {
            assert_ne!(b.form(&v, &alpha), Rational64::from_integer(0));
        }
    }

    #[test]
    fn delta_involution_examples() {
        let a = Algebra::d(2);
        assert_eq!(a.delta_involution(&w(&[2, 0, 0])), w(&[0, 0, 0]));
        assert_eq!(a.delta_involution(&w(&[1, 1, 0])), w(&[1, 1, 0]));
        let b = Algebra::b(2);
        assert_eq!(b.delta_involution(&w(&[3, 1, 0])), w(&[0, 1, 0]));
    }

    #[test]
    fn t_alpha_examples() {
        let a = Algebra::d(2);
        let alpha = w(&[1, -1, 0]);
        assert_eq!(a.t_alpha(&a.zero(), &alpha).unwrap(), w(&[1, -1, 0]));
        assert_eq!(a.t_alpha(&a.delta(), &alpha).unwrap(), a.delta());
        // negative root undoes the positive move
        let there = a.t_alpha(&a.zero(), &alpha).unwrap();
        assert_eq!(a.t_alpha(&there, &(-&alpha)).unwrap(), a.zero());
        assert!(a.t_alpha(&a.zero(), &a.delta()).is_err());
        assert!(a.t_alpha(&a.zero(), &w(&[0, 1, -1])).is_err());
    }

    #[test]
    fn atypical_shift_stays_atypical() {
        for alg in [Algebra::d(2), Algebra::d(3), Algebra::b(2)] {
            let rho = alg.rho();
            for lambda in alg.dominant_weights(6) {
                for alpha in alg.atypical_roots(&lambda) {
                    for moved in [&lambda + &alpha, &lambda - &alpha] {
                        let v = &moved + &rho;
                        assert_eq!(alg.form_times4(&v, &alpha), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn atypicality_degree_on_dominant_weights() {
        for alg in [
            Algebra::d(2),
            Algebra::d(3),
            Algebra::d(4),
            Algebra::b(1),
            Algebra::b(2),
            Algebra::b(3),
        ] {
            for lambda in alg.dominant_weights(7) {
                let roots = alg.atypical_roots(&lambda);
                if roots.len() > 1 {
                    let m = alg.m() as i64;
                    assert!(alg.is_d() && lambda.int(0) == m - 1, "{alg} {lambda:?}");
                    assert_eq!(roots.len(), 2);
                    let em = alg.eps(alg.m());
                    let d = alg.delta();
                    assert!(roots.contains(&(&d + &em)) && roots.contains(&(&d - &em)));
                }
            }
        }
    }

    #[test]
    fn blocks_of_known_pairs() {
        let a = Algebra::d(2);
        for q in 0..6 {
            let mu = w(&[-q, q, 0]);
            assert!(a.same_block(&a.zero(), &mu).unwrap());
        }
        for lambda in a.dominant_weights(6) {
            assert!(a.same_block(&lambda, &a.delta_involution(&lambda)).unwrap());
        }
        assert!(a.block_key(&Weight::from_twice(&[1, 0, 0])).is_err());
    }

    #[test]
    fn orders() {
        let a = Algebra::d(2);
        let l = w(&[1, -1, 0]);
        assert!(!a.block_order(&l, &l).unwrap());
        assert!(a.block_order(&l, &a.zero()).unwrap());
        let alpha = w(&[1, -1, 0]);
        assert!(a.natural_order(&l, &(&l - &alpha)));
        // δ is outside the D root lattice
        assert!(!a.natural_order(&a.delta(), &a.zero()));
        assert!(a.natural_order(&w(&[1, 1, 0]), &a.zero()));
        assert!(!a.natural_order(&a.zero(), &w(&[1, 1, 0])));
        assert!(!a.natural_order(&l, &l));
        assert!(a.natural_order(&w(&[2, 0, 0]), &a.zero()));
        assert!(!a.natural_order(&w(&[0, 0, 1]), &w(&[0, 1, 0])));
        let b = Algebra::b(1);
        assert!(b.natural_order(&b.delta(), &b.zero()));
        assert!(b.natural_order(&w(&[0, 1]), &b.zero()));
    }

    #[test]
    fn enumeration_is_dominant_and_bounded() {
        let a = Algebra::d(2);
        let ws = a.dominant_weights(3);
        assert!(ws.contains(&a.zero()) && ws.contains(&a.delta()));
        assert!(ws.contains(&w(&[1, 1, 0])) && ws.contains(&w(&[1, 2, 0])));
        assert!(!ws.contains(&w(&[2, 1, -1])));
        assert!(ws
            .iter()
            .all(|x| a.is_dominant_integral(x) && x.height() <= HalfInt::from_int(3)));
    }
}
