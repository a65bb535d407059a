use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{HalfInt, Weight};
use crate::weightspace::Algebra;

/// Lower δ-bound above which a [`Character`] is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cutoff {
    /// Exact everywhere (finite support).
    Exact,
    /// Exact for every weight with δ-coordinate at least this value.
    Delta(HalfInt),
}

impl Cutoff {
    pub fn admits(self, delta: HalfInt) -> bool {
        match self {
            Cutoff::Exact => true,
            Cutoff::Delta(c) => delta >= c,
        }
    }

    pub fn max(self, other: Cutoff) -> Cutoff {
        std::cmp::max(self, other)
    }

    fn shifted(self, by: HalfInt) -> Cutoff {
        match self {
            Cutoff::Exact => Cutoff::Exact,
            Cutoff::Delta(c) => Cutoff::Delta(c + by),
        }
    }
}

impl fmt::Display for Cutoff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cutoff::Exact => f.write_str("-inf"),
            Cutoff::Delta(c) => write!(f, "{c}"),
        }
    }
}

impl std::str::FromStr for Cutoff {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" => Ok(Cutoff::Exact),
            other => other.parse().map(Cutoff::Delta),
        }
    }
}

/// A truncated formal character `Σ c_μ e^μ`.
///
/// Coefficients are exact for every weight whose δ-coordinate is admitted by
/// `min_delta`; absent weights there have coefficient zero. Nothing is claimed
/// below the cutoff and no term below it is stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Character {
    alg: Algebra,
    min_delta: Cutoff,
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn zero(alg: Algebra, min_delta: Cutoff) -> Self {
        Character {
            alg,
            min_delta,
            terms: BTreeMap::new(),
        }
    }

    /// The unit character `e^0`, exact everywhere.
    pub fn one(alg: Algebra) -> Self {
        let mut c = Self::zero(alg, Cutoff::Exact);
        c.add_term(alg.zero(), 1);
        c
    }

    pub fn from_terms(
        alg: Algebra,
        min_delta: Cutoff,
        terms: impl IntoIterator<Item = (Weight, i64)>,
    ) -> Self {
        let mut c = Self::zero(alg, min_delta);
        for (w, k) in terms {
            c.add_term(w, k);
        }
        c
    }

    pub fn algebra(&self) -> Algebra {
        self.alg
    }

    pub fn min_delta(&self) -> Cutoff {
        self.min_delta
    }

    /// Adds `k·e^w`; silently drops terms below the cutoff.
    pub fn add_term(&mut self, w: Weight, k: i64) {
        if k == 0 || !self.min_delta.admits(w.delta_coord()) {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(k);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &k)| (w, k))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn max_delta(&self) -> Option<HalfInt> {
        self.terms.keys().map(|w| w.delta_coord()).max()
    }

    pub fn min_support_delta(&self) -> Option<HalfInt> {
        self.terms.keys().map(|w| w.delta_coord()).min()
    }

    /// Raises the cutoff, discarding terms that fall below it.
    pub fn restrict(&self, min_delta: Cutoff) -> Character {
        let cut = self.min_delta.max(min_delta);
        Character {
            alg: self.alg,
            min_delta: cut,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| cut.admits(w.delta_coord()))
                .map(|(w, &k)| (w.clone(), k))
                .collect(),
        }
    }

    fn check_same_algebra(&self, other: &Character) -> Result<()> {
        if self.alg != other.alg {
            return Err(Error::Internal(format!(
                "mixing characters of {} and {}",
                self.alg, other.alg
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Character) -> Result<Character> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Character) -> Result<Character> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Character, sign: i64) -> Result<Character> {
        self.check_same_algebra(other)?;
        let mut out = self.restrict(other.min_delta);
        for (w, k) in other.iter() {
            out.add_term(w.clone(), sign * k);
        }
        Ok(out)
    }

    /// In-place `self += k·other`, keeping the larger cutoff.
    pub fn add_scaled(&mut self, other: &Character, k: i64) -> Result<()> {
        self.check_same_algebra(other)?;
        if other.min_delta > self.min_delta {
            *self = self.restrict(other.min_delta);
        }
        if k == 0 {
            return Ok(());
        }
        for (w, c) in other.iter() {
            self.add_term(w.clone(), k * c);
        }
        Ok(())
    }

    pub fn scale(&self, k: i64) -> Character {
        let mut out = Character::zero(self.alg, self.min_delta);
        if k != 0 {
            out.terms = self
                .terms
                .iter()
                .map(|(w, &c)| (w.clone(), k * c))
                .collect();
        }
        out
    }

    /// Product with a finite, everywhere-exact character.
    ///
    /// A term of `self` below its cutoff can reach δ-level `L` in the product
    /// only through a factor term with δ-coordinate at most `max δ(f)`, so the
    /// product is exact from `self.min_delta + max δ(f)` upward.
    pub fn mul_finite(&self, f: &Character) -> Result<Character> {
        self.check_same_algebra(f)?;
        if f.min_delta != Cutoff::Exact {
            return Err(Error::Internal(
                "mul_finite needs a finite exact factor".into(),
            ));
        }
        let boost = f.max_delta().unwrap_or(HalfInt::ZERO);
        let mut out = Character::zero(self.alg, self.min_delta.shifted(boost));
        for (a, x) in self.iter() {
            for (b, y) in f.iter() {
                out.add_term(a + b, x * y);
            }
        }
        Ok(out)
    }

    /// Declares the stored terms to be the whole character.
    pub fn into_exact(mut self) -> Character {
        self.min_delta = Cutoff::Exact;
        self
    }

    /// Applies a map to every weight (which must be injective).
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Character {
        Character::from_terms(
            self.alg,
            self.min_delta,
            self.iter().map(|(w, k)| (f(w), k)),
        )
    }

    /// Terms sorted for display.
    pub fn sorted_terms(&self) -> Vec<(Weight, i64)> {
        let mut v: Vec<_> = self.iter().map(|(w, k)| (w.clone(), k)).collect();
        v.sort_by(|a, b| a.0.display_cmp(&b.0));
        v
    }

    pub fn to_json(&self) -> CharacterJson {
        CharacterJson {
            algebra: self.alg,
            min_delta: self.min_delta.to_string(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, k)| TermJson {
                    weight: w.to_string(),
                    coeff: k.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &CharacterJson) -> Result<Character> {
        let alg = j.algebra;
        let mut c = Character::zero(alg, j.min_delta.parse()?);
        for t in &j.terms {
            let w = alg.parse_weight(&t.weight)?;
            let k: i64 = t.coeff.trim().parse().map_err(|_| Error::Parse {
                input: t.coeff.clone(),
                reason: "coefficient must be a decimal integer".into(),
            })?;
            c.add_term(w, k);
        }
        Ok(c)
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character[{} ≥ {}] {{", self.alg, self.min_delta)?;
        for (i, (w, k)) in self.sorted_terms().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}·e^({w})")?;
        }
        f.write_str("}")
    }
}

/// Wire form of a character; coefficients are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub algebra: Algebra,
    pub min_delta: String,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub weight: String,
    pub coeff: String,
}
