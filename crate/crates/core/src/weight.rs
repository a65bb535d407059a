//! Half-integer scalars and weights in the δε-basis.
//!
//! Every coordinate is stored doubled, so `3/2` is held as `3` and `2` as `4`.
//! Equality, hashing and ordering all work on the doubled integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// An exact element of `½ℤ`, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub const fn to_int(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt(self.0 * rhs)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_int() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| Error::Parse {
            input: s.clone(),
            reason: why.to_string(),
        };
        match s.split_once('/') {
            None => s
                .parse::<i64>()
                .map(HalfInt::from_int)
                .map_err(|_| bad("expected an integer or p/2")),
            Some((num, "2")) => num
                .parse::<i64>()
                .map(HalfInt)
                .map_err(|_| bad("bad numerator")),
            Some(_) => Err(bad("only the denominator 2 is allowed")),
        }
    }
}

pub(crate) type Coords = SmallVec<[i64; 6]>;

/// A weight `λ0·δ + Σ λi·εi`, written `(λ0; λ1, …, λm)`.
///
/// Index 0 is the δ-coordinate and indices `1..=m` are the ε-coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    twice: Coords,
}

impl Weight {
    /// The zero weight of rank `m`.
    pub fn zero(m: usize) -> Self {
        Weight {
            twice: smallvec::smallvec![0; m + 1],
        }
    }

    /// Builds a weight from integer coordinates `[λ0, λ1, …, λm]`.
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            twice: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    /// Builds a weight from doubled coordinates.
    pub fn from_twice(twice: &[i64]) -> Self {
        Weight {
            twice: twice.iter().copied().collect(),
        }
    }

    pub fn from_half_ints(coords: &[HalfInt]) -> Self {
        Weight {
            twice: coords.iter().map(|c| c.twice()).collect(),
        }
    }

    /// The unit vector δ in rank `m`.
    pub fn delta(m: usize) -> Self {
        Self::unit(m, 0)
    }

    /// The unit vector εi (`i` in `1..=m`).
    pub fn eps(m: usize, i: usize) -> Self {
        assert!(
            (1..=m).contains(&i),
            "ε index {i} out of range for rank {m}"
        );
        Self::unit(m, i)
    }

    fn unit(m: usize, i: usize) -> Self {
        let mut w = Self::zero(m);
        w.twice[i] = 2;
        w
    }

    /// Number of ε-coordinates.
    pub fn rank(&self) -> usize {
        self.twice.len() - 1
    }

    pub fn coord(&self, i: usize) -> HalfInt {
        HalfInt::from_twice(self.twice[i])
    }

    pub fn delta_coord(&self) -> HalfInt {
        self.coord(0)
    }

    pub fn set_coord(&mut self, i: usize, value: HalfInt) {
        self.twice[i] = value.twice();
    }

    pub fn twice(&self) -> &[i64] {
        &self.twice
    }

    pub(crate) fn twice_mut(&mut self) -> &mut [i64] {
        &mut self.twice
    }

    pub fn coords(&self) -> impl Iterator<Item = HalfInt> + '_ {
        self.twice.iter().map(|&t| HalfInt::from_twice(t))
    }

    pub fn is_integral(&self) -> bool {
        self.twice.iter().all(|t| t % 2 == 0)
    }

    /// The coordinate `i` as an integer. Panics on a half-integer.
    pub fn int(&self, i: usize) -> i64 {
        self.coord(i)
            .to_int()
            .unwrap_or_else(|| panic!("coordinate {i} of {self} is not an integer"))
    }

    /// `Σ |λi|` over all coordinates.
    pub fn height(&self) -> HalfInt {
        HalfInt::from_twice(self.twice.iter().map(|t| t.abs()).sum())
    }

    /// The same weight with its δ-coordinate replaced by zero.
    pub fn eps_part(&self) -> Weight {
        let mut w = self.clone();
        w.twice[0] = 0;
        w
    }

    /// Flips the sign of the last ε-coordinate.
    pub fn mirror(&self) -> Weight {
        let mut w = self.clone();
        let m = w.rank();
        w.twice[m] = -w.twice[m];
        w
    }

    /// The order used for every rendered listing: descending δ-coordinate,
    /// then lexicographic on doubled coordinates.
    pub fn display_cmp(&self, other: &Weight) -> Ordering {
        other.twice[0]
            .cmp(&self.twice[0])
            .then_with(|| self.twice.cmp(&other.twice))
    }

    /// Parses the text form `λ0;λ1,…,λm` and checks the rank.
    pub fn parse_with_rank(s: &str, m: usize) -> Result<Weight> {
        let w: Weight = s.parse()?;
        if w.rank() != m {
            return Err(Error::RankMismatch {
                expected: m,
                found: w.rank(),
            });
        }
        Ok(w)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.coord(0))?;
        for i in 1..self.twice.len() {
            if i > 1 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.coord(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, tail) = compact.split_once(';').ok_or_else(|| Error::Parse {
            input: compact.clone(),
            reason: "expected `λ0;λ1,…,λm`".into(),
        })?;
        if tail.is_empty() {
            return Err(Error::Parse {
                input: compact.clone(),
                reason: "no ε-coordinates".into(),
            });
        }
        let mut twice = Coords::new();
        twice.push(head.parse::<HalfInt>()?.twice());
        for part in tail.split(',') {
            twice.push(part.parse::<HalfInt>()?.twice());
        }
        Ok(Weight { twice })
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        debug_assert_eq!(self.rank(), rhs.rank());
        for (a, b) in self.twice.iter_mut().zip(&rhs.twice) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        debug_assert_eq!(self.rank(), rhs.rank());
        for (a, b) in self.twice.iter_mut().zip(&rhs.twice) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            twice: self.twice.iter().map(|t| -t).collect(),
        }
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight {
            twice: self.twice.iter().map(|t| t * k).collect(),
        }
    }
}
