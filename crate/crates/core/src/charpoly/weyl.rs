use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use smallvec::SmallVec;

use crate::weight::Weight;
use crate::weightspace::{Algebra, Family};

/// An element of W(o(n)) × W(sl2) acting on the δε-basis.
///
/// `w(v)_i = signs[i-1] · v_{perm[i-1]}` for the ε-coordinates and
/// `w(v)_0 = delta_sign · v_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: SmallVec<[usize; 6]>,
    signs: SmallVec<[i8; 6]>,
    delta_sign: i8,
}

impl WeylElement {
    pub fn identity(m: usize) -> Self {
        WeylElement {
            perm: (1..=m).collect(),
            signs: smallvec::smallvec![1; m],
            delta_sign: 1,
        }
    }

    /// Builds an element from a permutation of `1..=m`, ε-signs and the δ sign.
    pub fn new(perm: &[usize], signs: &[i8], delta_sign: i8) -> Self {
        debug_assert_eq!(perm.len(), signs.len());
        WeylElement {
            perm: perm.iter().copied().collect(),
            signs: signs.iter().copied().collect(),
            delta_sign,
        }
    }

    /// The reflection δ ↦ −δ.
    pub fn delta_flip(m: usize) -> Self {
        let mut w = Self::identity(m);
        w.delta_sign = -1;
        w
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn act(&self, v: &Weight) -> Weight {
        let src = v.twice();
        let mut out = v.clone();
        let dst = out.twice_mut();
        dst[0] = self.delta_sign as i64 * src[0];
        for (i, (&p, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            dst[i + 1] = s as i64 * src[p];
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        // (self∘other)(v)_i = s_i · (other v)_{p_i} = s_i · t_{p_i} · v_{q_{p_i}}
        let perm = self.perm.iter().map(|&p| other.perm[p - 1]).collect();
        let signs = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s * other.signs[p - 1])
            .collect();
        WeylElement {
            perm,
            signs,
            delta_sign: self.delta_sign * other.delta_sign,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let m = self.rank();
        let mut perm: SmallVec<[usize; 6]> = smallvec::smallvec![0; m];
        let mut signs: SmallVec<[i8; 6]> = smallvec::smallvec![1; m];
        for (i, (&p, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            perm[p - 1] = i + 1;
            signs[p - 1] = s;
        }
        WeylElement {
            perm,
            signs,
            delta_sign: self.delta_sign,
        }
    }

    /// The determinant ε(w) = ±1.
    pub fn sign(&self) -> i64 {
        let mut inversions = 0usize;
        for i in 0..self.perm.len() {
            for j in (i + 1)..self.perm.len() {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        let flips = self.signs.iter().filter(|&&s| s < 0).count();
        let mut s = if (inversions + flips).is_multiple_of(2) {
            1
        } else {
            -1
        };
        if self.delta_sign < 0 {
            s = -s;
        }
        s
    }

    /// Whether the element fixes δ, i.e. lies in W(o(n)).
    pub fn fixes_delta(&self) -> bool {
        self.delta_sign == 1
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(m - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, m);
            out.push(p);
        }
    }
    out.sort();
    out
}

fn enumerate(alg: Algebra) -> Vec<WeylElement> {
    let m = alg.m();
    let mut out = Vec::new();
    for delta_sign in [1i8, -1] {
        for perm in permutations(m) {
            for mask in 0u32..(1 << m) {
                if alg.family() == Family::D && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let signs: Vec<i8> = (0..m)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(WeylElement::new(&perm, &signs, delta_sign));
            }
        }
    }
    out
}

/// All of W(o(n)) × W(sl2), in a deterministic order starting at the identity.
///
/// Cached per algebra.
pub fn weyl_group(alg: Algebra) -> Arc<Vec<WeylElement>> {
    static CACHE: OnceLock<Mutex<HashMap<Algebra, Arc<Vec<WeylElement>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(&alg) {
        return g.clone();
    }
    let group = Arc::new(enumerate(alg));
    cache.lock().unwrap().entry(alg).or_insert(group).clone()
}

/// Simple reflections of W(o(n)) plus the δ-flip.
pub fn weyl_generators(alg: Algebra) -> Vec<WeylElement> {
    let m = alg.m();
    let mut gens = Vec::new();
    for i in 1..m {
        let mut perm: Vec<usize> = (1..=m).collect();
        perm.swap(i - 1, i);
        gens.push(WeylElement::new(&perm, &vec![1; m], 1));
    }
    match alg.family() {
        Family::B => {
            let mut signs = vec![1; m];
            signs[m - 1] = -1;
            gens.push(WeylElement::new(&(1..=m).collect::<Vec<_>>(), &signs, 1));
        }
        Family::D => {
            let mut perm: Vec<usize> = (1..=m).collect();
            perm.swap(m - 2, m - 1);
            let mut signs = vec![1; m];
            signs[m - 2] = -1;
            signs[m - 1] = -1;
            gens.push(WeylElement::new(&perm, &signs, 1));
        }
    }
    gens.push(WeylElement::delta_flip(m));
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn group_orders() {
        assert_eq!(weyl_group(Algebra::d(2)).len(), 8);
        assert_eq!(weyl_group(Algebra::b(2)).len(), 16);
        assert_eq!(weyl_group(Algebra::b(1)).len(), 4);
        assert_eq!(weyl_group(Algebra::d(3)).len(), 2 * 4 * 6);
        assert_eq!(weyl_group(Algebra::b(3)).len(), 2 * 8 * 6);
        assert_eq!(weyl_group(Algebra::d(5)).len(), 2 * 16 * 120);
        assert_eq!(weyl_group(Algebra::b(5)).len(), 7680);
        assert!(weyl_group(Algebra::d(3))[0].is_identity());
    }

    #[test]
    fn closure_inverse_and_sign() {
        for alg in [Algebra::d(2), Algebra::d(3), Algebra::b(2)] {
            let g = weyl_group(alg);
            let set: HashSet<_> = g.iter().cloned().collect();
            assert_eq!(set.len(), g.len());
            let v =
                Weight::from_twice(&(0..=alg.m() as i64).map(|i| 3 * i + 1).collect::<Vec<_>>());
            for a in g.iter() {
                assert_eq!(a.sign() * a.sign(), 1);
                assert!(a.compose(&a.inverse()).is_identity());
                assert_eq!(a.inverse().act(&a.act(&v)), v);
                for b in g.iter().step_by(5) {
                    let ab = a.compose(b);
                    assert!(set.contains(&ab));
                    assert_eq!(ab.act(&v), a.act(&b.act(&v)));
                    assert_eq!(ab.sign(), a.sign() * b.sign());
                }
            }
        }
    }

    #[test]
    fn generators_generate() {
        for alg in [Algebra::d(2), Algebra::d(3), Algebra::b(1), Algebra::b(3)] {
            let gens = weyl_generators(alg);
            let mut seen: HashSet<WeylElement> = HashSet::new();
            let mut frontier = vec![WeylElement::identity(alg.m())];
            while let Some(x) = frontier.pop() {
                if seen.insert(x.clone()) {
                    frontier.extend(gens.iter().map(|g| g.compose(&x)));
                }
            }
            assert_eq!(seen.len(), weyl_group(alg).len());
            assert!(gens.iter().all(|g| g.sign() == -1));
        }
    }
}
