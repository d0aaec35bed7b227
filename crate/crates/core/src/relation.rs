//! Dense boolean relations on finite index sets `{0..n-1}`.
//!
//! Every preorder, equivalence relation and partial order in the crate is a
//! [`Rel`]. Carriers are tiny, so relations are stored as row-major `n × n`
//! boolean matrices and closures are plain cubic saturation.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rel {
    n: usize,
    bits: Vec<bool>,
}

impl Rel {
    /// The empty relation on `n` elements.
    pub fn empty(n: usize) -> Self {
        Rel { n, bits: vec![false; n * n] }
    }

    /// The equality relation on `n` elements.
    pub fn diagonal(n: usize) -> Self {
        let mut r = Rel::empty(n);
        for i in 0..n {
            r.bits[i * n + i] = true;
        }
        r
    }

    /// The full relation `A × A`.
    pub fn full(n: usize) -> Self {
        Rel { n, bits: vec![true; n * n] }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut r = Rel::empty(n);
        for &(a, b) in pairs {
            r.check_index(a)?;
            r.check_index(b)?;
            r.bits[a * n + b] = true;
        }
        Ok(r)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                bits.push(f(a, b));
            }
        }
        Rel { n, bits }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize, value: bool) {
        self.bits[a * self.n + b] = value;
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        }
    }

    fn check_same_size(&self, other: &Rel) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch { left: self.n, right: other.n })
        }
    }

    /// All related pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n * n).filter(move |&i| self.bits[i]).map(move |i| (i / n, i % n))
    }

    /// Related pairs `(a, b)` with `a != b`, row-major.
    pub fn off_diagonal_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs().filter(|&(a, b)| a != b)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.get(b, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.off_diagonal_pairs().all(|(a, b)| !self.get(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    /// First triple `(a, b, c)` with `a→b`, `b→c` and not `a→c`.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                if !self.get(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.get(b, c) && !self.get(a, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_preorder() && self.is_symmetric()
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_preorder() && self.is_antisymmetric()
    }

    pub fn is_diagonal(&self) -> bool {
        self.pairs().all(|(a, b)| a == b) && self.is_reflexive()
    }

    /// `self ⊆ other`. Relations of different sizes are never contained.
    pub fn is_subset(&self, other: &Rel) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(&x, &y)| !x || y)
    }

    pub fn converse(&self) -> Rel {
        Rel::from_fn(self.n, |a, b| self.get(b, a))
    }

    pub fn union(&self, other: &Rel) -> Result<Rel> {
        self.check_same_size(other)?;
        Ok(Rel {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(&x, &y)| x || y).collect(),
        })
    }

    /// Pointwise intersection.
    pub fn meet(&self, other: &Rel) -> Result<Rel> {
        self.check_same_size(other)?;
        Ok(Rel {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(&x, &y)| x && y).collect(),
        })
    }

    pub fn reflexive_closure(&self) -> Rel {
        let mut r = self.clone();
        for i in 0..self.n {
            r.set(i, i, true);
        }
        r
    }

    /// Smallest transitive relation containing `self` (Warshall).
    pub fn transitive_closure(&self) -> Rel {
        let n = self.n;
        let mut r = self.clone();
        for k in 0..n {
            for i in 0..n {
                if !r.get(i, k) {
                    continue;
                }
                for j in 0..n {
                    if r.get(k, j) {
                        r.set(i, j, true);
                    }
                }
            }
        }
        r
    }

    /// Smallest preorder containing `self`.
    pub fn preorder_closure(&self) -> Rel {
        self.reflexive_closure().transitive_closure()
    }

    /// Smallest equivalence relation containing `self`: two elements are
    /// related iff a zigzag of `self`-steps (in either direction) joins them.
    pub fn equivalence_closure(&self) -> Rel {
        let sym = self.union(&self.converse()).expect("same size");
        sym.preorder_closure()
    }

    /// The equivalence relation on `{0..n-1}` generated by `pairs`.
    pub fn generated_equivalence(pairs: &[(usize, usize)], n: usize) -> Result<Rel> {
        Ok(Rel::from_pairs(n, pairs)?.equivalence_closure())
    }

    /// Least upper bound of two preorders in the lattice of preorders.
    pub fn join_preorders(&self, other: &Rel) -> Result<Rel> {
        self.check_same_size(other)?;
        if !self.is_preorder() || !other.is_preorder() {
            return Err(Error::NotPreorder);
        }
        Ok(self.union(other)?.transitive_closure())
    }

    /// Restriction to the listed elements, reindexed in list order.
    pub fn restrict(&self, elements: &[usize]) -> Rel {
        Rel::from_fn(elements.len(), |a, b| self.get(elements[a], elements[b]))
    }

    /// Pullback along `map`: `a ~ b` iff `map[a] self map[b]`.
    pub fn pullback(&self, map: &[usize]) -> Rel {
        Rel::from_fn(map.len(), |a, b| self.get(map[a], map[b]))
    }

    pub fn out_degree(&self, a: usize) -> usize {
        (0..self.n).filter(|&b| self.get(a, b)).count()
    }

    pub fn in_degree(&self, b: usize) -> usize {
        (0..self.n).filter(|&a| self.get(a, b)).count()
    }
}

impl fmt::Debug for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rel(n={}, ", self.n)?;
        f.debug_list().entries(self.off_diagonal_pairs()).finish()?;
        if !self.is_reflexive() {
            write!(f, " irreflexive")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn with_diag(n: usize, pairs: &[(usize, usize)]) -> Rel {
        Rel::from_pairs(n, pairs).unwrap().reflexive_closure()
    }

    fn all_relations(n: usize) -> impl Iterator<Item = Rel> {
        (0u32..1 << (n * n)).map(move |mask| Rel::from_fn(n, |a, b| mask >> (a * n + b) & 1 == 1))
    }

    #[test]
    fn predicates_on_small_relations() {
        let eq = Rel::diagonal(3);
        assert!(eq.is_reflexive() && eq.is_transitive() && eq.is_symmetric() && eq.is_antisymmetric());

        let path = with_diag(3, &[(0, 1), (1, 2)]);
        assert!(!path.is_transitive());
        assert_eq!(path.transitivity_violation(), Some((0, 1, 2)));

        let full = Rel::full(2);
        assert!(full.is_reflexive() && full.is_transitive() && full.is_symmetric());
        assert!(!full.is_antisymmetric());
    }

    #[test]
    fn transitive_closure_examples() {
        assert_eq!(Rel::diagonal(3).transitive_closure(), Rel::diagonal(3));
        let closed = with_diag(3, &[(0, 1), (1, 2)]).transitive_closure();
        assert_eq!(closed, with_diag(3, &[(0, 1), (1, 2), (0, 2)]));
        assert_eq!(Rel::full(4).transitive_closure(), Rel::full(4));
    }

    #[test]
    fn equivalence_closure_examples() {
        assert_eq!(Rel::diagonal(3).equivalence_closure(), Rel::diagonal(3));
        let two_blocks = with_diag(4, &[(0, 1), (2, 3)]).equivalence_closure();
        assert_eq!(two_blocks, with_diag(4, &[(0, 1), (1, 0), (2, 3), (3, 2)]));
        assert_eq!(with_diag(3, &[(0, 1), (1, 2)]).equivalence_closure(), Rel::full(3));
    }

    #[test]
    fn generated_equivalence_examples() {
        assert_eq!(Rel::generated_equivalence(&[], 3).unwrap(), Rel::diagonal(3));
        assert_eq!(
            Rel::generated_equivalence(&[(0, 1), (1, 0)], 3).unwrap(),
            with_diag(3, &[(0, 1), (1, 0)])
        );
        assert_eq!(
            Rel::generated_equivalence(&[(0, 1), (1, 2), (0, 2)], 3).unwrap(),
            Rel::full(3)
        );
        assert_eq!(
            Rel::generated_equivalence(&[(0, 3)], 3),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        );
    }

    #[test]
    fn meet_examples() {
        let chain = with_diag(3, &[(0, 1), (1, 2), (0, 2)]);
        let eq = with_diag(3, &[(0, 1), (1, 0)]);
        assert_eq!(chain.meet(&Rel::full(3)).unwrap(), chain);
        assert_eq!(chain.meet(&eq).unwrap(), with_diag(3, &[(0, 1)]));
        assert_eq!(chain.meet(&Rel::diagonal(3)).unwrap(), Rel::diagonal(3));
        assert_eq!(chain.meet(&Rel::full(2)), Err(Error::SizeMismatch { left: 3, right: 2 }));
    }

    #[test]
    fn join_examples() {
        let chain = with_diag(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(chain.join_preorders(&Rel::diagonal(3)).unwrap(), chain);
        let a = with_diag(3, &[(0, 1)]);
        let b = with_diag(3, &[(1, 2)]);
        assert_eq!(a.join_preorders(&b).unwrap(), chain);
        assert_eq!(chain.join_preorders(&chain).unwrap(), chain);
        assert_eq!(
            Rel::from_pairs(3, &[(0, 1)]).unwrap().join_preorders(&chain),
            Err(Error::NotPreorder)
        );
    }

    #[test]
    fn closures_are_idempotent_exhaustively() {
        for n in 0..=4 {
            for r in all_relations(n) {
                let t = r.transitive_closure();
                assert_eq!(t.transitive_closure(), t);
                let e = r.equivalence_closure();
                assert_eq!(e.equivalence_closure(), e);
                let p = r.preorder_closure();
                assert_eq!(p.preorder_closure(), p);
            }
        }
    }

    #[test]
    fn equivalence_closure_is_an_equivalence() {
        for n in 0..=3 {
            for r in all_relations(n) {
                assert!(r.equivalence_closure().is_equivalence(), "{r:?}");
            }
        }
    }

    #[test]
    fn join_is_least_and_meet_preserves_preorders() {
        let preorders: Vec<Rel> = all_relations(3).filter(Rel::is_preorder).collect();
        assert_eq!(preorders.len(), 29);
        for r in &preorders {
            for s in &preorders {
                assert!(r.meet(s).unwrap().is_preorder());
                let j = r.join_preorders(s).unwrap();
                assert!(j.is_preorder() && r.is_subset(&j) && s.is_subset(&j));
                for p in preorders.iter().filter(|p| r.is_subset(p) && s.is_subset(p)) {
                    assert!(j.is_subset(p));
                }
            }
        }
    }

    #[test]
    fn generated_equivalence_is_least() {
        let equivalences: Vec<Rel> = all_relations(4).filter(Rel::is_equivalence).collect();
        assert_eq!(equivalences.len(), 15);
        let all_pairs: Vec<(usize, usize)> =
            (0..4).flat_map(|a| (0..4).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
        // every subset of three off-diagonal generators
        for i in 0..all_pairs.len() {
            for j in i..all_pairs.len() {
                for k in j..all_pairs.len() {
                    let gens = [all_pairs[i], all_pairs[j], all_pairs[k]];
                    let g = Rel::generated_equivalence(&gens, 4).unwrap();
                    for e in &equivalences {
                        let contains = gens.iter().all(|&(a, b)| e.get(a, b));
                        assert_eq!(contains, g.is_subset(e));
                    }
                }
            }
        }
    }

    fn arb_rel(max_n: usize) -> impl Strategy<Value = Rel> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| Rel { n, bits })
        })
    }

    proptest! {
        #[test]
        fn closures_idempotent_random(r in arb_rel(8)) {
            let t = r.transitive_closure();
            prop_assert_eq!(t.transitive_closure(), t.clone());
            prop_assert!(r.is_subset(&t));
            let e = r.equivalence_closure();
            prop_assert_eq!(e.equivalence_closure(), e.clone());
            prop_assert!(e.is_equivalence());
        }

        #[test]
        fn transitive_closure_is_monotone(r in arb_rel(6), extra in any::<u64>()) {
            let n = r.n();
            let bigger = Rel::from_fn(n, |a, b| r.get(a, b) || extra >> ((a * n + b) % 64) & 1 == 1);
            prop_assert!(r.transitive_closure().is_subset(&bigger.transitive_closure()));
        }
    }
}
