//! The Alexandroff topology of a preorder.
//!
//! Open sets follow the predecessor convention: `S` is open when `a ∈ S` and
//! `x ρ a` imply `x ∈ S` (down-sets). Under this convention `y` lies in the
//! closure of `{x}` iff `x ρ y`, so the closure of a point is its up-set.
//! Many texts use up-sets instead; mixing conventions reverses the recovered
//! specialization preorder.

use crate::category::{coproduct, Morph, PreObj};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::relation::Rel;

/// Largest component count for which [`clopen_enumerate`] will run.
pub const CLOPEN_COMPONENT_CAP: usize = 20;

/// A subset of a carrier `{0..n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubsetMask {
    members: Vec<bool>,
}

impl SubsetMask {
    pub fn empty(n: usize) -> Self {
        SubsetMask { members: vec![false; n] }
    }

    pub fn full(n: usize) -> Self {
        SubsetMask { members: vec![true; n] }
    }

    pub fn from_members(n: usize, members: &[usize]) -> Result<Self> {
        let mut mask = SubsetMask::empty(n);
        for &m in members {
            if m >= n {
                return Err(Error::IndexOutOfRange { index: m, n });
            }
            mask.members[m] = true;
        }
        Ok(mask)
    }

    pub fn from_bits(members: Vec<bool>) -> Self {
        SubsetMask { members }
    }

    /// Subset whose members are the set bits of `bits` (bit `i` ↔ element `i`).
    pub fn from_u64(n: usize, bits: u64) -> Self {
        SubsetMask { members: (0..n).map(|i| bits >> i & 1 == 1).collect() }
    }

    pub fn n(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn insert(&mut self, i: usize) {
        self.members[i] = true;
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.members[i]).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    pub fn complement(&self) -> Self {
        SubsetMask { members: self.members.iter().map(|&m| !m).collect() }
    }

    pub fn union(&self, other: &Self) -> Self {
        SubsetMask { members: self.members.iter().zip(&other.members).map(|(&a, &b)| a || b).collect() }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        SubsetMask { members: self.members.iter().zip(&other.members).map(|(&a, &b)| a && b).collect() }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }
}

fn check_size(a: &PreObj, s: &SubsetMask) -> Result<()> {
    if a.n() == s.n() {
        Ok(())
    } else {
        Err(Error::SizeMismatch { left: a.n(), right: s.n() })
    }
}

/// Closed under ρ-predecessors.
pub fn is_open(a: &PreObj, s: &SubsetMask) -> Result<bool> {
    check_size(a, s)?;
    Ok(a.rel().pairs().all(|(x, y)| !s.contains(y) || s.contains(x)))
}

/// No ρ-edge crosses the boundary of `s` in either direction.
pub fn is_clopen(a: &PreObj, s: &SubsetMask) -> Result<bool> {
    check_size(a, s)?;
    Ok(a.rel().pairs().all(|(x, y)| s.contains(x) == s.contains(y)))
}

/// All open sets, in increasing bit order of the membership mask.
pub fn open_sets(a: &PreObj) -> Result<Vec<SubsetMask>> {
    if a.n() > CLOPEN_COMPONENT_CAP {
        return Err(Error::BudgetExceeded { needed: 1u128 << a.n(), budget: 1u128 << CLOPEN_COMPONENT_CAP });
    }
    Ok((0u64..1 << a.n())
        .map(|bits| SubsetMask::from_u64(a.n(), bits))
        .filter(|s| is_open(a, s).expect("sizes match"))
        .collect())
}

/// Connected components: the classes of the equivalence relation generated
/// by ρ, with block ids ordered by smallest member.
pub fn components(a: &PreObj) -> Partition {
    Partition::from_equivalence(&a.rel().equivalence_closure()).expect("closure is an equivalence")
}

pub fn is_indecomposable(a: &PreObj) -> bool {
    components(a).len() == 1
}

/// Every clopen subset, as the unions of components. Ordered by the bit
/// pattern over component ids, so `∅` comes first and `A` last.
pub fn clopen_enumerate(a: &PreObj) -> Result<Vec<SubsetMask>> {
    let parts = components(a);
    let k = parts.len();
    if k > CLOPEN_COMPONENT_CAP {
        return Err(Error::BudgetExceeded { needed: 1u128 << k, budget: 1u128 << CLOPEN_COMPONENT_CAP });
    }
    Ok((0u64..1 << k)
        .map(|choice| {
            SubsetMask::from_bits((0..a.n()).map(|x| choice >> parts.class_of(x) & 1 == 1).collect())
        })
        .collect())
}

/// `A*`: the union of the components with at least two elements.
pub fn minimal_part(a: &PreObj) -> SubsetMask {
    let parts = components(a);
    let mut mask = SubsetMask::empty(a.n());
    for block in parts.blocks().iter().filter(|b| b.len() > 1) {
        for &x in block {
            mask.insert(x);
        }
    }
    mask
}

/// Non-trivial with `A = A*`, or the one-point trivial object.
pub fn is_minimal(a: &PreObj) -> bool {
    if a.is_trivial() {
        a.n() == 1
    } else {
        minimal_part(a).len() == a.n()
    }
}

/// The specialization preorder of a finite Alexandroff topology:
/// `x ≤ y` iff `cl{y} ⊆ cl{x}`.
pub fn specialization_preorder(n: usize, opens: &[SubsetMask]) -> Result<Rel> {
    if opens.iter().any(|o| o.n() != n) {
        return Err(Error::NotAlexandroff("open set of the wrong size"));
    }
    if !opens.contains(&SubsetMask::empty(n)) {
        return Err(Error::NotAlexandroff("missing the empty set"));
    }
    if !opens.contains(&SubsetMask::full(n)) {
        return Err(Error::NotAlexandroff("missing the whole carrier"));
    }
    for u in opens {
        for v in opens {
            if !opens.contains(&u.union(v)) {
                return Err(Error::NotAlexandroff("not closed under union"));
            }
            if !opens.contains(&u.intersection(v)) {
                return Err(Error::NotAlexandroff("not closed under intersection"));
            }
        }
    }
    let closure = |z: usize| {
        opens
            .iter()
            .filter(|o| !o.contains(z))
            .fold(SubsetMask::empty(n), |acc, o| acc.union(o))
            .complement()
    };
    let closures: Vec<SubsetMask> = (0..n).map(closure).collect();
    Ok(Rel::from_fn(n, |x, y| closures[y].is_subset(&closures[x])))
}

/// Splits `a` into its components. The witness is the isomorphism from the
/// coproduct of the factors (in block order) onto `a`.
pub fn coproduct_decomposition(a: &PreObj) -> (Vec<PreObj>, Morph) {
    let parts = components(a);
    let factors: Vec<PreObj> =
        parts.blocks().iter().map(|b| a.induced(b).expect("blocks are non-empty")).collect();
    let (sum, _) = coproduct(&factors).expect("at least one component");
    let map: Vec<usize> = parts.blocks().iter().flatten().copied().collect();
    let witness = Morph::new(sum, a.clone(), map).expect("block embedding is monotone");
    debug_assert!(witness.is_iso());
    (factors, witness)
}
