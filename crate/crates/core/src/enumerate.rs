//! Exhaustive enumeration of small labeled objects.
//!
//! Objects of size `n` are generated from bit masks over the off-diagonal
//! pairs `(i, j)`, `i ≠ j`, taken in row-major order: bit `k` of the mask
//! decides the `k`-th pair. Masks are visited in increasing order and the
//! ones failing the kind's axioms are skipped.

use crate::category::PreObj;
use crate::error::{Error, Result};
use crate::relation::Rel;

/// Largest carrier size accepted by [`enumerate_objects`].
pub const ENUMERATION_CAP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    Preorder,
    Equivalence,
    PartialOrder,
    Trivial,
}

impl ObjectKind {
    pub fn admits(self, a: &PreObj) -> bool {
        match self {
            ObjectKind::Preorder => true,
            ObjectKind::Equivalence => a.is_equivalence(),
            ObjectKind::PartialOrder => a.is_partial_order(),
            ObjectKind::Trivial => a.is_trivial(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnumSpec {
    pub n: usize,
    pub kind: ObjectKind,
}

impl EnumSpec {
    pub fn new(n: usize, kind: ObjectKind) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > ENUMERATION_CAP {
            return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
        }
        Ok(EnumSpec { n, kind })
    }
}

fn off_diagonal(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

/// All objects of the given size and kind, in increasing mask order.
pub fn enumerate_objects(spec: EnumSpec) -> impl Iterator<Item = PreObj> {
    let EnumSpec { n, kind } = spec;
    let pairs = off_diagonal(n);
    let masks: u64 = 1 << pairs.len();
    (0..masks).filter_map(move |mask| {
        if kind == ObjectKind::Trivial && mask != 0 {
            return None;
        }
        let mut rel = Rel::diagonal(n);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rel.set(i, j, true);
            }
        }
        let obj = PreObj::new(rel).ok()?;
        kind.admits(&obj).then_some(obj)
    })
}

pub fn count_objects(spec: EnumSpec) -> usize {
    enumerate_objects(spec).count()
}

/// All objects of the kind with `1 ≤ n ≤ max_n`, smaller sizes first.
pub fn objects_up_to(max_n: usize, kind: ObjectKind) -> Result<Vec<PreObj>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_objects(EnumSpec::new(n, kind)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(kind: ObjectKind) -> Vec<usize> {
        (1..=4).map(|n| count_objects(EnumSpec::new(n, kind).unwrap())).collect()
    }

    #[test]
    fn counts_match_brute_force() {
        assert_eq!(counts(ObjectKind::Preorder), [1, 4, 29, 355]);
        assert_eq!(counts(ObjectKind::Equivalence), [1, 2, 5, 15]);
        assert_eq!(counts(ObjectKind::PartialOrder), [1, 3, 19, 219]);
        assert_eq!(counts(ObjectKind::Trivial), [1, 1, 1, 1]);
    }

    #[test]
    fn five_element_preorders() {
        assert_eq!(count_objects(EnumSpec::new(5, ObjectKind::Preorder).unwrap()), 6942);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(EnumSpec::new(6, ObjectKind::Preorder), Err(Error::CapExceeded { n: 6, cap: 5 }));
        assert_eq!(EnumSpec::new(0, ObjectKind::Preorder), Err(Error::EmptyCarrier));
    }

    #[test]
    fn order_starts_with_trivial_object() {
        let objs: Vec<PreObj> = enumerate_objects(EnumSpec::new(2, ObjectKind::Preorder).unwrap()).collect();
        assert_eq!(objs[0], PreObj::trivial(2));
        assert_eq!(objs[1], PreObj::chain(2));
        assert_eq!(objs[3], PreObj::indiscrete(2));
    }
}
