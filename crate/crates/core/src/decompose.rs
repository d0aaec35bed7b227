//! A preorder is the same thing as an equivalence relation together with a
//! partial order on its quotient set.
//!
//! [`symmetric_core`] and [`quotient_poset`] take a preorder apart;
//! [`assemble_preorder`] puts a pair back together.

use crate::category::{Morph, PreObj};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::relation::Rel;

/// `a ≃ b` iff `a ρ b` and `b ρ a`.
pub fn symmetric_core(a: &PreObj) -> Rel {
    a.rel().meet(&a.rel().converse()).expect("same size")
}

/// The partition of `a` into classes of its symmetric core.
pub fn core_partition(a: &PreObj) -> Partition {
    Partition::from_equivalence(&symmetric_core(a)).expect("symmetric core is an equivalence")
}

/// The quotient `A/≃` ordered by `[a] ≤ [b]` iff `a ρ b`, with its
/// projection. Blocks are indexed by smallest member.
pub fn quotient_poset(a: &PreObj) -> (PreObj, Morph) {
    let parts = core_partition(a);
    let reps = parts.representatives();
    let leq = a.rel().restrict(&reps);
    let poset = PreObj::new(leq).expect("induced relation is a preorder");
    debug_assert!(poset.is_partial_order());
    let projection = Morph::new(a.clone(), poset.clone(), parts.class_map().to_vec())
        .expect("projection is monotone");
    (poset, projection)
}

/// Rebuilds the preorder `a ρ b` iff `[a] ≤ [b]` from an equivalence, its
/// partition, and a partial order on the blocks.
pub fn assemble_preorder(sim: &Rel, leq_on_quotient: &Rel, part: &Partition) -> Result<PreObj> {
    if !sim.is_equivalence() {
        return Err(Error::NotEquivalence);
    }
    if !leq_on_quotient.is_partial_order() {
        return Err(Error::NotPartialOrder);
    }
    if part.n() != sim.n() || part.to_equivalence() != *sim {
        return Err(Error::PartitionMismatch);
    }
    if leq_on_quotient.n() != part.len() {
        return Err(Error::SizeMismatch { left: part.len(), right: leq_on_quotient.n() });
    }
    PreObj::new(leq_on_quotient.pullback(part.class_map()))
}

/// Splits `rel` into its `(equivalence, partial order on blocks)` pair.
pub fn split(a: &PreObj) -> (Rel, Rel, Partition) {
    let (poset, _) = quotient_poset(a);
    (symmetric_core(a), poset.rel().clone(), core_partition(a))
}

/// Checks that both composites of the correspondence are identities at `a`:
/// assembling the split of `a` gives back `a`, and splitting that result
/// gives back the same pair.
pub fn roundtrip_check(a: &PreObj) -> bool {
    let (sim, leq, part) = split(a);
    let Ok(back) = assemble_preorder(&sim, &leq, &part) else {
        return false;
    };
    if back != *a {
        return false;
    }
    let (sim2, leq2, part2) = split(&back);
    sim2 == sim && leq2 == leq && part2 == part
}
