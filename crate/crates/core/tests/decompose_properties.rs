mod common;

use common::{blocks_to_equivalence, matrix, tarjan_scc, uf_components};
use preord::decompose::{quotient_poset, roundtrip_check, symmetric_core};
use preord::io::{load_object, save_object};
use preord::topology::{components, coproduct_decomposition, open_sets, specialization_preorder};
use preord::{PreObj, Rel};
use proptest::prelude::*;

fn preorder(max_n: usize) -> impl Strategy<Value = PreObj> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.2), n * n).prop_map(move |bits| {
            let rel = Rel::from_fn(n, |a, b| bits[a * n + b]);
            PreObj::new(rel.preorder_closure()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn symmetric_core_is_scc(a in preorder(7)) {
        let scc = tarjan_scc(&matrix(&a));
        prop_assert_eq!(symmetric_core(&a), blocks_to_equivalence(a.n(), &scc));
        let (q, pi) = quotient_poset(&a);
        prop_assert!(q.is_partial_order());
        prop_assert_eq!(q.n(), scc.len());
        prop_assert!(pi.is_surjective());
    }

    #[test]
    fn components_are_union_find_classes(a in preorder(7)) {
        let parts = components(&a);
        prop_assert_eq!(parts.blocks().to_vec(), uf_components(&matrix(&a)));
        let (factors, witness) = coproduct_decomposition(&a);
        prop_assert!(witness.is_iso());
        prop_assert!(factors.iter().all(|f| components(f).len() == 1));
    }

    #[test]
    fn round_trips(a in preorder(7)) {
        prop_assert!(roundtrip_check(&a));
        prop_assert_eq!(load_object(&save_object(&a)).unwrap(), a);
    }

    #[test]
    fn specialization_recovers_relation(a in preorder(6)) {
        let opens = open_sets(&a).unwrap();
        prop_assert_eq!(&specialization_preorder(a.n(), &opens).unwrap(), a.rel());
    }
}
