mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gamma_adjacency_matches_definition(case in ring_case(18)) {
        gamma_adjacency(&case)?;
    }

    #[test]
    fn gamma_degrees_are_bounded_by_units(case in ring_case(18)) {
        degree_bounds(&case)?;
    }

    #[test]
    fn adjacency_lifts_to_radical_cosets(case in ring_case(18)) {
        coset_lifting(&case)?;
    }

    #[test]
    fn index_two_maximal_ideal_gives_bipartite(case in ring_case(18)) {
        index_two_bipartite(&case)?;
    }

    #[test]
    fn product_ring_graph_is_tensor_of_looped_factors(pair in ring_pair()) {
        tensor_isomorphism(&pair)?;
    }

    #[test]
    fn z2_powers_give_disjoint_copies(case in copies_case()) {
        disjoint_copy_isomorphism(&case)?;
    }

    #[test]
    fn stahl_composition_matches_search(case in stahl_case()) {
        stahl_vs_search(&case)?;
    }

    #[test]
    fn certificate_text_round_trips(case in scheme_case()) {
        certificate_round_trip(&case)?;
    }

    #[test]
    fn every_edge_is_traced_twice(case in scheme_case()) {
        dart_conservation(&case)?;
    }
}
