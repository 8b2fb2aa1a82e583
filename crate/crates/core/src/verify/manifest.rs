//! The list of property names every verification run is expected to cover.
//! A build-time check keeps it in step with the registry.

use super::properties::PROPERTIES;

pub const MANIFEST: &[&str] = &[
    "path_closed_form",
    "cycle_closed_form",
    "multiplicity_at_zero",
    "relabel_invariance",
    "disjoint_union_additivity",
    "vertex_deletion_interlacing",
    "cut_vertex_nullity_rules",
    "cyclomatic_vertex_deletion",
    "vertex_counting_identities",
    "cycle_disjointness",
    "fundamental_cycle_basis",
    "block_structure",
    "switching_invariance",
    "pendant_pair_deletion",
    "p6_contraction",
    "pendant_cycle_normalization",
    "forest_nullity_by_matching",
    "covered_vertex_oracle",
    "one_deficient_tree_recursion",
    "nullity_bound",
    "nullity_two_cycles_iff",
    "one_deficient_iff",
    "bicyclic_iff",
    "leaf_free_iff",
    "one_deficient_cycle_nullities",
    "one_deficient_cycle_blocks",
    "leaf_free_extremal_structure",
    "infinity_listings_agree",
    "switching_transversal_complete",
    "cycle_generator_sign",
    "bicyclic_generator_shape",
    "tree_join_rule",
    "coalescence_bound",
    "path_join_bound",
    "pendant_path_multiplicity",
    "cycle_attachment_multiplicity",
    "ear_multiplicity",
    "leaf_tree_coalescence",
    "blow_up_rank",
    "reduction_invariance",
    "tree_cycles_family",
    "leaf_free_family",
    "leaf_free_perturbed_iff",
    "bicyclic_sampled_iff",
    "theta_vertex_deletion",
    "all_trees_matching",
];

const fn same(a: &str, b: &str) -> bool {
    let (a, b) = (a.as_bytes(), b.as_bytes());
    if a.len() != b.len() {
        return false;
    }
    let mut i = 0;
    while i < a.len() {
        if a[i] != b[i] {
            return false;
        }
        i += 1;
    }
    true
}

const fn registry_matches() -> bool {
    if MANIFEST.len() != PROPERTIES.len() {
        return false;
    }
    let mut i = 0;
    while i < MANIFEST.len() {
        if !same(MANIFEST[i], PROPERTIES[i].name) {
            return false;
        }
        i += 1;
    }
    true
}

const _: () = assert!(registry_matches(), "property registry and manifest disagree");
