//! Finite AG-groupoids, their chain-valued fuzzy subsets, and a harness that
//! checks statements about both over enumerated populations.
//!
//! ```
//! use agw_core::{product, CayleyTable, FuzzySubset, GradeChain};
//!
//! let t = CayleyTable::z3sub();
//! let k = GradeChain::crisp();
//! let f = FuzzySubset::indicator(3, k, &[1]);
//! let g = FuzzySubset::indicator(3, k, &[2]);
//! assert_eq!(product(&f, &g, &t).unwrap().to_string(), "k=1; 0 1 0");
//! ```

pub mod canonical;
pub mod crisp;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod fuzzy;
pub mod generated;
pub mod grade;
pub mod harness;
pub mod ideals;
pub mod laws;
pub mod predicates;
pub mod table;

pub use canonical::{canonical_form, canonical_form_bounded, is_isomorphic, relabel};
pub use crisp::CrispSubset;
pub use enumerate::{enumerate, enumerate_naive, EnumResult, EnumSpec};
pub use error::{Error, Result};
pub use format::{parse_table, parse_table_stream, write_table_stream, EnumSummary, TableStream};
pub use fuzzy::{
    characteristic, fuzzy_points_of, intersection, level_set, parse_fuzzy_literal, product, subset_of, top, union,
    union_of_points, FuzzyPoint, FuzzySubset,
};
pub use generated::{generated_left_ideal, generated_left_ideal_oracle};
pub use grade::{Grade, GradeChain};
pub use laws::{
    check_aux_identity, check_identity, check_left_invertive, check_medial, check_paramedial, idempotent_elements,
    left_identities, structure_flags, Identity, StructureFlags, Witness,
};
pub use predicates::{
    is_fuzzy_bi_ideal, is_fuzzy_ideal, is_fuzzy_idempotent, is_fuzzy_interior_ideal, is_fuzzy_left_ideal,
    is_fuzzy_right_ideal, is_fuzzy_subgroupoid, FuzzyProperty, PredicateWitness,
};
pub use table::{CayleyTable, Element};
