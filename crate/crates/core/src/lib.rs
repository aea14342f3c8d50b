//! Finite permutation groups, Sylow subgroups and nilpotency.
//!
//! Groups are enumerated in full (see [`GroupTable`]), which keeps every
//! algorithm a direct, auditable scan. The crate checks, group by group, that
//! the coprime-order product property ([`check_property_a`]) holds exactly
//! when the group is nilpotent, using two independent nilpotency tests, and
//! searches for Sylow systems whose product `S1 S2 ⋯ Sr` is the whole group.
//!
//! Products are left to right throughout: `x · y` applies `x` first.

pub mod catalog;
pub mod error;
pub mod factorize;
pub mod families;
pub mod group;
pub mod grp;
pub mod perm;
pub mod property;
pub mod sylow;

pub use catalog::{expand_catalog, resolve_group, CatalogEntry, CatalogSpec, DEFAULT_CATALOG};
pub use error::{Error, Result};
pub use factorize::{
    product_set, search_sylow_factorization, verify_product_injectivity, FactorizationResult,
    FactorizationSummary, InjectivityReport, ProductSet, SearchMode, DEFAULT_BUDGET,
};
pub use families::{alternating, cyclic, dihedral, direct_product, quaternion8, symmetric, Family};
pub use group::{commutator_subgroup, GroupTable, Subgroup, DEFAULT_MAX_ELEMENTS};
pub use grp::{parse_group_file, GroupFile};
pub use perm::Permutation;
pub use property::{
    check_property_a, check_property_a_tuples, is_nilpotent_lcs, is_nilpotent_sylow,
    verify_theorem, NilpotencyMethod, NilpotencyReport, NilpotencyWitness, PairCounterexample,
    PropertyAReport, TheoremVerdict, TupleReport,
};
pub use sylow::{
    all_sylow_subgroups, default_sylow_system, element_of_prime_order, p_part, prime_decomposition,
    sylow_subgroup, PrimeDecomposition, SylowSystem,
};
