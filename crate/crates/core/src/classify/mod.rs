//! A deduplicated catalog of small rings and exhaustive checks of the
//! structural classifications over it.

mod catalog;
mod report;
mod verify;

pub use catalog::{
    build_catalog, build_catalog_with, Catalog, CatalogEntry, CatalogOptions, Family,
};
pub use report::{Counterexample, TheoremId, VerificationReport};
pub use verify::{
    check_dual_number_types, check_field_types, check_odd_dual_types, check_product_formulas,
    check_symmetric_products, local_ring_samples, run_verification,
    verify_field_extension_connectivity, verify_involution_and_order_bounds,
    verify_m_connected_classification, verify_residue_field_remark,
    verify_trivial_aut_classification, verify_type_formulas, verify_units_connected_classification,
    DEFAULT_FIELD_ORDERS, DEFAULT_N_LIST, DEFAULT_P_LIST, DEFAULT_SYMMETRIC_SAMPLES,
};
