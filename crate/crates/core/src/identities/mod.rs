//! The identity catalog and the engine that expands and compares both sides.

pub mod catalog;
mod spec;
mod verify;

pub use catalog::{catalog, find, instantiate, CatalogEntry, EntryKind, ParamRule, PositivityClaim};
pub use spec::{
    expand_product_side, expand_sum_side, expand_sum_side_by_index, Bindings, IdentitySpec, ProductSide, Rhs,
    ShiftRule, SumSide, TailFamily,
};
pub use verify::{
    classical_product, effective_order, erasure_check, first_negative_numerator, positivity_claimed,
    positivity_terms, sweep_instances, verify, verify_all, verify_instances, NegativeCoefficient, Status,
    VerificationReport,
};
