//! Regular sets in Cayley graphs on finite groups.
//!
//! A subset R of the vertices of a graph is (kappa, tau)-regular if every
//! vertex in R has exactly kappa neighbors in R and every vertex outside R
//! has exactly tau. This crate decides, for a finite group G and a proper
//! non-trivial normal subgroup H, whether H is a (kappa, tau)-regular set of
//! some Cayley graph on G, and constructs an explicit connection set
//! witnessing it:
//!
//! - for even tau a witness always exists and is built directly;
//! - for odd tau a witness exists exactly when H is a perfect code of G
//!   (equivalently, every self-inverse non-trivial coset of H contains an
//!   involution), and nonexistence is certified;
//! - every constructed witness is re-verified by a definition-level
//!   brute-force oracle, and an independent exhaustive search over
//!   inversion-orbits can confirm nonexistence at small orders.
//!
//! Groups are concrete multiplication tables ([`Group`]), either loaded from
//! text or built from the builtin families ([`GroupFamily`]). All types are
//! immutable after construction and all operations are pure, so everything
//! here is safe to share across threads.

mod catalog;
mod code;
mod coset;
mod error;
mod family;
mod group;
mod oracle;
mod set;
mod witness;

pub use catalog::{standard_catalog, CatalogEntry};
pub use code::{
    is_code_with_respect_to, perfect_code_transversal, satisfies_sharp_condition,
    PerfectCodeCertificate, SharpConditionOutcome,
};
pub use coset::{involution_profile, CosetDecomposition};
pub use error::{Axis, Error, Result};
pub use family::{direct_product, GroupFamily, MAX_BUILTIN_ORDER};
pub use group::{
    list_normal_subgroups, list_normal_subgroups_with_bound, parse_index_list, Group, Subgroup,
    DEFAULT_SUBGROUP_ENUMERATION_BOUND,
};
pub use oracle::{
    exhaustive_witness_search, inversion_orbit_count, is_inverse_closed, regular_set_check,
    SearchLimits, SearchVerdict, VerificationReport, Violation,
};
pub use set::ElementSet;
pub use witness::{
    augment_kappa, build_even_tau, build_witness, build_zero_tau_odd, extract_perfect_code,
    strip_subgroup_part, ConnectionSet, ParameterTriple, RegularSetCertificate,
};
