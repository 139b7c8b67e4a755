//! Minor-closed classes of Boolean functions stable under majority composition.
//!
//! A *minion* is a set of Boolean functions closed under taking minors
//! (permuting, identifying, and adding fictitious arguments).  This crate
//! works with classes `F` that additionally satisfy `SM · F ⊆ F`, where `SM`
//! is the clone of self-dual monotone functions — equivalently, classes that
//! are closed under minors and under the pointwise ternary majority `μ`.
//! There are exactly 93 such classes; the crate carries the full roster and
//! provides:
//!
//! * [`truthtable`] — the [`TruthTable`] value type and the composition /
//!   minor algebra (`f_σ`, `f(g₁,…,gₙ)`, the star product `f ∗ g`).
//! * [`predicates`] — the defining predicate of each of the 93 classes
//!   ([`ClassId`]) built from base properties such as monotonicity,
//!   self-duality, and 1-/0-separation.
//! * [`clones`] — the 20-clone fragment of Post's lattice used by the
//!   stability tables ([`CloneId`]), with membership predicates, generating
//!   sets, and the inclusion order.
//! * [`closure`] — exact finite-arity closure computation: right composition
//!   with a clone slice, left closure under generators, and the majority
//!   closure `⟨F⟩`.
//! * [`data`] — the machine-readable roster and clone-order documents that
//!   ship with the crate under `data/`.
//! * [`classify`] — mapping a finite generator set to the class it generates,
//!   plus the constructive machinery: upset extension inside `SM`,
//!   bisectability, and majority decompositions `f = h(φ₁,…,φ_N)`.
//! * [`lattice`] — the inclusion lattice of the 93 classes: covers, meets,
//!   meet-irreducibles, automorphisms, DOT/JSON export.
//! * [`verify`] — bounded-arity verification of the stability table (which
//!   clones may act on each class from the right and from the left) and the
//!   derived stable-class listings.
//!
//! Truth tables serialize as `"n:b₀b₁…"` with row `i` encoding the argument
//! tuple `(a₁,…,aₙ)` whose *first* coordinate is the most significant binary
//! digit of `i`; the same convention is used everywhere, including the CLI.

pub mod classify;
pub mod clones;
pub mod closure;
pub mod data;
pub mod lattice;
pub mod predicates;
pub mod truthtable;
pub mod verify;

pub use classify::{
    bisection_witnesses, containing_classes, extend_sm, generated_class, generation_check_arity,
    is_bisectable, minor_search, sm_decompose, BisectionWitnesses, ClassifyError, Decomposition,
    MinorDescriptor, PairWitness, PointSets,
};
pub use clones::{
    clone_leq, clone_members, inclusion_pairs, is_projection, unary_content, CloneId, CloneTest,
    CLONE_COUNT,
};
pub use closure::{left_close, right_compose_slice, sm_closure, stable_closure, ClosureError, FnSet};
pub use data::{clone_order_document, roster_document};
pub use lattice::{build_lattice, standard_lattice, ClassLattice, LatticeError};
pub use predicates::{
    class_member, enumerate_class, holds, BaseProp, ClassExpr, ClassId, PredicateError,
    CLASS_COUNT,
};
pub use truthtable::{named, ArgMap, TableError, TruthTable, HARD_MAX_ARITY};
pub use verify::{
    check_left_stability, check_right_stability, stable_classes_for, table2, table2_row,
    verify_roster, verify_table2, Bound, Mismatch, RosterReport, RosterViolation, Side,
    StabilityVerdict, StableListing, Table2Report, TableRow, VerifyError, MAX_BOUND,
};
