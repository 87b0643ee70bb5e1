//! Universal cycles (U-cycles) for classes of `n`-letter words over a
//! `k`-letter alphabet.
//!
//! A class is bound with [`make_class`]; [`engine`] builds its transition
//! digraph (windows of length `n - 1` as vertices, members as edges),
//! audits it for an Euler circuit and emits a cycle with Hierholzer's
//! algorithm. [`verifier`] re-checks candidates by brute force.

pub mod alphabet;
pub mod class;
pub mod classes;
pub mod cli;
pub mod engine;
pub mod error;
pub mod verifier;
pub mod word;

pub use alphabet::{Alphabet, CategoryPartition, Letter};
pub use class::{
    count_class, enumerate_class, for_each_member, make_class, ClassKind, ClassSpec, WordClass,
    DEFAULT_CAP,
};
pub use classes::{predicted_degree, theorem_exists, TheoremVerdict, Verdict};
pub use engine::{
    build_digraph, degree_audit, emit_cycle, eulerian_check, generate, hierholzer, weak_components,
    ExistenceReport, Generation, TransitionDigraph, UCycle,
};
pub use error::{Error, Result};
pub use verifier::{verify_ucycle, windows, Defect, VerificationResult};
pub use word::Word;
