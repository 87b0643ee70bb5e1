//! The concrete word classes: membership predicates, closed-form counts,
//! existence verdicts and the vertex degrees each existence proof predicts.

mod counts;
mod degree;
mod predicates;
mod theorem;

pub use counts::{
    alternating_words, closed_count, falling_factorial, ordered_bell, passwords, surjections,
};
pub use degree::predicted_degree;
pub use predicates::{
    alternates, is_all_words, is_alternating, is_illegal_ranking, is_injective, is_legal_ranking,
    is_noninjective, is_nonpassword, is_nonsurjective, is_password, is_surjective,
};
pub use theorem::{theorem_exists, theorem_verdict, TheoremVerdict, Verdict};
