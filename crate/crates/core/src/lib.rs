//! Numerical sets, numerical semigroups and the partitions they enumerate.
//!
//! A numerical set `T` traces a partition `λ(T)` whose hook lengths are the
//! gaps of its atom monoid `A(T) = {x : x + T ⊆ T}`. Given a semigroup `S`,
//! [`solve`] lists every numerical set with atom monoid `S` together with the
//! sizes of their partitions, which decides whether `λ(S)` is the smallest
//! partition with hook set `N \ S`.
//!
//! ```
//! use antiatom_core::{solve, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::from_generators(9..=13).unwrap();
//! let solution = solve(&s).unwrap();
//! assert_eq!(solution.pa, 6);
//! assert_eq!(solution.sizes(), vec![31, 31, 32, 32, 38, 38]);
//! assert!(!solution.lambda_minimal);
//! ```

mod bits;

pub mod antiatom;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod numset;
pub mod partition;
pub mod sections;
pub mod semigroup;
pub mod voidposet;

pub use antiatom::{
    durfee_gap_condition, is_lambda_minimal, set_counting_decomposition, size_range, solve,
    solve_with, type3_profile, AntiAtomSolution, AssociatedSetReport, SolutionSummary,
    SolveOptions, Type3Case, Type3Profile,
};
pub use enumerate::{
    scan_minimality, semigroups_by_frobenius, semigroups_by_genus, EnumerationMode,
    EnumerationQuery, ScanReport, SemigroupFilter,
};
pub use error::{Error, Result};
pub use families::{interval_k, interval_m, staircase, Family, FamilyInstance, FamilyValidation};
pub use numset::NumericalSet;
pub use partition::{enumeration, numerical_set_of, Partition};
pub use sections::{sections, SectionGrid};
pub use semigroup::NumericalSemigroup;
pub use voidposet::{OrderIdeal, VoidPoset};
