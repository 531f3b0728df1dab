//! Argumentation frameworks with set attackers (DAF, HLAF, BHAF, SETAF, HSAF):
//! complete labellings, encodings into three-valued and fuzzy propositional
//! logic, and equational semantics solved by fixed-point iteration.
//!
//! ```
//! use afsa::{encode, enumerate_complete, parse_frame};
//!
//! let f = parse_frame("frame setaf\narg a\narg b\natk s1 = {a} -> b\natk s2 = {b} -> a\n").unwrap();
//! assert_eq!(enumerate_complete(&f, 1000).unwrap().len(), 3);
//! assert_eq!(encode(&f).unwrap().formula.to_string(), "((a <-> !b) & (b <-> !a))");
//! ```

pub mod encoder;
pub mod equational;
pub mod equivalence;
pub mod error;
pub mod framework;
pub mod fuzzy;
pub mod generate;
pub mod logic;
pub mod semantics;
pub mod text_io;
pub mod transforms;

/// Comparison tolerance for algebraic identities.
pub const ALGEBRA_TOLERANCE: f64 = 1e-12;

/// Tolerance for residuals, fuzzy model checks and endpoint snapping.
pub const MODEL_TOLERANCE: f64 = 1e-9;

/// Default enumeration cap, 3^14.
pub const DEFAULT_CAP: u128 = 4_782_969;

pub use encoder::{encode, encode_with_imaginary_arrows, EncodedFrame};
pub use equational::{
    build_system, enumerate_3valued_solutions, residual, solve_fixed_point, ternarize, validate_tuple_axioms,
    CustomKernel, EquationSystem, Kernel, SolveConfig, SolveResult, SolveStatus,
};
pub use equivalence::{check_equivalence, check_equivalence_with, EquivalenceReport};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use framework::{compute_level, validate, Attack, ElementId, Framework, FrameworkKind, ValidationReport, Violation};
pub use fuzzy::{eval_fuzzy, implication_value, luk_nary_closed_form, Algebra, AssignmentR, Family, Negation};
pub use logic::{enumerate_models3, enumerate_models3_over, eval3, is_model3, Assignment3, Formula, Truth3};
pub use semantics::{check_complete, enumerate_complete, Labelling3};
pub use text_io::{format_real, parse_frame, serialize_frame, write_labellings, LabelMode, LabelValue};
pub use transforms::{to_setaf, TransformResult};
