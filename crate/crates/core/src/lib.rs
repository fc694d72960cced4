//! Exact decision procedures for strict positivity of bivariate quartic
//! forms, together with the pseudotensorial invariants the criteria are
//! built from and a machine-checked suite proving every algebraic identity
//! the construction relies on.
//!
//! A form is given by its five independent tensor components
//! `A1111, A1112, A1122, A1222, A2222` (the `x^3 y` monomial coefficient is
//! `4*A1112`, the `x^2 y^2` one `6*A1122`). Everything runs in exact
//! rational arithmetic; there is no floating point anywhere in the decision
//! path.
//!
//! ```
//! use quartic_forms::invariants::FormCoefficients;
//! use quartic_forms::positivity::decide;
//!
//! // x^4 + y^4 is strictly positive away from the origin
//! let verdict = decide(&FormCoefficients::from_ints([1, 0, 0, 0, 1])).unwrap();
//! assert!(verdict.positive);
//! assert_eq!(verdict.path.as_str(), "T41-3");
//!
//! // (x - y)^4 vanishes on the diagonal
//! let verdict = decide(&FormCoefficients::from_ints([1, -1, 1, -1, 1])).unwrap();
//! assert!(!verdict.positive);
//! ```

pub mod algebra;
pub mod invariants;
pub mod oracle;
pub mod positivity;
pub mod tensor;
pub mod verify;
