//! Evaluation of Gordon's integral
//!
//! ```text
//! J = ∫₀^∞ x^{c+j−1} e^{−λx} ₁F₁(b; c; wx) ₁F₁(b'; c+q; zx) dx
//! ```
//!
//! by series, finite-sum and closed-form strategies, with an adaptive
//! quadrature oracle and an executable catalog of identities and
//! recurrences used to cross-check all of them.

pub mod appell;
pub mod error;
pub mod gordon;
pub mod identities;
pub mod poly;
pub mod quadrature;
pub mod relations;
pub mod report;
pub mod result;
pub mod series;
pub mod special;

pub use error::{Error, Result};
pub use gordon::{eval_auto, GordonParams, Sign};

pub use result::{EvalResult, Strategy, Warning};
pub use series::SeriesControl;
