//! Exact descent from rational to integral zeros of quadratic polynomials
//! over normed integral domains: `Z`, `Z[i]` and `F_p[t]`.
//!
//! If the quadratic part `f2` of `f` is Euclidean (every non-integral `x`
//! has an integral `y` with `0 < ‖f2(x - y)‖ < 1`), any zero of `f` in `K^d`
//! can be moved to a zero in `R^d` by [`descend`]. For a form `q` this
//! makes `q` ADC: values `q(x)` in `R` are values `q(y)` ([`adc_represent`]).
//!
//! ```
//! use adc_core::{descend, parse_form, parse_point, Integers};
//!
//! let f = parse_form(&Integers, "x^2+y^2-5", 2).unwrap();
//! let x = parse_point(&Integers, "-11,2/5").unwrap();
//! let trace = descend(&Integers, &f, &x, 2).unwrap();
//! assert_eq!(trace.steps.len(), 1);
//! assert_eq!(adc_core::format_vector(&Integers, &trace.result), "(-1,-2)");
//! ```

pub mod descent;
pub mod domain;
pub mod error;
pub mod fraction;
pub mod oracle;
pub mod parser;
pub mod quadratic;
pub mod trace;
pub mod zeros;

pub use descent::{
    adc_represent, check_n2, descend, descend_with, descent_step, descent_step_with, DescentStep,
    DescentTrace, N2Failure, N2Report, Representation, WindowOracle, WitnessOracle,
};
pub use domain::{
    check_norm_axioms, AxiomFailure, AxiomReport, Domain, FpPoly, Gaussian, GaussianIntegers,
    Integers, NormedDomain, PrimeFieldPolynomials,
};
pub use error::{Error, Result};
pub use fraction::{format_vector, Fraction, FractionPoint};
pub use oracle::{
    check_euclidean, euclidean_step, non_integral_points, round_point, EuclideanFailure,
    EuclideanReport, NotFound, OracleOutcome, OracleResult, DEFAULT_WINDOW,
};
pub use parser::{
    format_form, infer_dimension, parse_element, parse_form, parse_point, ParseError,
    ParseErrorKind,
};
pub use quadratic::{LineExpansion, QuadraticPolynomial};
pub use trace::{TraceDocument, TraceRecord};
pub use zeros::{
    brute_integral_zero, brute_value, chord_zero, random_rational_zero, shell_order, verify_adc,
    AdcFinding, AdcFindingKind, AdcReport, SearchBox, ATTEMPT_BUDGET,
};
