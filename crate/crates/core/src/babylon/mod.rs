//! Babylonian approximation machinery: surrogate contexts for irrational
//! constants, Heron's square-root iteration, the linear surd rule, and the
//! completing-the-square quadratic solver.

mod context;
mod heron;
mod takiltum;

pub use context::{context_presets, ApproximationContext, IrrationalSymbol, ALT_SQRT3, STANDARD, STANDARD_SQRT21};
pub use heron::{heron_sequence, heron_step, surd_linear_approx, HeronTrace, SurdSign};
pub use takiltum::{solve_quadratic_takiltum, RootPolicy, SymbolicValue};
