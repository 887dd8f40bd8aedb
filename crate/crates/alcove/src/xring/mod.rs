//! Coefficient field `Q(q, v)`, the group algebra of `X^μ`, operators on the
//! polynomial representation, and windowed formal series.

pub mod coeff;
pub mod ops;
pub mod poly;
pub mod series;
pub mod xpoly;

pub use coeff::{one_minus, CoeffRF, Var};
pub use ops::{calibrate, demazure_d, demazure_delta, ti_action, y_action};
pub use poly::Poly;
pub use series::{char_q, gchar_rg, gchar_rg_plus, FormalSeries};
pub use xpoly::{xpoly_mul, XPoly};
