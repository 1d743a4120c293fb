//! Monomials, pure-difference binomials and monomial orders over the edge
//! variables `e_1, ..., e_q`.

pub mod binomial;
pub mod monomial;
pub mod order;
pub mod text;

pub use binomial::{initial_y_form, Binomial};
pub use monomial::Monomial;
pub use order::{make_y_compatible_order, MonomialOrder};
