//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod poly;
mod ring;
mod text;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{Bidegree, Polynomial};
pub(crate) use poly::same_ring;
pub use ring::{ring_make, t_name, x_name, y_name, Ring, RingDescriptor, VarBlock};
pub use text::{monomial_string, write_monomial};
