//! Toric ideals of graphs: Gröbner and Graver bases, initial ideals, the
//! KMY degeneration, and cover bounds on the chromatic number.

pub mod algebra;
pub mod catalog;
pub mod chromatic;
pub mod coloring;
pub mod cover;
pub mod enumerate;
pub mod error;
pub mod export;
pub mod gb;
pub mod graph;
pub mod kmy;
pub mod lattice;
pub mod toric;
pub mod verify;

pub use error::{Error, Result};
pub use algebra::{Binomial, Monomial, MonomialOrder};
pub use chromatic::ChromaticCertificate;
pub use gb::BinomialIdeal;
pub use graph::Graph;
pub use kmy::KMYDecomposition;
