//! Exact-arithmetic toolkit for the symplectic 4-fold blow-up of S²×S²:
//! Delzant polytopes, Karshon decorated graphs, integer relations among
//! circle-action loops, quantum homology over a truncated Novikov ring, and
//! Seidel elements.

pub mod catalog;
pub mod exec;
pub mod homology;
pub mod karshon;
pub mod names;
pub mod novikov;
pub mod param;
pub mod pi1;
pub mod polytope;
pub mod qh;
pub mod rational;
pub mod seidel;

pub use homology::{Basis, CohomClassParams, H2Class};
pub use karshon::{graphs_equal, project, GraphRelation, KarshonGraph};
pub use names::{ActionName, CutSet};
pub use param::{ParamForm, ParamPoint};
pub use polytope::{DelzantPolytope, Facet};
pub use rational::Rat;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("cannot parse rational: {0:?}")]
    BadRational(String),
    #[error("malformed document: {0}")]
    BadDocument(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("matrix is not in GL(2,Z): {0}")]
    BadMatrix(String),
    #[error("direction is not primitive: {0}")]
    NonPrimitive(String),
    #[error("facet {0} carries no homology class")]
    Undecorated(usize),
    #[error("inconsistent toric data: {0}")]
    Inconsistent(String),
    #[error("not a reduced form: {0}")]
    NotReduced(String),
    #[error("unknown catalog name: {0}")]
    UnknownCatalog(String),
    #[error("relation evidence failed: {0}")]
    Evidence(String),
    #[error("cannot express {0} over the requested basis")]
    NotInSpan(String),
    #[error("geometric series needs a positive area, got {0}")]
    NonPositiveWeight(Rat),
    #[error("quantum products with a point-class factor are not supported")]
    PointFactor,
    #[error("polytope is not NEF: facet {facet} in class {class} has c1 = {chern}")]
    NonNef {
        facet: usize,
        class: String,
        chern: i64,
    },
    #[error("Seidel case classification failed: {0}")]
    Unclassifiable(String),
    #[error("{0}")]
    Other(String),
}
