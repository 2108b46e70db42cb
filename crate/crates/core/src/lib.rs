//! Clique graph dynamics on finite graphs and on finite windows of locally
//! finite infinite graphs.
//!
//! * [`graph`]: the finite graph type and local measurements.
//! * [`iso`]: canonical forms and isomorphism witnesses.
//! * [`cliques`]: maximal cliques, the clique operator, domination, Helly.
//! * [`dynamics`]: iterating the clique operator and detecting periods.
//! * [`covers`]: homomorphisms, triangular covers, quotients, universal
//!   cover balls.
//! * [`oracle`]: neighbor oracles for infinite graphs, ball extraction,
//!   trusted iterates and the generator families.
//! * [`format`]: edge lists, vertex maps, DOT output.

pub mod cliques;
pub mod covers;
pub mod dynamics;
pub mod format;
pub mod graph;
pub mod iso;
pub mod oracle;

pub use cliques::{clique_graph, maximal_cliques, CliqueGraphResult};
pub use graph::{GirthValue, Graph, GraphBuilder, GraphError};
pub use iso::{are_isomorphic, canonical_form, CanonicalForm};
