//! Locally identifying colourings.
//!
//! A proper vertex colouring is *locally identifying* (lid) when every pair
//! of adjacent vertices with distinct closed neighbourhoods gets distinct
//! closed-neighbourhood colour sets; it is *strong* (slid) when the colours
//! inside every closed neighbourhood are additionally pairwise distinct.
//! This crate provides the data model and verifier, bound-certified
//! constructive colouring algorithms driven by recolouring lists and vertex
//! elimination orders, closed-form colourings for cycles and paths, graph
//! generators for test corpora, and an exact backtracking solver for the lid
//! and slid chromatic numbers on small graphs.

pub mod colouring;
pub mod construct;
pub mod exact;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod formats;
pub mod graph;
pub mod special;

pub use colouring::{verify, Colouring, Mode, VerificationReport};
pub use construct::{
    bound_m, forbidden_list_lid, forbidden_list_slid, lid_colour, lid_colour_degenerate,
    slid_colour, slid_colour_chordal, slid_colour_degenerate, ForbiddenList,
};
pub use exact::{find_with_k, min_number, ExactResult, ExactStatus, SearchBudget, SearchOutcome};
pub use graph::{EliminationOrder, Graph, OrderKind, Vertex};

/// Crate-wide error type; almost everything that can fail is a contract
/// violation on the inputs.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("graph is not chordal")]
    NotChordal,
}

impl Error {
    pub(crate) fn invalid_input(msg: impl Into<String>) -> Error {
        Error::InvalidInput(msg.into())
    }
}
