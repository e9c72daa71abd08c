//! Finite combinatorics of Henson digraphs.
//!
//! A non-empty set of finite tournaments, each on at least three
//! vertices, determines a hereditary class of finite digraphs (those
//! embedding no member) and, by Fraïssé amalgamation, a countable
//! homogeneous digraph omitting exactly those tournaments. This crate
//! works at the finite end of that correspondence:
//!
//! - [`digraph`] — digraphs, tournaments, canonical forms, embeddings,
//!   edge reversal and switching, 3-cycle census.
//! - [`forbidden`] — validated forbidden sets, class membership with
//!   witnesses, anti-chain and closure checks.
//! - [`builder`] — finite approximations of the homogeneous digraph via
//!   free amalgamation and one-point extensions, with extension-property
//!   audits.
//! - [`behavior`] — the finitely many behaviours a canonical map can have
//!   on 2-types, and certificate-bearing case analyses over them.
//! - [`reducts`] — assembly of the reduct lattice determined by the
//!   closure flags and the status of the underlying graph.
//! - [`family`] — an infinite anti-chain of tournaments, blocker search,
//!   and the family of forbidden sets whose digraphs have maximal-closed
//!   automorphism groups, with pairwise-distinctness certificates.
//!
//! The binary `henson` exposes the same pipeline as subcommands; the
//! `examples/` directory shows one runnable program per capability.

pub mod behavior;
pub mod builder;
pub mod canon;
pub mod digraph;
pub mod embed;
pub mod enumerate;
pub mod family;
pub mod forbidden;
pub mod reducts;

#[cfg(test)]
pub(crate) mod testutil;

pub use canon::CanonicalCode;
pub use digraph::{Digraph, DigraphError, OrderedDigraph, PairType, Tournament};
pub use embed::Embedding;
pub use forbidden::{ForbiddenSet, ForbiddenSetError};
