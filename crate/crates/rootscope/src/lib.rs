//! Restricted root space decompositions of classical real Lie algebras.
//!
//! The crate builds matrix realizations of the classical real forms
//! (`sl(n,R)`, `su(p,q)`, `so(p,q)`, `sp(2n,R)`), computes their
//! restricted root space decomposition relative to a maximal abelian
//! subspace of the Cartan complement, and numerically certifies two
//! structural facts about each root space `g_lambda`:
//!
//! * the orthogonal splitting `g_lambda = R X (+) [m, X]` for any nonzero
//!   `X` in `g_lambda`, with an explicit reconstruction of the bracket
//!   witness `M` in `m` for any prescribed orthogonal component, and
//! * radiality: smooth functions on the associated symmetric space that
//!   are invariant under the compact centralizer `m` have vanishing
//!   angular derivatives along root space directions, so they only see
//!   the radius `|X|`.
//!
//! The `rootscope` binary wraps the same checks behind a CLI with
//! machine-readable JSON reports.

pub mod catalog;
pub mod cli;
pub mod exec;
pub mod liealg;
pub mod numkit;
pub mod radiality;
pub mod report;
pub mod rootspace;
pub mod sample;
pub mod theorem;
