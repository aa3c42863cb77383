//! Edge and vertex connectivity of bipartite graphs and their bipartite
//! complements.
//!
//! The bipartite complement `G^bc` of `G = (X, Y, E)` keeps the parts and
//! takes exactly the `X`-`Y` pairs missing from `E`. This crate computes
//! `κ`, `κ'` and `δ` exactly (max-flow, with brute-force oracles for small
//! graphs), evaluates the Nordhaus-Gaddum type bounds on `κ(G) + κ(G^bc)` and
//! `κ(G) κ(G^bc)`, builds the graphs that attain them, and checks the bounds
//! over every labeled graph of small order.

pub mod bounds;
pub mod connectivity;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Vertex};
