//! Power graphs of finite groups and their Laplacian spectra.
//!
//! A power graph joins two group elements when one is a power of the other.
//! The crate builds these graphs for cyclic, dicyclic and table-defined
//! groups, certifies integer Laplacian eigenvalues exactly, decomposes
//! p-group power graphs into joins and unions of cliques, and checks a
//! catalogue of structural claims about them.

pub mod arith;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod group;
pub mod groupspec;
pub mod pgroup;
pub mod spectra;
pub mod twins;
pub mod verify;

pub use connectivity::{vertex_connectivity, CutCertificate};
pub use error::{Error, Result};
pub use graph::{power_graph, Graph};
pub use group::{Element, FiniteGroup};
