//! Connected edge-colourings of complete graphs and complete uniform
//! hypergraphs.
//!
//! The crate builds explicit colourings (cyclic colourings of prime-order
//! complete graphs, blow-ups, the doubling extension, the distance-type
//! colouring of `K_17^(3)`, covering blow-ups), verifies their properties
//! (connectivity of every colour class in four senses, multicoloured and
//! tricoloured set counts, colour-set family conditions) and runs small
//! exhaustive searches.
//!
//! The guide in `book/` walks through each construction with runnable
//! snippets; those snippets are compiled as doc-tests of this crate.

pub mod certificate;
pub mod colouring;
pub mod dsu;
pub mod error;
pub mod family;
pub mod format;
pub mod graph_constructions;
pub mod hypergraph;
pub mod hypergraph_constructions;
pub mod partition;
mod scan;
pub mod search;
pub mod subset;
pub mod verify;

pub use colouring::{Colour, EdgeColouring};
pub use error::{Error, Result};
pub use family::ColourSetFamily;
pub use hypergraph::Hypergraph;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/colourings.md")]
    mod colourings {}
    #[doc = include_str!("../../../book/src/triangles.md")]
    mod triangles {}
    #[doc = include_str!("../../../book/src/doubling.md")]
    mod doubling {}
    #[doc = include_str!("../../../book/src/connectivity.md")]
    mod connectivity {}
    #[doc = include_str!("../../../book/src/hypergraph-constructions.md")]
    mod hypergraph_constructions {}
    #[doc = include_str!("../../../book/src/searches.md")]
    mod searches {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
}
