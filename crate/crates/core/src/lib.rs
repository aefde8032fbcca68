//! Recognition of signed interval graphs and bigraphs, interval bigraphs and
//! bigraphs of Ferrers dimension at most two, with checkable certificates.

pub mod ate;
pub mod bipartite;
pub mod chordal;
pub mod crosscheck;
pub mod decision;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod ferrers;
pub mod format;
pub mod graph;
pub mod interval_bigraph;
pub mod iso;
pub mod matrix;
pub mod oracle;
mod order_search;
pub mod recognize;
pub mod report;
pub mod signed;
pub mod zero_partition;

pub use decision::Decision;
pub use error::{Error, Result};
pub use graph::{Bigraph, Graph, Side};
pub use matrix::{BinaryMatrix, Permutation};
