//! Word-representable graphs, semi-transitive orientations and
//! triangulated polyominoes.
//!
//! ```
//! use wordrep::{semitrans, words::Word};
//!
//! let w = Word::parse("14213243").unwrap();
//! let c4 = w.alternation_graph();
//! assert_eq!(c4.size(), 4);
//! assert!(semitrans::solve(&c4).unwrap().is_oriented());
//! ```

pub mod checks;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod instances;
pub mod oracle;
pub mod polyomino;
pub mod semitrans;
pub mod words;

pub use coloring::{is_k_colorable, Coloring};
pub use error::{Error, Result};
pub use graph::Graph;
pub use semitrans::{Orientation, SolveResult};
pub use words::Word;
