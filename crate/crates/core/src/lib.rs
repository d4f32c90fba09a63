//! Cylindric standard tableaux, the walk models they encode, and the
//! cylindric Robinson-Schensted correspondence.
//!
//! The crate is organised by object:
//!
//! * [`shape`]: cylindric shapes of period `(d, L)` and their cells.
//! * [`tableau`]: standard and oscillating cylindric tableaux.
//! * [`lattice`]: simplex, TASEP and necklace walk models and the covering maps.
//! * [`insertion`]: internal row insertion, CRS and the bijection `Φ`.
//! * [`growth`]: growth diagrams and retyping of oscillating tableaux.
//! * [`enumeration`]: Motzkin counts, the `d = 4` formula and DP walk counts.
//! * [`verify`]: the acceptance checks, also exposed through the CLI.

pub mod enumeration;
pub mod error;
pub mod growth;
pub mod insertion;
pub mod lattice;
pub mod shape;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use shape::{BoundaryWord, CellRef, CylindricShape, Period};
pub use tableau::{Oct, Sct, Sign, Syt, TypeWord};

#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $file:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            pub struct $name;
        };
    }

    chapter!(Introduction, "introduction.md");
    chapter!(Shapes, "shapes.md");
    chapter!(Tableaux, "tableaux.md");
    chapter!(Walks, "walks.md");
    chapter!(Insertion, "insertion.md");
    chapter!(Growth, "growth.md");
    chapter!(Counting, "counting.md");
    chapter!(Cli, "cli.md");
    chapter!(Verification, "verification.md");
}
