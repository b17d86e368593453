//! Combinatorics of shifted increasing tableaux.
//!
//! This crate implements the jeu de taquin for increasing tableaux on
//! shifted shapes (and on ordinary shapes in the rectangle used by the
//! doubling construction), and uses it to compute the K-theoretic Schubert
//! structure constants of the odd orthogonal Grassmannian `OG(n, 2n+1)`:
//!
//! * [`shapes`]: strict partitions, the shifted staircase and the
//!   `(n+1) x n` rectangle, duals, and the doubling map;
//! * [`tableaux`]: increasing fillings, superstandard tableaux, the
//!   antidiagonal reflection, doubling of fillings, and exhaustive
//!   enumeration;
//! * [`jdt`]: the slide engine with `switch` on alternating ribbons, K-jdt,
//!   K-rectification under encoded orders, K-infusion, and longest
//!   increasing subsequences;
//! * [`pieri`]: t-Pieri fillings, KOG tableaux, and the Pieri coefficient
//!   rule;
//! * [`ring`]: structure constants `C` and `E`, the ring spanned by
//!   straight shapes, coefficient tables with a persistent cache, and the
//!   verification battery;
//! * [`cli`]: the `kjdt` command-line front end.
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `cargo run --example structure_constants`.

pub mod shapes;
pub mod tableaux;
pub mod jdt;
pub mod pieri;
pub mod ring;
pub mod cli;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("not an increasing filling: {0}")]
    NotIncreasing(String),

    #[error("invalid rectification order: {0}")]
    InvalidOrder(String),

    #[error("corrupted slide state: {0}")]
    Structural(String),

    #[error("size guard: {0} (use force to override)")]
    SizeGuard(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic overflow in coefficient computation")]
    Overflow,

    #[error("coefficient cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use shapes::{Cell, Grid, Partition, SkewShape, StrictPartition};
pub use tableaux::{IncreasingTableau, Label, RectOrder};
