//! 2D convolutional codes over finite fields with erasure decoding that
//! reduces the 2D problem to coordinated 1D sliding-window solves, plus the
//! code constructions and an evaluation harness for their recovery
//! capability.

pub mod channel;
pub mod cc1d;
pub mod cc2d;
pub mod construct;
pub mod error;
pub mod eval;
pub mod gf;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod polymat;

pub use cc1d::{Code1D, ReceivedStream};
pub use cc2d::{Code2D, DecodeOutcome, DecodeState, DecodeTrace, Grid2D};
pub use channel::ErasurePattern;
pub use construct::ConstructionReport;
pub use error::{Error, Result};
pub use gf::{Elem, FieldSpec};
pub use matrix::{Matrix, Solve, Support};
pub use polymat::{PolyMatrix, SlidingKind};
