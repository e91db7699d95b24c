//! Quaternary codes from generalized bent functions: bent and gbent
//! functions, binary and Z4 linear codes, the circulant construction and its
//! self-dual extension, closed-form weight distributions, and the block
//! designs carried by low-weight codewords.

pub mod bincode;
pub mod bits;
pub mod boolfn;
pub mod construct;
pub mod designs;
pub mod error;
pub mod z4code;
pub mod z4vec;

pub use bincode::{BinaryCode, BinaryWeightDistribution};
pub use bits::BinVec;
pub use boolfn::{enumerate_bent, BooleanFunction, GaussianInteger, GeneralizedBooleanFunction};
pub use construct::{closed_form, pipeline, ClosedFormDistributions, Report};
pub use designs::{Design, DesignSummary, OneDesign, SimpleGraph, SrgParameters};
pub use error::{Error, Result};
pub use z4code::{SweTable, Verdict, Z4Code, Z4WeightDistribution};
pub use z4vec::{SymbolCounts, WeightKind, Weights, Z4Vector};
