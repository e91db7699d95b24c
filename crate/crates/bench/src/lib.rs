//! Fixtures shared by the benchmarks.

use z4gbent::construct::{build_code, extend_type_ii, reference_pair};
use z4gbent::Z4Code;

/// C_f for the reference pair of length `2^m`.
pub fn circulant(m: usize) -> Z4Code {
    let (a, b) = reference_pair(m).expect("reference pair");
    build_code(&a, &b).expect("C_f")
}

/// The self-dual extension of [`circulant`].
pub fn extended(m: usize) -> Z4Code {
    extend_type_ii(&circulant(m)).expect("extension").code
}
