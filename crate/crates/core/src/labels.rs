//! Generator labels shared by the classical and deformed tables.
//!
//! Labels follow the index convention `1..=N+1` on the graded space, `H_ij`
//! with `i < j` for Cartan elements, `E_ij` for root generators (raising
//! when `i < j`), and the `T`-family for the unipotent elements built on the
//! long root `(1, N)`; those carry no indices.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GeneratorLabel {
    /// `H_ij`, requires `i < j`.
    H(u8, u8),
    /// `E_ij`, `i != j`.
    E(u8, u8),
    /// `T^k`, `k` in `{1, -1}`.
    T(i8),
    /// `T^{k/2}`, `k` in `{1, -1}`.
    THalf(i8),
    /// The parity operator `(-1)^F`.
    ParityOp,
}

pub use GeneratorLabel as Lbl;

pub fn h(i: u8, j: u8) -> GeneratorLabel {
    assert!(i < j);
    GeneratorLabel::H(i, j)
}

pub fn e(i: u8, j: u8) -> GeneratorLabel {
    assert!(i != j);
    GeneratorLabel::E(i, j)
}

impl GeneratorLabel {
    /// Z2-degree in `sl(N|1)`: a root generator is odd iff exactly one of
    /// its indices is `N+1`; everything else is even.
    pub fn parity(&self, n: u8) -> u8 {
        match *self {
            GeneratorLabel::E(i, j) => u8::from((i == n + 1) != (j == n + 1)),
            _ => 0,
        }
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorLabel::H(i, j) => write!(f, "H_{i}{j}"),
            GeneratorLabel::E(i, j) => write!(f, "E_{i}{j}"),
            GeneratorLabel::T(1) => write!(f, "T"),
            GeneratorLabel::T(-1) => write!(f, "T^-1"),
            GeneratorLabel::T(k) => write!(f, "T^{k}"),
            GeneratorLabel::THalf(1) => write!(f, "T^1/2"),
            GeneratorLabel::THalf(-1) => write!(f, "T^-1/2"),
            GeneratorLabel::THalf(k) => write!(f, "T^{k}/2"),
            GeneratorLabel::ParityOp => write!(f, "(-1)^F"),
        }
    }
}
