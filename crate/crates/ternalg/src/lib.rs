//! Exact computational engine for ternary Lie algebras at cube roots of
//! unity: structure tensors over Q(ζ₂₄), ternary products, ω-commutators
//! and associators, exhaustive law checking, and the concrete algebra zoo
//! (vector, rectangular-matrix and cubic-matrix ternary algebras).

pub mod algebra;
pub mod laws;
pub mod linalg;
pub mod perms;
pub mod scalar;
pub mod subalg;
pub mod zoo;

pub use algebra::{BracketKind, Element, Mode, StructureTensor, TernaryAlgebra};
pub use scalar::{CycNum, FloatC, Rat};
