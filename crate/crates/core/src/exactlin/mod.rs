//! Exact linear algebra over `Q` and `F_p` for finite-dimensional graded
//! vector spaces (differentials are always zero).

mod graded;
mod linmap;
mod matrix;
mod presentation;
mod scalar;

pub use graded::GradedVect;
pub use linmap::{
    braiding, curry, direct_sum_maps, double_dual, dual_map, evaluation, hom_operator,
    postcompose, precompose, tensor_map, uncurry, LinMap,
};
pub use matrix::{Matrix, Rref};
pub use presentation::{cokernel, coequalizer_lin, equalizer_lin, kernel, LinQuot, LinSub};
pub use scalar::{Field, Scalar};
