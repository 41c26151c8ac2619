//! Quiver data and the combinatorics derived from it.

mod combinat;
mod model;
mod zeta;

pub use combinat::{
    chi, chi_inequality_holds, chi_inequality_sides, compositions, conjugate, dim_leq, dim_total,
    i_compositions, i_partitions, i_weak_compositions, partition_greater, partitions,
    weak_compositions, CombinatError, DimVector, IComposition, IPartition,
};
pub use model::{Arrow, Quiver, QuiverError, Shifts};
pub use zeta::{zeta, zeta_bar, zeta_bar_factors, zeta_factors, Binomial, BinomialRatio};
