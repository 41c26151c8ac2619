mod element;
mod generators;
mod product;
mod psym;
mod wheel;
mod xi;

pub use element::{z, ShuffleElement, ShuffleError, Side};
pub use generators::{gen_e, gen_f, gen_loc, gen_prefactor, Generator};
pub use product::{shuffle_mul, shuffle_mul_rational, shuffle_product};
pub(crate) use product::subsets;
pub use psym::{
    psym_blocks, psym_closed_product, psym_factored_product, psym_g_evaluations, psym_pi1, psym_pi2_chi,
    psym_pi2_lower, psym_pi2_upper, psym_pi3, psym_product, spec_psym_factors,
};
pub use wheel::{
    is_integral, localized_wheel_holds, spec_p, wheel_divisor, wheel_divisor_factors, xv, Certificate, Integrality,
};
pub use xi::{shuffle_mul_bar, xi, xi_factor, xi_factors, XiFactors, XiImage};
