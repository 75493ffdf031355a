//! Large-k asymptotics of S(x; t): derived parameters, expansion
//! coefficients and the truncated expansions built from F_m.

mod coeffs;
mod confluence;
mod expansion;
mod laplace;
mod params;

pub use coeffs::{
    a_m, a_m_first_order, c2_coeff, c4_coeff, c4_prime, xi_factor_gamma, xi_factor_series,
    C_SINGULAR,
};
pub use confluence::{confluence_pr_check, PrCheck};
pub use expansion::{assemble, fm_values, s_asym, ExpansionResult, Variant, MIN_KT};
pub use laplace::{amplitude_derivative, laplace_generic_coeffs, psi_derivative, LaplaceCoeffs};
pub use params::DerivedParams;
