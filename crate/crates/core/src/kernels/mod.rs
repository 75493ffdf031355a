//! Scalar building blocks: double-double accumulation, log-gamma, erfcx and
//! log-domain assembly of products.

mod dd;
mod erfcx;
mod gamma;
mod logscaled;

pub use dd::{DoubleDouble, HiPrecAccumulator};
pub use erfcx::{erfc, erfcx, erfcx_log};
pub use gamma::log_gamma;
pub(crate) use gamma::log_gamma_unchecked;
pub use logscaled::{log_assemble, LogScaled};
