//! The approximation system `{A_k, R}` for `(1-z)^{ω_k}` built three
//! independent ways (residue closed form, linear solve, log-series), and the
//! determinant of the neighbouring systems `A_hk`.

mod construct;
mod det;
mod system;

pub use construct::{
    construct_linsolve, construct_residue, differential_shift_check, inverse_root_expansion,
    log_rep_series, phi_prime, remainder_series, residue_block_in_w, ShiftReport,
};
pub use det::{
    compare_delta, determinant_delta, determinant_system, footnote_delta, poly_det,
    DeltaComparison, DeltaReport,
};
pub use system::{DeterminantSystem, ExponentSystem, PadeSystem};

#[cfg(test)]
mod tests;
