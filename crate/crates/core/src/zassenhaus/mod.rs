//! Nested commutators `B'_m`, the pieces `X_{m,p}`, and the explicit
//! expansions of `e^{A+B}` on either side of `e^A`.

mod classical;
mod composition;
mod expansion;
mod xmp;

pub use classical::{
    classical_zassenhaus, classical_zassenhaus_terms, classical_zassenhaus_transposed,
    exp_sum_series, rebuild_product, ClassicalZassenhaus,
};
pub use composition::Composition;
pub use expansion::{
    composition_coefficient, expansion, expansion_terms, factor_order, left_expansion,
    right_expansion, sum_terms, ExpansionConfig, ExpansionTerm, Side,
};
pub use xmp::{
    closed_form_weight, reconstruct_power, script_b, script_b_list, script_b_prime, xm, xmp_closed,
    xmp_prime_form, xmp_recursive, XmpTable,
};
