//! Inputs shared by the criterion benches.

use psifoc_core::{QPlanePoly, Scalar};

/// `x + y` on the quantum plane with deformation `t`.
pub fn x_plus_y(t: &Scalar) -> QPlanePoly {
    QPlanePoly::x(t.clone()).add(&QPlanePoly::y(t.clone())).expect("same deformation")
}
