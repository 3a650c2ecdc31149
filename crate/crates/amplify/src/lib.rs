//! Recursive amplification of Boolean functions: plain self-composition,
//! the variant that keeps a sensitivity witness alive through every level,
//! and per-slot complemented compositions. Also exact Walsh values of
//! cascades computed from the spectra of their parts, the nonlinearity and
//! resiliency bounds derived from them, and constant-order constructions.

mod cascade;
mod compose;
mod constant;
mod sweep;

pub use cascade::{cascade_bounds, cascaded_walsh, cascaded_walsh_balanced, nl_power_bounds, CascadeBounds};
pub use compose::{
    modified_power, plain_power, shifted_compose, shifted_power, ComposedFunction, Mode, MAX_COMPOSED_VARS,
};
pub use constant::{constant_order_family, max_order_balanced, FamilyProfile};
pub use sweep::{
    balanced_cascade_sweep, order_cap_spot_check, shifted_sweep, CascadeCandidate, CascadeSweep, OrderCapCheck,
    ShiftedProfile,
};
