//! N-modules: annihilators, principal sets, N-ideals, quotients and
//! module homomorphisms.

mod hom;
mod ideal;
mod module;
mod quotient;

pub use hom::{
    cyclic_generator, hom_from_cyclic_generator, is_module_hom, modules_isomorphic, CyclicHom, IsoMode,
    BRUTEFORCE_ISO_CAP,
};
pub use ideal::{
    annihilator, enumerate_left_ideals, generated_left_ideal, is_ideal, is_n_ideal, orbit, right_absorption_witness,
    IdealClass, IdealKind, IdealVerdict, Side, LEFT_IDEAL_ORDER_CAP,
};
pub use module::{regular_representation, NModule};
pub use quotient::{quotient_module, QuotientModule};
