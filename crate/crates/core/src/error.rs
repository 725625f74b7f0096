use thiserror::Error;

use crate::modules::IdealVerdict;
use crate::nearring::AxiomViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The input document or table does not have the required shape.
    #[error("malformed table: {0}")]
    Format(String),
    #[error("axiom violated: {0}")]
    Axiom(AxiomViolation),
    #[error("declared unity {declared} fails the unity law at element {witness}")]
    BadUnity { declared: usize, witness: usize },
    #[error("{what} would have {actual} elements, above the cap of {limit}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("near-ring has no multiplicative identity")]
    NotUnital,
    #[error("not a ring: {0}")]
    NotRing(String),
    #[error("module law violated: {0}")]
    ModuleLaw(String),
    #[error("subset is not an N-ideal: {0}")]
    NotNIdeal(IdealVerdict),
    #[error("element {0} does not generate the module")]
    NotGenerator(usize),
    #[error("module is not cyclic")]
    NotCyclic,
    #[error("no isomorphism test applies: {0}")]
    NoIsoMode(String),
    #[error("left-ideal enumeration stopped after {found} ideals (cap {cap})")]
    IdealCap { found: usize, cap: usize },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("bad builtin parameter: {0}")]
    BadParameter(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("element {0} out of range")]
    ElementOutOfRange(usize),
    /// An internal consistency check failed. Never expected on validated input.
    #[error("internal invariant broken: {0}")]
    Internal(String),
}
