use thiserror::Error;

use crate::root_system::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family} needs a rank n >= {min}, got {n}")]
    Rank {
        family: &'static str,
        n: usize,
        min: usize,
    },

    #[error("weight has {got} coordinates, {family} expects {expected}")]
    Dimension {
        family: Family,
        expected: usize,
        got: usize,
    },

    #[error("weight {weight} violates the ambient constraint of {family}: {constraint}")]
    Ambient {
        family: Family,
        weight: String,
        constraint: &'static str,
    },

    #[error("{0} needs a rank n")]
    MissingRank(&'static str),

    #[error("cannot read {0:?} as a rational number")]
    Parse(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("{0} is not k-dominant")]
    NotKDominant(String),

    #[error("{0} is not k-integral")]
    NotKIntegral(String),

    #[error("The entered parameter is not g-dominant")]
    NotGDominant(String),

    #[error("Schmid index {index} out of range ({count} basic Schmid weights)")]
    SchmidIndex { index: usize, count: usize },

    #[error("closed-form lemma applies to the so families only, not {0}")]
    NotOrthogonal(Family),

    #[error("{0} is in neither Case 1 nor Case 2 of the closed-form conjugate theorems")]
    NotCovered(String),

    #[error("k = {k} gives l = {l}, which is not half-integral")]
    BridgeIntegrality { k: i64, l: String },

    #[error("coordinate overflow while walking the orbit of {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
