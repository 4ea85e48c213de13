//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("grid shape requires m >= 1 and n >= 1, got ({m}, {n})")]
    InvalidShape { m: u64, n: u64 },

    #[error("word has {u} U's and {r} R's, expected {m} and {n} for shape ({m}, {n})")]
    ShapeMismatch { u: u64, r: u64, m: u64, n: u64 },

    #[error("operation undefined on the empty word")]
    EmptyWord,

    #[error("'{0}' is not a step letter; expected U/R, (/), or a bead symbol")]
    BadLetter(char),

    #[error("{word} is not a Dyck word of shape ({m}, {n})")]
    NotDyck { word: String, m: u64, n: u64 },

    #[error("binomial({t}, {k}) requires k <= t")]
    BinomialDomain { t: u64, k: u64 },

    #[error("slope requires a positive numerator and denominator, got {p}/{r}")]
    InvalidSlope { p: u64, r: u64 },

    #[error("q-integer [k]_q requires k >= 1")]
    ZeroQInteger,

    #[error("{numerator} is not divisible by {denominator} in {context}")]
    NotDivisible {
        context: &'static str,
        numerator: String,
        denominator: String,
    },

    #[error("block {index} is not a distinguishable-block representative")]
    MarkNotDistinguishable { index: usize },

    #[error("gallery for this shape needs {necklaces} rows, over the cap of {cap}; render objects individually or raise --cap")]
    GalleryTooLarge { necklaces: u64, cap: u64 },

    #[error("shape ({m}, {n}) has {words} words, over the enumeration limit {limit}; raise --limit to override")]
    EnumerationLimit {
        m: u64,
        n: u64,
        words: String,
        limit: String,
    },

    #[error("verification sweep requires max_sum >= 2, got {max_sum}")]
    VerifyRange { max_sum: u64 },

    #[error(
        "unknown check \"{0}\", expected theorem1, theorem2, theorem3, lemma, orbit, or qcat"
    )]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
