use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("quiver has an oriented cycle{}", match .0 { Some(v) => format!(" through vertex {v}"), None => String::new() })]
    OrientedCycle(Option<String>),
    #[error("inadmissible relation: {0}")]
    BadRelation(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("duplicate name {0}")]
    DuplicateName(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("values belong to different algebras")]
    AlgebraMismatch,
    #[error("values belong to different fields")]
    FieldMismatch,
    #[error("relation does not vanish on the representation: {0}")]
    RelationViolated(String),
    #[error("map does not commute with the arrow action at arrow {0}")]
    NotAModuleMap(String),
    #[error("differential does not square to zero at degree {0}")]
    DifferentialSquare(i64),
    #[error("chain map does not commute with the differentials at degree {0}")]
    NotAChainMap(i64),
    #[error("module is not projective")]
    NonProjective,
    #[error("complex is not acyclic")]
    NonAcyclic,
    #[error("zero object not allowed here")]
    ZeroObject,
    #[error("object is decomposable")]
    DecomposableInput,
    #[error("no candidate connecting map: annihilator of the radical is zero")]
    EmptyAnnihilator,
    #[error("radical computations need the rational field")]
    NeedsRationals,
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error("unknown catalog entry {0}")]
    UnknownCatalogEntry(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
