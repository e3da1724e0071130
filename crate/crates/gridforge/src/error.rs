use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong between reading a code and writing a report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("bad token {0:?} in DT code")]
    BadToken(String),
    #[error("DT entry {0} is odd; every entry must be a nonzero even integer")]
    OddEntry(i64),
    #[error("DT entry 0 is not allowed")]
    ZeroEntry,
    #[error("DT entries mix positive and negative values; an alternating code has uniform sign")]
    MixedSigns,
    #[error("DT entry magnitude {0} appears twice")]
    DuplicateEntry(i64),
    #[error("DT entry {found} out of range: a {crossings}-crossing code uses magnitudes 2..={max}")]
    EntryOutOfRange {
        found: i64,
        crossings: usize,
        max: i64,
    },
    #[error("{0} crossings exceeds the supported limit of {1}")]
    TooManyCrossings(usize, usize),
    #[error("code is not realizable in the plane{}", fmt_obstruction(.0))]
    NotRealizable(Option<(usize, usize)>),
    #[error("diagram is not reduced: passages {0} and {1} form a kink")]
    Kink(usize, usize),
    #[error("diagram is composite: passages {0}..{1} close off a summand")]
    Composite(usize, usize),
    #[error("no admissible spanning tree exists from root crossing {0}")]
    NoSpanningTree(usize),
    #[error("root index {0} out of range: diagram has {1} crossings")]
    RootOutOfRange(usize, usize),
    #[error("edge sequence rejected: {0}")]
    BadTreeSequence(String),
    #[error("height assignment failed: {0}")]
    HeightAssignment(String),
    #[error("no page placement is compatible with the peeling order (spoke on edge {0})")]
    PageBlocked(usize),
    #[error("grid rejected: {0}")]
    BadGrid(String),
    #[error("table line {line}: {source}")]
    Table { line: usize, source: Box<Error> },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

fn fmt_obstruction(ob: &Option<(usize, usize)>) -> String {
    match ob {
        Some((odd, even)) => format!(" (removing the crossing paired {odd}-{even} would fix it)"),
        None => String::new(),
    }
}
