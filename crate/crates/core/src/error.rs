//! Error types shared across the crate.

use thiserror::Error;

/// Why an edge set fails to be a spanning tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeDefect {
    /// The set does not have exactly `vertex_count - 1` edges.
    WrongEdgeCount { expected: usize, actual: usize },
    /// The set contains a circuit.
    ContainsCircuit,
    /// The set leaves the vertex set disconnected.
    Disconnected,
}

impl std::fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TreeDefect::WrongEdgeCount { expected, actual } => {
                write!(f, "expected {expected} edges, got {actual}")
            }
            TreeDefect::ContainsCircuit => write!(f, "contains a circuit"),
            TreeDefect::Disconnected => write!(f, "disconnected"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex label {0} is out of range 1..={1}")]
    VertexOutOfRange(u32, u32),

    #[error("graph has {0} edges, more than the {1}-bit edge-set capacity")]
    TooManyEdges(usize, usize),

    #[error("not a spanning tree: {0}")]
    NotASpanningTree(TreeDefect),

    #[error("cannot parse {0:?} as an edge (expected \"u-v\" with vertex labels)")]
    ParseEdge(String),

    #[error("{0} is not an edge of this graph")]
    UnknownEdge(String),

    #[error("duplicate edge {0} in edge set")]
    DuplicateEdge(String),

    #[error("cannot parse {0:?} as a permutation in cycle notation")]
    ParseCycles(String),

    #[error("permutation is not an isometry of the cube: {0}")]
    NotAnIsometry(String),

    #[error("group closure produced {actual} elements, expected {expected}")]
    GroupClosure { expected: usize, actual: usize },

    #[error(
        "invariant-tree growth only applies to edge rotations and cross-plane reflections, not {0}"
    )]
    NotGrowable(String),

    #[error("seed edge {0} is not invariant under the given isometry")]
    SeedNotInvariant(String),

    #[error("net layout placed two faces on the same cell {0:?}")]
    OverlappingCells((i32, i32)),

    #[error("net reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("group action failed to partition the trees evenly: fixed-point sum {sum} is not divisible by group order {order}")]
    InexactBurnside { sum: u64, order: u64 },
}
