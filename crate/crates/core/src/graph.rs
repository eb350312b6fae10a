//! Finite simple graphs with a fixed edge ordering, plus two independent ways
//! of counting spanning trees: an exact matrix-tree determinant and brute
//! enumeration of all edge subsets of the right size.
//!
//! The central object is [`cube_graph`], the vertex/edge graph of the unit
//! cube with vertices labelled 1..=8 and the 12 edges stored in ascending
//! lexicographic order. Subsets of a graph's edges are handled as bit masks
//! ([`EdgeSet`]) over that fixed ordering, so a spanning tree of the cube is
//! just a 7-bit pattern in a 12-bit word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, TreeDefect};

/// A vertex, identified by a 1-based label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(u8);

impl VertexId {
    /// Wraps a 1-based vertex label.
    ///
    /// # Panics
    /// Panics if `label` is zero; range checking against a particular graph
    /// happens in [`Graph::new`].
    pub fn new(label: u8) -> VertexId {
        assert!(label >= 1, "vertex labels are 1-based");
        VertexId(label)
    }

    /// The 1-based label.
    pub fn label(self) -> u8 {
        self.0
    }

    /// The 0-based index used for array storage.
    pub(crate) fn index(self) -> usize {
        (self.0 - 1) as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected edge between two distinct vertices, stored with the smaller
/// label first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Builds an edge, normalizing endpoint order.
    ///
    /// # Panics
    /// Panics if the endpoints are equal (self-loops are not representable).
    pub fn new(u: VertexId, v: VertexId) -> Edge {
        assert!(u != v, "an edge needs two distinct endpoints");
        if u < v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    /// Convenience constructor from raw labels.
    pub fn from_labels(u: u8, v: u8) -> Edge {
        Edge::new(VertexId::new(u), VertexId::new(v))
    }

    /// The endpoint with the smaller label.
    pub fn small(self) -> VertexId {
        self.a
    }

    /// The endpoint with the larger label.
    pub fn large(self) -> VertexId {
        self.b
    }

    /// Both endpoints, smaller label first.
    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }

    /// Whether `v` is one of the two endpoints.
    pub fn touches(self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

/// The text format used everywhere: `u-v` with the smaller label first,
/// e.g. `1-5`.
impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl FromStr for Edge {
    type Err = Error;

    /// Parses the `u-v` text form. Endpoint order is normalized; equal
    /// endpoints or anything non-numeric is rejected.
    fn from_str(s: &str) -> Result<Edge, Error> {
        let bad = || Error::ParseEdge(s.to_string());
        let (u, v) = s.split_once('-').ok_or_else(bad)?;
        let u: u8 = u.trim().parse().map_err(|_| bad())?;
        let v: u8 = v.trim().parse().map_err(|_| bad())?;
        if u == 0 || v == 0 || u == v {
            return Err(bad());
        }
        Ok(Edge::from_labels(u, v))
    }
}

/// A subset of a graph's edges, as a bit mask over the graph's edge indices.
///
/// Bit `i` set means edge `i` (in the owning graph's canonical ordering) is
/// in the set. The natural `Ord` on the mask gives the deterministic
/// "ascending mask" order used for enumeration output and orbit
/// representatives.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct EdgeSet(u64);

impl EdgeSet {
    /// The empty set.
    pub const EMPTY: EdgeSet = EdgeSet(0);

    /// Builds a set from edge indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> EdgeSet {
        let mut s = EdgeSet::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// The raw mask (useful as a compact hash/sort key).
    pub fn mask(self) -> u64 {
        self.0
    }

    /// Whether edge index `i` is in the set.
    pub fn contains(self, i: usize) -> bool {
        debug_assert!(i < 64);
        self.0 & (1u64 << i) != 0
    }

    /// Adds edge index `i`.
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < 64);
        self.0 |= 1u64 << i;
    }

    /// A copy of the set with edge index `i` added.
    pub fn with(self, i: usize) -> EdgeSet {
        let mut s = self;
        s.insert(i);
        s
    }

    /// Number of edges in the set.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether the set is empty.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Whether every edge of `self` is also in `other`.
    pub fn is_subset_of(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Edge indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl std::ops::BitAnd for EdgeSet {
    type Output = EdgeSet;
    fn bitand(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & rhs.0)
    }
}

impl std::ops::BitOr for EdgeSet {
    type Output = EdgeSet;
    fn bitor(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | rhs.0)
    }
}

/// A finite simple graph with 1-based vertex labels and a fixed, canonical
/// edge ordering (the order of the `edges` list).
#[derive(Clone, Debug)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph after validating that every endpoint is in
    /// `1..=vertex_count` and no edge repeats.
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Graph, Error> {
        for e in &edges {
            if e.large().label() as usize > vertex_count {
                return Err(Error::VertexOutOfRange(
                    e.large().label() as u32,
                    vertex_count as u32,
                ));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for e in &edges {
            if !seen.insert(*e) {
                return Err(Error::DuplicateEdge(e.to_string()));
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The edge at canonical index `i`.
    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    /// The canonical index of `e`, if it is an edge of this graph.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.iter().position(|&x| x == e)
    }

    /// Number of edges incident to `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// The set containing every edge.
    pub fn full_edge_set(&self) -> EdgeSet {
        EdgeSet::from_indices(0..self.edges.len())
    }

    /// The complement of `s` within this graph's edges. An involution:
    /// complementing twice gives `s` back.
    pub fn complement(&self, s: EdgeSet) -> EdgeSet {
        EdgeSet(self.full_edge_set().0 ^ s.0)
    }

    /// Counts spanning trees exactly via the matrix-tree theorem: the
    /// determinant of the Laplacian with one vertex's row and column deleted.
    /// Which vertex is deleted does not affect the value; this entry point
    /// deletes the last one, and [`Graph::matrix_tree_count_deleting`] lets
    /// tests confirm the invariance over every choice.
    pub fn matrix_tree_count(&self) -> u64 {
        self.matrix_tree_count_deleting(VertexId::new(self.vertex_count as u8))
    }

    /// Matrix-tree count with a caller-chosen vertex's row and column deleted.
    ///
    /// # Panics
    /// Panics if `delete` is not a vertex of this graph.
    pub fn matrix_tree_count_deleting(&self, delete: VertexId) -> u64 {
        let n = self.vertex_count;
        assert!(
            (delete.label() as usize) <= n,
            "vertex {delete} not in graph"
        );
        // Dense Laplacian: degree on the diagonal, -1 per edge off-diagonal.
        let mut lap = vec![vec![0i128; n]; n];
        for e in &self.edges {
            let (i, j) = (e.small().index(), e.large().index());
            lap[i][i] += 1;
            lap[j][j] += 1;
            lap[i][j] -= 1;
            lap[j][i] -= 1;
        }
        let skip = delete.index();
        let keep: Vec<usize> = (0..n).filter(|&i| i != skip).collect();
        let minor: Vec<Vec<i128>> = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| lap[i][j]).collect())
            .collect();
        let det = det_bareiss(minor);
        u64::try_from(det).expect("a Laplacian minor determinant is non-negative")
    }

    /// Enumerates every spanning tree by walking all `C(m, n-1)` edge subsets
    /// of size `n-1` in ascending mask order and keeping those that pass
    /// [`Graph::is_spanning_tree`]. Deliberately brute force: it is the
    /// independent check on the determinant count.
    ///
    /// Fails if the graph has more than 64 edges (the `EdgeSet` mask width).
    pub fn enumerate_spanning_trees(&self) -> Result<Vec<EdgeSet>, Error> {
        let m = self.edges.len();
        if m > 64 {
            return Err(Error::TooManyEdges(m, 64));
        }
        let k = self.vertex_count - 1;
        if k == 0 {
            // A single vertex is spanned by the empty tree.
            return Ok(vec![EdgeSet::EMPTY]);
        }
        let mut out = Vec::new();
        if k > m {
            return Ok(out);
        }
        let full: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        // Gosper's hack: all masks with exactly k bits, in increasing order.
        let mut mask: u64 = (1u64 << k) - 1;
        while mask <= full {
            if self.is_spanning_tree(EdgeSet(mask)) {
                out.push(EdgeSet(mask));
            }
            let low = mask & mask.wrapping_neg();
            let Some(ripple) = mask.checked_add(low) else {
                break;
            };
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
        Ok(out)
    }

    /// Whether `s` is a spanning tree: exactly `n - 1` edges, no circuit,
    /// touching every vertex.
    pub fn is_spanning_tree(&self, s: EdgeSet) -> bool {
        self.spanning_tree_defect(s).is_none()
    }

    /// Why `s` is not a spanning tree, or `None` if it is one. Cardinality is
    /// checked first, then circuits, then connectivity (the last can only
    /// fire on its own for pathological inputs, since `n - 1` acyclic edges
    /// always connect `n` vertices).
    pub fn spanning_tree_defect(&self, s: EdgeSet) -> Option<TreeDefect> {
        let expected = self.vertex_count - 1;
        if s.len() != expected {
            return Some(TreeDefect::WrongEdgeCount {
                expected,
                actual: s.len(),
            });
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for i in s.indices() {
            let e = self.edges[i];
            if !uf.union(e.small().index(), e.large().index()) {
                return Some(TreeDefect::ContainsCircuit);
            }
        }
        let root = uf.find(0);
        if (1..self.vertex_count).any(|v| uf.find(v) != root) {
            return Some(TreeDefect::Disconnected);
        }
        None
    }

    /// Parses the comma-separated edge-list text form (e.g.
    /// `"1-5,2-6,3-7"`) into an edge set of this graph. Rejects strings that
    /// name a non-edge or repeat an edge. Whitespace-only input is the empty
    /// set.
    pub fn parse_edge_set(&self, s: &str) -> Result<EdgeSet, Error> {
        let mut out = EdgeSet::EMPTY;
        if s.trim().is_empty() {
            return Ok(out);
        }
        for part in s.split(',') {
            let e: Edge = part.trim().parse()?;
            let i = self
                .edge_index(e)
                .ok_or_else(|| Error::UnknownEdge(e.to_string()))?;
            if out.contains(i) {
                return Err(Error::DuplicateEdge(e.to_string()));
            }
            out.insert(i);
        }
        Ok(out)
    }

    /// Formats an edge set in the canonical text form: edges joined by
    /// commas, in ascending canonical-index order.
    pub fn edge_set_string(&self, s: EdgeSet) -> String {
        s.indices()
            .map(|i| self.edges[i].to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Exact integer determinant by Bareiss fraction-free elimination. Every
/// division in the recurrence is exact, so no rationals or floats appear.
fn det_bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        // Pivot: any row at or below k with a nonzero entry in column k.
        let Some(pivot_row) = (k..n).find(|&r| m[r][k] != 0) else {
            return 0;
        };
        if pivot_row != k {
            m.swap(pivot_row, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Disjoint-set forest with path halving; used for circuit detection.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets holding `a` and `b`. Returns `false` if they were
    /// already in the same set (i.e. the edge `a-b` would close a circuit).
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// The 12 cube edges in ascending lexicographic order: the canonical edge
/// indexing shared by [`cube_graph`] and the symmetry machinery.
pub const CUBE_EDGE_PAIRS: [(u8, u8); 12] = [
    (1, 2),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 6),
    (3, 4),
    (3, 7),
    (4, 8),
    (5, 6),
    (5, 8),
    (6, 7),
    (7, 8),
];

/// The canonical index of a cube edge (0 for `1-2` through 11 for `7-8`),
/// or `None` if the pair is not a cube edge.
pub fn cube_edge_index(e: Edge) -> Option<usize> {
    CUBE_EDGE_PAIRS
        .iter()
        .position(|&(u, v)| u == e.small().label() && v == e.large().label())
}

/// The unit cube's vertex/edge graph.
///
/// Vertices carry the fixed coordinate labelling
/// 1=(0,0,0), 2=(1,0,0), 3=(1,1,0), 4=(0,1,0),
/// 5=(0,0,1), 6=(1,0,1), 7=(1,1,1), 8=(0,1,1)
/// (see [`cube_vertex_position`]), so 1-2-3-4 is the bottom square, 5-6-7-8
/// the top square, and i is directly below i+4. The 12 edges are stored in
/// ascending lexicographic order, giving the canonical edge indexing:
/// index 0 is `1-2` and index 11 is `7-8`.
pub fn cube_graph() -> Graph {
    let edges = CUBE_EDGE_PAIRS
        .iter()
        .map(|&(u, v)| Edge::from_labels(u, v))
        .collect();
    Graph::new(8, edges).expect("the cube graph is valid by construction")
}

/// The coordinates of a cube vertex under the fixed labelling used by
/// [`cube_graph`]. Two labels form an edge exactly when their coordinates
/// differ in one position.
pub fn cube_vertex_position(v: VertexId) -> [i32; 3] {
    match v.label() {
        1 => [0, 0, 0],
        2 => [1, 0, 0],
        3 => [1, 1, 0],
        4 => [0, 1, 0],
        5 => [0, 0, 1],
        6 => [1, 0, 1],
        7 => [1, 1, 1],
        8 => [0, 1, 1],
        l => panic!("{l} is not a cube vertex label"),
    }
}

/// Complete graph on four vertices; its 16 spanning trees make a compact
/// cross-check for the counting routines.
pub fn k4_graph() -> Graph {
    let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let edges = pairs
        .iter()
        .map(|&(u, v)| Edge::from_labels(u, v))
        .collect();
    Graph::new(4, edges).expect("K4 is valid by construction")
}

/// Two vertices joined by one edge; the smallest graph with a spanning tree.
pub fn path2_graph() -> Graph {
    Graph::new(2, vec![Edge::from_labels(1, 2)]).expect("valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_graph_shape() {
        let g = cube_graph();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.edge(0), Edge::from_labels(1, 2));
        assert_eq!(g.edge(11), Edge::from_labels(7, 8));
        for v in 1..=8 {
            assert_eq!(g.degree(VertexId::new(v)), 3);
        }
        // Canonical order is strictly lexicographic.
        for w in g.edges().windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn cube_edges_match_coordinates() {
        // An edge joins labels whose coordinates differ in exactly one axis.
        let g = cube_graph();
        for u in 1..=8u8 {
            for v in (u + 1)..=8 {
                let pu = cube_vertex_position(VertexId::new(u));
                let pv = cube_vertex_position(VertexId::new(v));
                let diff = (0..3).filter(|&i| pu[i] != pv[i]).count();
                let is_edge = g.edge_index(Edge::from_labels(u, v)).is_some();
                assert_eq!(is_edge, diff == 1, "edge {u}-{v}");
            }
        }
    }

    #[test]
    fn matrix_tree_counts() {
        assert_eq!(cube_graph().matrix_tree_count(), 384);
        assert_eq!(k4_graph().matrix_tree_count(), 16);
        assert_eq!(path2_graph().matrix_tree_count(), 1);
    }

    #[test]
    fn matrix_tree_count_is_independent_of_deleted_vertex() {
        let g = cube_graph();
        for v in 1..=8 {
            assert_eq!(g.matrix_tree_count_deleting(VertexId::new(v)), 384);
        }
        let k4 = k4_graph();
        for v in 1..=4 {
            assert_eq!(k4.matrix_tree_count_deleting(VertexId::new(v)), 16);
        }
    }

    #[test]
    fn disconnected_graph_has_no_spanning_trees() {
        let g = Graph::new(3, vec![Edge::from_labels(1, 2)]).unwrap();
        assert_eq!(g.matrix_tree_count(), 0);
        assert_eq!(g.enumerate_spanning_trees().unwrap(), vec![]);
    }

    /// Independent oracle for K4: walk all 20 three-edge subsets and test
    /// tree-ness by depth-first search, no union-find involved.
    #[test]
    fn k4_brute_force_oracle() {
        let g = k4_graph();
        let mut count = 0u64;
        for a in 0..6 {
            for b in (a + 1)..6 {
                for c in (b + 1)..6 {
                    let chosen = [g.edge(a), g.edge(b), g.edge(c)];
                    // Depth-first reachability from vertex 1.
                    let mut reached = [false; 4];
                    let mut stack = vec![0usize];
                    reached[0] = true;
                    while let Some(v) = stack.pop() {
                        for e in chosen {
                            let (s, t) = (e.small().index(), e.large().index());
                            for (x, y) in [(s, t), (t, s)] {
                                if x == v && !reached[y] {
                                    reached[y] = true;
                                    stack.push(y);
                                }
                            }
                        }
                    }
                    // 3 edges reaching all 4 vertices cannot close a circuit.
                    if reached.iter().all(|&r| r) {
                        count += 1;
                        let s = EdgeSet::from_indices([a, b, c]);
                        assert!(g.is_spanning_tree(s));
                    }
                }
            }
        }
        assert_eq!(count, 16);
        assert_eq!(count, g.matrix_tree_count());
        assert_eq!(count as usize, g.enumerate_spanning_trees().unwrap().len());
    }

    #[test]
    fn enumeration_agrees_with_determinant_on_the_cube() {
        let g = cube_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        assert_eq!(trees.len(), 384);
        assert_eq!(trees.len() as u64, g.matrix_tree_count());
        // Ascending mask order, all distinct, all genuinely trees of 7 edges.
        for w in trees.windows(2) {
            assert!(w[0] < w[1]);
        }
        for t in &trees {
            assert_eq!(t.len(), 7);
            assert!(g.is_spanning_tree(*t));
        }
    }

    #[test]
    fn enumeration_handles_the_smallest_graph() {
        let g = path2_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        assert_eq!(trees, vec![EdgeSet::from_indices([0])]);
    }

    #[test]
    fn spanning_tree_recognition() {
        let g = cube_graph();
        // Four vertical edges plus a path across the top: a genuine tree.
        let tree = g.parse_edge_set("1-5,2-6,3-7,4-8,5-6,6-7,7-8").unwrap();
        assert!(g.is_spanning_tree(tree));
        // Contains the bottom 4-circuit.
        let circuit = g.parse_edge_set("1-2,2-3,3-4,1-4,5-6,6-7,7-8").unwrap();
        assert_eq!(
            g.spanning_tree_defect(circuit),
            Some(TreeDefect::ContainsCircuit)
        );
        // Six edges can never span eight vertices.
        let short = g.parse_edge_set("1-2,2-3,3-4,5-6,6-7,7-8").unwrap();
        assert_eq!(
            g.spanning_tree_defect(short),
            Some(TreeDefect::WrongEdgeCount {
                expected: 7,
                actual: 6
            })
        );
    }

    #[test]
    fn complement_swaps_cut_and_kept_edges() {
        let g = cube_graph();
        let tree = g.parse_edge_set("1-5,2-6,3-7,4-8,5-6,6-7,7-8").unwrap();
        let rest = g.complement(tree);
        assert_eq!(g.edge_set_string(rest), "1-2,1-4,2-3,3-4,5-8");
        assert_eq!(g.complement(rest), tree);
        // Involution over every spanning tree.
        for t in g.enumerate_spanning_trees().unwrap() {
            assert_eq!(g.complement(g.complement(t)), t);
            assert_eq!(t.len() + g.complement(t).len(), 12);
        }
    }

    #[test]
    fn edge_text_round_trip() {
        let e: Edge = "1-5".parse().unwrap();
        assert_eq!(e, Edge::from_labels(1, 5));
        assert_eq!(e.to_string(), "1-5");
        // Reversed input is normalized on parse, printed smaller-first.
        let r: Edge = "5-1".parse().unwrap();
        assert_eq!(r.to_string(), "1-5");
        for bad in ["", "1", "1-", "-5", "x-y", "1-1", "0-3", "12"] {
            assert!(bad.parse::<Edge>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn edge_set_text_round_trip() {
        let g = cube_graph();
        let s = g.parse_edge_set("1-5,2-6,3-7,4-8,5-6,6-7,7-8").unwrap();
        assert_eq!(s.len(), 7);
        assert_eq!(g.edge_set_string(s), "1-5,2-6,3-7,4-8,5-6,6-7,7-8");
        // Order of the input does not matter; output is canonical.
        let shuffled = g.parse_edge_set("7-8,1-5,6-7,2-6,5-6,3-7,4-8").unwrap();
        assert_eq!(shuffled, s);
        assert_eq!(g.parse_edge_set("  ").unwrap(), EdgeSet::EMPTY);

        assert!(matches!(
            g.parse_edge_set("1-7"),
            Err(Error::UnknownEdge(_))
        ));
        assert!(matches!(
            g.parse_edge_set("1-2,2-1"),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            g.parse_edge_set("1-2,,3-4"),
            Err(Error::ParseEdge(_))
        ));
    }

    #[test]
    fn edge_set_bit_operations() {
        let s = EdgeSet::from_indices([0, 3, 11]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(1));
        assert_eq!(s.indices().collect::<Vec<_>>(), vec![0, 3, 11]);
        assert!(EdgeSet::from_indices([0, 3]).is_subset_of(s));
        assert!(!s.is_subset_of(EdgeSet::from_indices([0, 3])));
        let t = EdgeSet::from_indices([3, 5]);
        assert_eq!(s & t, EdgeSet::from_indices([3]));
        assert_eq!(s | t, EdgeSet::from_indices([0, 3, 5, 11]));
    }
}
