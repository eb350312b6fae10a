//! From a spanning tree of the cube to a flat six-cell net and its shape.
//!
//! Cutting the cube's surface along the seven edges of a spanning tree
//! leaves the six faces attached along the other five edges, which act as
//! hinges; swinging the faces flat produces a hexomino-shaped net. This
//! module carries out that process combinatorially:
//!
//! 1. [`hinge_tree`] complements the cut set and reads off which two faces
//!    each remaining edge joins (always a tree on the six faces).
//! 2. [`layout`] develops the faces into the plane, anchoring the bottom
//!    face on the unit cell at the origin and propagating corner positions
//!    across each hinge.
//! 3. [`canonical_form`] reduces the resulting six cells to a canonical
//!    representative of their congruence class (translations, rotations and
//!    reflections of the square lattice), so congruent nets compare equal.
//! 4. [`classify_shapes`] buckets a whole tree list by canonical shape; on
//!    the full set of 384 cube spanning trees this yields the 11 distinct
//!    nets.
//!
//! [`fold_back`] runs the development in reverse — re-deriving the hinges
//! from nothing but the placed corner coordinates — and is used by the test
//! suite to confirm that every layout folds back to the tree it came from.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::Error;
use crate::graph::{cube_edge_index, cube_graph, Edge, EdgeSet, VertexId};

/// The six faces of the cube, named from the fixed vertex labelling
/// (1-2-3-4 is the bottom square, 5-6-7-8 the top).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FaceId {
    Bottom,
    Top,
    Front,
    Right,
    Back,
    Left,
}

impl FaceId {
    /// All six faces, in the fixed order used for tables and placements.
    pub const ALL: [FaceId; 6] = [
        FaceId::Bottom,
        FaceId::Top,
        FaceId::Front,
        FaceId::Right,
        FaceId::Back,
        FaceId::Left,
    ];

    /// The face's four vertices in cyclic order around its boundary.
    /// Consecutive entries (wrapping around) are cube edges.
    pub fn vertex_cycle(self) -> [VertexId; 4] {
        let labels = match self {
            FaceId::Bottom => [1, 2, 3, 4],
            FaceId::Top => [5, 6, 7, 8],
            FaceId::Front => [1, 2, 6, 5],
            FaceId::Right => [2, 3, 7, 6],
            FaceId::Back => [3, 4, 8, 7],
            FaceId::Left => [4, 1, 5, 8],
        };
        labels.map(VertexId::new)
    }

    /// Position in [`FaceId::ALL`], for array indexing.
    pub fn index(self) -> usize {
        FaceId::ALL
            .iter()
            .position(|&f| f == self)
            .expect("every face is listed")
    }

    /// Whether `v` is one of this face's four corners.
    pub fn contains_vertex(self, v: VertexId) -> bool {
        self.vertex_cycle().contains(&v)
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The two faces whose boundaries share edge `e`, in [`FaceId::ALL`] order,
/// or `None` if `e` is not a cube edge.
pub fn faces_of_edge(e: Edge) -> Option<(FaceId, FaceId)> {
    cube_edge_index(e)?;
    let mut pair = FaceId::ALL
        .iter()
        .filter(|f| f.contains_vertex(e.small()) && f.contains_vertex(e.large()));
    let first = *pair.next()?;
    let second = *pair.next()?;
    debug_assert!(pair.next().is_none(), "an edge borders exactly two faces");
    Some((first, second))
}

/// One hinge: an uncut edge together with the two faces it keeps joined.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HingeLink {
    pub edge: Edge,
    pub faces: (FaceId, FaceId),
}

/// The five hinges left by cutting along a spanning tree. They always form
/// a tree on the six faces, which is what lets the net unfold without
/// tearing or double-covering a hinge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HingeTree {
    links: Vec<HingeLink>,
}

impl HingeTree {
    /// The hinges, in ascending canonical-edge order.
    pub fn links(&self) -> &[HingeLink] {
        &self.links
    }

    /// The hinge edges as a set (the complement of the cut).
    pub fn hinge_edges(&self) -> EdgeSet {
        EdgeSet::from_indices(
            self.links
                .iter()
                .map(|l| cube_edge_index(l.edge).expect("hinges are cube edges")),
        )
    }
}

/// Complements a cut set into its hinge tree. The cut must be a spanning
/// tree of the cube graph; the error reports which tree condition failed.
pub fn hinge_tree(cut: EdgeSet) -> Result<HingeTree, Error> {
    let graph = cube_graph();
    if let Some(defect) = graph.spanning_tree_defect(cut) {
        return Err(Error::NotASpanningTree(defect));
    }
    let links: Vec<HingeLink> = graph
        .complement(cut)
        .indices()
        .map(|i| {
            let edge = graph.edge(i);
            let faces = faces_of_edge(edge).expect("cube edges border two faces");
            HingeLink { edge, faces }
        })
        .collect();
    // Cutting a spanning tree of the vertex graph always leaves a spanning
    // tree of the face adjacency; verify rather than trust the face table.
    let mut parent: Vec<usize> = (0..6).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut merges = 0;
    for link in &links {
        let (ra, rb) = (
            find(&mut parent, link.faces.0.index()),
            find(&mut parent, link.faces.1.index()),
        );
        assert!(ra != rb, "hinge edges must not close a circuit of faces");
        parent[ra] = rb;
        merges += 1;
    }
    assert_eq!(merges, 5, "five hinges must join all six faces");
    Ok(HingeTree { links })
}

/// One face laid flat: the unit cell it occupies and the lattice point each
/// of its four cube vertices lands on, listed in the face's cyclic vertex
/// order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FacePlacement {
    pub face: FaceId,
    pub cell: (i32, i32),
    pub corners: [(VertexId, (i32, i32)); 4],
}

impl FacePlacement {
    /// Where vertex `v` of this face sits in the plane.
    pub fn position_of(&self, v: VertexId) -> Option<(i32, i32)> {
        self.corners.iter().find(|&&(w, _)| w == v).map(|&(_, p)| p)
    }

    /// Which cube vertex sits at lattice point `p`.
    pub fn vertex_at(&self, p: (i32, i32)) -> Option<VertexId> {
        self.corners.iter().find(|&&(_, q)| q == p).map(|&(v, _)| v)
    }
}

/// A cube developed into the plane: six face placements on distinct unit
/// cells, hinged faces on adjacent cells with matching corner positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Net {
    placements: Vec<FacePlacement>,
}

impl Net {
    /// All six placements, in [`FaceId::ALL`] order.
    pub fn placements(&self) -> &[FacePlacement] {
        &self.placements
    }

    /// The placement of one face.
    pub fn placement(&self, face: FaceId) -> &FacePlacement {
        &self.placements[face.index()]
    }

    /// The six occupied cells, in [`FaceId::ALL`] order.
    pub fn cells(&self) -> [(i32, i32); 6] {
        let mut cells = [(0, 0); 6];
        for (i, p) in self.placements.iter().enumerate() {
            cells[i] = p.cell;
        }
        cells
    }
}

/// The four corners of a unit cell, counterclockwise from the cell's own
/// coordinate.
fn cell_corners(cell: (i32, i32)) -> [(i32, i32); 4] {
    let (x, y) = cell;
    [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]
}

/// The cell on the other side of the unit segment `a`-`b` from
/// `parent_cell` (the segment is a side of both cells).
fn cell_across(parent_cell: (i32, i32), a: (i32, i32), b: (i32, i32)) -> (i32, i32) {
    let (c1, c2) = if a.0 == b.0 {
        // Vertical side at x = a.0.
        let y = a.1.min(b.1);
        ((a.0 - 1, y), (a.0, y))
    } else {
        debug_assert_eq!(a.1, b.1, "side endpoints must be lattice neighbors");
        // Horizontal side at y = a.1.
        let x = a.0.min(b.0);
        ((x, a.1 - 1), (x, a.1))
    };
    if parent_cell == c1 {
        c2
    } else {
        debug_assert_eq!(parent_cell, c2, "parent must touch the shared side");
        c1
    }
}

/// Places `child_face` on the far side of hinge edge `shared`, copying the
/// two shared vertex positions from the parent and walking the child's
/// vertex cycle around its cell so cyclic order is preserved.
fn place_across(parent: &FacePlacement, child_face: FaceId, shared: Edge) -> FacePlacement {
    let pu = parent
        .position_of(shared.small())
        .expect("hinge endpoint missing from parent placement");
    let pv = parent
        .position_of(shared.large())
        .expect("hinge endpoint missing from parent placement");
    let cell = cell_across(parent.cell, pu, pv);

    let corners = cell_corners(cell);
    let ipu = corners
        .iter()
        .position(|&c| c == pu)
        .expect("shared side lies on the child cell");
    let ipv = corners
        .iter()
        .position(|&c| c == pv)
        .expect("shared side lies on the child cell");
    // Step direction around the cell, as +1 or +3 (= -1 mod 4).
    let cell_step = if (ipu + 1) % 4 == ipv { 1 } else { 3 };
    debug_assert_eq!((ipu + cell_step) % 4, ipv);

    let cycle = child_face.vertex_cycle();
    let iu = cycle
        .iter()
        .position(|&w| w == shared.small())
        .expect("hinge endpoint on the child face");
    let iv = cycle
        .iter()
        .position(|&w| w == shared.large())
        .expect("hinge endpoint on the child face");
    let face_step = if (iu + 1) % 4 == iv { 1 } else { 3 };
    debug_assert_eq!((iu + face_step) % 4, iv);

    // Walk both cycles in lockstep; record each vertex's lattice point.
    let mut position = [(0i32, 0i32); 9];
    for k in 0..4 {
        let vertex = cycle[(iu + face_step * k) % 4];
        position[vertex.label() as usize] = corners[(ipu + cell_step * k) % 4];
    }
    FacePlacement {
        face: child_face,
        cell,
        corners: cycle.map(|w| (w, position[w.label() as usize])),
    }
}

/// Develops the cube into the plane along the hinge tree of `cut`.
///
/// The bottom face anchors the net on the cell at the origin with vertex 1
/// at `(0,0)`, 2 at `(1,0)`, 3 at `(1,1)`, 4 at `(0,1)`; the rest of the
/// faces are placed breadth-first across the hinges. Fails with the precise
/// tree defect if `cut` is not a spanning tree. The overlap error is
/// unreachable for genuine cube spanning trees (all 384 produce
/// distinct-cell nets) but guards the geometry anyway.
pub fn layout(cut: EdgeSet) -> Result<Net, Error> {
    let hinges = hinge_tree(cut)?;

    // Hinge adjacency, per face, in ascending hinge order.
    let mut incident: [Vec<usize>; 6] = Default::default();
    for (i, link) in hinges.links().iter().enumerate() {
        incident[link.faces.0.index()].push(i);
        incident[link.faces.1.index()].push(i);
    }

    let mut placed: [Option<FacePlacement>; 6] = Default::default();
    let root = FacePlacement {
        face: FaceId::Bottom,
        cell: (0, 0),
        corners: [
            (VertexId::new(1), (0, 0)),
            (VertexId::new(2), (1, 0)),
            (VertexId::new(3), (1, 1)),
            (VertexId::new(4), (0, 1)),
        ],
    };
    placed[FaceId::Bottom.index()] = Some(root);
    let mut queue = VecDeque::from([FaceId::Bottom]);
    while let Some(face) = queue.pop_front() {
        for &link_index in &incident[face.index()] {
            let link = hinges.links()[link_index];
            let neighbor = if link.faces.0 == face {
                link.faces.1
            } else {
                link.faces.0
            };
            if placed[neighbor.index()].is_some() {
                continue;
            }
            let parent = placed[face.index()].expect("queued faces are placed");
            placed[neighbor.index()] = Some(place_across(&parent, neighbor, link.edge));
            queue.push_back(neighbor);
        }
    }

    let placements: Vec<FacePlacement> = placed
        .into_iter()
        .map(|p| p.expect("a hinge tree reaches every face"))
        .collect();
    let mut seen = HashSet::new();
    for p in &placements {
        if !seen.insert(p.cell) {
            return Err(Error::OverlappingCells(p.cell));
        }
    }
    Ok(Net { placements })
}

/// A hinge recovered from net geometry alone: two faces on adjacent cells
/// whose corner maps agree on the shared side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HingeJoint {
    pub faces: (FaceId, FaceId),
    pub edge: Edge,
    /// The shared side in the plane, as its two lattice endpoints.
    pub side: ((i32, i32), (i32, i32)),
}

/// Scans all face pairs of a net and reports every geometric hinge: adjacent
/// cells whose placements assign the same cube vertices to the two shared
/// lattice points. Sorted by face-pair order.
pub fn hinge_joints(net: &Net) -> Vec<HingeJoint> {
    let ps = net.placements();
    let mut joints = Vec::new();
    for i in 0..ps.len() {
        for j in (i + 1)..ps.len() {
            let (f, g) = (&ps[i], &ps[j]);
            let distance = (f.cell.0 - g.cell.0).abs() + (f.cell.1 - g.cell.1).abs();
            if distance != 1 {
                continue;
            }
            let g_corners = cell_corners(g.cell);
            let shared: Vec<(i32, i32)> = cell_corners(f.cell)
                .into_iter()
                .filter(|c| g_corners.contains(c))
                .collect();
            debug_assert_eq!(shared.len(), 2, "adjacent cells share one side");
            let (p, q) = (shared[0], shared[1]);
            let (fu, fv) = (f.vertex_at(p), f.vertex_at(q));
            let (gu, gv) = (g.vertex_at(p), g.vertex_at(q));
            match (fu, fv, gu, gv) {
                (Some(fu), Some(fv), Some(gu), Some(gv)) if fu == gu && fv == gv => {
                    let edge = Edge::new(fu, fv);
                    debug_assert!(
                        cube_edge_index(edge).is_some(),
                        "adjacent corners of a face form a cube edge"
                    );
                    joints.push(HingeJoint {
                        faces: (f.face, g.face),
                        edge,
                        side: (p, q),
                    });
                }
                _ => {}
            }
        }
    }
    joints
}

/// Folds a net back together and returns the cut set it came from,
/// reconstructed purely from the placed corner coordinates.
///
/// The hinges are re-derived with [`hinge_joints`]; they must make a tree on
/// the six faces, and the complement of the hinge edges must be a spanning
/// tree of the cube graph. Any violation means the net's geometry is
/// inconsistent and comes back as [`Error::Reconstruction`].
pub fn fold_back(net: &Net) -> Result<EdgeSet, Error> {
    let joints = hinge_joints(net);
    if joints.len() != 5 {
        return Err(Error::Reconstruction(format!(
            "found {} hinge joints, expected 5",
            joints.len()
        )));
    }
    let mut parent: Vec<usize> = (0..6).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for joint in &joints {
        let (ra, rb) = (
            find(&mut parent, joint.faces.0.index()),
            find(&mut parent, joint.faces.1.index()),
        );
        if ra == rb {
            return Err(Error::Reconstruction(
                "hinge joints close a circuit of faces".to_string(),
            ));
        }
        parent[ra] = rb;
    }
    let graph = cube_graph();
    let mut hinges = EdgeSet::EMPTY;
    for joint in &joints {
        let index = graph
            .edge_index(joint.edge)
            .ok_or_else(|| Error::Reconstruction(format!("{} is not a cube edge", joint.edge)))?;
        if hinges.contains(index) {
            return Err(Error::Reconstruction(format!(
                "edge {} appears as two different hinges",
                joint.edge
            )));
        }
        hinges.insert(index);
    }
    let cut = graph.complement(hinges);
    if let Some(defect) = graph.spanning_tree_defect(cut) {
        return Err(Error::Reconstruction(format!(
            "reconstructed cut is not a spanning tree: {defect}"
        )));
    }
    Ok(cut)
}

/// A hexomino shape in canonical position: the lexicographically least cell
/// list over all eight square-lattice congruences (four rotations, times
/// optional reflection), translated so the least cell is the origin.
///
/// Two nets are congruent — equal up to translation, rotation and
/// reflection — exactly when their canonical shapes are equal, so this type
/// is the dictionary key for shape classification. Cells are stored sorted,
/// with `cells[0] == (0, 0)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalShape {
    cells: [(i32, i32); 6],
}

/// The eight congruences of the square lattice fixing the origin.
fn apply_congruence(t: usize, (x, y): (i32, i32)) -> (i32, i32) {
    match t {
        0 => (x, y),
        1 => (-y, x),
        2 => (-x, -y),
        3 => (y, -x),
        4 => (-x, y),
        5 => (x, -y),
        6 => (y, x),
        7 => (-y, -x),
        _ => unreachable!("only eight lattice congruences exist"),
    }
}

/// Sorts and translates so the least cell is the origin.
fn normalize(mut cells: [(i32, i32); 6]) -> [(i32, i32); 6] {
    cells.sort();
    let (dx, dy) = cells[0];
    for c in &mut cells {
        *c = (c.0 - dx, c.1 - dy);
    }
    cells
}

impl CanonicalShape {
    /// Canonicalizes six distinct cells up to translation, rotation and
    /// reflection.
    ///
    /// # Panics
    /// Panics if the cells are not distinct.
    pub fn new(cells: [(i32, i32); 6]) -> CanonicalShape {
        CanonicalShape::with_congruences(cells, 8)
    }

    /// Canonicalizes up to translation and rotation only, keeping mirror
    /// images distinct (the "one-sided" reading of shape equality).
    pub fn new_one_sided(cells: [(i32, i32); 6]) -> CanonicalShape {
        CanonicalShape::with_congruences(cells, 4)
    }

    fn with_congruences(cells: [(i32, i32); 6], count: usize) -> CanonicalShape {
        let distinct: HashSet<(i32, i32)> = cells.iter().copied().collect();
        assert_eq!(distinct.len(), 6, "a shape needs six distinct cells");
        let best = (0..count)
            .map(|t| normalize(cells.map(|c| apply_congruence(t, c))))
            .min()
            .expect("at least one congruence");
        CanonicalShape { cells: best }
    }

    /// The cells, sorted, least cell first (always `(0, 0)`).
    pub fn cells(&self) -> [(i32, i32); 6] {
        self.cells
    }

    /// Whether the shape equals its own mirror image (as one-sided shapes).
    pub fn is_achiral(&self) -> bool {
        let mirrored = self.cells.map(|(x, y)| (-x, y));
        CanonicalShape::new_one_sided(self.cells) == CanonicalShape::new_one_sided(mirrored)
    }
}

/// One cell per line, as `x y`.
impl fmt::Display for CanonicalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, y)) in self.cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{x} {y}")?;
        }
        Ok(())
    }
}

/// The canonical shape of a net's six cells.
pub fn canonical_form(net: &Net) -> CanonicalShape {
    CanonicalShape::new(net.cells())
}

/// The canonical shape with mirror images kept distinct.
pub fn canonical_form_one_sided(net: &Net) -> CanonicalShape {
    CanonicalShape::new_one_sided(net.cells())
}

/// Whether the cells form one edge-connected patch (every cell reachable
/// from the first through side-sharing steps).
pub fn cells_edge_connected(cells: &[(i32, i32)]) -> bool {
    let Some(&start) = cells.first() else {
        return true;
    };
    let all: HashSet<(i32, i32)> = cells.iter().copied().collect();
    let mut reached = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some((x, y)) = stack.pop() {
        for next in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
            if all.contains(&next) && reached.insert(next) {
                stack.push(next);
            }
        }
    }
    reached.len() == all.len()
}

/// Lays out every tree and groups them by canonical shape. The map iterates
/// in canonical-shape order; each bucket keeps the trees in input order.
/// On the full list of 384 cube spanning trees this produces exactly 11
/// shapes.
pub fn classify_shapes(trees: &[EdgeSet]) -> Result<BTreeMap<CanonicalShape, Vec<EdgeSet>>, Error> {
    let mut by_shape: BTreeMap<CanonicalShape, Vec<EdgeSet>> = BTreeMap::new();
    for &tree in trees {
        let net = layout(tree)?;
        by_shape.entry(canonical_form(&net)).or_default().push(tree);
    }
    Ok(by_shape)
}

/// How many distinct shapes the trees produce when mirror images count
/// separately. Reported alongside the mirror-blind count for comparison;
/// the two differ by the number of chiral shapes.
pub fn one_sided_shape_count(trees: &[EdgeSet]) -> Result<usize, Error> {
    let mut shapes: BTreeSet<CanonicalShape> = BTreeSet::new();
    for &tree in trees {
        shapes.insert(canonical_form_one_sided(&layout(tree)?));
    }
    Ok(shapes.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::TreeDefect;
    use crate::graph::cube_graph;

    fn example_cut() -> EdgeSet {
        cube_graph()
            .parse_edge_set("1-5,2-6,3-7,4-8,5-6,6-7,7-8")
            .unwrap()
    }

    #[test]
    fn face_table_is_consistent() {
        let g = cube_graph();
        // Each face's cycle really walks four cube edges.
        for face in FaceId::ALL {
            let cycle = face.vertex_cycle();
            assert_eq!(
                cycle.iter().collect::<HashSet<_>>().len(),
                4,
                "{face} has four distinct corners"
            );
            for k in 0..4 {
                let e = Edge::new(cycle[k], cycle[(k + 1) % 4]);
                assert!(
                    g.edge_index(e).is_some(),
                    "{face} cycle step {e} must be a cube edge"
                );
            }
        }
        // Each edge borders exactly two faces; each face borders four edges.
        let mut border_count = [0usize; 6];
        for e in g.edges() {
            let (a, b) = faces_of_edge(*e).unwrap();
            assert_ne!(a, b);
            border_count[a.index()] += 1;
            border_count[b.index()] += 1;
        }
        assert_eq!(border_count, [4; 6]);
        assert_eq!(faces_of_edge(Edge::from_labels(1, 7)), None);
    }

    #[test]
    fn hinge_tree_of_the_example_cut() {
        let hinges = hinge_tree(example_cut()).unwrap();
        let described: Vec<String> = hinges
            .links()
            .iter()
            .map(|l| format!("{} {}-{}", l.edge, l.faces.0, l.faces.1))
            .collect();
        assert_eq!(
            described,
            vec![
                "1-2 Bottom-Front",
                "1-4 Bottom-Left",
                "2-3 Bottom-Right",
                "3-4 Bottom-Back",
                "5-8 Top-Left",
            ]
        );
        assert_eq!(hinges.hinge_edges(), cube_graph().complement(example_cut()));
    }

    #[test]
    fn hinge_tree_rejects_non_trees() {
        let g = cube_graph();
        let circuit = g.parse_edge_set("1-2,2-3,3-4,1-4,5-6,6-7,7-8").unwrap();
        assert_eq!(
            hinge_tree(circuit),
            Err(Error::NotASpanningTree(TreeDefect::ContainsCircuit))
        );
        let short = g.parse_edge_set("1-2").unwrap();
        assert_eq!(
            hinge_tree(short),
            Err(Error::NotASpanningTree(TreeDefect::WrongEdgeCount {
                expected: 7,
                actual: 1
            }))
        );
    }

    #[test]
    fn layout_of_the_example_cut() {
        let net = layout(example_cut()).unwrap();
        let cell_of = |f: FaceId| net.placement(f).cell;
        assert_eq!(cell_of(FaceId::Bottom), (0, 0));
        assert_eq!(cell_of(FaceId::Front), (0, -1));
        assert_eq!(cell_of(FaceId::Right), (1, 0));
        assert_eq!(cell_of(FaceId::Back), (0, 1));
        assert_eq!(cell_of(FaceId::Left), (-1, 0));
        // Top hinges to Left through the one uncut top edge, 5-8.
        assert_eq!(cell_of(FaceId::Top), (-2, 0));

        // Corner maps carry the shared hinge vertices to shared points.
        let v = VertexId::new;
        assert_eq!(
            net.placement(FaceId::Front).corners,
            [
                (v(1), (0, 0)),
                (v(2), (1, 0)),
                (v(6), (1, -1)),
                (v(5), (0, -1)),
            ]
        );
        assert_eq!(
            net.placement(FaceId::Left).corners,
            [
                (v(4), (0, 1)),
                (v(1), (0, 0)),
                (v(5), (-1, 0)),
                (v(8), (-1, 1)),
            ]
        );
        assert_eq!(
            net.placement(FaceId::Top).corners,
            [
                (v(5), (-1, 0)),
                (v(6), (-2, 0)),
                (v(7), (-2, 1)),
                (v(8), (-1, 1)),
            ]
        );
    }

    #[test]
    fn layout_is_deterministic() {
        let a = layout(example_cut()).unwrap();
        let b = layout(example_cut()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fold_back_recovers_the_example_cut() {
        let net = layout(example_cut()).unwrap();
        assert_eq!(fold_back(&net).unwrap(), example_cut());
        // The five joints are the five hinges.
        let joints = hinge_joints(&net);
        assert_eq!(joints.len(), 5);
        let mut edges: Vec<String> = joints.iter().map(|j| j.edge.to_string()).collect();
        edges.sort();
        assert_eq!(edges, vec!["1-2", "1-4", "2-3", "3-4", "5-8"]);
    }

    #[test]
    fn every_tree_lays_out_and_folds_back() {
        let g = cube_graph();
        for tree in g.enumerate_spanning_trees().unwrap() {
            let net = layout(tree).expect("every spanning tree lays out");
            let cells = net.cells();
            let distinct: HashSet<(i32, i32)> = cells.iter().copied().collect();
            assert_eq!(distinct.len(), 6, "no overlaps");
            assert!(cells_edge_connected(&cells));
            assert_eq!(fold_back(&net).unwrap(), tree);
        }
    }

    #[test]
    fn canonical_form_of_a_strip_stands_upright() {
        let horizontal = [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0)];
        let canonical = CanonicalShape::new(horizontal);
        assert_eq!(
            canonical.cells(),
            [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]
        );
        assert_eq!(canonical.to_string(), "0 0\n0 1\n0 2\n0 3\n0 4\n0 5");
    }

    #[test]
    fn canonical_form_is_idempotent_and_congruence_invariant() {
        let g = cube_graph();
        for tree in g.enumerate_spanning_trees().unwrap() {
            let net = layout(tree).unwrap();
            let shape = canonical_form(&net);
            assert_eq!(CanonicalShape::new(shape.cells()), shape, "idempotent");
            assert_eq!(shape.cells()[0], (0, 0), "anchored at the origin");
            for t in 0..8 {
                let moved = net.cells().map(|c| apply_congruence(t, (c.0 + 3, c.1 - 7)));
                assert_eq!(CanonicalShape::new(moved), shape, "congruence {t}");
            }
        }
    }

    #[test]
    fn shape_classification_finds_eleven_hexominoes() {
        let g = cube_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        let by_shape = classify_shapes(&trees).unwrap();
        assert_eq!(by_shape.len(), 11);
        let mut counts: Vec<usize> = by_shape.values().map(|v| v.len()).collect();
        assert_eq!(counts.iter().sum::<usize>(), 384);
        counts.sort();
        assert_eq!(counts, vec![24, 24, 24, 24, 24, 24, 48, 48, 48, 48, 48]);
        // The example cut's shape is one of the eleven.
        let example_shape = canonical_form(&layout(example_cut()).unwrap());
        assert!(by_shape.contains_key(&example_shape));
        // Every shape is a connected patch of six cells.
        for shape in by_shape.keys() {
            assert!(cells_edge_connected(&shape.cells()));
        }
    }

    #[test]
    fn one_sided_count_exceeds_mirror_blind_count_by_the_chiral_shapes() {
        let g = cube_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        let by_shape = classify_shapes(&trees).unwrap();
        let chiral = by_shape.keys().filter(|s| !s.is_achiral()).count();
        let one_sided = one_sided_shape_count(&trees).unwrap();
        assert_eq!(one_sided, by_shape.len() + chiral);
    }
}
