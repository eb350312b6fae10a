//! The isometry group of the cube and its action on spanning trees.
//!
//! Every isometry of the cube is determined by what it does to the eight
//! vertex labels, so elements are stored as vertex permutations (validated to
//! preserve adjacency) together with the induced permutation of the 12 edge
//! indices. The full group has 48 elements and is generated by a quarter
//! turn, a third turn about a long diagonal, and the central inversion; the
//! first two alone generate the 24 rotations.
//!
//! Composition is written left to right: `a.then(b)` applies `a` first. This
//! matches the exponential convention for group actions, where acting by a
//! product `ab` means acting by `a` and then by `b`.
//!
//! The payoff is orbit counting: [`compute_orbits`] partitions the 384
//! spanning trees of the cube into 11 orbits, and Burnside's lemma
//! (`orbit count = average number of fixed trees`) confirms the number from
//! per-element fixed-tree counts alone. [`grow_invariant_trees`] rebuilds the
//! fixed trees of an involution constructively, giving an independent route
//! to the same fixed counts.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::{
    cube_edge_index, cube_graph, cube_vertex_position, Edge, EdgeSet, VertexId, CUBE_EDGE_PAIRS,
};

/// The ten geometric classes of cube isometries.
///
/// The first five (with the identity) are the rotations; the last five are
/// orientation-reversing. Numbers in the names follow the kind of axis:
/// `1` = through two opposite face centers, `2` = through two opposite edge
/// midpoints, `3` = through two opposite vertices (a long diagonal).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum IsometryClass {
    /// The identity map.
    Identity,
    /// Quarter turn about a face axis (order 4).
    Rot1_90,
    /// Half turn about a face axis.
    Rot1_180,
    /// Half turn about an edge axis.
    Rot2_180,
    /// Third turn about a long diagonal (order 3).
    Rot3_120,
    /// Central inversion: every vertex to its antipode.
    Antipodal,
    /// Reflection in a plane through two opposite edges.
    Ref1,
    /// Reflection in a plane parallel to two faces.
    Ref2,
    /// Quarter turn composed with reflection across the perpendicular plane
    /// (order 4).
    RotoRef90,
    /// Sixth turn composed with reflection: the rotary reflection about a
    /// long diagonal (order 6).
    RotoRef60,
}

impl IsometryClass {
    /// All ten classes, in the fixed order used for census tables.
    pub const ALL: [IsometryClass; 10] = [
        IsometryClass::Identity,
        IsometryClass::Rot1_90,
        IsometryClass::Rot1_180,
        IsometryClass::Rot2_180,
        IsometryClass::Rot3_120,
        IsometryClass::Antipodal,
        IsometryClass::Ref1,
        IsometryClass::Ref2,
        IsometryClass::RotoRef90,
        IsometryClass::RotoRef60,
    ];

    /// Short geometric description, for human-facing tables.
    pub fn description(self) -> &'static str {
        match self {
            IsometryClass::Identity => "identity",
            IsometryClass::Rot1_90 => "quarter turn, face axis",
            IsometryClass::Rot1_180 => "half turn, face axis",
            IsometryClass::Rot2_180 => "half turn, edge axis",
            IsometryClass::Rot3_120 => "third turn, long diagonal",
            IsometryClass::Antipodal => "central inversion",
            IsometryClass::Ref1 => "reflection through two opposite edges",
            IsometryClass::Ref2 => "reflection parallel to two faces",
            IsometryClass::RotoRef90 => "rotary reflection, order 4",
            IsometryClass::RotoRef60 => "rotary reflection, order 6",
        }
    }
}

impl fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An isometry of the cube, stored as the permutation it induces on vertex
/// labels together with the derived permutation of edge indices and its
/// geometric class (both computed once at construction).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Isometry {
    vertex_images: [u8; 8],
    edge_images: [u8; 12],
    class: IsometryClass,
}

impl Isometry {
    /// The identity isometry.
    pub fn identity() -> Isometry {
        Isometry::from_vertex_images([1, 2, 3, 4, 5, 6, 7, 8]).expect("identity is an isometry")
    }

    /// Quarter turn about the vertical face axis: `(1234)(5678)`.
    pub fn face_quarter_turn() -> Isometry {
        Isometry::from_vertex_images([2, 3, 4, 1, 6, 7, 8, 5]).expect("valid by construction")
    }

    /// Third turn about the long diagonal through vertices 2 and 8:
    /// `(136)(475)`.
    pub fn diagonal_third_turn() -> Isometry {
        Isometry::from_vertex_images([3, 2, 6, 7, 4, 1, 5, 8]).expect("valid by construction")
    }

    /// Central inversion, sending every vertex to its antipode:
    /// `(17)(28)(35)(46)`.
    pub fn central_inversion() -> Isometry {
        Isometry::from_vertex_images([7, 8, 5, 6, 3, 4, 1, 2]).expect("valid by construction")
    }

    /// Builds an isometry from vertex images (`images[i]` is where label
    /// `i + 1` goes). Rejects arrays that are not permutations of 1..=8 or
    /// that fail to map cube edges to cube edges.
    pub fn from_vertex_images(images: [u8; 8]) -> Result<Isometry, Error> {
        let mut seen = [false; 8];
        for &img in &images {
            if !(1..=8).contains(&img) {
                return Err(Error::NotAnIsometry(format!(
                    "image label {img} is outside 1..=8"
                )));
            }
            if std::mem::replace(&mut seen[(img - 1) as usize], true) {
                return Err(Error::NotAnIsometry(format!(
                    "label {img} appears twice among the images"
                )));
            }
        }
        let mut edge_images = [0u8; 12];
        for (i, &(u, v)) in CUBE_EDGE_PAIRS.iter().enumerate() {
            let e = Edge::from_labels(images[(u - 1) as usize], images[(v - 1) as usize]);
            match cube_edge_index(e) {
                Some(j) => edge_images[i] = j as u8,
                None => {
                    return Err(Error::NotAnIsometry(format!(
                        "edge {u}-{v} maps to {e}, which is not a cube edge"
                    )))
                }
            }
        }
        let class = classify(&images, &edge_images);
        Ok(Isometry {
            vertex_images: images,
            edge_images,
            class,
        })
    }

    /// Parses disjoint-cycle notation, e.g. `"(1234)(5678)"` or `"()"` for
    /// the identity. Labels left out of every cycle stay fixed.
    pub fn from_cycles(s: &str) -> Result<Isometry, Error> {
        s.parse()
    }

    /// The geometric class of this isometry.
    pub fn class(&self) -> IsometryClass {
        self.class
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.vertex_images == [1, 2, 3, 4, 5, 6, 7, 8]
    }

    /// The raw vertex images (`[i]` is where label `i + 1` goes).
    pub fn vertex_images(&self) -> [u8; 8] {
        self.vertex_images
    }

    /// Where vertex `v` goes.
    pub fn vertex_image(&self, v: VertexId) -> VertexId {
        VertexId::new(self.vertex_images[v.index()])
    }

    /// Where the edge with canonical index `i` goes.
    pub fn edge_image_index(&self, i: usize) -> usize {
        self.edge_images[i] as usize
    }

    /// Where edge `e` goes.
    pub fn edge_image(&self, e: Edge) -> Edge {
        Edge::new(self.vertex_image(e.small()), self.vertex_image(e.large()))
    }

    /// The image of a whole edge set (e.g. a spanning tree) under this
    /// isometry. Together with [`Isometry::then`] this is a right action:
    /// mapping by `a.then(b)` equals mapping by `a` and then by `b`.
    pub fn map_edge_set(&self, s: EdgeSet) -> EdgeSet {
        EdgeSet::from_indices(s.indices().map(|i| self.edge_image_index(i)))
    }

    /// The set of edges this isometry fixes as unordered pairs (the endpoints
    /// may swap).
    pub fn invariant_edges(&self) -> EdgeSet {
        EdgeSet::from_indices((0..12).filter(|&i| self.edge_images[i] == i as u8))
    }

    /// How many vertex labels stay put.
    pub fn fixed_vertex_count(&self) -> usize {
        (0..8)
            .filter(|&i| self.vertex_images[i] == i as u8 + 1)
            .count()
    }

    /// Composition, applying `self` first and `next` second.
    pub fn then(&self, next: &Isometry) -> Isometry {
        let mut images = [0u8; 8];
        for (image, &mid) in images.iter_mut().zip(&self.vertex_images) {
            *image = next.vertex_images[(mid - 1) as usize];
        }
        Isometry::from_vertex_images(images).expect("isometries compose to isometries")
    }

    /// The inverse isometry.
    pub fn inverse(&self) -> Isometry {
        let mut images = [0u8; 8];
        for i in 0..8 {
            images[(self.vertex_images[i] - 1) as usize] = i as u8 + 1;
        }
        Isometry::from_vertex_images(images).expect("isometries invert to isometries")
    }

    /// The order of this element: the least `k >= 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        let mut power = *self;
        let mut k = 1;
        while !power.is_identity() {
            power = power.then(self);
            k += 1;
        }
        k
    }
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Isometry({self}, {})", self.class)
    }
}

/// Disjoint-cycle notation: cycles ordered by their smallest member, each
/// cycle starting at its smallest member, fixed points omitted. The identity
/// prints as `()`.
impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        let mut visited = [false; 8];
        for start in 0..8u8 {
            if visited[start as usize] {
                continue;
            }
            let mut cycle = vec![start + 1];
            visited[start as usize] = true;
            let mut v = self.vertex_images[start as usize];
            while v != start + 1 {
                cycle.push(v);
                visited[(v - 1) as usize] = true;
                v = self.vertex_images[(v - 1) as usize];
            }
            if cycle.len() > 1 {
                write!(f, "(")?;
                for label in cycle {
                    write!(f, "{label}")?;
                }
                write!(f, ")")?;
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl FromStr for Isometry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Isometry, Error> {
        let bad = || Error::ParseCycles(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        let mut images: [u8; 8] = [1, 2, 3, 4, 5, 6, 7, 8];
        let mut mentioned = [false; 8];
        let mut chars = t.chars().peekable();
        while let Some(c) = chars.next() {
            if c.is_whitespace() {
                continue;
            }
            if c != '(' {
                return Err(bad());
            }
            let mut cycle: Vec<u8> = Vec::new();
            loop {
                match chars.next() {
                    Some(')') => break,
                    Some(d @ '1'..='8') => {
                        let label = d as u8 - b'0';
                        if std::mem::replace(&mut mentioned[(label - 1) as usize], true) {
                            return Err(bad());
                        }
                        cycle.push(label);
                    }
                    _ => return Err(bad()),
                }
            }
            for (k, &label) in cycle.iter().enumerate() {
                let successor = cycle[(k + 1) % cycle.len()];
                images[(label - 1) as usize] = successor;
            }
        }
        Isometry::from_vertex_images(images)
    }
}

/// Determines the geometric class from the linear map the permutation induces
/// on the cube centered at the origin.
///
/// The images of the three edge directions at vertex 1 (towards 2, 4, 5)
/// give the columns of an orthogonal matrix with entries in {-1, 0, 1}; its
/// determinant separates rotations from reflections and its trace pins the
/// rotation angle (`1 + 2cos t` for rotations, `-1 + 2cos t` for rotary
/// reflections). The two (det, trace) collisions are broken combinatorially:
/// both half turns have trace -1 but only the edge-axis one keeps two edges
/// invariant, and both reflections have trace 1 but only the edge-plane one
/// fixes any vertices.
fn classify(vertex_images: &[u8; 8], edge_images: &[u8; 12]) -> IsometryClass {
    let centered = |label: u8| -> [i32; 3] {
        let p = cube_vertex_position(VertexId::new(label));
        [2 * p[0] - 1, 2 * p[1] - 1, 2 * p[2] - 1]
    };
    let image = |label: u8| centered(vertex_images[(label - 1) as usize]);
    let base = image(1);
    let column = |neighbor: u8| -> [i32; 3] {
        let q = image(neighbor);
        [
            (q[0] - base[0]) / 2,
            (q[1] - base[1]) / 2,
            (q[2] - base[2]) / 2,
        ]
    };
    let (cx, cy, cz) = (column(2), column(4), column(5));
    let det = cx[0] * (cy[1] * cz[2] - cy[2] * cz[1]) - cy[0] * (cx[1] * cz[2] - cx[2] * cz[1])
        + cz[0] * (cx[1] * cy[2] - cx[2] * cy[1]);
    let trace = cx[0] + cy[1] + cz[2];
    let invariant_edges = (0..12).filter(|&i| edge_images[i] == i as u8).count();
    let fixed_vertices = (0..8).filter(|&i| vertex_images[i] == i as u8 + 1).count();
    match (det, trace) {
        (1, 3) => IsometryClass::Identity,
        (1, 1) => IsometryClass::Rot1_90,
        (1, 0) => IsometryClass::Rot3_120,
        (1, -1) => match invariant_edges {
            2 => IsometryClass::Rot2_180,
            0 => IsometryClass::Rot1_180,
            n => unreachable!("a half turn keeps 0 or 2 edges invariant, not {n}"),
        },
        (-1, -3) => IsometryClass::Antipodal,
        (-1, -1) => IsometryClass::RotoRef90,
        (-1, 0) => IsometryClass::RotoRef60,
        (-1, 1) => match fixed_vertices {
            4 => IsometryClass::Ref1,
            0 => IsometryClass::Ref2,
            n => unreachable!("a reflection fixes 0 or 4 vertices, not {n}"),
        },
        other => unreachable!("no cube isometry has (det, trace) = {other:?}"),
    }
}

/// A group of cube isometries, closed under composition.
///
/// Elements are kept in the deterministic discovery order of the breadth-
/// first closure that built the group, with the identity first.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    elements: Vec<Isometry>,
}

impl SymmetryGroup {
    /// Closes a generator list under composition by breadth-first search:
    /// starting from the identity, each known element is composed with each
    /// generator in order, appending anything new.
    pub fn closure(generators: &[Isometry]) -> SymmetryGroup {
        let mut elements = vec![Isometry::identity()];
        let mut seen: HashSet<[u8; 8]> = elements.iter().map(|e| e.vertex_images()).collect();
        let mut next = 0;
        while next < elements.len() {
            let current = elements[next];
            next += 1;
            for g in generators {
                let product = current.then(g);
                if seen.insert(product.vertex_images()) {
                    elements.push(product);
                }
            }
        }
        SymmetryGroup { elements }
    }

    /// The full isometry group of the cube: the closure of a quarter turn, a
    /// diagonal third turn, and the central inversion. Fails if the closure
    /// does not come out to exactly 48 elements, which would mean the
    /// generators or the composition rule are corrupted.
    pub fn full() -> Result<SymmetryGroup, Error> {
        let group = SymmetryGroup::closure(&[
            Isometry::face_quarter_turn(),
            Isometry::diagonal_third_turn(),
            Isometry::central_inversion(),
        ]);
        if group.len() != 48 {
            return Err(Error::GroupClosure {
                expected: 48,
                actual: group.len(),
            });
        }
        Ok(group)
    }

    /// The rotation subgroup: the closure of the two rotation generators
    /// alone (24 elements).
    pub fn rotations() -> SymmetryGroup {
        SymmetryGroup::closure(&[
            Isometry::face_quarter_turn(),
            Isometry::diagonal_third_turn(),
        ])
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// All elements, identity first, in closure discovery order.
    pub fn elements(&self) -> &[Isometry] {
        &self.elements
    }

    pub fn contains(&self, iso: &Isometry) -> bool {
        self.elements.contains(iso)
    }

    /// The elements commuting with every element of the group. For the full
    /// cube group this is the identity and the central inversion.
    pub fn center(&self) -> Vec<Isometry> {
        self.elements
            .iter()
            .filter(|z| self.elements.iter().all(|g| z.then(g) == g.then(z)))
            .copied()
            .collect()
    }

    /// Element counts per geometric class, one row per class in
    /// [`IsometryClass::ALL`] order.
    pub fn class_census(&self) -> Vec<(IsometryClass, usize)> {
        IsometryClass::ALL
            .iter()
            .map(|&c| (c, self.elements.iter().filter(|e| e.class() == c).count()))
            .collect()
    }
}

/// The trees from `trees` that `iso` maps to themselves, in input order.
pub fn fixed_trees(iso: &Isometry, trees: &[EdgeSet]) -> Vec<EdgeSet> {
    trees
        .iter()
        .filter(|&&t| iso.map_edge_set(t) == t)
        .copied()
        .collect()
}

/// The subgroup of `group` fixing edge `e` as an unordered pair. For the
/// full cube group this always has exactly four elements: the identity, a
/// half turn about the edge's axis, and two reflections.
pub fn edge_stabilizer(group: &SymmetryGroup, e: Edge) -> Result<Vec<Isometry>, Error> {
    let i = cube_edge_index(e).ok_or_else(|| Error::UnknownEdge(e.to_string()))?;
    Ok(group
        .elements()
        .iter()
        .filter(|iso| iso.edge_image_index(i) == i)
        .copied()
        .collect())
}

/// Orbit count by Burnside's lemma: the number of orbits of `group` on
/// `trees` is the sum of per-element fixed-tree counts divided by the group
/// order. The division must be exact; a remainder means the action is
/// broken and is reported as an error.
pub fn burnside_orbit_count(group: &SymmetryGroup, trees: &[EdgeSet]) -> Result<u64, Error> {
    let sum: u64 = group
        .elements()
        .iter()
        .map(|iso| fixed_trees(iso, trees).len() as u64)
        .sum();
    let order = group.len() as u64;
    if !sum.is_multiple_of(order) {
        return Err(Error::InexactBurnside { sum, order });
    }
    Ok(sum / order)
}

/// One orbit of the group action on spanning trees.
#[derive(Clone, Debug)]
pub struct OrbitRow {
    /// The member with the smallest mask, used as the orbit's name.
    pub representative: EdgeSet,
    /// All members, in ascending mask order.
    pub members: Vec<EdgeSet>,
}

/// Per-class fixed-tree counts. Within one class every element fixes the
/// same number of trees, so a single number per class tells the whole story.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassFixRow {
    pub class: IsometryClass,
    /// How many group elements are in the class.
    pub elements: usize,
    /// How many trees each element of the class fixes.
    pub fixed_per_element: u64,
}

/// The complete result of letting a symmetry group act on a tree list:
/// the orbit partition plus the Burnside bookkeeping that predicts the
/// orbit count independently.
#[derive(Clone, Debug)]
pub struct OrbitReport {
    /// Orbits sorted by representative mask; together the members partition
    /// the input list.
    pub orbits: Vec<OrbitRow>,
    /// Fixed-tree counts per class, in [`IsometryClass::ALL`] order.
    pub fixed_table: Vec<ClassFixRow>,
    /// Sum of fixed-tree counts over every group element.
    pub burnside_sum: u64,
    /// `burnside_sum / |group|`, the orbit count predicted by Burnside's
    /// lemma. Always equals `orbits.len()`.
    pub burnside_orbit_count: u64,
}

impl OrbitReport {
    /// Orbit sizes, aligned with `orbits`.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.members.len()).collect()
    }

    /// The Burnside sum recomputed from the per-class table
    /// (`sum of elements x fixed_per_element`); a cross-check on the
    /// element-by-element sum.
    pub fn class_weighted_sum(&self) -> u64 {
        self.fixed_table
            .iter()
            .map(|row| row.elements as u64 * row.fixed_per_element)
            .sum()
    }
}

/// Partitions `trees` into orbits under `group` and assembles the Burnside
/// bookkeeping.
///
/// # Panics
/// Panics if `group` does not actually act on `trees` (some image falls
/// outside the list), if fixed counts are not constant on classes, or if the
/// Burnside sum is not divisible by the group order. All of these indicate
/// corrupted inputs rather than recoverable conditions.
pub fn compute_orbits(group: &SymmetryGroup, trees: &[EdgeSet]) -> OrbitReport {
    let known: HashSet<EdgeSet> = trees.iter().copied().collect();

    // Orbit partition. Scanning trees in ascending mask order makes the
    // first unassigned member of each orbit its smallest, hence the
    // representative, and leaves the orbit list sorted by representative.
    let mut sorted = trees.to_vec();
    sorted.sort();
    let mut assigned: HashSet<EdgeSet> = HashSet::new();
    let mut orbits = Vec::new();
    for &tree in &sorted {
        if assigned.contains(&tree) {
            continue;
        }
        let mut members = BTreeSet::new();
        for iso in group.elements() {
            let image = iso.map_edge_set(tree);
            assert!(
                known.contains(&image),
                "the group does not act on the given tree list"
            );
            members.insert(image);
        }
        for m in &members {
            assigned.insert(*m);
        }
        orbits.push(OrbitRow {
            representative: tree,
            members: members.into_iter().collect(),
        });
    }

    // Per-element fixed counts, folded into one row per class.
    let mut burnside_sum = 0u64;
    let mut per_class: Vec<Vec<u64>> = vec![Vec::new(); IsometryClass::ALL.len()];
    for iso in group.elements() {
        let fixed = fixed_trees(iso, trees).len() as u64;
        burnside_sum += fixed;
        let class_pos = IsometryClass::ALL
            .iter()
            .position(|&c| c == iso.class())
            .expect("every isometry has a class");
        per_class[class_pos].push(fixed);
    }
    let fixed_table: Vec<ClassFixRow> = IsometryClass::ALL
        .iter()
        .zip(&per_class)
        .filter(|(_, counts)| !counts.is_empty())
        .map(|(&class, counts)| {
            assert!(
                counts.iter().all(|&c| c == counts[0]),
                "fixed-tree counts must be constant on the class {class}"
            );
            ClassFixRow {
                class,
                elements: counts.len(),
                fixed_per_element: counts[0],
            }
        })
        .collect();

    let order = group.len() as u64;
    assert!(
        burnside_sum.is_multiple_of(order),
        "Burnside sum {burnside_sum} is not divisible by the group order {order}"
    );
    OrbitReport {
        orbits,
        fixed_table,
        burnside_sum,
        burnside_orbit_count: burnside_sum / order,
    }
}

/// Constructively enumerates the spanning trees fixed by an involution, by
/// growing them outward from a single invariant seed edge.
///
/// Only two classes admit fixed trees at all: half turns about an edge axis
/// ([`IsometryClass::Rot2_180`]) and reflections parallel to two faces
/// ([`IsometryClass::Ref2`]). For those, every fixed tree contains exactly
/// one invariant edge, so growth starts from that edge and repeatedly adds a
/// mirror pair `{e, iso(e)}` sprouting from a vertex the partial tree
/// already covers. Additions that would close a circuit or bring in a second
/// invariant edge are rejected; whatever reaches seven edges and passes the
/// spanning-tree check is collected.
///
/// The result is in ascending mask order. Taking the union over all
/// invariant seed edges of `iso` reproduces exactly the trees that
/// [`fixed_trees`] finds by filtering.
pub fn grow_invariant_trees(iso: &Isometry, seed: Edge) -> Result<Vec<EdgeSet>, Error> {
    match iso.class() {
        IsometryClass::Rot2_180 | IsometryClass::Ref2 => {}
        other => return Err(Error::NotGrowable(other.to_string())),
    }
    let seed_index = cube_edge_index(seed).ok_or_else(|| Error::UnknownEdge(seed.to_string()))?;
    if iso.edge_image_index(seed_index) != seed_index {
        return Err(Error::SeedNotInvariant(seed.to_string()));
    }

    let graph = cube_graph();
    // Vertex cover of a partial tree, as an 8-bit mask.
    let covered = |s: EdgeSet| -> u16 {
        let mut mask = 0u16;
        for i in s.indices() {
            let e = graph.edge(i);
            mask |= 1 << e.small().index();
            mask |= 1 << e.large().index();
        }
        mask
    };
    let start = EdgeSet::from_indices([seed_index]);
    let mut found: BTreeSet<EdgeSet> = BTreeSet::new();
    let mut visited: HashSet<EdgeSet> = HashSet::new();
    visited.insert(start);
    let mut stack = vec![start];
    while let Some(state) = stack.pop() {
        if state.len() == 7 {
            if graph.is_spanning_tree(state) && iso.map_edge_set(state) == state {
                found.insert(state);
            }
            continue;
        }
        let cover = covered(state);
        for e_index in 0..12 {
            if state.contains(e_index) {
                continue;
            }
            let mirror = iso.edge_image_index(e_index);
            if mirror == e_index {
                // A second invariant edge can never be part of a fixed tree.
                continue;
            }
            let e = graph.edge(e_index);
            let touches_tree =
                cover & (1 << e.small().index()) != 0 || cover & (1 << e.large().index()) != 0;
            if !touches_tree {
                continue;
            }
            let candidate = state.with(e_index).with(mirror);
            debug_assert_eq!(candidate.len(), state.len() + 2);
            if contains_circuit(&graph, candidate) {
                continue;
            }
            if visited.insert(candidate) {
                stack.push(candidate);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Union-find acyclicity check for arbitrary-size edge sets.
fn contains_circuit(graph: &crate::graph::Graph, s: EdgeSet) -> bool {
    let mut parent: Vec<usize> = (0..graph.vertex_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in s.indices() {
        let e = graph.edge(i);
        let (ra, rb) = (
            find(&mut parent, e.small().index()),
            find(&mut parent, e.large().index()),
        );
        if ra == rb {
            return true;
        }
        parent[ra] = rb;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cube_graph;

    fn iso(s: &str) -> Isometry {
        s.parse().expect("test permutation should be an isometry")
    }

    #[test]
    fn generators_print_as_expected() {
        assert_eq!(Isometry::face_quarter_turn().to_string(), "(1234)(5678)");
        assert_eq!(Isometry::diagonal_third_turn().to_string(), "(136)(475)");
        assert_eq!(
            Isometry::central_inversion().to_string(),
            "(17)(28)(35)(46)"
        );
        assert_eq!(Isometry::identity().to_string(), "()");
    }

    #[test]
    fn full_group_has_48_elements_and_rotations_24() {
        let full = SymmetryGroup::full().unwrap();
        assert_eq!(full.len(), 48);
        let rot = SymmetryGroup::rotations();
        assert_eq!(rot.len(), 24);
        for r in rot.elements() {
            assert!(full.contains(r));
        }
        // Identity sits first and closure order is reproducible.
        assert!(full.elements()[0].is_identity());
        let again = SymmetryGroup::full().unwrap();
        assert_eq!(full.elements(), again.elements());
    }

    #[test]
    fn center_is_identity_and_inversion() {
        let full = SymmetryGroup::full().unwrap();
        let center = full.center();
        assert_eq!(center.len(), 2);
        assert!(center.contains(&Isometry::identity()));
        assert!(center.contains(&Isometry::central_inversion()));
    }

    #[test]
    fn composition_applies_left_factor_first() {
        let product = Isometry::face_quarter_turn().then(&Isometry::central_inversion());
        assert_eq!(product, iso("(1836)(2547)"));
        // Spot-check one vertex: 1 -> 2 under the quarter turn, 2 -> 8 under
        // the inversion.
        assert_eq!(product.vertex_image(VertexId::new(1)), VertexId::new(8));
    }

    #[test]
    fn inverses_and_identity() {
        let full = SymmetryGroup::full().unwrap();
        for g in full.elements() {
            assert!(g.then(&g.inverse()).is_identity());
            assert!(g.inverse().then(g).is_identity());
        }
    }

    #[test]
    fn composition_is_associative_on_images() {
        // For every pair, composing edge images agrees with then(): acting by
        // a product is acting by the factors in order.
        let full = SymmetryGroup::full().unwrap();
        for a in full.elements() {
            for b in full.elements() {
                let ab = a.then(b);
                for i in 0..12 {
                    assert_eq!(
                        ab.edge_image_index(i),
                        b.edge_image_index(a.edge_image_index(i))
                    );
                }
                for v in 1..=8 {
                    let v = VertexId::new(v);
                    assert_eq!(ab.vertex_image(v), b.vertex_image(a.vertex_image(v)));
                }
            }
        }
    }

    #[test]
    fn classification_of_known_elements() {
        let cases = [
            ("()", IsometryClass::Identity),
            ("(1234)(5678)", IsometryClass::Rot1_90),
            ("(13)(24)(57)(68)", IsometryClass::Rot1_180),
            ("(12)(35)(46)(78)", IsometryClass::Rot2_180),
            ("(136)(475)", IsometryClass::Rot3_120),
            ("(17)(28)(35)(46)", IsometryClass::Antipodal),
            ("(18)(27)", IsometryClass::Ref1),
            ("(15)(26)(37)(48)", IsometryClass::Ref2),
            ("(1836)(2547)", IsometryClass::RotoRef90),
            ("(156734)(28)", IsometryClass::RotoRef60),
        ];
        for (cycles, expected) in cases {
            assert_eq!(iso(cycles).class(), expected, "{cycles}");
        }
    }

    #[test]
    fn class_census_of_the_full_group() {
        let full = SymmetryGroup::full().unwrap();
        let census = full.class_census();
        let sizes: Vec<usize> = census.iter().map(|&(_, n)| n).collect();
        assert_eq!(sizes, vec![1, 6, 3, 6, 8, 1, 6, 3, 6, 8]);
        assert_eq!(sizes.iter().sum::<usize>(), 48);
    }

    #[test]
    fn element_orders_match_their_classes() {
        let expected = |class: IsometryClass| match class {
            IsometryClass::Identity => 1,
            IsometryClass::Rot1_90 => 4,
            IsometryClass::Rot1_180 => 2,
            IsometryClass::Rot2_180 => 2,
            IsometryClass::Rot3_120 => 3,
            IsometryClass::Antipodal => 2,
            IsometryClass::Ref1 => 2,
            IsometryClass::Ref2 => 2,
            IsometryClass::RotoRef90 => 4,
            IsometryClass::RotoRef60 => 6,
        };
        let full = SymmetryGroup::full().unwrap();
        for g in full.elements() {
            let order = g.order();
            assert_eq!(order, expected(g.class()), "{g}");
            assert!([1, 2, 3, 4, 6].contains(&order));
            if order % 3 == 0 {
                assert!(matches!(
                    g.class(),
                    IsometryClass::Rot3_120 | IsometryClass::RotoRef60
                ));
            }
        }
    }

    #[test]
    fn invariant_edges_of_known_elements() {
        let g = cube_graph();
        let show = |s: EdgeSet| g.edge_set_string(s);
        assert_eq!(
            show(Isometry::identity().invariant_edges()),
            "1-2,1-4,1-5,2-3,2-6,3-4,3-7,4-8,5-6,5-8,6-7,7-8"
        );
        // Half turn about the 1-2 edge axis: that edge and its antipode.
        assert_eq!(show(iso("(12)(35)(46)(78)").invariant_edges()), "1-2,7-8");
        // Reflection across the horizontal midplane: the four vertical edges.
        assert_eq!(
            show(iso("(15)(26)(37)(48)").invariant_edges()),
            "1-5,2-6,3-7,4-8"
        );
        // Edge-plane reflection: the two edges lying in the mirror plane.
        assert_eq!(show(iso("(18)(27)").invariant_edges()), "3-4,5-6");
        // Only three classes have invariant edges at all.
        for g48 in SymmetryGroup::full().unwrap().elements() {
            let nonempty = !g48.invariant_edges().is_empty();
            let expected = matches!(
                g48.class(),
                IsometryClass::Identity
                    | IsometryClass::Rot2_180
                    | IsometryClass::Ref1
                    | IsometryClass::Ref2
            );
            assert_eq!(nonempty, expected, "{g48}");
        }
    }

    #[test]
    fn action_maps_trees_to_trees() {
        let g = cube_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        let full = SymmetryGroup::full().unwrap();
        let tree = g.parse_edge_set("1-5,2-6,3-7,4-8,5-6,6-7,7-8").unwrap();
        assert_eq!(Isometry::identity().map_edge_set(tree), tree);
        // The inversion swaps the 1-2 edge with its antipode 7-8.
        let single = g.parse_edge_set("1-2").unwrap();
        assert_eq!(
            Isometry::central_inversion().map_edge_set(single),
            g.parse_edge_set("7-8").unwrap()
        );
        for isometry in full.elements() {
            for t in &trees {
                assert!(g.is_spanning_tree(isometry.map_edge_set(*t)));
            }
        }
    }

    #[test]
    fn fixed_tree_counts_for_known_elements() {
        let g = cube_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        assert_eq!(fixed_trees(&Isometry::identity(), &trees).len(), 384);
        assert_eq!(fixed_trees(&iso("(12)(35)(46)(78)"), &trees).len(), 16);
        assert_eq!(fixed_trees(&iso("(15)(26)(37)(48)"), &trees).len(), 16);
        // Edge-plane reflections fix no tree at all.
        assert_eq!(fixed_trees(&iso("(18)(27)"), &trees).len(), 0);
    }

    #[test]
    fn edge_stabilizers_have_four_elements() {
        let full = SymmetryGroup::full().unwrap();
        let g = cube_graph();
        for e in g.edges() {
            assert_eq!(edge_stabilizer(&full, *e).unwrap().len(), 4);
        }
        // The stabilizer of 1-2 spelled out: identity, the half turn about
        // the 1-2 axis, and two reflections.
        let stab = edge_stabilizer(&full, Edge::from_labels(1, 2)).unwrap();
        let mut names: Vec<String> = stab.iter().map(|i| i.to_string()).collect();
        names.sort();
        assert_eq!(
            names,
            vec!["()", "(12)(34)(56)(78)", "(12)(35)(46)(78)", "(36)(45)"]
        );
        assert!(matches!(
            edge_stabilizer(&full, Edge::from_labels(1, 7)),
            Err(Error::UnknownEdge(_))
        ));
    }

    #[test]
    fn burnside_count_is_eleven() {
        let g = cube_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        let full = SymmetryGroup::full().unwrap();
        assert_eq!(burnside_orbit_count(&full, &trees).unwrap(), 11);
    }

    #[test]
    fn orbit_report_partitions_the_trees() {
        let g = cube_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        let full = SymmetryGroup::full().unwrap();
        let report = compute_orbits(&full, &trees);
        assert_eq!(report.orbits.len(), 11);
        assert_eq!(report.burnside_orbit_count, 11);
        assert_eq!(report.burnside_sum, 528);
        assert_eq!(report.class_weighted_sum(), 528);

        let mut sizes = report.orbit_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![24, 24, 24, 24, 24, 24, 48, 48, 48, 48, 48]);
        assert_eq!(sizes.iter().sum::<usize>(), 384);
        for size in sizes {
            assert_eq!(48 % size, 0, "orbit sizes divide the group order");
        }

        // Orbits partition: disjoint and exhaustive.
        let mut seen = HashSet::new();
        for orbit in &report.orbits {
            assert_eq!(orbit.representative, orbit.members[0]);
            for m in &orbit.members {
                assert!(seen.insert(*m), "orbits must not overlap");
            }
        }
        assert_eq!(seen.len(), 384);
    }

    #[test]
    fn orbit_fixed_table_matches_known_counts() {
        let g = cube_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        let full = SymmetryGroup::full().unwrap();
        let report = compute_orbits(&full, &trees);
        for row in &report.fixed_table {
            let expected = match row.class {
                IsometryClass::Identity => 384,
                IsometryClass::Rot2_180 | IsometryClass::Ref2 => 16,
                _ => 0,
            };
            assert_eq!(row.fixed_per_element, expected, "{}", row.class);
        }
    }

    #[test]
    fn growth_reproduces_fixed_trees_of_a_reflection() {
        let reflection = iso("(15)(26)(37)(48)");
        let g = cube_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        let by_filter: BTreeSet<EdgeSet> = fixed_trees(&reflection, &trees).into_iter().collect();
        let mut by_growth: BTreeSet<EdgeSet> = BTreeSet::new();
        for seed_index in reflection.invariant_edges().indices() {
            let seed = g.edge(seed_index);
            let grown = grow_invariant_trees(&reflection, seed).unwrap();
            assert_eq!(grown.len(), 4, "seed {seed}");
            for t in &grown {
                assert!(g.is_spanning_tree(*t));
                assert!(t.contains(seed_index));
                assert_eq!(reflection.map_edge_set(*t), *t);
                assert_eq!((*t & reflection.invariant_edges()).len(), 1);
            }
            by_growth.extend(grown);
        }
        assert_eq!(by_growth.len(), 16);
        assert_eq!(by_growth, by_filter);
    }

    #[test]
    fn growth_reproduces_fixed_trees_of_a_half_turn() {
        let half_turn = iso("(12)(35)(46)(78)");
        let g = cube_graph();
        let trees = g.enumerate_spanning_trees().unwrap();
        let by_filter: BTreeSet<EdgeSet> = fixed_trees(&half_turn, &trees).into_iter().collect();
        let mut by_growth: BTreeSet<EdgeSet> = BTreeSet::new();
        for seed_index in half_turn.invariant_edges().indices() {
            let seed = g.edge(seed_index);
            let grown = grow_invariant_trees(&half_turn, seed).unwrap();
            assert_eq!(grown.len(), 8, "seed {seed}");
            by_growth.extend(grown);
        }
        assert_eq!(by_growth.len(), 16);
        assert_eq!(by_growth, by_filter);
    }

    #[test]
    fn growth_rejects_bad_inputs() {
        assert!(matches!(
            grow_invariant_trees(&Isometry::identity(), Edge::from_labels(1, 2)),
            Err(Error::NotGrowable(_))
        ));
        assert!(matches!(
            grow_invariant_trees(&iso("(1234)(5678)"), Edge::from_labels(1, 2)),
            Err(Error::NotGrowable(_))
        ));
        // Right class, but the seed moves under the isometry.
        assert!(matches!(
            grow_invariant_trees(&iso("(12)(35)(46)(78)"), Edge::from_labels(1, 4)),
            Err(Error::SeedNotInvariant(_))
        ));
        assert!(matches!(
            grow_invariant_trees(&iso("(12)(35)(46)(78)"), Edge::from_labels(1, 7)),
            Err(Error::UnknownEdge(_))
        ));
    }

    #[test]
    fn cycle_notation_round_trips() {
        let full = SymmetryGroup::full().unwrap();
        for g in full.elements() {
            let text = g.to_string();
            let parsed: Isometry = text.parse().unwrap();
            assert_eq!(&parsed, g, "{text}");
        }
    }

    #[test]
    fn cycle_notation_rejects_malformed_input() {
        for bad in ["", "(12", "12)", "(19)", "(0)", "(1a)", "(12)(21)", "1234"] {
            assert!(
                matches!(bad.parse::<Isometry>(), Err(Error::ParseCycles(_))),
                "{bad:?}"
            );
        }
        // Well-formed cycles that are not isometries are caught separately.
        assert!(matches!(
            "(12)".parse::<Isometry>(),
            Err(Error::NotAnIsometry(_))
        ));
        assert!(matches!(
            Isometry::from_vertex_images([1, 1, 3, 4, 5, 6, 7, 8]),
            Err(Error::NotAnIsometry(_))
        ));
    }
}
