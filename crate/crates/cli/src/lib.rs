//! The self-check suite behind `unfoldium verify`.
//!
//! Every headline number the library produces is recomputed here and held
//! against the value it must have: the spanning-tree count through both the
//! determinant and brute-force enumeration, the symmetry group's structure,
//! the per-class fixed-tree table, the Burnside bookkeeping, the net
//! layouts, and the final shape census. Each check carries an expected and
//! an actual summary string and passes exactly when the two are equal, so a
//! report cannot hide a partial failure inside a boolean.
//!
//! The `verify` subcommand and the integration tests both render reports
//! from [`build_report`], which keeps their verdicts identical by
//! construction.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};
use unfoldium_core::graph::{cube_graph, EdgeSet, Graph};
use unfoldium_core::symmetry::{
    compute_orbits, edge_stabilizer, fixed_trees, grow_invariant_trees, Isometry, IsometryClass,
    OrbitReport, SymmetryGroup,
};
use unfoldium_core::unfold::{
    canonical_form, cells_edge_connected, classify_shapes, fold_back, layout,
};

/// One verified claim: a stable identifier, a sentence saying what is being
/// recomputed, and the two summary strings whose equality is the verdict.
#[derive(Clone, Debug)]
pub struct Check {
    /// Stable kebab-case name, safe to grep for in scripts.
    pub id: &'static str,
    /// What the check recomputes, for human readers of the report.
    pub description: &'static str,
    /// The summary the computation must produce.
    pub expected: String,
    /// The summary the computation did produce.
    pub actual: String,
    /// Whether `expected == actual`.
    pub pass: bool,
}

/// The complete run of checks, in a fixed order.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// All checks, in the order they ran.
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// How many checks passed.
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    /// How many checks ran.
    pub fn total(&self) -> usize {
        self.checks.len()
    }

    /// Whether every check passed.
    pub fn all_pass(&self) -> bool {
        self.passed() == self.total()
    }

    /// The report as `"passed/total"`, e.g. `"12/12"`.
    pub fn summary(&self) -> String {
        format!("{}/{}", self.passed(), self.total())
    }

    /// The report as a JSON document. Every number is an exact integer;
    /// the layout is pinned by the top-level `"schema"` field.
    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "checks": self.checks.iter().map(|c| json!({
                "id": c.id,
                "description": c.description,
                "expected": c.expected,
                "actual": c.actual,
                "pass": c.pass,
            })).collect::<Vec<_>>(),
            "passed": self.passed(),
            "total": self.total(),
        })
    }
}

/// Switches for [`build_report`].
#[derive(Clone, Copy, Default, Debug)]
pub struct VerifyOptions {
    /// Replace the quarter-turn generator with its square before taking the
    /// closure in the group-structure check, so the generated group comes
    /// out too small and that check must fail. Everything else still runs
    /// against the true group. Exists so the failure path of `verify` can
    /// be exercised end to end.
    pub inject_bad_generator: bool,
}

/// Runs every check and assembles the report. The full run enumerates 792
/// edge subsets, walks a 48-element group, and lays out 384 nets a few
/// times over; it finishes in well under a second.
pub fn build_report(options: VerifyOptions) -> VerificationReport {
    let cube = cube_graph();
    let trees = cube
        .enumerate_spanning_trees()
        .expect("the cube's 12 edges fit the edge-set capacity");
    let group = SymmetryGroup::full().expect("the standard generators close at 48 elements");
    let orbits = compute_orbits(&group, &trees);

    let mut checks = Vec::new();
    push(
        &mut checks,
        "tree-count",
        "spanning trees of the cube counted by determinant, by per-vertex minors, and by exhaustive enumeration",
        check_tree_count(&cube, &trees),
    );
    push(
        &mut checks,
        "group-structure",
        "closure of the three generators: group order, rotation subgroup, center, and a fixed composite",
        check_group_structure(options.inject_bad_generator),
    );
    push(
        &mut checks,
        "class-census",
        "census of the ten isometry classes across the 48 elements",
        check_class_census(&group),
    );
    push(
        &mut checks,
        "element-orders",
        "element orders stay within {1,2,3,4,6}, with multiples of three exactly {3,6}",
        check_element_orders(&group),
    );
    push(
        &mut checks,
        "edge-stabilizers",
        "every edge has a four-element stabilizer and a full twelve-edge orbit",
        check_edge_stabilizers(&cube, &group),
    );
    push(
        &mut checks,
        "fixed-tree-table",
        "fixed trees per class: 384 for the identity, 16 for edge half-turns and cross-plane reflections, 0 elsewhere",
        check_fixed_tree_table(&orbits),
    );
    push(
        &mut checks,
        "burnside-orbits",
        "the fixed-point sum 528 over 48 elements predicts the 11 orbits the partition delivers",
        check_burnside_orbits(&orbits),
    );
    push(
        &mut checks,
        "forced-invariant-edge",
        "every tree fixed by a non-identity isometry contains exactly one invariant edge",
        check_forced_invariant_edge(&group, &trees),
    );
    push(
        &mut checks,
        "grown-trees",
        "seed-grown invariant trees match the brute-force fixed sets for every growable isometry",
        check_grown_trees(&cube, &group, &trees),
    );
    push(
        &mut checks,
        "net-layout",
        "all 384 cut trees unfold to connected, overlap-free nets that fold back to their cut",
        check_net_layout(&trees),
    );
    push(
        &mut checks,
        "shape-census",
        "the 384 nets fall into 11 congruence classes aligned with the 11 orbits",
        check_shape_census(&trees, &orbits),
    );
    push(
        &mut checks,
        "rejection-paths",
        "malformed cut sets and a corrupted generator are rejected with the right diagnostics",
        check_rejection_paths(&cube),
    );
    VerificationReport { checks }
}

fn push(
    checks: &mut Vec<Check>,
    id: &'static str,
    description: &'static str,
    (expected, actual): (String, String),
) {
    let pass = expected == actual;
    checks.push(Check {
        id,
        description,
        expected,
        actual,
        pass,
    });
}

/// `"8x384"` when all eight counts are 384, otherwise the raw comma list,
/// so a failing check shows the actual spread.
fn uniform(counts: &[u64]) -> String {
    match counts.split_first() {
        None => String::new(),
        Some((&first, rest)) if rest.iter().all(|&c| c == first) => {
            format!("{}x{first}", counts.len())
        }
        _ => {
            let parts: Vec<String> = counts.iter().map(u64::to_string).collect();
            parts.join(",")
        }
    }
}

/// Multiset summary in ascending value order, `multiplicity x value` terms
/// joined by `+`: six orbits of size 24 and five of 48 print as
/// `"6x24+5x48"`.
fn histogram(values: &[u64]) -> String {
    let mut tally: BTreeMap<u64, usize> = BTreeMap::new();
    for &v in values {
        *tally.entry(v).or_default() += 1;
    }
    let parts: Vec<String> = tally
        .iter()
        .map(|(value, multiplicity)| format!("{multiplicity}x{value}"))
        .collect();
    parts.join("+")
}

fn check_tree_count(cube: &Graph, trees: &[EdgeSet]) -> (String, String) {
    let determinant = cube.matrix_tree_count();
    let per_vertex: Vec<u64> = (1..=8u8)
        .map(|v| cube.matrix_tree_count_deleting(unfoldium_core::graph::VertexId::new(v)))
        .collect();
    let expected = "determinant=384 per_vertex=8x384 enumerated=384".to_string();
    let actual = format!(
        "determinant={determinant} per_vertex={} enumerated={}",
        uniform(&per_vertex),
        trees.len()
    );
    (expected, actual)
}

fn check_group_structure(inject_bad_generator: bool) -> (String, String) {
    let quarter = Isometry::face_quarter_turn();
    let diagonal = Isometry::diagonal_third_turn();
    let inversion = Isometry::central_inversion();
    let generators = if inject_bad_generator {
        vec![quarter.then(&quarter), diagonal, inversion]
    } else {
        vec![quarter, diagonal, inversion]
    };
    let group = SymmetryGroup::closure(&generators);
    let rotations = SymmetryGroup::rotations();
    let center: Vec<String> = group.center().iter().map(Isometry::to_string).collect();
    let composite = quarter.then(&inversion);
    let expected = "order=48 rotations=24 center=(),(17)(28)(35)(46) \
                    quarter_then_inversion=(1836)(2547)"
        .to_string();
    let actual = format!(
        "order={} rotations={} center={} quarter_then_inversion={composite}",
        group.len(),
        rotations.len(),
        center.join(",")
    );
    (expected, actual)
}

fn check_class_census(group: &SymmetryGroup) -> (String, String) {
    let census = group.class_census();
    let counts: Vec<String> = census.iter().map(|&(_, n)| n.to_string()).collect();
    let count_of = |class: IsometryClass| {
        census
            .iter()
            .find(|&&(c, _)| c == class)
            .map_or(0, |&(_, n)| n)
    };
    let expected =
        "census=1,6,3,6,8,1,6,3,6,8 edge_half_turns=6 cross_plane_reflections=3".to_string();
    let actual = format!(
        "census={} edge_half_turns={} cross_plane_reflections={}",
        counts.join(","),
        count_of(IsometryClass::Rot2_180),
        count_of(IsometryClass::Ref2)
    );
    (expected, actual)
}

fn check_element_orders(group: &SymmetryGroup) -> (String, String) {
    let orders: BTreeSet<usize> = group.elements().iter().map(Isometry::order).collect();
    let multiples_of_three: BTreeSet<usize> =
        orders.iter().copied().filter(|o| o % 3 == 0).collect();
    let render = |set: &BTreeSet<usize>| {
        let parts: Vec<String> = set.iter().map(usize::to_string).collect();
        format!("{{{}}}", parts.join(","))
    };
    let expected = "orders={1,2,3,4,6} multiples_of_three={3,6}".to_string();
    let actual = format!(
        "orders={} multiples_of_three={}",
        render(&orders),
        render(&multiples_of_three)
    );
    (expected, actual)
}

fn check_edge_stabilizers(cube: &Graph, group: &SymmetryGroup) -> (String, String) {
    let mut stabilizer_sizes = Vec::new();
    let mut orbit_sizes = Vec::new();
    for &edge in cube.edges() {
        let stabilizer =
            edge_stabilizer(group, edge).expect("cube edges index into the edge permutation");
        stabilizer_sizes.push(stabilizer.len() as u64);
        let orbit: BTreeSet<_> = group
            .elements()
            .iter()
            .map(|g| g.edge_image(edge))
            .collect();
        orbit_sizes.push(orbit.len() as u64);
    }
    let expected = "stabilizers=12x4 orbits=12x12".to_string();
    let actual = format!(
        "stabilizers={} orbits={}",
        uniform(&stabilizer_sizes),
        uniform(&orbit_sizes)
    );
    (expected, actual)
}

fn check_fixed_tree_table(orbits: &OrbitReport) -> (String, String) {
    let required = |class: IsometryClass| match class {
        IsometryClass::Identity => 384,
        IsometryClass::Rot2_180 | IsometryClass::Ref2 => 16,
        _ => 0,
    };
    let render = |value_of: &dyn Fn(usize) -> u64| {
        let parts: Vec<String> = orbits
            .fixed_table
            .iter()
            .enumerate()
            .map(|(i, row)| format!("{}={}", row.class, value_of(i)))
            .collect();
        parts.join(",")
    };
    let expected = render(&|i| required(orbits.fixed_table[i].class));
    let actual = render(&|i| orbits.fixed_table[i].fixed_per_element);
    (expected, actual)
}

fn check_burnside_orbits(orbits: &OrbitReport) -> (String, String) {
    let sizes: Vec<u64> = orbits.orbit_sizes().iter().map(|&s| s as u64).collect();
    let members: u64 = sizes.iter().sum();
    let all_divide = sizes.iter().all(|&s| s > 0 && 48 % s == 0);
    let expected =
        "sum=528 per_class_sum=528 predicted=11 partitioned=11 members=384 sizes=6x24+5x48 \
         sizes_divide_48=true"
            .to_string();
    let actual = format!(
        "sum={} per_class_sum={} predicted={} partitioned={} members={members} sizes={} \
         sizes_divide_48={all_divide}",
        orbits.burnside_sum,
        orbits.class_weighted_sum(),
        orbits.burnside_orbit_count,
        orbits.orbits.len(),
        histogram(&sizes)
    );
    (expected, actual)
}

fn check_forced_invariant_edge(group: &SymmetryGroup, trees: &[EdgeSet]) -> (String, String) {
    let mut pairs = 0u64;
    let mut with_one = 0u64;
    for iso in group.elements().iter().filter(|g| !g.is_identity()) {
        let invariant = iso.invariant_edges();
        for tree in fixed_trees(iso, trees) {
            pairs += 1;
            let shared = tree.indices().filter(|&i| invariant.contains(i)).count();
            if shared == 1 {
                with_one += 1;
            }
        }
    }
    let expected = "fixed_pairs=144 with_exactly_one_invariant_edge=144".to_string();
    let actual = format!("fixed_pairs={pairs} with_exactly_one_invariant_edge={with_one}");
    (expected, actual)
}

fn check_grown_trees(cube: &Graph, group: &SymmetryGroup, trees: &[EdgeSet]) -> (String, String) {
    let mut reflection_runs = Vec::new();
    let mut half_turn_runs = Vec::new();
    let mut elements = 0;
    let mut unions_matching = 0;
    for iso in group.elements() {
        let runs = match iso.class() {
            IsometryClass::Ref2 => &mut reflection_runs,
            IsometryClass::Rot2_180 => &mut half_turn_runs,
            _ => continue,
        };
        elements += 1;
        let mut grown: BTreeSet<EdgeSet> = BTreeSet::new();
        for seed_index in iso.invariant_edges().indices() {
            let batch = grow_invariant_trees(iso, cube.edge(seed_index))
                .expect("growable class with an invariant seed");
            runs.push(batch.len() as u64);
            grown.extend(batch);
        }
        let filtered: BTreeSet<EdgeSet> = fixed_trees(iso, trees).into_iter().collect();
        if grown == filtered {
            unions_matching += 1;
        }
    }
    let expected = "reflection_runs=12x4 half_turn_runs=12x8 unions_matching=9/9".to_string();
    let actual = format!(
        "reflection_runs={} half_turn_runs={} unions_matching={unions_matching}/{elements}",
        uniform(&reflection_runs),
        uniform(&half_turn_runs)
    );
    (expected, actual)
}

fn check_net_layout(trees: &[EdgeSet]) -> (String, String) {
    let mut laid_out = 0u64;
    let mut distinct = 0u64;
    let mut connected = 0u64;
    let mut refolded = 0u64;
    for &tree in trees {
        let Ok(net) = layout(tree) else { continue };
        laid_out += 1;
        let cells = net.cells();
        if cells.iter().collect::<BTreeSet<_>>().len() == cells.len() {
            distinct += 1;
        }
        if cells_edge_connected(&cells) {
            connected += 1;
        }
        if fold_back(&net).is_ok_and(|cut| cut == tree) {
            refolded += 1;
        }
    }
    let expected = "laid_out=384 distinct_cells=384 connected=384 refolded=384".to_string();
    let actual = format!(
        "laid_out={laid_out} distinct_cells={distinct} connected={connected} refolded={refolded}"
    );
    (expected, actual)
}

fn check_shape_census(trees: &[EdgeSet], orbits: &OrbitReport) -> (String, String) {
    let by_shape = classify_shapes(trees).expect("all 384 trees lay out");
    let members: usize = by_shape.values().map(Vec::len).sum();
    let counts: Vec<u64> = by_shape
        .values()
        .map(|bucket| bucket.len() as u64)
        .collect();
    let mut constant_orbits = 0;
    let mut representatives = BTreeSet::new();
    for orbit in &orbits.orbits {
        let shapes: BTreeSet<_> = orbit
            .members
            .iter()
            .map(|&t| canonical_form(&layout(t).expect("orbit members lay out")))
            .collect();
        if shapes.len() == 1 {
            constant_orbits += 1;
        }
        representatives.extend(shapes);
    }
    let expected = "shapes=11 members=384 counts=6x24+5x48 constant_orbits=11/11 \
                    distinct_across_orbits=11"
        .to_string();
    let actual = format!(
        "shapes={} members={members} counts={} constant_orbits={constant_orbits}/{} \
         distinct_across_orbits={}",
        by_shape.len(),
        histogram(&counts),
        orbits.orbits.len(),
        representatives.len()
    );
    (expected, actual)
}

fn check_rejection_paths(cube: &Graph) -> (String, String) {
    let reject = |input: &str| match cube.parse_edge_set(input).and_then(layout) {
        Ok(_) => "accepted".to_string(),
        Err(e) => format!("{e}"),
    };
    let corrupted = {
        let quarter = Isometry::face_quarter_turn();
        let generators = [
            quarter.then(&quarter),
            Isometry::diagonal_third_turn(),
            Isometry::central_inversion(),
        ];
        let order = SymmetryGroup::closure(&generators).len();
        if order == 48 {
            "closure reaches 48".to_string()
        } else {
            format!("closure stops at {order} of 48")
        }
    };
    let expected = "wrong_count=\"not a spanning tree: expected 7 edges, got 1\" \
                    circuit=\"not a spanning tree: contains a circuit\" \
                    corrupted_generator=\"closure stops at 24 of 48\""
        .to_string();
    let actual = format!(
        "wrong_count={:?} circuit={:?} corrupted_generator={:?}",
        reject("1-2"),
        reject("1-2,2-3,3-4,1-4,5-6,6-7,7-8"),
        corrupted
    );
    (expected, actual)
}
