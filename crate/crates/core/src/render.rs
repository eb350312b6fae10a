//! Plain-text and SVG pictures of shapes and nets.
//!
//! ASCII output draws one `#` per occupied cell on the minimal bounding
//! grid, rows listed top (largest y) to bottom. SVG output draws one 32 px
//! square per cell; net renderings additionally overlay a marker line on
//! every hinge side, tagged with the hinge's cube edge.

use crate::unfold::{hinge_joints, CanonicalShape, Net};

/// Side length of one cell in SVG output, in pixels.
const CELL_PX: i32 = 32;

/// ASCII picture of a set of cells: `#` for occupied, space for empty, rows
/// in descending y order, trailing spaces trimmed.
pub fn cells_ascii(cells: &[(i32, i32)]) -> String {
    if cells.is_empty() {
        return String::new();
    }
    let min_x = cells.iter().map(|c| c.0).min().unwrap();
    let max_x = cells.iter().map(|c| c.0).max().unwrap();
    let min_y = cells.iter().map(|c| c.1).min().unwrap();
    let max_y = cells.iter().map(|c| c.1).max().unwrap();
    let mut rows = Vec::new();
    for y in (min_y..=max_y).rev() {
        let mut row = String::new();
        for x in min_x..=max_x {
            row.push(if cells.contains(&(x, y)) { '#' } else { ' ' });
        }
        rows.push(row.trim_end().to_string());
    }
    rows.join("\n")
}

/// ASCII picture of a canonical shape.
pub fn shape_ascii(shape: &CanonicalShape) -> String {
    cells_ascii(&shape.cells())
}

/// Lattice-to-SVG conversion: x grows right, y grows up in the plane, so
/// the SVG y axis (growing down) flips around the top of the bounding box.
fn svg_point(p: (i32, i32), min_x: i32, max_y: i32) -> (i32, i32) {
    ((p.0 - min_x) * CELL_PX, (max_y + 1 - p.1) * CELL_PX)
}

fn svg_open(width: i32, height: i32) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    )
}

fn svg_cells(out: &mut String, cells: &[(i32, i32)], min_x: i32, max_y: i32) {
    for &cell in cells {
        // The rect's top-left corner is the cell's top-left lattice point.
        let (px, py) = svg_point((cell.0, cell.1 + 1), min_x, max_y);
        out.push_str(&format!(
            "<rect x=\"{px}\" y=\"{py}\" width=\"{CELL_PX}\" height=\"{CELL_PX}\" \
             fill=\"#dfe7f2\" stroke=\"#34495e\" stroke-width=\"1\"/>\n"
        ));
    }
}

/// SVG document for a canonical shape: one square per cell.
pub fn shape_svg(shape: &CanonicalShape) -> String {
    let cells = shape.cells();
    let min_x = cells.iter().map(|c| c.0).min().unwrap();
    let max_x = cells.iter().map(|c| c.0).max().unwrap();
    let min_y = cells.iter().map(|c| c.1).min().unwrap();
    let max_y = cells.iter().map(|c| c.1).max().unwrap();
    let mut out = svg_open((max_x - min_x + 1) * CELL_PX, (max_y - min_y + 1) * CELL_PX);
    svg_cells(&mut out, &cells, min_x, max_y);
    out.push_str("</svg>\n");
    out
}

/// SVG document for a net: one square per face, labelled by face name, with
/// a marker line on every hinge side tagged `data-edge="u-v"`.
pub fn net_svg(net: &Net) -> String {
    let cells = net.cells();
    let min_x = cells.iter().map(|c| c.0).min().unwrap();
    let max_x = cells.iter().map(|c| c.0).max().unwrap();
    let min_y = cells.iter().map(|c| c.1).min().unwrap();
    let max_y = cells.iter().map(|c| c.1).max().unwrap();
    let mut out = svg_open((max_x - min_x + 1) * CELL_PX, (max_y - min_y + 1) * CELL_PX);
    svg_cells(&mut out, &cells, min_x, max_y);
    for placement in net.placements() {
        let (cx, cy) = placement.cell;
        let (px, py) = svg_point((cx, cy), min_x, max_y);
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"8\" font-family=\"sans-serif\" \
             text-anchor=\"middle\" fill=\"#34495e\">{}</text>\n",
            px + CELL_PX / 2,
            py - CELL_PX / 2 + 3,
            placement.face
        ));
    }
    for joint in hinge_joints(net) {
        let (x1, y1) = svg_point(joint.side.0, min_x, max_y);
        let (x2, y2) = svg_point(joint.side.1, min_x, max_y);
        out.push_str(&format!(
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#c0392b\" \
             stroke-width=\"3\" stroke-linecap=\"round\" data-edge=\"{}\"/>\n",
            joint.edge
        ));
    }
    out.push_str("</svg>\n");
    out
}
