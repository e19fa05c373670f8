//! SVG rendering of a curve: a polyline through the cell centres in a unit
//! view box, with a circle on the entry cell and an arrowhead at the exit.

use std::fmt::Write;

use hhc::geom::CellSequence;
use hhc::DyadicScalar;

pub const MAX_ORDER: u32 = 9;

/// Renders `seq` with the origin at the bottom-left corner.
pub fn render(seq: &CellSequence) -> String {
    let k = seq.order;
    let stroke = DyadicScalar::new(1, k + 1);
    let coord = |c: &hhc::geom::Cell| {
        let p = c.center();
        (
            p.x.to_decimal_string(),
            (DyadicScalar::ONE - p.y).to_decimal_string(),
        )
    };

    let mut points = String::new();
    for (i, cell) in seq.cells.iter().enumerate() {
        let (x, y) = coord(cell);
        if i > 0 {
            points.push(' ');
        }
        let _ = write!(points, "{x},{y}");
    }
    let (cx, cy) = coord(seq.first());
    let sw = stroke.to_decimal_string();
    let half = stroke.halve().to_decimal_string();

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" width=\"512\" height=\"512\">"
    );
    let _ = writeln!(out, "<title>{} order {}</title>", seq.curve.name(), k);
    out.push_str(
        "<defs><marker id=\"exit\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" \
         markerWidth=\"3\" markerHeight=\"3\" orient=\"auto\">\
         <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/></marker></defs>\n",
    );
    let _ = writeln!(
        out,
        "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"{sw}\" \
         stroke-linejoin=\"round\" marker-end=\"url(#exit)\" points=\"{points}\"/>"
    );
    let _ = writeln!(
        out,
        "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{sw}\" fill=\"white\" stroke=\"black\" stroke-width=\"{half}\"/>"
    );
    out.push_str("</svg>\n");
    out
}
