//! Geometric construction of the curves by recursive subdivision, and the
//! property checkers built on it.
//!
//! This is the reference the closed forms in [`crate::map`] are validated
//! against. It only shares the curve tables with that module: sequences
//! are built by mapping whole lower-order sequences on the integer lattice
//! of cell centres, never by evaluating parameters.
//!
//! Quadrant digits have a fixed geometric meaning at every level:
//! 0 = lower-left, 1 = upper-left, 2 = upper-right, 3 = lower-right.

use serde::Serialize;

use crate::curve::{curve_table, Curve};
use crate::dyadic::{DyadicScalar, DyadicVec2};
use crate::error::{HhcError, Result};
use crate::map::reversal_transform;
use crate::quaternary::{QuaternaryFraction, MAX_ORDER};

/// Largest order [`enumerate`] will build (4^14 cells).
pub const MAX_ENUMERATION_ORDER: u32 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub ix: u32,
    pub iy: u32,
    pub depth: u32,
}

/// Geometric label of the sub-square selected by bits `(bx, by)`.
fn quadrant_label(bx: u32, by: u32) -> u8 {
    match (bx, by) {
        (0, 0) => 0,
        (0, 1) => 1,
        (1, 1) => 2,
        _ => 3,
    }
}

fn quadrant_bits(label: u8) -> (u32, u32) {
    match label {
        0 => (0, 0),
        1 => (0, 1),
        2 => (1, 1),
        _ => (1, 0),
    }
}

impl Cell {
    pub fn new(ix: u32, iy: u32, depth: u32) -> Result<Cell> {
        let side = 1u64 << depth;
        if depth > MAX_ORDER || ix as u64 >= side || iy as u64 >= side {
            return Err(HhcError::InvalidCell {
                ix: ix as u64,
                iy: iy as u64,
                side,
            });
        }
        Ok(Cell { ix, iy, depth })
    }

    /// Cell reached by descending through the given quadrant digits.
    pub fn from_address(digits: &[u8]) -> Result<Cell> {
        let mut ix = 0u32;
        let mut iy = 0u32;
        for &d in digits {
            if d > 3 {
                return Err(HhcError::InvalidDigit(char::from(b'0' + d.min(9))));
            }
            let (bx, by) = quadrant_bits(d);
            ix = (ix << 1) | bx;
            iy = (iy << 1) | by;
        }
        Cell::new(ix, iy, digits.len() as u32)
    }

    /// Cell of order `depth` containing `p` in its interior.
    pub fn containing(p: DyadicVec2, depth: u32) -> Result<Cell> {
        let floor = |v: DyadicScalar| {
            let scaled = v.mul_pow2(depth);
            let n = scaled.numerator() >> scaled.exponent();
            u32::try_from(n).ok()
        };
        match (floor(p.x), floor(p.y)) {
            (Some(ix), Some(iy)) => Cell::new(ix, iy, depth),
            _ => Err(HhcError::OutsideQuadrant(p.to_string())),
        }
    }

    pub fn side(&self) -> u64 {
        1u64 << self.depth
    }

    pub fn center(&self) -> DyadicVec2 {
        let e = self.depth + 1;
        DyadicVec2::new(
            DyadicScalar::new(2 * self.ix as i128 + 1, e),
            DyadicScalar::new(2 * self.iy as i128 + 1, e),
        )
    }

    /// Quadrant digits from the top level down.
    pub fn address(&self) -> Vec<u8> {
        (0..self.depth)
            .rev()
            .map(|s| quadrant_label((self.ix >> s) & 1, (self.iy >> s) & 1))
            .collect()
    }

    /// Reflection through the vertical mid-line.
    pub fn mirrored(&self) -> Cell {
        Cell {
            ix: (self.side() - 1) as u32 - self.ix,
            ..*self
        }
    }

    pub fn is_adjacent(&self, other: &Cell) -> bool {
        self.ix.abs_diff(other.ix) + self.iy.abs_diff(other.iy) == 1
    }

    pub fn class(&self) -> EndpointClass {
        let last = (self.side() - 1) as u32;
        let on_x = self.ix == 0 || self.ix == last;
        let on_y = self.iy == 0 || self.iy == last;
        match (on_x, on_y) {
            (true, true) => EndpointClass::Corner,
            (false, false) => EndpointClass::Interior,
            _ => EndpointClass::Edge,
        }
    }
}

pub fn cell_address(cell: &Cell) -> Vec<u8> {
    cell.address()
}

/// The `4^k` cells of an order-`k` curve in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellSequence {
    pub curve: Curve,
    pub order: u32,
    pub cells: Vec<Cell>,
}

impl CellSequence {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn first(&self) -> &Cell {
        &self.cells[0]
    }

    pub fn last(&self) -> &Cell {
        &self.cells[self.cells.len() - 1]
    }

    /// True when every cell of the grid appears exactly once.
    pub fn is_permutation(&self) -> bool {
        let side = 1usize << self.order;
        let mut seen = vec![false; side * side];
        if self.cells.len() != seen.len() {
            return false;
        }
        for c in &self.cells {
            let slot = &mut seen[c.iy as usize * side + c.ix as usize];
            if *slot {
                return false;
            }
            *slot = true;
        }
        true
    }
}

/// Cell centres in units of `2^-(order+1)`.
type Lattice = Vec<(i64, i64)>;

fn map_sequence(curve: Curve, base: &Lattice, exponent: u32) -> Lattice {
    let mut out = Vec::with_capacity(base.len() * 4);
    for map in curve_table(curve).maps {
        let start = out.len();
        out.extend(base.iter().map(|&(x, y)| map.apply_lattice(x, y, exponent)));
        if map.reversed {
            out[start..].reverse();
        }
    }
    out
}

/// Hilbert sequence of the given order; order 0 is the single point Ω.
fn hilbert_lattice(order: u32) -> Lattice {
    let mut seq = vec![(1, 1)];
    for level in 0..order {
        seq = map_sequence(Curve::Hilbert, &seq, level + 1);
    }
    seq
}

fn curve_lattice(curve: Curve, order: u32) -> Lattice {
    if order == 1 {
        return map_sequence(curve, &hilbert_lattice(0), 1);
    }
    if curve.is_proper() {
        return map_sequence(curve, &hilbert_lattice(order - 1), order);
    }
    if order == 2 {
        // every improper curve has the Liu 3 layout at order 2
        return curve_lattice(Curve::Liu3, 2);
    }
    let base = map_sequence(Curve::Liu4, &hilbert_lattice(order - 2), order - 1);
    map_sequence(curve, &base, order)
}

/// Builds the order-`k` curve by recursive subdivision.
///
/// Proper curves place images of the order-`k-1` Hilbert curve in the four
/// quadrants; improper curves place images of the order-`k-1` Liu 4 curve,
/// reversing the flagged ones. Order 1 is the four quadrant centres in map
/// order for every curve.
pub fn enumerate(curve: Curve, order: u32) -> Result<CellSequence> {
    if order == 0 {
        return Err(HhcError::OrderTooSmall {
            order,
            min: 1,
            what: "enumeration",
        });
    }
    if order > MAX_ENUMERATION_ORDER {
        return Err(HhcError::OrderTooLarge {
            order,
            max: MAX_ENUMERATION_ORDER,
            what: "enumeration",
        });
    }
    let cells = curve_lattice(curve, order)
        .into_iter()
        .map(|(x, y)| Cell {
            ix: ((x - 1) / 2) as u32,
            iy: ((y - 1) / 2) as u32,
            depth: order,
        })
        .collect();
    Ok(CellSequence {
        curve,
        order,
        cells,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdjacencyViolation {
    /// The pair `(index, index + 1)` does not share an edge.
    pub index: usize,
    pub from: Cell,
    pub to: Cell,
}

pub fn check_adjacency(cells: &[Cell]) -> std::result::Result<(), AdjacencyViolation> {
    match cells.windows(2).position(|w| !w[0].is_adjacent(&w[1])) {
        None => Ok(()),
        Some(index) => Err(AdjacencyViolation {
            index,
            from: cells[index],
            to: cells[index + 1],
        }),
    }
}

/// An address of the form `prefix` followed by `fill` repeated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AddressPattern {
    pub prefix: &'static [u8],
    pub fill: u8,
}

impl AddressPattern {
    const fn new(prefix: &'static [u8], fill: u8) -> Self {
        AddressPattern { prefix, fill }
    }

    pub fn expand(&self, order: u32) -> Vec<u8> {
        let mut digits = self.prefix.to_vec();
        digits.resize((order as usize).max(self.prefix.len()), self.fill);
        digits.truncate(order as usize);
        digits
    }
}

impl std::fmt::Display for AddressPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("0.")?;
        for d in self.prefix {
            write!(f, "{d}")?;
        }
        write!(f, "{}...{}", self.fill, self.fill)
    }
}

/// Where the first and last subintervals are sent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundaryCondition {
    pub entry: AddressPattern,
    pub exit: AddressPattern,
}

const fn bc(entry: (&'static [u8], u8), exit: (&'static [u8], u8)) -> BoundaryCondition {
    BoundaryCondition {
        entry: AddressPattern::new(entry.0, entry.1),
        exit: AddressPattern::new(exit.0, exit.1),
    }
}

const BOUNDARY: [(BoundaryCondition, Option<BoundaryCondition>); 12] = [
    (bc((&[0], 0), (&[3], 3)), None),
    (bc((&[0], 3), (&[3], 0)), None),
    (bc((&[0], 2), (&[3], 1)), None),
    (bc((&[0], 1), (&[3], 2)), None),
    (bc((&[0], 0), (&[3], 1)), Some(bc((&[0], 2), (&[3], 3)))),
    (bc((&[0], 1), (&[3], 0)), Some(bc((&[0], 3), (&[3], 2)))),
    (bc((&[0, 2], 3), (&[3, 1], 0)), None),
    (bc((&[0, 2], 3), (&[3, 3], 2)), Some(bc((&[0, 0], 1), (&[3, 1], 0)))),
    (bc((&[0, 0], 1), (&[3, 3], 2)), None),
    (bc((&[0, 3], 2), (&[3, 0], 1)), None),
    (bc((&[0, 1], 0), (&[3, 2], 3)), None),
    (bc((&[0, 1], 0), (&[3, 0], 1)), Some(bc((&[0, 3], 2), (&[3, 2], 3)))),
];

/// Tabulated boundary condition, and the one of the mirror-reflected curve
/// where it is listed.
pub fn boundary_condition(curve: Curve) -> (BoundaryCondition, Option<BoundaryCondition>) {
    BOUNDARY[curve.nu() as usize]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryCheck {
    pub curve: Curve,
    pub order: u32,
    pub entry: Vec<u8>,
    pub exit: Vec<u8>,
    /// Entry and exit match the primary pattern.
    pub primary: bool,
    /// The reflected, reversed curve matches the mirror pattern, when one
    /// is tabulated.
    pub mirror: Option<bool>,
}

impl BoundaryCheck {
    pub fn passed(&self) -> bool {
        self.primary || self.mirror == Some(true)
    }
}

fn matches(cond: &BoundaryCondition, entry: &[u8], exit: &[u8], order: u32) -> bool {
    cond.entry.expand(order) == entry && cond.exit.expand(order) == exit
}

/// Compares the first and last cell of the order-`k` curve with the
/// tabulated boundary conditions. Needs `k >= 2` for proper curves and
/// `k >= 3` for improper ones.
pub fn check_boundary_conditions(curve: Curve, order: u32) -> Result<BoundaryCheck> {
    let min = if curve.is_proper() { 2 } else { 3 };
    if order < min {
        return Err(HhcError::OrderTooSmall {
            order,
            min,
            what: "boundary conditions",
        });
    }
    let seq = enumerate(curve, order)?;
    let entry = seq.first().address();
    let exit = seq.last().address();
    let (primary, mirrored) = boundary_condition(curve);
    let mirror = mirrored.map(|cond| {
        // reflecting swaps entry and exit, so read the reflected curve backwards
        let m_entry = seq.last().mirrored().address();
        let m_exit = seq.first().mirrored().address();
        matches(&cond, &m_entry, &m_exit, order)
    });
    Ok(BoundaryCheck {
        curve,
        order,
        primary: matches(&primary, &entry, &exit, order),
        mirror,
        entry,
        exit,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EndpointClass {
    Corner,
    Edge,
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveProperties {
    pub mirror_symmetric: bool,
    pub entry_class: EndpointClass,
    pub exit_class: EndpointClass,
    pub closed: bool,
}

/// Symmetry, entry/exit position and closedness of the order-`k` curve.
///
/// The classes are stable from order 3 on.
pub fn classify_properties(curve: Curve, order: u32) -> Result<CurveProperties> {
    let seq = enumerate(curve, order)?;
    let mirror_symmetric = seq
        .cells
        .iter()
        .zip(seq.cells.iter().rev())
        .all(|(a, b)| a.mirrored() == *b);
    Ok(CurveProperties {
        mirror_symmetric,
        entry_class: seq.first().class(),
        exit_class: seq.last().class(),
        closed: seq.first().is_adjacent(seq.last()),
    })
}

/// Tabulated geometric properties of each curve.
pub fn expected_properties(curve: Curve) -> CurveProperties {
    use EndpointClass::*;
    let (mirror_symmetric, entry_class, exit_class, closed) = match curve {
        Curve::Hilbert => (true, Corner, Corner, false),
        Curve::Moore => (true, Edge, Edge, true),
        Curve::Liu1 => (true, Interior, Interior, true),
        Curve::Liu2 => (true, Edge, Edge, false),
        Curve::Liu3 => (false, Corner, Interior, false),
        Curve::Liu4 => (false, Edge, Edge, false),
        Curve::I1 => (true, Interior, Interior, true),
        Curve::I2 => (false, Interior, Edge, false),
        Curve::I3 => (true, Edge, Edge, false),
        Curve::I4 => (true, Interior, Interior, true),
        Curve::I5 => (true, Edge, Edge, false),
        Curve::I6 => (false, Edge, Interior, false),
    };
    CurveProperties {
        mirror_symmetric,
        entry_class,
        exit_class,
        closed,
    }
}

/// Recovers the parameter whose image is the centre of `cell`.
///
/// Descends through the quadrant maps; for improper curves the digits found
/// are the reverted parameter, which is mapped back at the end.
pub fn invert_point(curve: Curve, cell: &Cell) -> Result<QuaternaryFraction> {
    let order = cell.depth;
    if order == 0 {
        return Err(HhcError::EmptyDigits);
    }
    if !curve.is_proper() && order == 2 {
        return invert_point(Curve::Liu3, cell);
    }
    if !curve.is_proper() && order == 1 {
        return Err(HhcError::OrderTooSmall {
            order,
            min: 2,
            what: "improper curves",
        });
    }
    let mut w = cell.center();
    let mut digits = Vec::with_capacity(order as usize);
    let mut current = curve;
    for level in 0..order {
        let qx = (w.x > DyadicScalar::HALF) as i64;
        let qy = (w.y > DyadicScalar::HALF) as i64;
        let table = curve_table(current);
        let digit = (0..4u8)
            .find(|&d| table.map(d).image_quadrant() == (qx, qy))
            .expect("the four maps cover the four quadrants");
        w = table.map(digit).unapply(w)?;
        digits.push(digit);
        current = if level == 0 { curve.base() } else { Curve::Hilbert };
    }
    let q = QuaternaryFraction::new(digits)?;
    if curve.is_proper() {
        Ok(q)
    } else {
        reversal_transform(curve, &q)
    }
}
