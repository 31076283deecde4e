//! Combinatorics of the standard apartment and sector.
//!
//! A vertex is the homothety-normalized exponent pair (i, j) of a lattice
//! t^i e1 + t^j e2 + e3 over Q[[t^-1]]; the sector is the dominant cone
//! i >= j >= 0 based at the origin x0 = (0, 0). Chambers are the triangles
//! {(i,j),(i+1,j),(i+1,j+1)} and {(i,j),(i,j+1),(i+1,j+1)}.
//!
//! Height-flat edges (see [`crate::morse`]) are subdivided by a midpoint
//! vertex, splitting each of their two chambers into two triangles. All
//! cell queries here operate on that subdivided complex. Enumerations are
//! bounded by an explicit [`Window`]; a query whose star leaves the window
//! reports [`WindowError`] instead of silently truncating.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::morse::height_sq;

/// Vertex of the standard apartment: normalized lattice exponents (i, j).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ApartmentVertex {
    pub i: i64,
    pub j: i64,
}

/// Shorthand constructor.
pub const fn av(i: i64, j: i64) -> ApartmentVertex {
    ApartmentVertex { i, j }
}

impl ApartmentVertex {
    fn offset(self, di: i64, dj: i64) -> ApartmentVertex {
        av(self.i + di, self.j + dj)
    }
}

impl fmt::Display for ApartmentVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// Sector vertex: an apartment vertex with i >= j >= 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SectorVertex(ApartmentVertex);

impl SectorVertex {
    pub fn new(i: i64, j: i64) -> Option<SectorVertex> {
        let v = av(i, j);
        sector_contains(v).then_some(SectorVertex(v))
    }

    pub fn from_vertex(v: ApartmentVertex) -> Option<SectorVertex> {
        sector_contains(v).then_some(SectorVertex(v))
    }

    pub fn i(&self) -> i64 {
        self.0.i
    }

    pub fn j(&self) -> i64 {
        self.0.j
    }

    pub fn vertex(&self) -> ApartmentVertex {
        self.0
    }
}

impl fmt::Display for SectorVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The base vertex x0.
pub const ORIGIN: ApartmentVertex = av(0, 0);

/// Building adjacency in exponent coordinates: the difference must be one
/// of (+-1, 0), (0, +-1), (+-1, +-1) with equal signs. Equivalent to the
/// existence of representatives with proper inclusions t^-1 L' < L < L'.
pub fn adjacent(a: ApartmentVertex, b: ApartmentVertex) -> bool {
    matches!(
        (a.i - b.i, a.j - b.j),
        (1, 0) | (-1, 0) | (0, 1) | (0, -1) | (1, 1) | (-1, -1)
    )
}

pub fn sector_contains(v: ApartmentVertex) -> bool {
    v.i >= v.j && v.j >= 0
}

/// Position of a sector vertex relative to the sector walls; this is what
/// selects the shape of its stabilizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryClass {
    /// x0 itself.
    StandardVertex,
    /// i > j > 0.
    Interior,
    /// On the wall j = 0, not x0.
    BoundaryJZero,
    /// On the wall i = j, not x0.
    BoundaryDiagonal,
}

pub fn boundary_class(v: SectorVertex) -> BoundaryClass {
    match (v.i(), v.j()) {
        (0, 0) => BoundaryClass::StandardVertex,
        (_, 0) => BoundaryClass::BoundaryJZero,
        (i, j) if i == j => BoundaryClass::BoundaryDiagonal,
        _ => BoundaryClass::Interior,
    }
}

/// Endpoints of the n-th height-flat edge: (2n+1, n) and (2n+1, n+1).
pub fn flat_edge_endpoints(n: usize) -> (ApartmentVertex, ApartmentVertex) {
    let n = n as i64;
    (av(2 * n + 1, n), av(2 * n + 1, n + 1))
}

/// The n-th flat edge as an (unsubdivided) cell.
pub fn flat_edge_cell(n: usize) -> Cell {
    let (a, b) = flat_edge_endpoints(n);
    Cell::edge(Node::Lat(a), Node::Lat(b))
}

/// The subdivision midpoint of the n-th flat edge.
pub fn flat_edge_mid(n: usize) -> Node {
    let (a, b) = flat_edge_endpoints(n);
    Node::mid(a, b)
}

/// The vertex (2n, n): the unique height maximum over the support of the
/// n-th chamber cycle, and the center of the level-n quotient link.
pub fn peak_vertex(n: usize) -> SectorVertex {
    let n = n as i64;
    SectorVertex::new(2 * n, n).expect("dominant by construction")
}

/// Vertex of the subdivided complex: a lattice vertex, or the midpoint of
/// a flat edge (stored by its two endpoints, smaller first).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Node {
    Lat(ApartmentVertex),
    Mid(ApartmentVertex, ApartmentVertex),
}

impl Node {
    pub fn mid(a: ApartmentVertex, b: ApartmentVertex) -> Node {
        assert!(adjacent(a, b), "midpoint of a non-edge");
        if a <= b {
            Node::Mid(a, b)
        } else {
            Node::Mid(b, a)
        }
    }

    pub fn is_mid(&self) -> bool {
        matches!(self, Node::Mid(..))
    }

    /// The lattice vertices this node touches (one for Lat, two for Mid).
    pub fn lattice_support(&self) -> Vec<ApartmentVertex> {
        match *self {
            Node::Lat(v) => alloc::vec![v],
            Node::Mid(a, b) => alloc::vec![a, b],
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Lat(v) => write!(f, "{}", v),
            Node::Mid(a, b) => write!(f, "mid[{}-{}]", a, b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Vertex,
    /// A flat-edge midpoint as a 0-cell.
    MidVertex,
    Edge,
    Chamber,
    /// Half of a subdivided chamber.
    ChamberPiece,
}

/// Cell of the subdivided complex: 1 to 3 mutually incident vertices in
/// canonical sorted order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell {
    verts: Vec<Node>,
}

impl Cell {
    pub fn vertex(v: Node) -> Cell {
        Cell { verts: alloc::vec![v] }
    }

    pub fn edge(a: Node, b: Node) -> Cell {
        assert!(a != b);
        let mut verts = alloc::vec![a, b];
        verts.sort();
        Cell { verts }
    }

    pub fn triangle(a: Node, b: Node, c: Node) -> Cell {
        assert!(a != b && b != c && a != c);
        let mut verts = alloc::vec![a, b, c];
        verts.sort();
        Cell { verts }
    }

    pub fn vertices(&self) -> &[Node] {
        &self.verts
    }

    pub fn dim(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn contains(&self, v: &Node) -> bool {
        self.verts.contains(v)
    }

    pub fn kind(&self) -> CellKind {
        match self.verts.len() {
            1 => match self.verts[0] {
                Node::Lat(_) => CellKind::Vertex,
                Node::Mid(..) => CellKind::MidVertex,
            },
            2 => CellKind::Edge,
            _ => {
                if self.verts.iter().any(Node::is_mid) {
                    CellKind::ChamberPiece
                } else {
                    CellKind::Chamber
                }
            }
        }
    }

    /// The face spanned by all vertices except `v`. Panics if `v` is not a
    /// vertex of the cell or the cell is a point.
    pub fn opposite_face(&self, v: &Node) -> Cell {
        assert!(self.contains(v) && self.verts.len() >= 2);
        let rest: Vec<Node> = self.verts.iter().filter(|u| *u != v).copied().collect();
        match rest.len() {
            1 => Cell::vertex(rest[0]),
            2 => Cell::edge(rest[0], rest[1]),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.verts.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

/// Which part of the building model a query runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    /// The closed sector i >= j >= 0.
    Sector,
    /// The whole standard apartment.
    Apartment,
}

impl Region {
    pub fn contains(&self, v: ApartmentVertex) -> bool {
        match self {
            Region::Sector => sector_contains(v),
            Region::Apartment => true,
        }
    }
}

/// Enumeration bound: lattice vertices are admitted while the dominant
/// representative of their exponent pair has first coordinate <= imax.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub imax: i64,
}

impl Window {
    pub fn new(imax: i64) -> Window {
        Window { imax }
    }

    pub fn admits(&self, v: ApartmentVertex) -> bool {
        crate::morse::sector_representative(v).i() <= self.imax
    }

    fn check(&self, v: ApartmentVertex) -> Result<(), WindowError> {
        if self.admits(v) {
            Ok(())
        } else {
            Err(WindowError::Overflow { vertex: v, imax: self.imax })
        }
    }

    /// Sector vertices in the window.
    pub fn sector_vertices(&self) -> Vec<SectorVertex> {
        let mut out = Vec::new();
        for i in 0..=self.imax.max(-1) {
            for j in 0..=i {
                out.push(SectorVertex::new(i, j).unwrap());
            }
        }
        out
    }

    /// Sector chambers (as unsubdivided vertex triples) with all vertices
    /// in the window.
    pub fn sector_chambers(&self) -> Vec<[ApartmentVertex; 3]> {
        let mut out = Vec::new();
        for i in 0..self.imax {
            for j in 0..=i {
                // {(i,j),(i+1,j),(i+1,j+1)}
                out.push([av(i, j), av(i + 1, j), av(i + 1, j + 1)]);
                if i > j {
                    // {(i,j),(i,j+1),(i+1,j+1)}
                    out.push([av(i, j), av(i, j + 1), av(i + 1, j + 1)]);
                }
            }
        }
        out
    }

    /// Distinct edges of the window's sector chambers, with the number of
    /// window chambers containing each.
    pub fn sector_edges_with_multiplicity(&self) -> Vec<((ApartmentVertex, ApartmentVertex), usize)> {
        let mut seen: alloc::collections::BTreeMap<(ApartmentVertex, ApartmentVertex), usize> =
            alloc::collections::BTreeMap::new();
        for tri in self.sector_chambers() {
            for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
                let key = if a <= b { (a, b) } else { (b, a) };
                *seen.entry(key).or_insert(0) += 1;
            }
        }
        seen.into_iter().collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowError {
    /// A query needed a vertex beyond the window bound.
    Overflow { vertex: ApartmentVertex, imax: i64 },
}

impl fmt::Display for WindowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WindowError::Overflow { vertex, imax } => {
                write!(f, "window overflow: {} exceeds imax = {}", vertex, imax)
            }
        }
    }
}

/// The six candidate chambers around a lattice vertex.
fn triangles_at(v: ApartmentVertex) -> [[ApartmentVertex; 3]; 6] {
    [
        [v, v.offset(1, 0), v.offset(1, 1)],
        [v.offset(-1, 0), v, v.offset(0, 1)],
        [v.offset(-1, -1), v.offset(0, -1), v],
        [v, v.offset(0, 1), v.offset(1, 1)],
        [v.offset(0, -1), v, v.offset(1, 0)],
        [v.offset(-1, -1), v.offset(-1, 0), v],
    ]
}

/// The two chambers containing a given edge, identified by their apexes.
fn edge_apexes(a: ApartmentVertex, b: ApartmentVertex) -> [ApartmentVertex; 2] {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    match (hi.i - lo.i, hi.j - lo.j) {
        (1, 0) => [lo.offset(1, 1), lo.offset(0, -1)],
        (0, 1) => [lo.offset(1, 1), lo.offset(-1, 0)],
        (1, 1) => [lo.offset(1, 0), lo.offset(0, 1)],
        _ => panic!("not an edge: {} {}", a, b),
    }
}

/// The flat edge of a chamber, if it has one. At most one edge of any
/// chamber can be height-flat (a chamber never has three equal heights).
pub fn chamber_flat_edge(tri: &[ApartmentVertex; 3]) -> Option<(ApartmentVertex, ApartmentVertex)> {
    let mut found = None;
    for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
        if height_sq(a) == height_sq(b) {
            assert!(found.is_none(), "chamber with two flat edges at {} {} {}", tri[0], tri[1], tri[2]);
            found = Some(if a <= b { (a, b) } else { (b, a) });
        }
    }
    found
}

/// 2-cells of the subdivided complex arising from one chamber.
pub fn chamber_cells(tri: &[ApartmentVertex; 3]) -> Vec<Cell> {
    match chamber_flat_edge(tri) {
        None => alloc::vec![Cell::triangle(
            Node::Lat(tri[0]),
            Node::Lat(tri[1]),
            Node::Lat(tri[2])
        )],
        Some((a, b)) => {
            let apex = *tri.iter().find(|v| **v != a && **v != b).unwrap();
            let m = Node::mid(a, b);
            alloc::vec![
                Cell::triangle(Node::Lat(apex), Node::Lat(a), m),
                Cell::triangle(Node::Lat(apex), m, Node::Lat(b)),
            ]
        }
    }
}

/// Star of a vertex of the subdivided complex: all cells containing it
/// (the vertex itself, edges, and chamber pieces), within `region`.
pub fn star(node: Node, region: Region, window: Window) -> Result<BTreeSet<Cell>, WindowError> {
    let triangles: Vec<[ApartmentVertex; 3]> = match node {
        Node::Lat(v) => triangles_at(v)
            .into_iter()
            .filter(|tri| tri.iter().all(|u| region.contains(*u)))
            .collect(),
        Node::Mid(a, b) => edge_apexes(a, b)
            .into_iter()
            .map(|apex| {
                let mut tri = [apex, a, b];
                tri.sort();
                tri
            })
            .filter(|tri| tri.iter().all(|u| region.contains(*u)))
            .collect(),
    };

    let mut cells = BTreeSet::new();
    cells.insert(Cell::vertex(node));
    for tri in &triangles {
        for v in tri {
            window.check(*v)?;
        }
        for cell in chamber_cells(tri) {
            if !cell.contains(&node) {
                continue;
            }
            // 1-faces through the node.
            let vs = cell.vertices().to_vec();
            for (p, q) in [(0, 1), (0, 2), (1, 2)] {
                if vs[p] == node || vs[q] == node {
                    cells.insert(Cell::edge(vs[p], vs[q]));
                }
            }
            cells.insert(cell);
        }
    }
    Ok(cells)
}

/// Link of a vertex: the codimension-1 faces of its star cells that do not
/// contain the vertex.
pub fn link(node: Node, region: Region, window: Window) -> Result<BTreeSet<Cell>, WindowError> {
    let mut out = BTreeSet::new();
    for cell in star(node, region, window)? {
        if cell.dim() >= 1 {
            out.insert(cell.opposite_face(&node));
        }
    }
    Ok(out)
}

/// Vertices adjacent to a node in the subdivided complex.
pub fn neighbors(node: Node, region: Region, window: Window) -> Result<BTreeSet<Node>, WindowError> {
    Ok(link(node, region, window)?
        .into_iter()
        .filter(|c| c.dim() == 0)
        .map(|c| c.vertices()[0])
        .collect())
}

/// The two (unsubdivided) sector chambers containing the n-th flat edge,
/// returned as (above, below) by comparing the height of the third vertex
/// against the flat level.
pub fn chambers_above_below(n: usize) -> (Cell, Cell) {
    let (a, b) = flat_edge_endpoints(n);
    let level = height_sq(a);
    let mut above = None;
    let mut below = None;
    for apex in edge_apexes(a, b) {
        debug_assert!(sector_contains(apex));
        let cell = Cell::triangle(Node::Lat(apex), Node::Lat(a), Node::Lat(b));
        if height_sq(apex) > level {
            above = Some(cell);
        } else {
            below = Some(cell);
        }
    }
    (above.expect("one chamber above"), below.expect("one chamber below"))
}
