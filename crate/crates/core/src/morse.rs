//! The piecewise-linear Morse height on the subdivided sector.
//!
//! The distance of a vertex (i, j) from the origin is measured by the
//! integer quadratic form q(i, j) = i^2 - ij + j^2, which is the squared
//! Euclidean distance in the apartment (edges have length 1) and is
//! invariant under the six exponent permutations. Only the ordering of
//! heights is ever consumed downstream, so the exact integer form replaces
//! the irrational distance.
//!
//! Edges whose endpoints share a q value are the flat edges; each is
//! subdivided by a midpoint whose height is ordered strictly between its
//! endpoints' level and the next: a [`HeightKey`] is the pair (q, tie)
//! under lexicographic order, tie = 1 marking midpoints. [`morse_table`]
//! relabels the keys of a window as integers with the origin at 0.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::apartment::{
    flat_edge_endpoints, ApartmentVertex, Cell, Node, SectorVertex, Window, WindowError,
};

/// Squared distance from the origin: q(i, j) = i^2 - ij + j^2.
pub fn height_sq(v: ApartmentVertex) -> i64 {
    v.i * v.i - v.i * v.j + v.j * v.j
}

/// The dominant representative of a vertex under the six exponent
/// permutations combined with homothety normalization: sort the triple
/// (i, j, 0) descending and renormalize the last entry to 0.
pub fn sector_representative(v: ApartmentVertex) -> SectorVertex {
    let mut d = [v.i, v.j, 0];
    d.sort_unstable_by(|a, b| b.cmp(a));
    SectorVertex::new(d[0] - d[2], d[1] - d[2]).expect("sorted triple is dominant")
}

/// Comparison key for the Morse ordering: lexicographic on (q, tie).
/// Lattice vertices carry tie 0; flat-edge midpoints carry the flat level
/// with tie 1, placing them strictly above their endpoints and strictly
/// below everything higher.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HeightKey {
    pub qsq: i64,
    pub tie: u8,
}

pub fn node_key(node: Node) -> HeightKey {
    match node {
        Node::Lat(v) => HeightKey { qsq: height_sq(v), tie: 0 },
        Node::Mid(a, b) => {
            debug_assert_eq!(height_sq(a), height_sq(b), "midpoint of a non-flat edge");
            HeightKey { qsq: height_sq(a), tie: 1 }
        }
    }
}

/// The flat level q = 3n^2 + 3n + 1 determines n; inverse lookup.
pub fn flat_level(qsq: i64) -> Option<usize> {
    let mut n: i64 = 0;
    loop {
        let level = 3 * n * n + 3 * n + 1;
        if level == qsq {
            return Some(n as usize);
        }
        if level > qsq {
            return None;
        }
        n += 1;
    }
}

/// All height-flat edges of the window whose full star (both chambers)
/// lies inside the window. In every tested window these are exactly the
/// edges {(2n+1, n), (2n+1, n+1)}.
pub fn flat_edge_census(window: Window) -> Vec<Cell> {
    let mut out = Vec::new();
    for ((a, b), chambers) in window.sector_edges_with_multiplicity() {
        if chambers == 2 && height_sq(a) == height_sq(b) {
            out.push(Cell::edge(Node::Lat(a), Node::Lat(b)));
        }
    }
    out
}

/// The n for which the census edges are the flat edges: both chambers of
/// the n-th flat edge fit in the window iff 2n + 2 <= imax.
pub fn census_levels(window: Window) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = 0usize;
    while 2 * (n as i64) + 2 <= window.imax {
        out.push(n);
        n += 1;
    }
    out
}

/// No window chamber has three equal heights (so no chamber needs more
/// than one subdivision).
pub fn no_chamber_three_equal(window: Window) -> bool {
    window.sector_chambers().iter().all(|tri| {
        let q: Vec<i64> = tri.iter().map(|v| height_sq(*v)).collect();
        !(q[0] == q[1] && q[1] == q[2])
    })
}

/// Integer Morse relabeling of a sector window: every vertex of the
/// subdivided window (lattice vertices plus flat-edge midpoints whose
/// endpoints fit) is mapped to the dense rank of its height key, so the
/// origin gets 0 and the integer order agrees with the height order.
#[derive(Clone, Debug)]
pub struct MorseTable {
    window: Window,
    h: BTreeMap<Node, i64>,
}

pub fn morse_table(window: Window) -> MorseTable {
    let mut nodes: Vec<Node> = window
        .sector_vertices()
        .iter()
        .map(|v| Node::Lat(v.vertex()))
        .collect();
    // Midpoints for every flat edge whose endpoints are in the window.
    let mut n = 0usize;
    loop {
        let (a, b) = flat_edge_endpoints(n);
        if a.i > window.imax {
            break;
        }
        nodes.push(Node::mid(a, b));
        n += 1;
    }

    let mut keys: Vec<HeightKey> = nodes.iter().map(|v| node_key(*v)).collect();
    keys.sort_unstable();
    keys.dedup();

    let rank: BTreeMap<HeightKey, i64> = keys
        .into_iter()
        .enumerate()
        .map(|(r, k)| (k, r as i64))
        .collect();
    let h = nodes.into_iter().map(|v| (v, rank[&node_key(v)])).collect();
    MorseTable { window, h }
}

impl MorseTable {
    pub fn window(&self) -> Window {
        self.window
    }

    /// Integer height of a node of the subdivided apartment, looked up
    /// through its dominant representative.
    pub fn h(&self, node: Node) -> Result<i64, WindowError> {
        let canonical = match node {
            Node::Lat(v) => Node::Lat(sector_representative(v).vertex()),
            Node::Mid(a, _b) => {
                let n = flat_level(height_sq(a)).expect("flat edge off the known levels");
                let (p, q) = flat_edge_endpoints(n);
                Node::mid(p, q)
            }
        };
        self.h.get(&canonical).copied().ok_or_else(|| match canonical {
            Node::Lat(v) => WindowError::Overflow { vertex: v, imax: self.window.imax },
            Node::Mid(a, _) => WindowError::Overflow { vertex: a, imax: self.window.imax },
        })
    }

    /// Strict comparison a below b.
    pub fn below(&self, a: Node, b: Node) -> Result<bool, WindowError> {
        Ok(self.h(a)? < self.h(b)?)
    }

    pub fn nodes(&self) -> impl Iterator<Item = (&Node, &i64)> {
        self.h.iter()
    }

    #[cfg(test)]
    pub(crate) fn plant_violation(&mut self, node: Node, h: i64) {
        self.h.insert(node, h);
    }
}

/// 1-cells of the subdivided window complex: non-flat chamber edges, the
/// two halves of each flat edge, and the apex-to-midpoint edges created by
/// subdivision.
pub fn window_one_cells(window: Window) -> Vec<Cell> {
    let mut out = alloc::collections::BTreeSet::new();
    for tri in window.sector_chambers() {
        for cell in crate::apartment::chamber_cells(&tri) {
            let vs = cell.vertices();
            for (p, q) in [(0, 1), (0, 2), (1, 2)] {
                out.insert(Cell::edge(vs[p], vs[q]));
            }
        }
    }
    out.into_iter().collect()
}

/// The Morse property: h is non-constant on every 1-cell of the subdivided
/// window (the h values are integers, hence discrete).
pub fn is_morse(table: &MorseTable) -> bool {
    window_one_cells(table.window()).iter().all(|edge| {
        let vs = edge.vertices();
        match (table.h(vs[0]), table.h(vs[1])) {
            (Ok(h0), Ok(h1)) => h0 != h1,
            _ => false,
        }
    })
}

/// h(endpoints of flat edge n) < h(midpoint n) < h(endpoints of flat edge
/// n+1), the ordering constraint that makes the subdivision Morse.
pub fn sandwich_holds(table: &MorseTable, n: usize) -> Result<bool, WindowError> {
    let (a, b) = flat_edge_endpoints(n);
    let (c, d) = flat_edge_endpoints(n + 1);
    let mid = table.h(Node::mid(a, b))?;
    Ok(table.h(Node::Lat(a))? < mid
        && table.h(Node::Lat(b))? < mid
        && mid < table.h(Node::Lat(c))?
        && mid < table.h(Node::Lat(d))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartment::{av, flat_edge_cell};

    #[test]
    fn height_examples() {
        assert_eq!(height_sq(av(0, 0)), 0);
        assert_eq!(height_sq(av(1, 0)), 1);
        for n in 0..10 {
            let n_i = n as i64;
            let (a, b) = flat_edge_endpoints(n);
            assert_eq!(height_sq(a), 3 * n_i * n_i + 3 * n_i + 1);
            assert_eq!(height_sq(b), 3 * n_i * n_i + 3 * n_i + 1);
        }
    }

    #[test]
    fn height_is_weyl_invariant() {
        for i in -6..=6 {
            for j in -6..=6 {
                let v = av(i, j);
                assert_eq!(height_sq(v), height_sq(av(j, i)));
                let rep = sector_representative(v);
                assert_eq!(height_sq(v), height_sq(rep.vertex()));
                // All six permutations of the exponent triple, renormalized.
                let t = [i, j, 0];
                for perm in [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]] {
                    let w = av(t[perm[0]] - t[perm[2]], t[perm[1]] - t[perm[2]]);
                    assert_eq!(height_sq(v), height_sq(w));
                }
            }
        }
    }

    #[test]
    fn representative_examples() {
        assert_eq!(sector_representative(av(3, 5)).vertex(), av(5, 3));
        assert_eq!(sector_representative(av(-1, 0)).vertex(), av(1, 1));
        for i in 0..6 {
            for j in 0..=i {
                assert_eq!(sector_representative(av(i, j)).vertex(), av(i, j));
            }
        }
    }

    #[test]
    fn census_matches_flat_edge_formula() {
        for imax in [5i64, 9, 13, 21] {
            let w = Window::new(imax);
            let expected: Vec<Cell> = census_levels(w).into_iter().map(flat_edge_cell).collect();
            let mut got = flat_edge_census(w);
            got.sort();
            let mut want = expected;
            want.sort();
            assert_eq!(got, want, "imax = {}", imax);
        }
    }

    #[test]
    fn census_bounds() {
        assert_eq!(census_levels(Window::new(21)), (0..=9).collect::<Vec<_>>());
        assert_eq!(census_levels(Window::new(9)), (0..=3).collect::<Vec<_>>());
    }

    #[test]
    fn no_triple_flat_chamber() {
        assert!(no_chamber_three_equal(Window::new(21)));
    }

    #[test]
    fn keys_order_midpoints_between_levels() {
        for n in 0..9 {
            let (a, b) = flat_edge_endpoints(n);
            let (c, _) = flat_edge_endpoints(n + 1);
            let mid = node_key(Node::mid(a, b));
            assert!(node_key(Node::Lat(a)) < mid);
            assert!(node_key(Node::Lat(b)) < mid);
            assert!(mid < node_key(Node::Lat(c)));
        }
        assert_eq!(flat_level(1), Some(0));
        assert_eq!(flat_level(37), Some(3));
        assert_eq!(flat_level(2), None);
    }

    #[test]
    fn table_origin_is_zero_and_order_preserving() {
        let table = morse_table(Window::new(12));
        assert_eq!(table.h(Node::Lat(av(0, 0))).unwrap(), 0);
        let nodes: Vec<Node> = table.nodes().map(|(v, _)| *v).collect();
        for a in nodes.iter().step_by(7) {
            for b in nodes.iter().step_by(5) {
                let ha = table.h(*a).unwrap();
                let hb = table.h(*b).unwrap();
                assert_eq!(ha < hb, node_key(*a) < node_key(*b));
                assert_eq!(ha == hb, node_key(*a) == node_key(*b));
            }
        }
    }

    #[test]
    fn table_serves_apartment_nodes_via_representatives() {
        let table = morse_table(Window::new(8));
        assert_eq!(
            table.h(Node::Lat(av(-3, -1))).unwrap(),
            table.h(Node::Lat(sector_representative(av(-3, -1)).vertex())).unwrap()
        );
        // A mirror image of a flat edge midpoint.
        let m = Node::mid(av(0, 1), av(1, 1));
        let y0 = Node::mid(av(1, 0), av(1, 1));
        assert_eq!(table.h(m).unwrap(), table.h(y0).unwrap());
    }

    #[test]
    fn morse_property_holds_and_detects_planted_flat() {
        let mut table = morse_table(Window::new(13));
        assert!(is_morse(&table));

        // Force the first midpoint down to its endpoints' level.
        let (a, b) = flat_edge_endpoints(0);
        let h_end = table.h(Node::Lat(a)).unwrap();
        table.plant_violation(Node::mid(a, b), h_end);
        assert!(!is_morse(&table));
    }

    #[test]
    fn every_window_two_cell_has_unique_max() {
        let w = Window::new(13);
        let table = morse_table(w);
        for tri in w.sector_chambers() {
            for cell in crate::apartment::chamber_cells(&tri) {
                let hs: Vec<i64> = cell.vertices().iter().map(|v| table.h(*v).unwrap()).collect();
                let max = hs.iter().max().unwrap();
                assert_eq!(hs.iter().filter(|h| *h == max).count(), 1);
            }
        }
    }

    #[test]
    fn sandwich_ordering() {
        let table = morse_table(Window::new(21));
        for n in 0..=9 {
            assert!(sandwich_holds(&table, n).unwrap());
        }
    }
}
