//! Descending stars and links, greedy descent, and the labeled quotient
//! descending link.
//!
//! A cell of the star of z is descending when every other vertex is
//! strictly below z in the Morse order. Within the modified apartment the
//! descending link of every vertex other than the origin is nonempty and
//! connected, with at most two edges; greedy descent along lowest
//! neighbors therefore reaches the standard chamber from everywhere.
//!
//! At the peak vertex (2n, n) the descending link of the level-n quotient
//! is a complete bipartite graph: acting on the base edge by
//! e12(a t^n) e23(b t^n) and reading degree-n labels parametrizes the
//! edges by ordered pairs of rationals.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::apartment::{av, link, star, Cell, Node, Region, Window, WindowError, ORIGIN};
use crate::matrix::Unipotent;
use crate::morse::MorseTable;
use crate::poly::{Poly, Rat};

/// Descending star: cells of positive dimension in the star of `center`
/// whose other vertices are all strictly below it.
pub fn descending_star(
    center: Node,
    table: &MorseTable,
    region: Region,
    window: Window,
) -> Result<BTreeSet<Cell>, WindowError> {
    let mut out = BTreeSet::new();
    for cell in star(center, region, window)? {
        if cell.dim() == 0 {
            continue;
        }
        let mut descending = true;
        for v in cell.vertices() {
            if *v != center && !table.below(*v, center)? {
                descending = false;
                break;
            }
        }
        if descending {
            out.insert(cell);
        }
    }
    Ok(out)
}

/// The descending link: faces of link cells all of whose vertices are
/// strictly below the center.
#[derive(Clone, Debug)]
pub struct DescendingLink {
    pub center: Node,
    pub cells: BTreeSet<Cell>,
}

impl DescendingLink {
    pub fn edges(&self) -> Vec<&Cell> {
        self.cells.iter().filter(|c| c.dim() == 1).collect()
    }

    pub fn vertex_nodes(&self) -> BTreeSet<Node> {
        let mut out = BTreeSet::new();
        for c in &self.cells {
            for v in c.vertices() {
                out.insert(*v);
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Connectivity of the link as a graph (isolated vertices count).
    pub fn is_connected(&self) -> bool {
        let verts: Vec<Node> = self.vertex_nodes().into_iter().collect();
        if verts.is_empty() {
            return false;
        }
        let index = |v: &Node| verts.iter().position(|u| u == v).unwrap();
        let mut component: Vec<usize> = (0..verts.len()).collect();
        fn root(component: &mut Vec<usize>, mut k: usize) -> usize {
            while component[k] != k {
                component[k] = component[component[k]];
                k = component[k];
            }
            k
        }
        for c in &self.cells {
            if c.dim() == 1 {
                let a = root(&mut component, index(&c.vertices()[0]));
                let b = root(&mut component, index(&c.vertices()[1]));
                component[a] = b;
            }
        }
        let first = root(&mut component, 0);
        (0..verts.len()).all(|k| root(&mut component, k) == first)
    }
}

pub fn descending_link(
    center: Node,
    table: &MorseTable,
    region: Region,
    window: Window,
) -> Result<DescendingLink, WindowError> {
    let mut cells = BTreeSet::new();
    for cell in link(center, region, window)? {
        let mut descending = true;
        for v in cell.vertices() {
            if !table.below(*v, center)? {
                descending = false;
                break;
            }
        }
        if descending {
            cells.insert(cell);
        }
    }
    Ok(DescendingLink { center, cells })
}

/// Nonempty and connected descending link within the modified apartment.
pub fn apartment_link_connected(
    center: Node,
    table: &MorseTable,
    window: Window,
) -> Result<bool, WindowError> {
    let dl = descending_link(center, table, Region::Apartment, window)?;
    Ok(!dl.is_empty() && dl.is_connected())
}

/// Vertices of the standard chamber, where greedy descent stops.
fn standard_chamber_nodes() -> [Node; 3] {
    [Node::Lat(ORIGIN), Node::Lat(av(1, 0)), Node::Lat(av(1, 1))]
}

/// Greedy descent: from `start`, repeatedly step to the lowest strictly
/// descending neighbor (ties broken by vertex order) until a vertex of the
/// standard chamber is reached. Returns the vertices visited after the
/// start; the sequence of heights is strictly decreasing.
pub fn descending_path(
    start: Node,
    table: &MorseTable,
    window: Window,
) -> Result<Vec<Node>, WindowError> {
    let mut path = Vec::new();
    let mut current = start;
    while !standard_chamber_nodes().contains(&current) {
        let mut best: Option<(i64, Node)> = None;
        for v in crate::apartment::neighbors(current, Region::Apartment, window)? {
            if table.below(v, current)? {
                let key = (table.h(v)?, v);
                if best.map_or(true, |(bh, bv)| key < (bh, bv)) {
                    best = Some(key);
                }
            }
        }
        let (_, next) = best.expect("nonempty descending link off the standard chamber");
        path.push(next);
        current = next;
    }
    Ok(path)
}

/// An edge of the quotient descending link at level n, labeled by the pair
/// of degree-n coefficients; two edges are equal iff their labels are.
/// Oriented from the e12-side family to the e23-side family.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuotientLinkEdge {
    pub q: Rat,
    pub r: Rat,
}

impl QuotientLinkEdge {
    pub fn label(&self) -> (Rat, Rat) {
        (self.q.clone(), self.r.clone())
    }

    /// The action of a unipotent element on edge labels: translation by
    /// its degree-n label.
    pub fn acted_by(&self, u: &Unipotent, n: usize) -> QuotientLinkEdge {
        let (a, b) = u.label(n);
        QuotientLinkEdge { q: &self.q + &a, r: &self.r + &b }
    }
}

/// The base edge of the n-th chamber cycle: the descending-link edge of
/// the peak vertex (2n, n) inside the apartment, with endpoints
/// (2n-1, n-1) and (2n-1, n). The e12-side family is the orbit of the
/// second endpoint (the vertex e12(a t^n) moves and e23(b t^n) fixes).
pub fn cycle_base_edge(n: usize) -> (crate::apartment::ApartmentVertex, crate::apartment::ApartmentVertex) {
    let n = n as i64;
    (av(2 * n - 1, n - 1), av(2 * n - 1, n))
}

/// Edges of the quotient descending link over a finite label sample,
/// built by acting on the base edge with e12(a t^n) e23(b t^n) and reading
/// the degree-n label back off the group element.
pub fn quotient_link_edges(n: usize, sample: &[Rat]) -> BTreeSet<QuotientLinkEdge> {
    let base = QuotientLinkEdge { q: Rat::from_integer(0.into()), r: Rat::from_integer(0.into()) };
    let mut out = BTreeSet::new();
    for a in sample {
        for b in sample {
            let u = &Unipotent::e12(Poly::monomial(a.clone(), n))
                * &Unipotent::e23(Poly::monomial(b.clone(), n));
            let edge = base.acted_by(&u, n);
            debug_assert_eq!(edge.label(), (a.clone(), b.clone()));
            out.insert(edge);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartment::{flat_edge_mid, peak_vertex};
    use crate::morse::morse_table;
    use crate::poly::{rat, ratio};

    fn setup(imax: i64) -> (MorseTable, Window) {
        let w = Window::new(imax);
        (morse_table(w), w)
    }

    #[test]
    fn origin_descends_nowhere() {
        let (table, w) = setup(8);
        let dl = descending_link(Node::Lat(ORIGIN), &table, Region::Apartment, w).unwrap();
        assert!(dl.is_empty());
        let ds = descending_star(Node::Lat(ORIGIN), &table, Region::Apartment, w).unwrap();
        assert!(ds.is_empty());
    }

    #[test]
    fn midpoint_descending_link_is_the_lower_piece() {
        let (table, w) = setup(14);
        for n in 0..3 {
            let mid = flat_edge_mid(n);
            let ds = descending_star(mid, &table, Region::Apartment, w).unwrap();
            let pieces: Vec<&Cell> = ds.iter().filter(|c| c.dim() == 2).collect();
            assert_eq!(pieces.len(), 2);
            // Both pieces contain the peak vertex (2n, n): they are the
            // halves of the chamber below the flat edge.
            let peak = Node::Lat(peak_vertex(n).vertex());
            assert!(pieces.iter().all(|c| c.contains(&peak)));

            let dl = descending_link(mid, &table, Region::Apartment, w).unwrap();
            assert_eq!(dl.edges().len(), 2);
            assert!(dl.is_connected());
            assert!(dl.edges().iter().all(|c| c.contains(&peak)));
        }
    }

    #[test]
    fn peak_descending_link_is_subdivided_flat_edge() {
        let (table, w) = setup(14);
        for n in 1..4 {
            let z = Node::Lat(peak_vertex(n).vertex());
            let dl = descending_link(z, &table, Region::Apartment, w).unwrap();
            let mid = flat_edge_mid(n - 1);
            assert_eq!(dl.edges().len(), 2);
            assert!(dl.edges().iter().all(|c| c.contains(&mid)));
            assert!(dl.is_connected());
        }
    }

    #[test]
    fn interior_vertex_descending_chambers() {
        let (table, w) = setup(14);
        // (8, 3) has two descending chambers sharing an edge.
        let dl = descending_link(Node::Lat(av(8, 3)), &table, Region::Apartment, w).unwrap();
        assert_eq!(dl.edges().len(), 2);
        assert!(dl.is_connected());
        let ds = descending_star(Node::Lat(av(8, 3)), &table, Region::Apartment, w).unwrap();
        assert_eq!(ds.iter().filter(|c| c.dim() == 2).count(), 2);
    }

    #[test]
    fn ring_vertices_descend_to_origin_only() {
        let (table, w) = setup(8);
        for v in [av(1, 0), av(1, 1), av(0, 1), av(-1, 0), av(-1, -1), av(0, -1)] {
            let dl = descending_link(Node::Lat(v), &table, Region::Apartment, w).unwrap();
            assert!(dl.edges().is_empty());
            assert_eq!(dl.vertex_nodes().into_iter().collect::<Vec<_>>(), alloc::vec![Node::Lat(ORIGIN)]);
            assert!(apartment_link_connected(Node::Lat(v), &table, w).unwrap());
        }
    }

    #[test]
    fn connected_with_at_most_two_edges_on_small_window() {
        let (table, w) = setup(10);
        for i in -8i64..=8 {
            for j in -8i64..=8 {
                let v = av(i, j);
                if v == ORIGIN || crate::morse::sector_representative(v).i() > 8 {
                    continue;
                }
                let dl = descending_link(Node::Lat(v), &table, Region::Apartment, w).unwrap();
                assert!(!dl.is_empty(), "empty at {}", v);
                assert!(dl.is_connected(), "disconnected at {}", v);
                assert!(dl.edges().len() <= 2, "too many edges at {}", v);
            }
        }
    }

    #[test]
    fn descent_from_origin_is_empty() {
        let (table, w) = setup(8);
        assert!(descending_path(Node::Lat(ORIGIN), &table, w).unwrap().is_empty());
    }

    #[test]
    fn descent_is_strictly_decreasing() {
        let (table, w) = setup(12);
        let start = Node::Lat(av(7, 3));
        let path = descending_path(start, &table, w).unwrap();
        assert!(!path.is_empty());
        let mut prev = table.h(start).unwrap();
        for v in &path {
            let h = table.h(*v).unwrap();
            assert!(h < prev);
            prev = h;
        }
        let last = path.last().unwrap();
        assert!(standard_chamber_nodes().contains(last));
        assert!(path.len() as i64 <= table.h(start).unwrap());
    }

    #[test]
    fn quotient_link_samples() {
        assert_eq!(quotient_link_edges(3, &[rat(0)]).len(), 1);
        let sample = [rat(0), rat(1), rat(-1), ratio(1, 2), rat(2), rat(-3)];
        for n in [0usize, 1, 4] {
            assert_eq!(quotient_link_edges(n, &sample).len(), 36);
        }
    }

    #[test]
    fn label_action_translates_edges() {
        let n = 2;
        let e = QuotientLinkEdge { q: rat(1), r: ratio(-1, 3) };
        let u = Unipotent::new(
            Poly::monomial(ratio(5, 2), n),
            &Poly::monomial(rat(4), n) + &Poly::t(),
            Poly::t_pow(7),
        );
        let moved = e.acted_by(&u, n);
        assert_eq!(moved.q, rat(1) + ratio(5, 2));
        assert_eq!(moved.r, ratio(-1, 3) + rat(4));
    }

    #[test]
    fn label_action_is_simply_transitive() {
        let n = 1;
        let edges = [
            QuotientLinkEdge { q: rat(2), r: rat(0) },
            QuotientLinkEdge { q: ratio(1, 2), r: rat(-5) },
        ];
        // Exactly one translation takes the first edge to the second.
        let a = &edges[1].q - &edges[0].q;
        let b = &edges[1].r - &edges[0].r;
        let u = &Unipotent::e12(Poly::monomial(a, n)) * &Unipotent::e23(Poly::monomial(b, n));
        assert_eq!(edges[0].acted_by(&u, n), edges[1]);
        // Any other label misses.
        let v = &u * &Unipotent::e12(Poly::monomial(rat(1), n));
        assert_ne!(edges[0].acted_by(&v, n), edges[1]);
    }
}
