//! Cross-module checks of the sector model: the stabilizer profile against
//! the conjugation oracle over a window, the flat-edge census, descending
//! link shapes across the modified apartment, and greedy descent.

use sector_core::apartment::{
    av, flat_edge_cell, peak_vertex, Node, Region, SectorVertex, Window,
};
use sector_core::links::{apartment_link_connected, descending_link, descending_path, descending_star};
use sector_core::matrix::Mat3;
use sector_core::morse::{
    flat_edge_census, height_sq, is_morse, morse_table, sandwich_holds, sector_representative,
};
use sector_core::poly::Poly;
use sector_core::stabilizer::{
    cell_profile, enumerate_generators, membership, oracle_stabilizes, vertex_profile,
};

/// Deterministic little generator for test sampling, good enough to vary
/// exponents and entries (xorshift).
struct TestRng(u64);

impl TestRng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn pick(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

fn random_member(rng: &mut TestRng, p: &sector_core::StabilizerProfile) -> Mat3 {
    let mut m = Mat3::identity();
    let factors = rng.pick(6);
    for _ in 0..factors {
        let (r, c) = loop {
            let r = rng.pick(3) as usize;
            let c = rng.pick(3) as usize;
            if r != c {
                break (r, c);
            }
        };
        if let sector_core::Degree::Fin(b) = p.bound(r, c) {
            if b >= 0 {
                let e = rng.pick(b as u64 + 1) as usize;
                let coeff = rng.pick(5) as i64 - 2;
                let mut coeffs = vec![0i64; e + 1];
                coeffs[e] = if coeff == 0 { 1 } else { coeff };
                m = &m * &Mat3::elementary(r, c, Poly::from_ints(&coeffs));
            }
        }
    }
    m
}

fn random_violator(rng: &mut TestRng, p: &sector_core::StabilizerProfile) -> Mat3 {
    // One factor just past its bound, sandwiched between members.
    let left = random_member(rng, p);
    let right = random_member(rng, p);
    let (r, c) = loop {
        let r = rng.pick(3) as usize;
        let c = rng.pick(3) as usize;
        if r != c {
            break (r, c);
        }
    };
    let bad_exp = match p.bound(r, c) {
        sector_core::Degree::Fin(b) => (b + 1).max(0) as usize,
        sector_core::Degree::NegInf => 0,
    };
    let bad = Mat3::elementary(r, c, Poly::t_pow(bad_exp));
    &(&left * &bad) * &right
}

#[test]
fn profile_membership_matches_oracle() {
    let mut rng = TestRng(0x5eed);
    let mut checked = 0usize;
    for i in 0..=6 {
        for j in 0..=i {
            let v = SectorVertex::new(i, j).unwrap();
            let p = vertex_profile(v);
            for _ in 0..25 {
                let inside = random_member(&mut rng, &p);
                assert!(membership(&inside, &p), "member rejected at {}", v);
                assert_eq!(membership(&inside, &p), oracle_stabilizes(&inside, v));

                let outside = random_violator(&mut rng, &p);
                assert_eq!(
                    membership(&outside, &p),
                    oracle_stabilizes(&outside, v),
                    "disagreement at {} on {}",
                    v,
                    outside
                );
                assert!(!membership(&outside, &p), "violator accepted at {}", v);
                checked += 2;
            }
        }
    }
    assert!(checked >= 1000);
}

#[test]
fn generator_products_stay_in_profile() {
    // Profiles agree with the true stabilizer, so members form a group.
    let mut rng = TestRng(42);
    for (i, j) in [(2, 1), (5, 0), (4, 4), (6, 2)] {
        let v = SectorVertex::new(i, j).unwrap();
        let p = vertex_profile(v);
        for _ in 0..40 {
            let a = random_member(&mut rng, &p);
            let b = random_member(&mut rng, &p);
            assert!(membership(&(&a * &b), &p));
        }
    }
}

#[test]
fn census_is_exactly_the_flat_family() {
    let w = Window::new(13);
    let census = flat_edge_census(w);
    let expected: Vec<_> = (0..=5).map(flat_edge_cell).collect();
    assert_eq!(census, expected);
}

#[test]
fn morse_table_is_morse_with_sandwiches() {
    let table = morse_table(Window::new(13));
    assert!(is_morse(&table));
    for n in 0..=5 {
        assert!(sandwich_holds(&table, n).unwrap());
    }
}

#[test]
fn descending_links_across_the_apartment() {
    let probe = 9i64;
    let w = Window::new(probe + 2);
    let table = morse_table(w);

    let mut nodes: Vec<Node> = Vec::new();
    for i in -(probe + 1)..=(probe + 1) {
        for j in -(probe + 1)..=(probe + 1) {
            let v = av(i, j);
            if sector_representative(v).i() <= probe {
                nodes.push(Node::Lat(v));
            }
            for u in [av(i + 1, j), av(i, j + 1), av(i + 1, j + 1)] {
                if sector_core::apartment::adjacent(v, u)
                    && height_sq(v) == height_sq(u)
                    && sector_representative(v).i() <= probe
                    && sector_representative(u).i() <= probe
                {
                    nodes.push(Node::mid(v, u));
                }
            }
        }
    }

    let mut mids = 0usize;
    for node in nodes {
        if node == Node::Lat(av(0, 0)) {
            continue;
        }
        let dl = descending_link(node, &table, Region::Apartment, w).unwrap();
        assert!(!dl.is_empty(), "empty descending link at {}", node);
        assert!(dl.is_connected(), "disconnected at {}", node);
        assert!(dl.edges().len() <= 2, "too many edges at {}", node);
        assert!(apartment_link_connected(node, &table, w).unwrap());

        if node.is_mid() {
            mids += 1;
            assert_eq!(dl.edges().len(), 2, "midpoint {} should have 2 edges", node);
        }

        // When two descending 2-cells exist they share an edge.
        let ds = descending_star(node, &table, Region::Apartment, w).unwrap();
        let two_cells: Vec<_> = ds.iter().filter(|c| c.dim() == 2).collect();
        if two_cells.len() == 2 {
            let shared: Vec<_> = two_cells[0]
                .vertices()
                .iter()
                .filter(|v| two_cells[1].contains(v))
                .collect();
            assert_eq!(shared.len(), 2, "descending chambers at {} share no edge", node);
        }
        assert!(two_cells.len() <= 2);
    }
    assert!(mids >= 6, "the sweep should include midpoint nodes");
}

#[test]
fn greedy_descent_reaches_the_standard_chamber() {
    let probe = 9i64;
    let w = Window::new(probe + 2);
    let table = morse_table(w);
    let stop = [Node::Lat(av(0, 0)), Node::Lat(av(1, 0)), Node::Lat(av(1, 1))];

    for i in -probe..=probe {
        for j in -probe..=probe {
            let v = av(i, j);
            if sector_representative(v).i() > probe {
                continue;
            }
            let path = descending_path(Node::Lat(v), &table, w).unwrap();
            let mut prev = table.h(Node::Lat(v)).unwrap();
            for step in &path {
                let h = table.h(*step).unwrap();
                assert!(h < prev, "non-decreasing step at {}", v);
                prev = h;
            }
            match path.last() {
                Some(last) => assert!(stop.contains(last)),
                None => assert!(stop.contains(&Node::Lat(v))),
            }
            assert!(path.len() as i64 <= table.h(Node::Lat(v)).unwrap());
        }
    }
}

#[test]
fn cell_profiles_are_meets_over_window_edges() {
    let w = Window::new(7);
    for ((a, b), _) in w.sector_edges_with_multiplicity() {
        if height_sq(a) == height_sq(b) {
            continue;
        }
        let edge = sector_core::apartment::Cell::edge(Node::Lat(a), Node::Lat(b));
        let pa = vertex_profile(SectorVertex::from_vertex(a).unwrap());
        let pb = vertex_profile(SectorVertex::from_vertex(b).unwrap());
        assert_eq!(cell_profile(&edge), pa.meet(&pb));
    }
}

#[test]
fn edge_generators_stabilize_both_endpoints() {
    for n in 0..=4 {
        let cell = flat_edge_cell(n);
        let p = cell_profile(&cell);
        let (a, b) = sector_core::apartment::flat_edge_endpoints(n);
        for g in enumerate_generators(&p) {
            assert!(membership(&g, &p));
            assert!(oracle_stabilizes(&g, SectorVertex::from_vertex(a).unwrap()));
            assert!(oracle_stabilizes(&g, SectorVertex::from_vertex(b).unwrap()));
        }
    }
}

#[test]
fn peak_vertices_sit_between_flat_levels() {
    for n in 1..=8 {
        let z = peak_vertex(n).vertex();
        let below = height_sq(av(2 * n as i64 - 1, n as i64 - 1));
        let above = height_sq(av(2 * n as i64 + 1, n as i64));
        assert!(below < height_sq(z) && height_sq(z) < above);
    }
}
