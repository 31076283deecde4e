//! The verification runner: every invariant suite in one deterministic
//! pass, assembled into a [`VerificationReport`].

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sector_core::apartment::{
    adjacent, av, flat_edge_cell, peak_vertex, Node, Region, SectorVertex, Window,
};
use sector_core::cocycle::{
    boundary, chamber_cycle, cocycle_value, four_loop, projected_cycle, LinkChain,
};
use sector_core::links::{descending_link, descending_path, descending_star, quotient_link_edges};
use sector_core::matrix::Unipotent;
use sector_core::morse::{
    census_levels, flat_edge_census, height_sq, is_morse, morse_table, no_chamber_three_equal,
    sandwich_holds, sector_representative,
};
use sector_core::pairing::{pairing_matrix, PairingCertificate, PairingMatrix, ZeroCertificate};
use sector_core::poly::{rat, ratio, Degree, Poly, Rat};
use sector_core::stabilizer::{cell_profile, membership, oracle_stabilizes, vertex_profile};

use crate::report::{
    CheckResult, Flag, LemmaReport, Params, RatJson, Status, VerificationReport,
};
use crate::sample::{rand_member, rand_rat, rand_unipotent, rand_violator};

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "configuration error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (salt.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

/// Profile membership vs the conjugation oracle on every sector vertex
/// with i <= 10, half members and half planted violations per vertex.
pub fn check_stabilizer_oracle(seed: u64, samples_per_vertex: usize) -> LemmaReport {
    let mut rng = rng_for(seed, 1);
    let mut checks = Vec::new();

    let mut mismatches = 0usize;
    let mut member_rejected = 0usize;
    let mut violator_accepted = 0usize;
    let mut vertices = 0usize;
    let mut samples = 0usize;

    for i in 0..=10 {
        for j in 0..=i {
            let v = SectorVertex::new(i, j).unwrap();
            let p = vertex_profile(v);
            vertices += 1;
            for k in 0..samples_per_vertex {
                let (g, should_pass) = if k % 2 == 0 {
                    (rand_member(&mut rng, &p), true)
                } else {
                    (rand_violator(&mut rng, &p), false)
                };
                let by_profile = membership(&g, &p);
                let by_oracle = oracle_stabilizes(&g, v);
                if by_profile != by_oracle {
                    mismatches += 1;
                }
                if should_pass && !by_profile {
                    member_rejected += 1;
                }
                if !should_pass && by_profile {
                    violator_accepted += 1;
                }
                samples += 1;
            }
        }
    }

    checks.push(CheckResult::new(
        "profile-equals-oracle",
        mismatches == 0,
        format!("{} samples across {} vertices, {} mismatches", samples, vertices, mismatches),
    ));
    checks.push(CheckResult::new(
        "members-accepted",
        member_rejected == 0,
        format!("{} in-bound products rejected", member_rejected),
    ));
    checks.push(CheckResult::new(
        "violators-rejected",
        violator_accepted == 0,
        format!("{} planted violations accepted", violator_accepted),
    ));

    LemmaReport::new(
        "stabilizer-oracle",
        "Vertex stabilizer profiles agree with the conjugation oracle",
        checks,
        false,
    )
}

/// Exact degree bounds of the flat-edge stabilizers: (n, n, 2n+1).
pub fn check_flat_edge_profiles(nmax: usize) -> LemmaReport {
    let mut checks = Vec::new();
    for n in 0..=nmax {
        let p = cell_profile(&flat_edge_cell(n));
        let n_i = n as i64;
        let ok = p.bound(0, 1) == Degree::Fin(n_i)
            && p.bound(1, 2) == Degree::Fin(n_i)
            && p.bound(0, 2) == Degree::Fin(2 * n_i + 1)
            && p.bound(1, 0) < Degree::Fin(0)
            && p.bound(2, 0) < Degree::Fin(0)
            && p.bound(2, 1) < Degree::Fin(0);
        checks.push(CheckResult::new(
            format!("flat-edge-{}", n),
            ok,
            format!(
                "bounds u <= {}, v <= {}, w <= {}",
                p.bound(0, 1),
                p.bound(1, 2),
                p.bound(0, 2)
            ),
        ));
    }
    LemmaReport::new(
        "stabilizer-flat-edges",
        "Flat-edge stabilizers have the exact degree bounds (n, n, 2n+1)",
        checks,
        false,
    )
}

/// Census of height-flat edges and the Morse property of the relabeled
/// height over the window.
pub fn check_flat_census_and_morse(imax: i64) -> LemmaReport {
    let w = Window::new(imax);
    let census = flat_edge_census(w);
    let expected: Vec<_> = census_levels(w).into_iter().map(flat_edge_cell).collect();
    let census_ok = census == expected;

    let table = morse_table(w);
    let morse_ok = is_morse(&table);
    let chambers_ok = no_chamber_three_equal(w);

    let checks = vec![
        CheckResult::new(
            "flat-census",
            census_ok,
            format!(
                "window i <= {}: {} flat edges, expected levels 0..={}",
                imax,
                census.len(),
                expected.len().saturating_sub(1)
            ),
        ),
        CheckResult::new(
            "no-flat-chamber",
            chambers_ok,
            "no chamber has three equal heights",
        ),
        CheckResult::new(
            "morse-property",
            morse_ok,
            "h non-constant on every 1-cell of the subdivided window",
        ),
    ];
    LemmaReport::new(
        "morse-flat-census",
        "Flat edges are exactly the known family and the relabel is Morse",
        checks,
        false,
    )
}

/// Midpoint heights are strictly between consecutive flat levels.
pub fn check_sandwich(imax: i64) -> LemmaReport {
    let table = morse_table(Window::new(imax));
    let mut checks = Vec::new();
    let mut n = 0usize;
    while 2 * (n as i64) + 3 <= imax {
        let ok = sandwich_holds(&table, n).unwrap_or(false);
        checks.push(CheckResult::new(
            format!("sandwich-{}", n),
            ok,
            format!("h(level {}) < h(midpoint {}) < h(level {})", n, n, n + 1),
        ));
        n += 1;
    }
    LemmaReport::new(
        "morse-sandwich",
        "Midpoint heights sit strictly between consecutive flat levels",
        checks,
        false,
    )
}

/// Descending-link shape across the modified apartment, and greedy
/// descent to the standard chamber.
pub fn check_descending_links(probe: i64) -> LemmaReport {
    let w = Window::new(probe + 2);
    let table = morse_table(w);
    let origin = Node::Lat(av(0, 0));
    let stop = [Node::Lat(av(0, 0)), Node::Lat(av(1, 0)), Node::Lat(av(1, 1))];

    let mut nodes: Vec<Node> = Vec::new();
    for i in -(probe + 1)..=(probe + 1) {
        for j in -(probe + 1)..=(probe + 1) {
            let v = av(i, j);
            if sector_representative(v).i() <= probe {
                nodes.push(Node::Lat(v));
            }
            for u in [av(i + 1, j), av(i, j + 1), av(i + 1, j + 1)] {
                if adjacent(v, u)
                    && height_sq(v) == height_sq(u)
                    && sector_representative(v).i() <= probe
                    && sector_representative(u).i() <= probe
                {
                    nodes.push(Node::mid(v, u));
                }
            }
        }
    }

    let mut lattice = 0usize;
    let mut mids = 0usize;
    let mut bad_shape = 0usize;
    let mut bad_mid = 0usize;
    let mut bad_share = 0usize;
    let mut bad_path = 0usize;

    for node in &nodes {
        if *node == origin {
            continue;
        }
        match node {
            Node::Lat(_) => lattice += 1,
            Node::Mid(..) => mids += 1,
        }

        let dl = descending_link(*node, &table, Region::Apartment, w).unwrap();
        if dl.is_empty() || !dl.is_connected() || dl.edges().len() > 2 {
            bad_shape += 1;
        }
        if node.is_mid() && dl.edges().len() != 2 {
            bad_mid += 1;
        }

        let ds = descending_star(*node, &table, Region::Apartment, w).unwrap();
        let two_cells: Vec<_> = ds.iter().filter(|c| c.dim() == 2).collect();
        if two_cells.len() > 2 {
            bad_share += 1;
        } else if two_cells.len() == 2 {
            let shared = two_cells[0]
                .vertices()
                .iter()
                .filter(|v| two_cells[1].contains(v))
                .count();
            if shared != 2 {
                bad_share += 1;
            }
        }

        let path = descending_path(*node, &table, w).unwrap();
        let mut prev = table.h(*node).unwrap();
        let mut decreasing = true;
        for step in &path {
            let h = table.h(*step).unwrap();
            if h >= prev {
                decreasing = false;
            }
            prev = h;
        }
        let terminal_ok = match path.last() {
            Some(last) => stop.contains(last),
            None => stop.contains(node),
        };
        if !decreasing || !terminal_ok || path.len() as i64 > table.h(*node).unwrap() {
            bad_path += 1;
        }
    }

    let checks = vec![
        CheckResult::new(
            "link-shape",
            bad_shape == 0,
            format!(
                "{} lattice vertices and {} midpoints with rep <= {}: nonempty, connected, <= 2 edges ({} bad)",
                lattice, mids, probe, bad_shape
            ),
        ),
        CheckResult::new(
            "midpoint-two-edges",
            bad_mid == 0,
            format!("{} midpoints with exactly 2 descending edges ({} bad)", mids, bad_mid),
        ),
        CheckResult::new(
            "descending-chambers-share-edge",
            bad_share == 0,
            format!("paired descending 2-cells share an edge ({} bad)", bad_share),
        ),
        CheckResult::new(
            "greedy-descent",
            bad_path == 0,
            format!(
                "strictly decreasing descent into the standard chamber from every vertex ({} bad)",
                bad_path
            ),
        ),
    ];
    LemmaReport::new(
        "descending-links",
        "Apartment descending links are nonempty, connected, small",
        checks,
        false,
    )
}

/// The degree-n label homomorphism, its kernel, the bipartite quotient
/// link, and the congruence factorization.
pub fn check_labels(seed: u64, nmax: usize) -> LemmaReport {
    let mut rng = rng_for(seed, 6);
    let mut checks = Vec::new();

    let mut hom_bad = 0usize;
    for _ in 0..1000 {
        let n = rng.gen_range(0..=nmax);
        let u = rand_unipotent(&mut rng, nmax + 3);
        let v = rand_unipotent(&mut rng, nmax + 3);
        let (a1, b1) = u.label(n);
        let (a2, b2) = v.label(n);
        if (&u * &v).label(n) != (a1 + a2, b1 + b2) {
            hom_bad += 1;
        }
    }
    checks.push(CheckResult::new(
        "label-homomorphism",
        hom_bad == 0,
        format!("label(uv) = label(u) + label(v) on 1000 random pairs ({} bad)", hom_bad),
    ));

    let mut kernel_bad = 0usize;
    for _ in 0..100 {
        let n = rng.gen_range(0..=nmax);
        let shift = Poly::t_pow(n + 1);
        let raw = rand_unipotent(&mut rng, 4);
        let u = Unipotent::new(&raw.x * &shift, &raw.y * &shift, &raw.z * &shift);
        if !u.in_congruence_subgroup(n) || u.label(n) != (rat(0), rat(0)) {
            kernel_bad += 1;
        }
    }
    checks.push(CheckResult::new(
        "label-kernel",
        kernel_bad == 0,
        format!("label kills 100 random congruence elements ({} bad)", kernel_bad),
    ));

    let sample = [rat(0), rat(1), rat(-1), ratio(1, 2), rat(2), rat(-3)];
    let mut bipartite_bad = 0usize;
    for n in 0..=nmax {
        if quotient_link_edges(n, &sample).len() != 36 {
            bipartite_bad += 1;
        }
    }
    checks.push(CheckResult::new(
        "complete-bipartite-sample",
        bipartite_bad == 0,
        format!(
            "6 rational labels give 36 distinct edges at every level 0..={} ({} bad)",
            nmax, bipartite_bad
        ),
    ));

    // Every unipotent element factors as (congruence) * (peak stabilizer).
    let mut split_bad = 0usize;
    for _ in 0..100 {
        let n = rng.gen_range(0..=nmax);
        let u = rand_unipotent(&mut rng, nmax + 4);
        let (high, low) = u.split_at(n);
        let recompose = &high * &low == u;
        let high_ok = high.in_congruence_subgroup(n);
        let low_ok = oracle_stabilizes(&low.embed(), peak_vertex(n));
        if !(recompose && high_ok && low_ok) {
            split_bad += 1;
        }
    }
    checks.push(CheckResult::new(
        "congruence-factorization",
        split_bad == 0,
        format!(
            "u = u1 u2 with u1 congruent to 1 and u2 stabilizing the peak, 100 samples ({} bad)",
            split_bad
        ),
    ));

    LemmaReport::new(
        "quotient-labels",
        "Degree-n labels: homomorphism, kernel, and the bipartite link",
        checks,
        false,
    )
}

/// Four-loop values, shift invariance on random cycles, and the projected
/// cycles' value -2. Also records the rejected sign variant as a flag.
pub fn check_local_cocycle(seed: u64, nmax: usize) -> (LemmaReport, Vec<Flag>) {
    let mut rng = rng_for(seed, 7);
    let mut checks = Vec::new();

    let mut loop_bad = 0usize;
    for _ in 0..500 {
        let (q1, r1, q2, r2) = (
            rand_rat(&mut rng),
            rand_rat(&mut rng),
            rand_rat(&mut rng),
            rand_rat(&mut rng),
        );
        let l = four_loop(&q1, &r1, &q2, &r2);
        if cocycle_value(&l) != (&q1 - &q2) * (&r1 - &r2) || !boundary(&l).is_zero() {
            loop_bad += 1;
        }
    }
    checks.push(CheckResult::new(
        "four-loop-values",
        loop_bad == 0,
        format!("value (q1-q2)(r1-r2) on 500 random loops ({} bad)", loop_bad),
    ));

    let mut shift_bad = 0usize;
    for _ in 0..200 {
        let mut cycle = LinkChain::new();
        for _ in 0..rng.gen_range(1..=5) {
            let c = rand_rat(&mut rng);
            let l = four_loop(
                &rand_rat(&mut rng),
                &rand_rat(&mut rng),
                &rand_rat(&mut rng),
                &rand_rat(&mut rng),
            );
            cycle = cycle.plus(&l.scaled(&c));
        }
        let a = rand_rat(&mut rng);
        let b = rand_rat(&mut rng);
        if !boundary(&cycle).is_zero()
            || cocycle_value(&cycle.shifted(&a, &b)) != cocycle_value(&cycle)
        {
            shift_bad += 1;
        }
    }
    checks.push(CheckResult::new(
        "shift-invariance",
        shift_bad == 0,
        format!("translation invariance on 200 random cycles ({} bad)", shift_bad),
    ));

    let mut value_bad = 0usize;
    for n in 0..=nmax {
        let hat = projected_cycle(n);
        if cocycle_value(&hat) != rat(-2)
            || !boundary(&hat).is_zero()
            || hat.mass() != rat(8)
            || hat.len() != 7
            || hat.coeff(&(rat(0), rat(0))) != rat(2)
        {
            value_bad += 1;
        }
    }
    checks.push(CheckResult::new(
        "projected-cycle-value",
        value_bad == 0,
        format!(
            "value -2, zero boundary, mass 8 at every level 0..={} ({} bad)",
            nmax, value_bad
        ),
    ));

    // The alternative sign on the (-1, 0) edge keeps the value but is not
    // a cycle; the projection is the consistent convention.
    let hat = projected_cycle(1);
    let mut variant = hat.clone();
    variant.add((rat(-1), rat(0)), rat(2));
    let variant_rejected = cocycle_value(&variant) == rat(-2)
        && !boundary(&variant).is_zero()
        && boundary(&hat).is_zero()
        && hat.coeff(&(rat(-1), rat(0))) == rat(-1);
    checks.push(CheckResult::new(
        "sign-variant-rejected",
        variant_rejected,
        "flipping the (-1,0) coefficient keeps value -2 but breaks the cycle condition",
    ));

    let flags = vec![Flag {
        id: "projected-cycle-sign".into(),
        note: "the projected cycle carries coefficient -1 on the (-1,0) edge; the variant with +1 \
               evaluates to -2 as well but fails the cycle condition under the fixed orientation, \
               so the projection is taken as the defining form"
            .into(),
    }];

    (
        LemmaReport::new(
            "local-cocycle",
            "The local cocycle: loops, invariance, and the value -2",
            checks,
            true,
        ),
        flags,
    )
}

/// The eight cycle words: distinctness, the commutator identity, and the
/// label multiset.
pub fn check_cycle_words(seed: u64, nmax: usize) -> LemmaReport {
    let mut rng = rng_for(seed, 8);
    let mut checks = Vec::new();

    let mut comm_bad = 0usize;
    for n in 0..=nmax {
        let u1 = Unipotent::e12(Poly::t_pow(n));
        let u2 = Unipotent::e23(Poly::t_pow(n));
        let lhs = Unipotent::commutator(&u1.inverse(), &u2);
        let rhs = Unipotent::commutator(&u1, &u2.inverse());
        if lhs != rhs || lhs.truncate(n) != rhs.truncate(n) {
            comm_bad += 1;
        }
    }
    for _ in 0..100 {
        let n = rng.gen_range(0..=nmax);
        let u = rand_unipotent(&mut rng, nmax + 2);
        let v = rand_unipotent(&mut rng, nmax + 2);
        let lhs = Unipotent::commutator(&u.inverse(), &v);
        let rhs = Unipotent::commutator(&u, &v.inverse());
        if lhs != rhs || lhs.truncate(n) != rhs.truncate(n) {
            comm_bad += 1;
        }
    }
    checks.push(CheckResult::new(
        "inverted-commutator-identity",
        comm_bad == 0,
        format!(
            "[u1^-1, u2] = [u1, u2^-1] exactly and at every quotient level ({} bad)",
            comm_bad
        ),
    ));

    let mut words_bad = 0usize;
    let mut labels_bad = 0usize;
    for n in 0..=nmax {
        let sigma = chamber_cycle(n);
        if sigma.terms.len() != 8 || sigma.coefficient_sum() != rat(0) {
            words_bad += 1;
        }
        let distinct: std::collections::BTreeSet<_> =
            sigma.terms.iter().map(|(_, w)| w.clone()).collect();
        if distinct.len() != 8 {
            words_bad += 1;
        }
        let quotient_distinct: std::collections::BTreeSet<_> =
            sigma.terms.iter().map(|(_, w)| w.truncate(n)).collect();
        if quotient_distinct.len() != if n == 0 { 8 } else { 7 } {
            words_bad += 1;
        }

        let labels: Vec<(Rat, Rat)> = sigma.terms.iter().map(|(_, w)| w.label(n)).collect();
        let count =
            |q: i64, r: i64| labels.iter().filter(|l| **l == (rat(q), rat(r))).count();
        let multiset_ok = count(0, 0) == 2
            && [(-1, 0), (-1, 1), (0, 1), (0, -1), (1, -1), (1, 0)]
                .iter()
                .all(|(q, r)| count(*q, *r) == 1);
        if !multiset_ok {
            labels_bad += 1;
        }
    }
    checks.push(CheckResult::new(
        "eight-words",
        words_bad == 0,
        format!("8 alternating words, distinct, sum 0 ({} bad)", words_bad),
    ));
    checks.push(CheckResult::new(
        "label-multiset",
        labels_bad == 0,
        format!("labels (0,0)x2 plus the six unit shifts ({} bad)", labels_bad),
    ));

    LemmaReport::new(
        "cycle-words",
        "The eight-chamber cycle closes up",
        checks,
        false,
    )
}

/// The pairing matrix: diagonal -2, vanishing above the diagonal index,
/// full rank, with exact certificates.
pub fn check_pairing(nmax: usize) -> (LemmaReport, PairingMatrix) {
    let m = pairing_matrix(nmax);
    let size = m.size();

    let mut diag_bad = 0usize;
    let mut lower_bad = 0usize;
    let mut cert_bad = 0usize;
    for row in 0..size {
        for col in 0..size {
            let value = m.value(row, col);
            match m.certificate(row, col) {
                PairingCertificate::Diagonal { value: v } => {
                    if row != col || v != value || *value != rat(-2) {
                        diag_bad += 1;
                    }
                }
                PairingCertificate::Zero { cert, base_chamber_disjoint } => {
                    if *value != rat(0) || !base_chamber_disjoint {
                        cert_bad += 1;
                    }
                    match cert {
                        ZeroCertificate::PeakAboveSupport { peak_sq, support_max_sq } => {
                            if row <= col || peak_sq <= support_max_sq {
                                lower_bad += 1;
                            }
                        }
                        ZeroCertificate::PeakBelowSupport { peak_sq, support_min_sq } => {
                            if row >= col || peak_sq >= support_min_sq {
                                cert_bad += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    let rank = m.rank();
    let checks = vec![
        CheckResult::new(
            "diagonal-minus-two",
            diag_bad == 0,
            format!("{} diagonal entries, all -2 ({} bad)", size, diag_bad),
        ),
        CheckResult::new(
            "vanishing-above-cycle-index",
            lower_bad == 0,
            format!("entries with m > n are 0 with height certificates ({} bad)", lower_bad),
        ),
        CheckResult::new(
            "local-model-zeros",
            cert_bad == 0,
            format!("entries with m < n are 0 in the local model ({} bad)", cert_bad),
        ),
        CheckResult::new(
            "full-rank",
            rank == size && m.is_triangular(),
            format!("rank {} of {}, triangular", rank, size),
        ),
    ];
    (
        LemmaReport::new(
            "pairing",
            "The pairing matrix is triangular with diagonal -2 and full rank",
            checks,
            false,
        ),
        m,
    )
}

/// Run every suite with the given parameters.
pub fn verify_all(params: Params) -> Result<VerificationReport, ConfigError> {
    if params.imax < 2 * params.nmax as i64 + 3 {
        return Err(ConfigError(format!(
            "window i <= {} too small for n_max = {} (need i_max >= {})",
            params.imax,
            params.nmax,
            2 * params.nmax + 3
        )));
    }

    let start = Instant::now();
    let mut lemmas = Vec::new();
    let mut flags = Vec::new();

    lemmas.push(check_stabilizer_oracle(params.seed, 200));
    lemmas.push(check_flat_edge_profiles(params.nmax));
    lemmas.push(check_flat_census_and_morse(params.imax));
    lemmas.push(check_sandwich(params.imax));
    lemmas.push(check_descending_links(12));
    lemmas.push(check_labels(params.seed, params.nmax));

    let (cocycle_report, mut cocycle_flags) = check_local_cocycle(params.seed, params.nmax);
    lemmas.push(cocycle_report);
    flags.append(&mut cocycle_flags);

    lemmas.push(check_cycle_words(params.seed, params.nmax));

    let (pairing_report, matrix) = check_pairing(params.nmax);
    lemmas.push(pairing_report);
    flags.push(Flag {
        id: "pairing-upper-entries".into(),
        note: "entries with m < n are certified 0 by the local model; independence needs only \
               the m > n vanishing together with the nonzero diagonal"
            .into(),
    });

    let pairing_json: Vec<Vec<RatJson>> = (0..matrix.size())
        .map(|r| (0..matrix.size()).map(|c| RatJson::from(matrix.value(r, c))).collect())
        .collect();

    let overall = if lemmas.iter().any(|l| l.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    };

    Ok(VerificationReport {
        parameters: params,
        lemmas,
        pairing_matrix: pairing_json,
        flags,
        elapsed_ms: start.elapsed().as_millis(),
        overall,
    })
}
