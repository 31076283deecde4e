//! Implementations behind the `sector` subcommands. Each returns its
//! human-readable text, a JSON value, and whether the invariants it
//! asserts all held.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use serde_json::{json, Value};

use sector_core::apartment::{
    av, boundary_class, flat_edge_endpoints, Node, Region, SectorVertex, Window,
};
use sector_core::cocycle::{boundary, chamber_cycle, cocycle_value, project};
use sector_core::links::descending_link;
use sector_core::matrix::Mat3;
use sector_core::morse::{
    census_levels, morse_table, node_key, sector_representative,
};
use sector_core::pairing::pairing_matrix;
use sector_core::poly::{rat, Degree, Poly};
use sector_core::stabilizer::{enumerate_generators, membership, vertex_profile};

use crate::render::render_sector;
use crate::report::{Params, RatJson, Status, VerificationReport};
use crate::verify::verify_all;

pub struct CommandOutput {
    pub human: String,
    pub json: Value,
    pub ok: bool,
}

fn describe_generator(m: &Mat3) -> String {
    let mut off = Vec::new();
    for r in 0..3 {
        for c in 0..3 {
            if r != c && !m.entry(r, c).is_zero() {
                off.push((r, c));
            }
        }
    }
    match off.as_slice() {
        [] => {
            let signs: Vec<String> = (0..3).map(|k| m.entry(k, k).to_string()).collect();
            format!("diag({})", signs.join(", "))
        }
        [(r, c)] => format!("e({}{}; {})", r + 1, c + 1, m.entry(*r, *c)),
        _ => format!("{}", m),
    }
}

pub fn cmd_stab(i: i64, j: i64) -> Result<CommandOutput> {
    let Some(v) = SectorVertex::new(i, j) else {
        bail!("({}, {}) is not a sector vertex (need i >= j >= 0)", i, j);
    };
    let class = boundary_class(v);
    let p = vertex_profile(v);
    let gens = enumerate_generators(&p);
    let ok = gens.iter().all(|g| membership(g, &p));

    let mut human = String::new();
    let _ = writeln!(human, "stabilizer of vertex ({}, {}) [{:?}]", i, j, class);
    let _ = writeln!(human, "degree bounds (entry k,l admits degree <= B[k][l]; negative means the entry vanishes):");
    for r in 0..3 {
        let row: Vec<String> = (0..3).map(|c| p.bound(r, c).to_string()).collect();
        let _ = writeln!(human, "  [ {} ]", row.join("  "));
    }
    let _ = writeln!(human, "generators ({}):", gens.len());
    for g in &gens {
        let _ = writeln!(human, "  {}", describe_generator(g));
    }
    let _ = writeln!(human, "all generators pass membership: {}", ok);

    let bounds: Vec<Vec<i64>> = (0..3)
        .map(|r| {
            (0..3)
                .map(|c| match p.bound(r, c) {
                    Degree::Fin(b) => b,
                    Degree::NegInf => i64::MIN,
                })
                .collect()
        })
        .collect();
    let json = json!({
        "vertex": [i, j],
        "class": format!("{:?}", class),
        "bounds": bounds,
        "generator_count": gens.len(),
        "generators": gens.iter().map(describe_generator).collect::<Vec<_>>(),
    });
    Ok(CommandOutput { human, json, ok })
}

pub fn cmd_heights(imax: i64) -> Result<CommandOutput> {
    let table = morse_table(Window::new(imax));
    let mut rows: Vec<(i64, Node)> = table.nodes().map(|(v, h)| (*h, *v)).collect();
    rows.sort();

    let mut human = String::new();
    let _ = writeln!(human, "Morse relabel over the sector window i <= {} ({} vertices):", imax, rows.len());
    for (h, v) in &rows {
        let _ = writeln!(human, "  h = {:>4}   qsq = {:>5}   {}", h, node_key(*v).qsq, v);
    }

    let json: Vec<Value> = rows
        .iter()
        .map(|(h, v)| match v {
            Node::Lat(p) => json!({"i": p.i, "j": p.j, "qsq": node_key(*v).qsq, "h": h}),
            Node::Mid(a, _) => {
                let n = sector_core::morse::flat_level(node_key(*v).qsq).unwrap();
                json!({"mid_n": n, "i": a.i, "qsq": node_key(*v).qsq, "h": h})
            }
        })
        .collect();
    Ok(CommandOutput { human, json: json!({"imax": imax, "vertices": json}), ok: true })
}

pub fn cmd_flat_edges(imax: i64) -> Result<CommandOutput> {
    let w = Window::new(imax);
    let levels = census_levels(w);
    let census = sector_core::morse::flat_edge_census(w);
    let ok = census.len() == levels.len();

    let mut human = String::new();
    let _ = writeln!(human, "height-flat edges in window i <= {}:", imax);
    for n in &levels {
        let (a, b) = flat_edge_endpoints(*n);
        let _ = writeln!(human, "  n = {:>2}: {} -- {}", n, a, b);
    }
    let _ = writeln!(human, "census matches the closed-form family: {}", ok);

    let json = json!({
        "imax": imax,
        "flat_edges": levels.iter().map(|n| {
            let (a, b) = flat_edge_endpoints(*n);
            json!({"n": n, "endpoints": [[a.i, a.j], [b.i, b.j]]})
        }).collect::<Vec<_>>(),
    });
    Ok(CommandOutput { human, json, ok })
}

pub fn cmd_link(i: i64, j: i64, imax: i64) -> Result<CommandOutput> {
    let v = av(i, j);
    let rep = sector_representative(v);
    if rep.i() + 2 > imax {
        bail!(
            "vertex ({}, {}) needs a window of at least i <= {} (got {})",
            i,
            j,
            rep.i() + 2,
            imax
        );
    }
    let w = Window::new(imax);
    let table = morse_table(w);
    let node = Node::Lat(v);
    let dl = descending_link(node, &table, Region::Apartment, w)?;

    let is_origin = v == av(0, 0);
    let edges = dl.edges();
    let connected = dl.is_connected();
    let ok = if is_origin {
        dl.is_empty()
    } else {
        !dl.is_empty() && connected && edges.len() <= 2
    };

    let mut human = String::new();
    let _ = writeln!(human, "descending link of {} in the modified apartment:", v);
    if dl.is_empty() {
        let _ = writeln!(human, "  empty{}", if is_origin { " (the base vertex)" } else { "" });
    } else {
        for c in &dl.cells {
            let _ = writeln!(human, "  {}", c);
        }
        let _ = writeln!(human, "edges: {}   connected: {}", edges.len(), connected);
    }

    let json = json!({
        "vertex": [i, j],
        "edges": edges.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "vertices": dl.vertex_nodes().iter().map(|n| n.to_string()).collect::<Vec<_>>(),
        "edge_count": edges.len(),
        "connected": connected,
        "empty": dl.is_empty(),
    });
    Ok(CommandOutput { human, json, ok })
}

pub fn cmd_cycle(n: usize) -> Result<CommandOutput> {
    let sigma = chamber_cycle(n);
    let hat = project(n, &sigma);
    let value = cocycle_value(&hat);
    let boundary_zero = boundary(&hat).is_zero();
    let ok = value == rat(-2) && boundary_zero;

    let mut human = String::new();
    let _ = writeln!(human, "chamber cycle at level {} (u1 = e(12; t^{}), u2 = e(23; t^{})):", n, n, n);
    for (coeff, word) in &sigma.terms {
        let (a, b) = word.label(n);
        let _ = writeln!(human, "  {:>2} * word {}   label ({}, {})", coeff, word, a, b);
    }
    let _ = writeln!(human, "projected chain: {}", hat);
    let _ = writeln!(human, "cocycle value: {}   boundary zero: {}", value, boundary_zero);

    let words: Vec<Value> = sigma
        .terms
        .iter()
        .map(|(coeff, word)| {
            let (a, b) = word.label(n);
            json!({
                "coeff": RatJson::from(coeff),
                "x": word.x.to_string(),
                "y": word.y.to_string(),
                "z": word.z.to_string(),
                "label": [RatJson::from(&a), RatJson::from(&b)],
            })
        })
        .collect();
    let projected: Vec<Value> = hat
        .iter()
        .map(|((q, r), c)| {
            json!({"q": RatJson::from(q), "r": RatJson::from(r), "coeff": RatJson::from(c)})
        })
        .collect();
    let json = json!({
        "n": n,
        "words": words,
        "projected": projected,
        "value": RatJson::from(&value),
        "boundary_zero": boundary_zero,
    });
    Ok(CommandOutput { human, json, ok })
}

pub fn cmd_pairing(nmax: usize) -> Result<CommandOutput> {
    let m = pairing_matrix(nmax);
    let rank = m.rank();
    let triangular = m.is_triangular();
    let ok = triangular && rank == m.size();

    let mut human = String::new();
    let _ = writeln!(human, "pairing matrix, cocycle level (rows) x cycle index (cols), 0..={}:", nmax);
    for r in 0..m.size() {
        let row: Vec<String> = (0..m.size()).map(|c| format!("{:>3}", m.value(r, c))).collect();
        let _ = writeln!(human, "  [ {} ]", row.join(" "));
    }
    let _ = writeln!(human, "rank: {}   triangular with diagonal -2: {}", rank, triangular);
    let _ = writeln!(human, "off-diagonal certificates:");
    for r in 0..m.size().min(3) {
        for c in 0..m.size().min(3) {
            if r != c {
                let _ = writeln!(human, "  ({}, {}): {}", r, c, m.certificate(r, c));
            }
        }
    }

    let entries: Vec<Vec<RatJson>> = (0..m.size())
        .map(|r| (0..m.size()).map(|c| RatJson::from(m.value(r, c))).collect())
        .collect();
    let certificates: Vec<Vec<String>> = (0..m.size())
        .map(|r| (0..m.size()).map(|c| m.certificate(r, c).to_string()).collect())
        .collect();
    let json = json!({
        "n_max": nmax,
        "entries": entries,
        "certificates": certificates,
        "rank": rank,
        "triangular": triangular,
    });
    Ok(CommandOutput { human, json, ok })
}

pub fn cmd_render(imax: i64, out: &std::path::Path) -> Result<CommandOutput> {
    let svg = render_sector(imax);
    std::fs::write(out, &svg)?;
    let highlighted = if imax >= 0 { census_levels(Window::new(imax)) } else { Vec::new() };

    let human = format!(
        "wrote {} ({} bytes), {} flat edges highlighted\n",
        out.display(),
        svg.len(),
        highlighted.len()
    );
    let json = json!({
        "out": out.display().to_string(),
        "imax": imax,
        "bytes": svg.len(),
        "highlighted": highlighted,
    });
    Ok(CommandOutput { human, json, ok: true })
}

pub fn cmd_verify(params: Params) -> Result<CommandOutput> {
    let report = verify_all(params)?;
    let human = render_report(&report);
    let json = serde_json::to_value(&report)?;
    let ok = report.passed();
    Ok(CommandOutput { human, json, ok })
}

pub fn render_report(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "verification with imax = {}, nmax = {}, seed = {}",
        report.parameters.imax, report.parameters.nmax, report.parameters.seed
    );
    for lemma in &report.lemmas {
        let tag = match lemma.status {
            Status::Pass => "PASS   ",
            Status::Fail => "FAIL   ",
            Status::Flagged => "FLAGGED",
        };
        let _ = writeln!(
            out,
            "{} {:<24} {} ({}/{} checks)",
            tag,
            lemma.id,
            lemma.title,
            lemma.passed_count,
            lemma.checks.len()
        );
        for check in &lemma.checks {
            if !check.passed {
                let _ = writeln!(out, "        FAILED {}: {}", check.name, check.details);
            }
        }
    }
    for flag in &report.flags {
        let _ = writeln!(out, "flag    {}: {}", flag.id, flag.note);
    }
    let _ = writeln!(
        out,
        "overall: {} ({} ms)",
        match report.overall {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        },
        report.elapsed_ms
    );
    out
}
