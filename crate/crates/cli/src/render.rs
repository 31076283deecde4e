//! SVG figure of the sector window: the triangulated cone with vertices
//! labeled by their integer height, flat edges highlighted, and their
//! subdivision midpoints marked.
//!
//! Embedding convention: vertex (i, j) sits at i*(1, 0) + j*(cos 60, sin 60),
//! scaled, with the SVG y axis flipped.

use std::fmt::Write as _;

use sector_core::apartment::{flat_edge_endpoints, ApartmentVertex, Node, Window};
use sector_core::morse::{census_levels, morse_table};

const SCALE: f64 = 56.0;
const MARGIN: f64 = 40.0;
const SIN60: f64 = 0.866_025_403_784_438_6;
const COS60: f64 = 0.5;

struct Frame {
    height: f64,
}

impl Frame {
    fn place(&self, v: ApartmentVertex) -> (f64, f64) {
        let x = MARGIN + SCALE * (v.i as f64 + COS60 * v.j as f64);
        let y = self.height - MARGIN - SCALE * (SIN60 * v.j as f64);
        (x, y)
    }
}

/// Render the sector window with i <= imax. A negative bound yields a
/// header-only document.
pub fn render_sector(imax: i64) -> String {
    let mut svg = String::new();
    if imax < 0 {
        svg.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1 1\" width=\"1\" height=\"1\"></svg>\n");
        return svg;
    }

    let w = Window::new(imax);
    let table = morse_table(w);
    let census = census_levels(w);

    let width = 2.0 * MARGIN + SCALE * 1.5 * imax as f64 + 20.0;
    let height = 2.0 * MARGIN + SCALE * SIN60 * imax as f64;
    let frame = Frame { height };

    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {width:.0} {height:.0}\" width=\"{width:.0}\" height=\"{height:.0}\">\n"
    );
    svg.push_str("<style>text{font-family:monospace;font-size:11px;fill:#333}</style>\n");

    // Plain edges first, flat edges highlighted on top.
    let flat_pairs: Vec<(ApartmentVertex, ApartmentVertex)> =
        census.iter().map(|n| flat_edge_endpoints(*n)).collect();
    svg.push_str("<g id=\"edges\" stroke=\"#b9c4cc\" stroke-width=\"1.4\">\n");
    for ((a, b), _) in w.sector_edges_with_multiplicity() {
        if flat_pairs.contains(&(a, b)) {
            continue;
        }
        let (x1, y1) = frame.place(a);
        let (x2, y2) = frame.place(b);
        let _ = write!(svg, "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\"/>\n");
    }
    svg.push_str("</g>\n");

    svg.push_str("<g id=\"flat-edges\" stroke=\"#d1342f\" stroke-width=\"3.2\">\n");
    for n in &census {
        let (a, b) = flat_edge_endpoints(*n);
        let (x1, y1) = frame.place(a);
        let (x2, y2) = frame.place(b);
        let _ = write!(
            svg,
            "<line class=\"flat\" data-flat-n=\"{n}\" x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\"/>\n"
        );
    }
    svg.push_str("</g>\n");

    // Subdivision midpoints of the highlighted edges.
    svg.push_str("<g id=\"midpoints\" fill=\"#d1342f\">\n");
    for n in &census {
        let (a, b) = flat_edge_endpoints(*n);
        let (x1, y1) = frame.place(a);
        let (x2, y2) = frame.place(b);
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let h = table.h(Node::mid(a, b)).unwrap();
        let _ = write!(svg, "<circle cx=\"{mx:.1}\" cy=\"{my:.1}\" r=\"3.4\"/>\n");
        let _ = write!(
            svg,
            "<text x=\"{:.1}\" y=\"{:.1}\" fill=\"#d1342f\">{h}</text>\n",
            mx + 5.0,
            my - 5.0
        );
    }
    svg.push_str("</g>\n");

    svg.push_str("<g id=\"vertices\">\n");
    for v in w.sector_vertices() {
        let (x, y) = frame.place(v.vertex());
        let h = table.h(Node::Lat(v.vertex())).unwrap();
        let _ = write!(svg, "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"2.6\" fill=\"#30404d\"/>\n");
        let _ = write!(svg, "<text x=\"{:.1}\" y=\"{:.1}\">{h}</text>\n", x + 4.0, y + 12.0);
    }
    svg.push_str("</g>\n");

    let _ = write!(
        svg,
        "<text x=\"{MARGIN:.0}\" y=\"20\">sector window i &lt;= {imax}; vertices labeled by the Morse relabel h; flat edges highlighted</text>\n"
    );

    svg.push_str("</svg>\n");
    svg
}
