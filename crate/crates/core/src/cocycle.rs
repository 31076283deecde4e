//! Chains on the quotient descending link, the local cocycle, and the
//! explicit eight-chamber cycles.
//!
//! Edges of the level-n quotient link carry labels (q, r); the local
//! cocycle sends a chain to the sum of coeff * q * r over its terms, and
//! is invariant under label translation on every 1-cycle. The n-th
//! chamber cycle is the alternating eight-term chain in translates of the
//! base chamber under words in u1 = e12(t^n), u2 = e23(t^n); its projection
//! to the link is a 1-cycle with cocycle value -2, independently of n.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::apartment::{av, ApartmentVertex};
use crate::matrix::Unipotent;
use crate::poly::{rat, Poly, Rat};

/// Formal Q-linear combination of labeled quotient-link edges. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinkChain {
    terms: BTreeMap<(Rat, Rat), Rat>,
}

impl LinkChain {
    pub fn new() -> LinkChain {
        LinkChain::default()
    }

    pub fn edge(q: Rat, r: Rat) -> LinkChain {
        let mut c = LinkChain::new();
        c.add((q, r), rat(1));
        c
    }

    pub fn add(&mut self, label: (Rat, Rat), coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(label.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&label);
        }
    }

    pub fn coeff(&self, label: &(Rat, Rat)) -> Rat {
        self.terms.get(label).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Rat, Rat), &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &LinkChain) -> LinkChain {
        let mut out = self.clone();
        for (label, coeff) in other.iter() {
            out.add(label.clone(), coeff.clone());
        }
        out
    }

    pub fn scaled(&self, by: &Rat) -> LinkChain {
        let mut out = LinkChain::new();
        for (label, coeff) in self.iter() {
            out.add(label.clone(), coeff * by);
        }
        out
    }

    /// Translate every label by (a, b); the chain-level action of a group
    /// element with that label.
    pub fn shifted(&self, a: &Rat, b: &Rat) -> LinkChain {
        let mut out = LinkChain::new();
        for ((q, r), coeff) in self.iter() {
            out.add((q + a, r + b), coeff.clone());
        }
        out
    }

    /// Sum of absolute coefficient values.
    pub fn mass(&self) -> Rat {
        use num_traits::Signed;
        self.terms.values().map(|c| c.abs()).fold(Rat::zero(), |a, b| a + b)
    }
}

impl fmt::Display for LinkChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, ((q, r), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*e[{},{}]", c, q, r)?;
        }
        Ok(())
    }
}

/// A vertex of the bipartite link: the e12-side family is parametrized by
/// the first label coordinate, the e23-side by the second.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LinkVertex {
    QFamily(Rat),
    RFamily(Rat),
}

/// Formal vertex chain, the target of the boundary map.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VertexChain {
    terms: BTreeMap<LinkVertex, Rat>,
}

impl VertexChain {
    pub fn add(&mut self, v: LinkVertex, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(v.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LinkVertex, &Rat)> {
        self.terms.iter()
    }
}

/// Simplicial boundary under the fixed orientation from the q-family to
/// the r-family: an edge (q, r) contributes r-vertex minus q-vertex.
pub fn boundary(chain: &LinkChain) -> VertexChain {
    let mut out = VertexChain::default();
    for ((q, r), coeff) in chain.iter() {
        out.add(LinkVertex::RFamily(r.clone()), coeff.clone());
        out.add(LinkVertex::QFamily(q.clone()), -coeff);
    }
    out
}

/// The local cocycle: sum of coeff * q * r over the chain.
pub fn cocycle_value(chain: &LinkChain) -> Rat {
    let mut acc = Rat::zero();
    for ((q, r), coeff) in chain.iter() {
        acc += coeff * &(q * r);
    }
    acc
}

/// The length-4 loop through labels (q1, r1), (q2, r1), (q2, r2), (q1, r2),
/// with alternating signs. Its cocycle value is (q1 - q2)(r1 - r2).
pub fn four_loop(q1: &Rat, r1: &Rat, q2: &Rat, r2: &Rat) -> LinkChain {
    let mut c = LinkChain::new();
    c.add((q1.clone(), r1.clone()), rat(1));
    c.add((q2.clone(), r1.clone()), rat(-1));
    c.add((q2.clone(), r2.clone()), rat(1));
    c.add((q1.clone(), r2.clone()), rat(-1));
    c
}

/// Formal Q-linear combination of unipotent translates of the implicit
/// base chamber; words are stored in canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChamberChain {
    pub terms: Vec<(Rat, Unipotent)>,
}

impl ChamberChain {
    pub fn coefficient_sum(&self) -> Rat {
        self.terms.iter().map(|(c, _)| c.clone()).fold(Rat::zero(), |a, b| a + b)
    }
}

/// The base chamber of the n-th cycle: the triangle on (2n-1, n-1),
/// (2n-1, n), (2n, n), whose unique height maximum is the peak vertex
/// (2n, n) for n >= 1.
pub fn cycle_base_chamber(n: usize) -> [ApartmentVertex; 3] {
    let n = n as i64;
    [av(2 * n - 1, n - 1), av(2 * n - 1, n), av(2 * n, n)]
}

/// The alternating eight-term chamber cycle built from u1 = e12(t^n) and
/// u2 = e23(t^n): the words are
/// 1, u1^-1, u1^-1 u2, u1^-1 u2 u1, [u1^-1, u2], u1 u2^-1 u1^-1, u1 u2^-1, u1
/// with signs +, -, +, -, +, -, +, -.
pub fn chamber_cycle(n: usize) -> ChamberChain {
    let u1 = Unipotent::e12(Poly::t_pow(n));
    let u2 = Unipotent::e23(Poly::t_pow(n));
    let u1_inv = u1.inverse();
    let u2_inv = u2.inverse();

    let words = [
        Unipotent::identity(),
        u1_inv.clone(),
        &u1_inv * &u2,
        &(&u1_inv * &u2) * &u1,
        Unipotent::commutator(&u1_inv, &u2),
        &(&u1 * &u2_inv) * &u1_inv,
        &u1 * &u2_inv,
        u1.clone(),
    ];

    let terms = words
        .into_iter()
        .enumerate()
        .map(|(k, w)| (if k % 2 == 0 { rat(1) } else { rat(-1) }, w))
        .collect();
    ChamberChain { terms }
}

/// Project a chamber chain to the level-n quotient link: each translate
/// contributes its word's degree-n label, merged additively.
pub fn project(n: usize, chain: &ChamberChain) -> LinkChain {
    let mut out = LinkChain::new();
    for (coeff, word) in &chain.terms {
        out.add(word.label(n), coeff.clone());
    }
    out
}

/// The projected n-th cycle: a 1-cycle in the quotient link with cocycle
/// value -2.
pub fn projected_cycle(n: usize) -> LinkChain {
    project(n, &chamber_cycle(n))
}
