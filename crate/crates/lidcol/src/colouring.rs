//! Colouring data model and the definitional checkers: properness, bad
//! edges, local injectivity, distance-two clashes, and the lid/slid
//! verdicts. `verify` is the ground-truth oracle every constructive
//! algorithm in this crate is tested against.

use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex};
use crate::Error;

/// Total vertex → colour map with an explicit palette size. Colours are
/// 1-based; the palette is carried separately so "more colours available
/// than forbidden" arguments can be checked against it rather than against
/// the colours actually in use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<u32>,
    palette_size: u32,
}

impl Colouring {
    pub fn new(colours: Vec<u32>, palette_size: u32) -> Result<Colouring, Error> {
        if palette_size == 0 {
            return Err(Error::invalid_input("palette size must be positive"));
        }
        for (v, &c) in colours.iter().enumerate() {
            if c == 0 || c > palette_size {
                return Err(Error::invalid_input(format!(
                    "vertex {v} has colour {c} outside palette 1..={palette_size}"
                )));
            }
        }
        Ok(Colouring {
            colours,
            palette_size,
        })
    }

    pub fn colour(&self, v: Vertex) -> u32 {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    /// Number of distinct colours in use.
    pub fn colours_used(&self) -> usize {
        self.colours.iter().collect::<BTreeSet<_>>().len()
    }

    /// c(S), the set of colours appearing on S.
    pub fn colour_set(&self, s: &[Vertex]) -> BTreeSet<u32> {
        s.iter().map(|&v| self.colours[v]).collect()
    }

    /// Copy with vertex v recoloured. The colour must fit the palette.
    pub fn recolour(&self, v: Vertex, colour: u32) -> Colouring {
        assert!(
            colour >= 1 && colour <= self.palette_size,
            "colour {colour} outside palette 1..={}",
            self.palette_size
        );
        let mut next = self.clone();
        next.colours[v] = colour;
        next
    }
}

/// Which verdict a caller is interested in. The report always carries the
/// full violation lists for both notions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Lid,
    Slid,
}

/// Everything `verify` finds, with deterministic (lexicographic) list
/// orders so reports are stable test fixtures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Edges whose endpoints share a colour.
    pub improper_edges: Vec<(Vertex, Vertex)>,
    /// Edges uv with N[u] ≠ N[v] but c(N[u]) = c(N[v]).
    pub bad_edges: Vec<(Vertex, Vertex)>,
    /// (vertex, colour) pairs where the colour repeats inside N[vertex].
    pub injectivity_violations: Vec<(Vertex, u32)>,
    /// Vertex pairs at distance ≤ 2 sharing a colour.
    pub distance2_violations: Vec<(Vertex, Vertex)>,
    pub is_lid: bool,
    pub is_slid: bool,
}

/// Exactly the edges uv with N[u] ≠ N[v] and c(N[u]) = c(N[v]),
/// lexicographically ordered.
pub fn bad_edges(g: &Graph, c: &Colouring) -> Vec<(Vertex, Vertex)> {
    assert_eq!(c.len(), g.n(), "colouring does not cover the graph");
    let sets: Vec<BTreeSet<u32>> = (0..g.n())
        .map(|v| c.colour_set(&g.closed_neighbourhood(v)))
        .collect();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if sets[u] == sets[v] && !g.closed_twins(u, v) {
            out.push((u, v));
        }
    }
    out
}

/// Symmetric difference of c(N[u]) and c(N[v]) — the colours separating u
/// from v.
pub fn separating_colours(g: &Graph, c: &Colouring, u: Vertex, v: Vertex) -> BTreeSet<u32> {
    assert!(u != v, "separating_colours needs two distinct vertices");
    let a = c.colour_set(&g.closed_neighbourhood(u));
    let b = c.colour_set(&g.closed_neighbourhood(v));
    a.symmetric_difference(&b).copied().collect()
}

/// Checks a colouring against the lid/slid definitions and reports every
/// violation. Pure function of (g, c); the mode only records which verdict
/// the caller cares about at the CLI boundary.
pub fn verify(g: &Graph, c: &Colouring, _mode: Mode) -> VerificationReport {
    assert_eq!(c.len(), g.n(), "colouring does not cover the graph");
    let n = g.n();

    let mut improper_edges = Vec::new();
    for (u, v) in g.edges() {
        if c.colour(u) == c.colour(v) {
            improper_edges.push((u, v));
        }
    }

    let bad_edges = bad_edges(g, c);

    let mut injectivity_violations = Vec::new();
    for v in 0..n {
        let mut seen: Vec<u32> = g
            .closed_neighbourhood(v)
            .iter()
            .map(|&u| c.colour(u))
            .collect();
        seen.sort_unstable();
        let mut dup: Vec<u32> = Vec::new();
        for w in seen.windows(2) {
            if w[0] == w[1] && dup.last() != Some(&w[0]) {
                dup.push(w[0]);
            }
        }
        for colour in dup {
            injectivity_violations.push((v, colour));
        }
    }

    // Distance ≤ 2 pairs via neighbourhood enumeration: every such pair is
    // either an edge or a pair of neighbours of some common vertex.
    let mut d2: BTreeSet<(Vertex, Vertex)> = improper_edges.iter().copied().collect();
    for w in 0..n {
        let nb = g.neighbours(w);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if c.colour(a) == c.colour(b) {
                    d2.insert((a.min(b), a.max(b)));
                }
            }
        }
    }
    let distance2_violations: Vec<(Vertex, Vertex)> = d2.into_iter().collect();

    let is_lid = improper_edges.is_empty() && bad_edges.is_empty();
    let is_slid = is_lid && injectivity_violations.is_empty() && distance2_violations.is_empty();
    VerificationReport {
        improper_edges,
        bad_edges,
        injectivity_violations,
        distance2_violations,
        is_lid,
        is_slid,
    }
}

/// The all-distinct colouring c(v) = v + 1: a universal sanity fixture that
/// is lid and slid on every graph.
pub fn all_distinct(g: &Graph) -> Colouring {
    let n = g.n() as u32;
    Colouring::new((1..=n).collect(), n.max(1)).expect("all-distinct is within palette")
}
