//! Constructive machinery: recolouring lists from both lemmas, the
//! degeneracy-induction colourings, the total dispatchers with their
//! regular-graph handling, and the chordal construction.

mod chordal;
mod degenerate;
mod forbidden;

pub use chordal::{bound_m, slid_colour_chordal};
pub use degenerate::{lid_colour_degenerate, slid_colour_degenerate};
pub use forbidden::{
    classify_neighbour, forbidden_list_lid, forbidden_list_slid, ForbiddenList, ForbiddenReason,
    NeighbourClass, VertexClass,
};

use std::fmt;

use crate::colouring::{Colouring, Mode};
use crate::graph::{Graph, Vertex};
use crate::special::{cycle_lid_colouring, cycle_slid_colouring, lid_cycle_value, slid_cycle_value};

/// Which published bound the dispatcher applies to a graph, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundRule {
    /// Δ ≤ 1: properness is the only constraint.
    Trivial,
    /// Δ = 2: five (lid) / seven (slid) colours cover cycles and paths.
    MaxDegreeTwo,
    /// Connected non-regular, Δ ≥ 3: the degeneracy construction.
    Degenerate { delta: usize, d: usize },
    /// Connected Δ-regular, Δ ≥ 3: one-vertex removal over the degeneracy
    /// construction.
    Regular { delta: usize },
    /// Chordal construction, M(ω, Δ) + 1.
    Chordal { omega: usize, delta: usize },
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundRule::Trivial => write!(f, "trivial (max degree <= 1)"),
            BoundRule::MaxDegreeTwo => write!(f, "max degree 2"),
            BoundRule::Degenerate { delta, d } => {
                write!(f, "degenerate (delta={delta}, d={d})")
            }
            BoundRule::Regular { delta } => {
                write!(f, "regular (delta={delta})")
            }
            BoundRule::Chordal { omega, delta } => {
                write!(f, "chordal (omega={omega}, delta={delta})")
            }
        }
    }
}

/// The bound the dispatcher guarantees for this graph: the largest bound
/// over its components, with the rule that produced it.
pub fn applied_bound(g: &Graph, mode: Mode) -> (BoundRule, u32) {
    let mut best: Option<(BoundRule, u32)> = None;
    for comp in g.connected_components() {
        let sub = g.induced(&comp);
        let delta = sub.max_degree();
        let (rule, bound) = match (delta, mode) {
            (0 | 1, _) => (BoundRule::Trivial, 2),
            (2, Mode::Lid) => (BoundRule::MaxDegreeTwo, 5),
            (2, Mode::Slid) => (BoundRule::MaxDegreeTwo, 7),
            _ => {
                let regular = (0..sub.n()).all(|v| sub.degree(v) == delta);
                if regular {
                    let b = match mode {
                        Mode::Lid => 2 * delta * delta - 3 * delta + 3,
                        Mode::Slid => 2 * delta * delta - delta + 1,
                    };
                    (BoundRule::Regular { delta }, b as u32)
                } else {
                    let d = sub.degeneracy_ordering().width;
                    let b = match mode {
                        Mode::Lid => 2 * (delta - 1) * (delta - 1) + d,
                        Mode::Slid => (delta - 1) * (2 * delta - 1) + 2 * d - 1,
                    };
                    (BoundRule::Degenerate { delta, d }, b as u32)
                }
            }
        };
        if best.is_none_or(|(_, b)| bound > b) {
            best = Some((rule, bound));
        }
    }
    best.unwrap_or((BoundRule::Trivial, 2))
}

/// Lid-colouring of any graph, components coloured independently:
/// ≤ 2 colours for Δ ≤ 1, ≤ 5 for Δ = 2 (cycle/path words), and for Δ ≥ 3
/// the degeneracy construction or, on regular components, its one-vertex-
/// removal variant —
/// never more than 2Δ² − 3Δ + 3 colours.
pub fn lid_colour(g: &Graph) -> Colouring {
    colour_by_components(g, Mode::Lid)
}

/// Slid analogue of [`lid_colour`]: ≤ 7 colours for Δ = 2, and at most
/// (Δ−1)(2Δ−1) + 2d − 1 resp. 2Δ² − Δ + 1 colours beyond that.
pub fn slid_colour(g: &Graph) -> Colouring {
    colour_by_components(g, Mode::Slid)
}

fn colour_by_components(g: &Graph, mode: Mode) -> Colouring {
    let mut colours = vec![0u32; g.n()];
    let mut palette = 1u32;
    for comp in g.connected_components() {
        let sub = g.induced(&comp);
        let (sub_colours, sub_palette) = colour_component(&sub, mode);
        for (i, &v) in comp.iter().enumerate() {
            colours[v] = sub_colours[i];
        }
        palette = palette.max(sub_palette);
    }
    Colouring::new(colours, palette).expect("component colours fit the palette")
}

fn colour_component(sub: &Graph, mode: Mode) -> (Vec<u32>, u32) {
    let n = sub.n();
    let delta = sub.max_degree();
    match delta {
        0 => (vec![1], 1),
        1 => (vec![1, 2], 2), // connected with Δ = 1 is a single edge
        2 => {
            if (0..n).all(|v| sub.degree(v) == 2) {
                cycle_component(sub, mode)
            } else {
                path_component(sub)
            }
        }
        _ => {
            if (0..n).all(|v| sub.degree(v) == delta) {
                degenerate::colour_regular(sub, mode)
            } else {
                let d = sub.degeneracy_ordering().width;
                let c = match mode {
                    Mode::Lid => lid_colour_degenerate(sub, delta, d),
                    Mode::Slid => slid_colour_degenerate(sub, delta, d),
                }
                .expect("dispatcher provides valid parameters");
                let palette = c.palette_size();
                (c.colours().to_vec(), palette)
            }
        }
    }
}

fn cycle_component(sub: &Graph, mode: Mode) -> (Vec<u32>, u32) {
    let n = sub.n();
    if n == 3 {
        // K_3: closed twins everywhere, any proper colouring works
        return (vec![1, 2, 3], 3);
    }
    let pattern = match mode {
        Mode::Lid => cycle_lid_colouring(n),
        Mode::Slid => cycle_slid_colouring(n),
    }
    .expect("n >= 4 cycles have pattern colourings");
    let walk = cycle_walk(sub);
    let mut colours = vec![0u32; n];
    for (i, &v) in walk.iter().enumerate() {
        colours[v] = pattern.colour(i);
    }
    let value = match mode {
        Mode::Lid => lid_cycle_value(n),
        Mode::Slid => slid_cycle_value(n),
    }
    .unwrap();
    (colours, value)
}

fn path_component(sub: &Graph) -> (Vec<u32>, u32) {
    let n = sub.n();
    let walk = path_walk(sub);
    let mut colours = vec![0u32; n];
    for (i, &v) in walk.iter().enumerate() {
        colours[v] = (i % 4) as u32 + 1;
    }
    (colours, n.min(4) as u32)
}

/// Traversal of a cycle component starting at vertex 0 towards its smaller
/// neighbour.
fn cycle_walk(sub: &Graph) -> Vec<Vertex> {
    let mut walk = vec![0];
    let mut prev = 0;
    let mut cur = sub.neighbours(0)[0];
    while cur != 0 {
        walk.push(cur);
        let next = sub
            .neighbours(cur)
            .iter()
            .copied()
            .find(|&u| u != prev)
            .expect("cycle vertices have two neighbours");
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(walk.len(), sub.n());
    walk
}

/// Traversal of a path component from its smallest-id endpoint.
fn path_walk(sub: &Graph) -> Vec<Vertex> {
    let start = (0..sub.n())
        .find(|&v| sub.degree(v) == 1)
        .expect("paths have endpoints");
    let mut walk = vec![start];
    let mut prev = start;
    let mut cur = sub.neighbours(start)[0];
    loop {
        walk.push(cur);
        match sub.neighbours(cur).iter().copied().find(|&u| u != prev) {
            Some(next) => {
                prev = cur;
                cur = next;
            }
            None => break,
        }
    }
    debug_assert_eq!(walk.len(), sub.n());
    walk
}
