//! Recolouring lists. Both lemmas produce, for a vertex v of a valid
//! colouring, a list L such that moving v to any colour outside L keeps the
//! colouring valid; the constructive algorithms lean on the size bounds
//! |L| ≤ 2d(Δ−1) (lid) and |L| ≤ d1 + 2d2 (slid).

use std::collections::{BTreeMap, BTreeSet};

use crate::colouring::{verify, Colouring, Mode};
use crate::graph::{Graph, Vertex};
use crate::Error;

/// Which construction rule put a colour on the list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenReason {
    NeighbourColour,
    TypeAClosure,
    TypeAWitness,
    TypeBWitness,
    TypeBOutside,
    Distance2Colour,
    Distance2Witness,
}

/// Set of colours forbidden when recolouring one vertex, each tagged with
/// the first rule that added it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ForbiddenList {
    entries: BTreeMap<u32, ForbiddenReason>,
}

impl ForbiddenList {
    pub fn new() -> ForbiddenList {
        ForbiddenList::default()
    }

    /// First insertion wins, so provenance reflects construction order.
    pub fn insert(&mut self, colour: u32, reason: ForbiddenReason) {
        self.entries.entry(colour).or_insert(reason);
    }

    pub fn contains(&self, colour: u32) -> bool {
        self.entries.contains_key(&colour)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn colours(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.keys().copied()
    }

    pub fn reason(&self, colour: u32) -> Option<ForbiddenReason> {
        self.entries.get(&colour).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    A,
    B,
}

/// A neighbour of the recoloured vertex together with its class from the
/// first recolouring lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighbourClass {
    pub vertex: Vertex,
    pub class: VertexClass,
}

/// View of a graph restricted to an active vertex set; the constructive
/// algorithms peel and restore vertices through this mask instead of
/// rebuilding graphs.
pub(crate) struct ActiveView<'a> {
    pub g: &'a Graph,
    pub mask: &'a [bool],
}

impl<'a> ActiveView<'a> {
    pub fn full(g: &'a Graph, mask: &'a [bool]) -> ActiveView<'a> {
        ActiveView { g, mask }
    }

    pub fn nbrs(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.g.neighbours(v).iter().copied().filter(|&u| self.mask[u])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.nbrs(v).count()
    }

    /// c(N[v]) within the active subgraph; v itself must be active.
    pub fn closed_colours(&self, colours: &[u32], v: Vertex) -> BTreeSet<u32> {
        let mut set: BTreeSet<u32> = self.nbrs(v).map(|u| colours[u]).collect();
        set.insert(colours[v]);
        set
    }

    /// c(N[v] \ {excl}) within the active subgraph.
    pub fn closed_colours_minus(&self, colours: &[u32], v: Vertex, excl: Vertex) -> BTreeSet<u32> {
        let mut set: BTreeSet<u32> = self
            .nbrs(v)
            .filter(|&u| u != excl)
            .map(|u| colours[u])
            .collect();
        set.insert(colours[v]);
        set
    }

    /// Vertices at active-graph distance exactly 2 from v, ascending.
    pub fn distance_two(&self, v: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.g.n()];
        seen[v] = true;
        for u in self.nbrs(v) {
            seen[u] = true;
        }
        let mut out = Vec::new();
        for u in self.nbrs(v) {
            for w in self.nbrs(u) {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn is_type_a(view: &ActiveView, colours: &[u32], v: Vertex, vi: Vertex) -> bool {
    let base = view.closed_colours_minus(colours, vi, v);
    view.nbrs(vi)
        .filter(|&u| u != v && !view.g.has_edge(u, v))
        .any(|u| view.closed_colours(colours, u) == base)
}

/// Classifies a neighbour vi of v: type A when some second neighbour of v
/// through vi is separated from vi only by the colour of v.
pub fn classify_neighbour(
    g: &Graph,
    c: &Colouring,
    v: Vertex,
    vi: Vertex,
) -> Result<NeighbourClass, Error> {
    if !g.has_edge(v, vi) {
        return Err(Error::invalid_input(format!("{vi} is not adjacent to {v}")));
    }
    let mask = vec![true; g.n()];
    let view = ActiveView::full(g, &mask);
    let class = if is_type_a(&view, c.colours(), v, vi) {
        VertexClass::A
    } else {
        VertexClass::B
    };
    Ok(NeighbourClass { vertex: vi, class })
}

/// First recolouring list: per neighbour vi of v, the neighbour's colour;
/// for type A additionally the whole of c(N[vi]\{v}) plus one witness per
/// second neighbour with colours outside it; for type B one witness per
/// other neighbour of vi plus one colour of c(N[vi]) \ c(N[v]) if any.
/// "One of" choices always take the smallest colour.
pub(crate) fn forbidden_list_lid_masked(
    g: &Graph,
    mask: &[bool],
    colours: &[u32],
    v: Vertex,
) -> ForbiddenList {
    let view = ActiveView::full(g, mask);
    let mut list = ForbiddenList::new();
    let nbrs: Vec<Vertex> = view.nbrs(v).collect();
    for &vi in &nbrs {
        list.insert(colours[vi], ForbiddenReason::NeighbourColour);
        let base = view.closed_colours_minus(colours, vi, v);
        let second: Vec<Vertex> = view
            .nbrs(vi)
            .filter(|&u| u != v && !g.has_edge(u, v))
            .collect();
        if second
            .iter()
            .any(|&u| view.closed_colours(colours, u) == base)
        {
            for &col in &base {
                list.insert(col, ForbiddenReason::TypeAClosure);
            }
            for &u in &second {
                let cn = view.closed_colours(colours, u);
                if let Some(&w) = cn.difference(&base).next() {
                    list.insert(w, ForbiddenReason::TypeAWitness);
                }
            }
        } else {
            for u in view.nbrs(vi).filter(|&u| u != v) {
                let cn = view.closed_colours_minus(colours, u, v);
                if let Some(&w) = cn.difference(&base).next() {
                    list.insert(w, ForbiddenReason::TypeBWitness);
                } else if g.has_edge(u, v) {
                    // u is a common neighbour whose colours are swallowed
                    // by vi's: if exactly one colour keeps the pair (vi, u)
                    // apart, recolouring v to it would merge their closed
                    // neighbourhood sets, so it must be forbidden. Uses u's
                    // otherwise empty witness slot, keeping |L_i| <= Δ+1.
                    let mut gap = base.difference(&cn);
                    if let (Some(&w), None) = (gap.next(), gap.next()) {
                        list.insert(w, ForbiddenReason::TypeBWitness);
                    }
                }
            }
            let whole_vi = view.closed_colours(colours, vi);
            let whole_v = view.closed_colours(colours, v);
            if let Some(&w) = whole_vi.difference(&whole_v).next() {
                list.insert(w, ForbiddenReason::TypeBOutside);
            }
        }
    }
    list
}

/// Second recolouring list: all neighbour colours, all colours at distance
/// exactly two, and per distance-two vertex one colour of its closed
/// neighbourhood not already listed.
pub(crate) fn forbidden_list_slid_masked(
    g: &Graph,
    mask: &[bool],
    colours: &[u32],
    v: Vertex,
) -> ForbiddenList {
    let view = ActiveView::full(g, mask);
    let mut list = ForbiddenList::new();
    for vi in view.nbrs(v) {
        list.insert(colours[vi], ForbiddenReason::NeighbourColour);
    }
    let d2 = view.distance_two(v);
    for &u in &d2 {
        list.insert(colours[u], ForbiddenReason::Distance2Colour);
    }
    for &u in &d2 {
        let cn = view.closed_colours(colours, u);
        if let Some(&w) = cn.iter().find(|&&c| !list.contains(c)) {
            list.insert(w, ForbiddenReason::Distance2Witness);
        }
    }
    debug_assert!(list.len() <= view.degree(v) + 2 * d2.len());
    list
}

/// Lemma list for v on a lid-colouring of the whole graph. Recolouring v to
/// any palette colour outside the list keeps the colouring lid. In debug
/// builds the lid precondition is verifier-checked.
pub fn forbidden_list_lid(g: &Graph, c: &Colouring, v: Vertex) -> ForbiddenList {
    assert_eq!(c.len(), g.n());
    debug_assert!(
        verify(g, c, Mode::Lid).is_lid,
        "forbidden_list_lid needs a lid-colouring"
    );
    let mask = vec![true; g.n()];
    let list = forbidden_list_lid_masked(g, &mask, c.colours(), v);
    debug_assert!(list.len() <= 2 * g.degree(v) * (g.max_degree().max(3) - 1));
    list
}

/// Lemma list for v on a slid-colouring of the whole graph; the slid
/// analogue of [`forbidden_list_lid`], sized d1 + 2·d2.
pub fn forbidden_list_slid(g: &Graph, c: &Colouring, v: Vertex) -> ForbiddenList {
    assert_eq!(c.len(), g.n());
    debug_assert!(
        verify(g, c, Mode::Slid).is_slid,
        "forbidden_list_slid needs a slid-colouring"
    );
    let mask = vec![true; g.n()];
    forbidden_list_slid_masked(g, &mask, c.colours(), v)
}

/// Smallest palette colour outside the list and the extra avoid set.
pub(crate) fn smallest_free(
    palette: u32,
    list: &ForbiddenList,
    extra: &BTreeSet<u32>,
) -> Option<u32> {
    (1..=palette).find(|&c| !list.contains(c) && !extra.contains(&c))
}
