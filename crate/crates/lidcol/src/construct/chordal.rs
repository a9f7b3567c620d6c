//! Chordal slid construction: restore vertices along the MCS order (so each
//! arrives simplicial), park on scratch, recolour by the second lemma. A
//! simplicial vertex of degree d has at most d(Δ−d) distance-two vertices,
//! so M(ω,Δ) + 1 colours always leave the lemma room.

use std::collections::BTreeSet;

use crate::colouring::Colouring;
use crate::graph::Graph;
use crate::Error;

use super::forbidden::{forbidden_list_slid_masked, smallest_free, ActiveView};

/// M(ω, Δ) = max over 1 ≤ d ≤ ω−1 of d(2Δ − 2d + 1). Equals
/// 2Δω − 2ω² + 5ω − 2Δ − 3 when ω − 1 ≤ Δ/2 and Δ(Δ+1)/2 otherwise.
pub fn bound_m(omega: usize, delta: usize) -> Result<u32, Error> {
    if omega < 2 {
        return Err(Error::invalid_input("bound_m needs omega >= 2"));
    }
    if delta + 1 < omega {
        return Err(Error::invalid_input("bound_m needs delta >= omega - 1"));
    }
    let m = (1..omega).map(|d| d * (2 * delta - 2 * d + 1)).max().unwrap();
    Ok(m as u32)
}

/// Slid-colouring of a chordal graph with at most M(ω, Δ) + 1 colours.
pub fn slid_colour_chordal(g: &Graph) -> Result<Colouring, Error> {
    let peo = g.chordal_peo().ok_or(Error::NotChordal)?;
    let omega = g
        .clique_number_chordal(&peo)
        .expect("freshly computed PEO is valid");
    if omega < 2 {
        return Err(Error::invalid_input(
            "chordal slid construction needs at least one edge",
        ));
    }
    let delta = g.max_degree();
    let m = bound_m(omega, delta)?;
    let palette = m + 1;
    let scratch = palette + 1;
    let mut colours = vec![0u32; g.n()];
    let mut active = vec![false; g.n()];
    // MCS visit order restores each vertex with its earlier neighbours
    // forming a clique, i.e. simplicial in the active subgraph.
    for &v in &peo.order {
        active[v] = true;
        colours[v] = scratch;
        let view = ActiveView::full(g, &active);
        let d1 = view.degree(v);
        let d2 = view.distance_two(v).len();
        debug_assert!(d1 < omega, "restored vertex must be simplicial");
        assert!(
            d1 + 2 * d2 <= m as usize,
            "lemma load d1+2d2 = {} exceeds M = {m}",
            d1 + 2 * d2
        );
        let list = forbidden_list_slid_masked(g, &active, &colours, v);
        assert!(list.len() <= d1 + 2 * d2, "slid list exceeds d1+2d2");
        colours[v] = smallest_free(palette, &list, &BTreeSet::new())
            .expect("palette M+1 leaves a free colour");
    }
    Colouring::new(colours, palette)
}
