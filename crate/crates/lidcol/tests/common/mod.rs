//! Shared fixtures and independent brute-force oracles for the integration
//! suites. The oracles enumerate rather than reuse library algorithms, so
//! they stay independent of the code paths they check.

#![allow(dead_code)]

use lidcol::colouring::{verify, Colouring, Mode};
use lidcol::graph::Graph;
use lidcol::special::{gen_ktree, gen_random_connected, Lcg64};

/// The fixed-seed corpus behind the bound criteria: 200 random connected
/// graphs, n ≤ 60, kept only when the realized maximum degree lies in 3..6.
pub fn corpus_200() -> Vec<Graph> {
    let ns = [8, 12, 18, 24, 30, 36, 42, 48, 54, 60];
    let deltas = [3, 4, 5, 6];
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < 200 {
        let n = ns[seed as usize % ns.len()];
        let delta = deltas[(seed as usize / ns.len()) % deltas.len()];
        let g = gen_random_connected(n, delta, seed).expect("corpus parameters are valid");
        if (3..=6).contains(&g.max_degree()) {
            out.push(g);
        }
        seed += 1;
    }
    out
}

/// Fifty fixed-seed k-trees with k in {1, 2, 3} and n ≤ 50.
pub fn ktree_corpus_50() -> Vec<Graph> {
    let ns = [10, 18, 26, 34, 42, 50];
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < 50 {
        let k = 1 + (seed % 3) as usize;
        let n = ns[(seed as usize / 3) % ns.len()];
        out.push(gen_ktree(n, k, seed).expect("k-tree parameters are valid"));
        seed += 1;
    }
    out
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edge_list(10, &edges).unwrap()
}

pub fn deterministic_rng(seed: u64) -> Lcg64 {
    Lcg64::new(seed)
}

fn subset_vertices(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Maximum clique by subset enumeration (n ≤ ~16).
pub fn brute_max_clique(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "brute_max_clique is for small graphs");
    let mut best = 1;
    for mask in 1u32..(1 << n) {
        let vs = subset_vertices(mask, n);
        if vs.len() <= best {
            continue;
        }
        let clique = vs
            .iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if clique {
            best = vs.len();
        }
    }
    best
}

/// Degeneracy as the maximum over vertex subsets of the induced minimum
/// degree (n ≤ ~16).
pub fn brute_degeneracy(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "brute_degeneracy is for small graphs");
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let vs = subset_vertices(mask, n);
        let min_deg = vs
            .iter()
            .map(|&v| {
                g.neighbours(v)
                    .iter()
                    .filter(|&&u| mask & (1 << u) != 0)
                    .count()
            })
            .min()
            .unwrap();
        best = best.max(min_deg);
    }
    best
}

/// Chordality by exhaustive induced-cycle search: some vertex subset of
/// size ≥ 4 inducing a connected 2-regular subgraph is an induced long
/// cycle (n ≤ ~16).
pub fn brute_is_chordal(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 16, "brute_is_chordal is for small graphs");
    for mask in 1u32..(1 << n) {
        let vs = subset_vertices(mask, n);
        if vs.len() < 4 {
            continue;
        }
        let degrees_two = vs.iter().all(|&v| {
            g.neighbours(v)
                .iter()
                .filter(|&&u| mask & (1 << u) != 0)
                .count()
                == 2
        });
        if degrees_two && induced_connected(g, mask, &vs) {
            return false;
        }
    }
    true
}

fn induced_connected(g: &Graph, mask: u32, vs: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![vs[0]];
    seen[vs[0]] = true;
    let mut count = 0;
    while let Some(v) = stack.pop() {
        count += 1;
        for &u in g.neighbours(v) {
            if mask & (1 << u) != 0 && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    count == vs.len()
}

/// Feasibility of a k-colouring by enumerating every assignment and asking
/// the verifier; the exhaustive ground truth for the solver.
pub fn brute_feasible(g: &Graph, k: u32, mode: Mode) -> bool {
    let n = g.n();
    let mut assignment = vec![1u32; n];
    loop {
        let c = Colouring::new(assignment.clone(), k).unwrap();
        let rep = verify(g, &c, mode);
        let ok = match mode {
            Mode::Lid => rep.is_lid,
            Mode::Slid => rep.is_slid,
        };
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            if assignment[i] < k {
                assignment[i] += 1;
                break;
            }
            assignment[i] = 1;
            i += 1;
        }
    }
}

pub fn is_regular(g: &Graph) -> bool {
    let d = g.max_degree();
    (0..g.n()).all(|v| g.degree(v) == d)
}
