//! Exact computation of the lid and slid chromatic numbers on small graphs
//! by canonical-order backtracking. This is the independent ground truth
//! the constructive algorithms and the closed-form cycle values are checked
//! against; budgets make exhaustion explicit instead of silently wrong.

use std::time::{Duration, Instant};

use crate::colouring::{verify, Colouring, Mode};
use crate::graph::{Graph, Vertex};

/// Limits for one search. Exceeding a budget yields an explicit
/// inconclusive outcome, never a wrong answer.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    pub max_palette: u32,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited(max_palette: u32) -> SearchBudget {
        SearchBudget {
            max_palette,
            node_limit: None,
            time_limit: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A verifier-accepted colouring with at most k colours.
    Found(Colouring),
    /// Proof by exhaustion that no such colouring exists.
    Infeasible,
    /// Budget ran out first.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactStatus {
    Exact,
    LowerBoundOnly,
    Inconclusive,
}

/// Result of `min_number`. With status `Exact`, `value` is χ and `witness`
/// an optimal colouring; with `LowerBoundOnly`, `value` is the smallest
/// palette size not yet proven infeasible (so χ ≥ value is proven);
/// `Inconclusive` proves nothing beyond the starting lower bound.
#[derive(Debug, Clone)]
pub struct ExactResult {
    pub value: Option<u32>,
    pub witness: Option<Colouring>,
    pub status: ExactStatus,
}

/// Colour-set bitmasks cap the supported palette.
pub const MAX_SOLVER_PALETTE: u32 = 63;

struct Searcher<'a> {
    g: &'a Graph,
    k: u32,
    slid: bool,
    /// Assignment order: BFS from vertex 0, ascending neighbours, then the
    /// next unvisited smallest id for other components.
    order: Vec<Vertex>,
    /// Neighbours already assigned when a vertex is reached (by position).
    earlier_nbrs: Vec<Vec<Vertex>>,
    /// Same for square-graph neighbours (slid only).
    earlier_sq: Vec<Vec<Vertex>>,
    /// Non-twin edges to bad-edge-check once the last vertex of
    /// N[u] ∪ N[v] is coloured, grouped by that position.
    triggers: Vec<Vec<(Vertex, Vertex)>>,
    colour: Vec<u32>,
    nodes: u64,
    node_limit: u64,
    deadline: Option<Instant>,
    out_of_budget: bool,
}

fn bfs_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in g.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
    }
    order
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, k: u32, mode: Mode, budget: &SearchBudget) -> Searcher<'a> {
        assert!(
            k <= MAX_SOLVER_PALETTE,
            "exact search supports palettes up to {MAX_SOLVER_PALETTE}"
        );
        let n = g.n();
        let order = bfs_order(g);
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let earlier_nbrs: Vec<Vec<Vertex>> = order
            .iter()
            .map(|&v| {
                g.neighbours(v)
                    .iter()
                    .copied()
                    .filter(|&u| pos[u] < pos[v])
                    .collect()
            })
            .collect();
        let slid = mode == Mode::Slid;
        let earlier_sq: Vec<Vec<Vertex>> = if slid {
            order
                .iter()
                .map(|&v| {
                    g.distance_two_set(v)
                        .into_iter()
                        .filter(|&u| pos[u] < pos[v])
                        .collect()
                })
                .collect()
        } else {
            vec![Vec::new(); n]
        };
        let mut triggers = vec![Vec::new(); n];
        for (u, v) in g.edges() {
            if g.closed_twins(u, v) {
                continue;
            }
            let trigger = g
                .closed_neighbourhood(u)
                .iter()
                .chain(g.closed_neighbourhood(v).iter())
                .map(|&w| pos[w])
                .max()
                .unwrap();
            triggers[trigger].push((u, v));
        }
        Searcher {
            g,
            k,
            slid,
            order,
            earlier_nbrs,
            earlier_sq,
            triggers,
            colour: vec![0; n],
            nodes: 0,
            node_limit: budget.node_limit.unwrap_or(u64::MAX),
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            out_of_budget: false,
        }
    }

    fn closed_mask(&self, v: Vertex) -> u64 {
        let mut mask = 1u64 << (self.colour[v] - 1);
        for &u in self.g.neighbours(v) {
            mask |= 1 << (self.colour[u] - 1);
        }
        mask
    }

    fn budget_ok(&mut self) -> bool {
        if self.nodes >= self.node_limit {
            self.out_of_budget = true;
            return false;
        }
        if self.nodes.is_multiple_of(8192) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.out_of_budget = true;
                    return false;
                }
            }
        }
        true
    }

    /// Depth-first over positions; colour values are tried ascending and a
    /// new value enters only after all smaller values appeared.
    fn dfs(&mut self, p: usize, used_max: u32) -> bool {
        if p == self.order.len() {
            return true;
        }
        self.nodes += 1;
        if !self.budget_ok() {
            return false;
        }
        let v = self.order[p];
        let cap = self.k.min(used_max + 1);
        'colours: for col in 1..=cap {
            for &u in &self.earlier_nbrs[p] {
                if self.colour[u] == col {
                    continue 'colours;
                }
            }
            if self.slid {
                for &u in &self.earlier_sq[p] {
                    if self.colour[u] == col {
                        continue 'colours;
                    }
                }
            }
            self.colour[v] = col;
            let mut ok = true;
            for &(a, b) in &self.triggers[p] {
                if self.closed_mask(a) == self.closed_mask(b) {
                    ok = false;
                    break;
                }
            }
            if ok && self.dfs(p + 1, used_max.max(col)) {
                return true;
            }
            if self.out_of_budget {
                self.colour[v] = 0;
                return false;
            }
        }
        self.colour[v] = 0;
        false
    }
}

fn run_search(g: &Graph, k: u32, mode: Mode, budget: &SearchBudget) -> (SearchOutcome, u64) {
    if k == 0 {
        return (SearchOutcome::Infeasible, 0);
    }
    let mut s = Searcher::new(g, k, mode, budget);
    let outcome = if s.dfs(0, 0) {
        let used = *s.colour.iter().max().unwrap();
        let witness = Colouring::new(s.colour.clone(), used).expect("search invariant");
        debug_assert!(match mode {
            Mode::Lid => verify(g, &witness, mode).is_lid,
            Mode::Slid => verify(g, &witness, mode).is_slid,
        });
        SearchOutcome::Found(witness)
    } else if s.out_of_budget {
        SearchOutcome::Inconclusive
    } else {
        SearchOutcome::Infeasible
    };
    (outcome, s.nodes)
}

/// Searches for a lid/slid colouring of G with at most k colours. Vertices
/// are assigned along a BFS order from vertex 0; properness (and, for slid,
/// distance-two) conflicts prune immediately, the bad-edge condition of an
/// edge is enforced as soon as both closed neighbourhoods are fully
/// coloured, and closed-twin edges are exempt.
pub fn find_with_k(g: &Graph, k: u32, mode: Mode, budget: &SearchBudget) -> SearchOutcome {
    run_search(g, k, mode, budget).0
}

/// Greedy clique from each start vertex; a lower bound for χ ≤ χ_lid.
fn greedy_clique(g: &Graph) -> usize {
    let mut best = 1;
    for v in 0..g.n() {
        let mut clique = vec![v];
        for &u in g.neighbours(v) {
            if clique.iter().all(|&w| g.has_edge(u, w)) {
                clique.push(u);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// χ_lid / χ_slid by iterating `find_with_k` upward from a lower bound
/// (greedy clique; for slid also Δ + 1, since closed neighbourhoods must be
/// rainbow). Budgets are shared across the whole iteration.
pub fn min_number(g: &Graph, mode: Mode, budget: &SearchBudget) -> ExactResult {
    let mut lb = greedy_clique(g) as u32;
    if mode == Mode::Slid {
        lb = lb.max(g.max_degree() as u32 + 1);
    }
    let cap = budget
        .max_palette
        .min(g.n() as u32)
        .min(MAX_SOLVER_PALETTE);
    let start = Instant::now();
    let mut nodes_left = budget.node_limit;
    let mut k = lb;
    while k <= cap {
        let step = SearchBudget {
            max_palette: cap,
            node_limit: nodes_left,
            time_limit: budget
                .time_limit
                .map(|t| t.saturating_sub(start.elapsed())),
        };
        let (outcome, nodes_used) = run_search(g, k, mode, &step);
        if let Some(limit) = nodes_left.as_mut() {
            *limit = limit.saturating_sub(nodes_used);
        }
        match outcome {
            SearchOutcome::Found(witness) => {
                return ExactResult {
                    value: Some(k),
                    witness: Some(witness),
                    status: ExactStatus::Exact,
                };
            }
            SearchOutcome::Infeasible => {
                k += 1;
            }
            SearchOutcome::Inconclusive => {
                return if k > lb {
                    ExactResult {
                        value: Some(k),
                        witness: None,
                        status: ExactStatus::LowerBoundOnly,
                    }
                } else {
                    ExactResult {
                        value: None,
                        witness: None,
                        status: ExactStatus::Inconclusive,
                    }
                };
            }
        }
    }
    ExactResult {
        value: Some(lb.max(cap + 1)),
        witness: None,
        status: ExactStatus::LowerBoundOnly,
    }
}
