//! Exact minimum depth of decision trees under each query model.
//!
//! The minimum depth equals the value of a game in which the questioner picks
//! a legal query and an adversary picks an answer consistent with some tuple
//! still alive. States are subsets of `Δ_U(z)`, encoded as a `u128` bitmask
//! over the canonical (sorted) ordering of its members, and memoized per
//! problem and model.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::{solution_set, InformationSystem, Problem, Tuple, TupleSet};
use crate::trees::{DecisionTree, HypothesisKind, QueryModel};

/// Largest `|Δ_U(z)|` the bitmask state can hold.
pub const MAX_SOLUTIONS: usize = 128;

const DEFAULT_MEMO_LIMIT: usize = 4_000_000;

/// How arbitrary hypotheses (models M2 and M3) are searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum HypothesisSearch {
    /// Choose each hypothesis coordinate independently.
    #[default]
    Reduced,
    /// Enumerate all `2^n` hypotheses.
    Full,
}

#[derive(Clone, Debug)]
pub struct SolverOptions {
    pub hypothesis_search: HypothesisSearch,
    /// Maximum number of memoized states before a budget error.
    pub memo_limit: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            hypothesis_search: HypothesisSearch::Reduced,
            memo_limit: DEFAULT_MEMO_LIMIT,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SolverStats {
    pub nodes_expanded: u64,
    pub memo_hits: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Clone, Debug)]
pub struct DepthResult {
    pub depth: usize,
    pub optimal_tree: Option<DecisionTree>,
    pub stats: SolverStats,
}

/// Search state shared by all positions of one (problem, model) game.
struct Game {
    delta: Vec<Tuple>,
    n: usize,
    /// `ones[i]`: members of `delta` whose coordinate `i` is 1.
    ones: Vec<u128>,
    model: QueryModel,
    search: HypothesisSearch,
    memo: HashMap<u128, u32>,
    memo_limit: usize,
    stats: SolverStats,
}

#[inline]
fn ceil_log2(x: u32) -> u32 {
    if x <= 1 {
        0
    } else {
        32 - (x - 1).leading_zeros()
    }
}

impl Game {
    fn new(delta: &TupleSet, model: QueryModel, options: &SolverOptions) -> Result<Self> {
        if delta.len() > MAX_SOLUTIONS {
            return Err(Error::budget(format!(
                "|Δ| = {} exceeds the solver limit of {MAX_SOLUTIONS}",
                delta.len()
            )));
        }
        let n = delta.width();
        if model.hypotheses() == HypothesisKind::Arbitrary && options.hypothesis_search == HypothesisSearch::Full && n > 20 {
            return Err(Error::budget(format!("full hypothesis enumeration over 2^{n} tuples")));
        }
        let members = delta.members().to_vec();
        let ones = (0..n)
            .map(|i| {
                members
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t.get(i))
                    .fold(0u128, |m, (j, _)| m | (1u128 << j))
            })
            .collect();
        Ok(Game {
            delta: members,
            n,
            ones,
            model,
            search: options.hypothesis_search,
            memo: HashMap::new(),
            memo_limit: options.memo_limit,
            stats: SolverStats::default(),
        })
    }

    fn full(&self) -> u128 {
        if self.delta.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.delta.len()) - 1
        }
    }

    /// Live members with coordinate `i` equal to `value`.
    #[inline]
    fn restrict(&self, live: u128, i: usize, value: bool) -> u128 {
        if value {
            live & self.ones[i]
        } else {
            live & !self.ones[i]
        }
    }

    /// Counterexample restrictions of hypothesis `h`, or `None` when some
    /// counterexample leaves the live set unchanged.
    fn counterexample_masks(&self, live: u128, h: &Tuple) -> Option<Vec<u128>> {
        let mut masks = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let m = self.restrict(live, i, !h.get(i));
            if m == live {
                return None;
            }
            masks.push(m);
        }
        Some(masks)
    }

    /// Max of child values, or `None` once it reaches `bound - 1`.
    fn bounded_max(&mut self, children: &[u128], bound: u32) -> Result<Option<u32>> {
        let mut worst = 0;
        for &c in children {
            let v = self.value(c)?;
            worst = worst.max(v);
            if worst.saturating_add(1) >= bound {
                return Ok(None);
            }
        }
        Ok(Some(worst))
    }

    /// Cost of the best arbitrary hypothesis under the per-coordinate
    /// decomposition, or `None` if it cannot beat `bound`.
    fn reduced_hypothesis(&mut self, live: u128, bound: u32) -> Result<Option<u32>> {
        let mut worst = 0;
        for i in 0..self.n {
            let one = self.restrict(live, i, true);
            let zero = self.restrict(live, i, false);
            if one == 0 || zero == 0 {
                continue;
            }
            let a = self.value(one)?;
            let cost = if a == 0 { 0 } else { a.min(self.value(zero)?) };
            worst = worst.max(cost);
            if worst.saturating_add(1) >= bound {
                return Ok(None);
            }
        }
        Ok(Some(worst))
    }

    fn hypothesis_candidates(&self) -> Box<dyn Iterator<Item = Tuple> + '_> {
        match self.model.hypotheses() {
            HypothesisKind::None => Box::new(std::iter::empty()),
            HypothesisKind::Arbitrary => {
                let n = self.n;
                Box::new((0..1u64 << n).map(move |b| Tuple::from_bits(n, b)))
            }
            HypothesisKind::Proper => Box::new(self.delta.iter().copied()),
        }
    }

    fn value(&mut self, live: u128) -> Result<u32> {
        let count = live.count_ones();
        if count <= 1 {
            return Ok(0);
        }
        if let Some(&v) = self.memo.get(&live) {
            self.stats.memo_hits += 1;
            return Ok(v);
        }
        self.stats.nodes_expanded += 1;
        let lower = if self.model.hypotheses() == HypothesisKind::None {
            ceil_log2(count)
        } else {
            1
        };
        let mut best = u32::MAX;

        if self.model.allows_attributes() {
            for i in 0..self.n {
                let one = self.restrict(live, i, true);
                let zero = self.restrict(live, i, false);
                if one == 0 || zero == 0 {
                    continue;
                }
                if let Some(w) = self.bounded_max(&[zero, one], best)? {
                    best = w + 1;
                    if best <= lower {
                        break;
                    }
                }
            }
        }

        if best > lower {
            let reduced =
                self.model.hypotheses() == HypothesisKind::Arbitrary && self.search == HypothesisSearch::Reduced;
            if reduced {
                if let Some(w) = self.reduced_hypothesis(live, best)? {
                    best = w + 1;
                }
            } else {
                let candidates: Vec<Tuple> = self.hypothesis_candidates().collect();
                for h in candidates {
                    let Some(masks) = self.counterexample_masks(live, &h) else {
                        continue;
                    };
                    if let Some(w) = self.bounded_max(&masks, best)? {
                        best = w + 1;
                        if best <= lower {
                            break;
                        }
                    }
                }
            }
        }

        if best == u32::MAX {
            return Err(Error::Unsolvable(self.model.to_string()));
        }
        if self.memo.len() >= self.memo_limit {
            return Err(Error::budget(format!("solver memo exceeded {} states", self.memo_limit)));
        }
        self.memo.insert(live, best);
        Ok(best)
    }

    fn label_of(&self, live: u128) -> Tuple {
        debug_assert_eq!(live.count_ones(), 1);
        self.delta[live.trailing_zeros() as usize]
    }

    fn hypothesis_node(&mut self, h: Tuple, masks: &[u128]) -> Result<DecisionTree> {
        let mut children = Vec::with_capacity(self.n);
        for &m in masks {
            children.push(if m == 0 { DecisionTree::terminal(h) } else { self.build(m)? });
        }
        Ok(DecisionTree::hypothesis(h, DecisionTree::terminal(h), children))
    }

    /// Extracts the first optimal tree in canonical query order.
    fn build(&mut self, live: u128) -> Result<DecisionTree> {
        if live.count_ones() == 1 {
            return Ok(DecisionTree::terminal(self.label_of(live)));
        }
        let target = self.value(live)?;

        if self.model.allows_attributes() {
            for i in 0..self.n {
                let one = self.restrict(live, i, true);
                let zero = self.restrict(live, i, false);
                if one == 0 || zero == 0 {
                    continue;
                }
                if 1 + self.value(zero)?.max(self.value(one)?) == target {
                    let z = self.build(zero)?;
                    let o = self.build(one)?;
                    return Ok(DecisionTree::attribute(i, z, o));
                }
            }
        }

        let reduced = self.model.hypotheses() == HypothesisKind::Arbitrary && self.search == HypothesisSearch::Reduced;
        if reduced {
            // smallest tuple whose every counterexample branch costs at most target - 1
            let mut h = Tuple::zeros(self.n);
            for i in 0..self.n {
                let one = self.restrict(live, i, true);
                let zero = self.restrict(live, i, false);
                let bit = if one == 0 {
                    false
                } else if zero == 0 {
                    true
                } else {
                    self.value(one)? + 1 > target
                };
                h = h.with(i, bit);
            }
            let masks = self
                .counterexample_masks(live, &h)
                .expect("per-coordinate hypothesis is progressing");
            return self.hypothesis_node(h, &masks);
        }

        let candidates: Vec<Tuple> = self.hypothesis_candidates().collect();
        for h in candidates {
            let Some(masks) = self.counterexample_masks(live, &h) else {
                continue;
            };
            let mut worst = 0;
            for &m in &masks {
                worst = worst.max(self.value(m)?);
            }
            if worst + 1 == target {
                return self.hypothesis_node(h, &masks);
            }
        }
        Err(Error::Unsolvable(self.model.to_string()))
    }
}

/// Minimum depth of a tree solving `z` under `model`, optionally with an
/// optimal tree.
pub fn min_depth(sys: &InformationSystem, z: &Problem, model: QueryModel, extract: bool) -> Result<DepthResult> {
    min_depth_with(sys, z, model, extract, &SolverOptions::default())
}

pub fn min_depth_with(
    sys: &InformationSystem,
    z: &Problem,
    model: QueryModel,
    extract: bool,
    options: &SolverOptions,
) -> Result<DepthResult> {
    let delta = solution_set(sys, z)?;
    min_depth_for(&delta, model, extract, options)
}

/// Minimum depth for a precomputed `Δ_U(z)`.
pub fn min_depth_for(delta: &TupleSet, model: QueryModel, extract: bool, options: &SolverOptions) -> Result<DepthResult> {
    let start = Instant::now();
    let mut game = Game::new(delta, model, options)?;
    let full = game.full();
    let depth = game.value(full)? as usize;
    let optimal_tree = if extract {
        Some(if full.count_ones() <= 1 {
            DecisionTree::terminal(game.delta[0])
        } else {
            game.build(full)?
        })
    } else {
        None
    };
    let mut stats = game.stats;
    stats.wall_time = start.elapsed();
    Ok(DepthResult {
        depth,
        optimal_tree,
        stats,
    })
}

/// Brute-force reference: the smallest `d <= d_max` such that a solving tree
/// of depth at most `d` exists, searched directly on the solving criterion.
/// No memoization and no pruning of the query space.
pub fn oracle_min_depth(sys: &InformationSystem, z: &Problem, model: QueryModel, d_max: usize) -> Result<Option<usize>> {
    let delta = solution_set(sys, z)?;
    Ok((0..=d_max).find(|&d| oracle_solvable(&delta, &delta, model, d)))
}

fn oracle_queries(full: &TupleSet, model: QueryModel) -> Vec<crate::trees::Query> {
    use crate::trees::Query;
    let n = full.width();
    let mut out = Vec::new();
    if model.allows_attributes() {
        out.extend((0..n).map(Query::Attribute));
    }
    match model.hypotheses() {
        HypothesisKind::None => {}
        HypothesisKind::Arbitrary => out.extend((0..1u64 << n).map(|b| Query::Hypothesis(Tuple::from_bits(n, b)))),
        HypothesisKind::Proper => out.extend(full.iter().map(|&t| Query::Hypothesis(t))),
    }
    out
}

fn oracle_answers(q: &crate::trees::Query) -> Vec<crate::trees::Answer> {
    use crate::trees::{Answer, Query};
    match q {
        Query::Attribute(i) => vec![Answer::AttrValue(*i, false), Answer::AttrValue(*i, true)],
        Query::Hypothesis(h) => std::iter::once(Answer::Confirm)
            .chain((0..h.width()).map(Answer::Counterexample))
            .collect(),
    }
}

fn oracle_solvable(full: &TupleSet, live: &TupleSet, model: QueryModel, d: usize) -> bool {
    if live.len() <= 1 {
        return true;
    }
    if d == 0 {
        return false;
    }
    oracle_queries(full, model).iter().any(|q| {
        oracle_answers(q).iter().all(|a| {
            let literals = a.literals(q);
            let rest = TupleSet::new(
                live.width(),
                live.iter().copied().filter(|t| literals.iter().all(|&(i, v)| t.get(i) == v)),
            )
            .expect("same width");
            oracle_solvable(full, &rest, model, d - 1)
        })
    })
}

/// Worst-case minimum depth over problems of dimension at most `n`.
#[derive(Clone, Debug, Serialize)]
pub struct ShannonEstimate {
    pub n: usize,
    pub model: QueryModel,
    pub value: usize,
    /// Attribute indices of the first problem attaining `value`.
    pub argmax: Vec<usize>,
}

fn count_subsets(pool: usize, n: usize) -> u128 {
    let mut total = 0u128;
    let mut c = 1u128;
    for k in 1..=n.min(pool) {
        c = c * (pool - k + 1) as u128 / k as u128;
        total += c;
    }
    total
}

/// `h(n)` estimate: max of [`min_depth`] over attribute subsets of size at
/// most `n`, taken in pool order.
pub fn shannon_estimate(sys: &InformationSystem, model: QueryModel, n: usize, budget: usize) -> Result<ShannonEstimate> {
    shannon_profile(sys, model, n, budget, None)?
        .pop()
        .ok_or_else(|| Error::structure("n must be at least 1"))
}

/// Estimates for every `1..=max_n`. Subsets are solved in parallel when
/// `threads` is given; results do not depend on the thread count.
pub fn shannon_profile(
    sys: &InformationSystem,
    model: QueryModel,
    max_n: usize,
    budget: usize,
    threads: Option<usize>,
) -> Result<Vec<ShannonEstimate>> {
    if max_n == 0 {
        return Err(Error::structure("n must be at least 1"));
    }
    let pool = sys.attribute_count();
    let total = count_subsets(pool, max_n);
    if total > budget as u128 {
        return Err(Error::budget(format!(
            "{total} problems of dimension <= {max_n} over {pool} attributes exceed budget {budget}"
        )));
    }
    let problems: Vec<Vec<usize>> = (1..=max_n.min(pool))
        .flat_map(|k| (0..pool).combinations(k))
        .collect();
    let options = SolverOptions::default();
    let solve = |attrs: &Vec<usize>| -> Result<usize> {
        let z = Problem::new(sys, attrs.clone())?;
        Ok(min_depth_with(sys, &z, model, false, &options)?.depth)
    };
    let depths: Vec<usize> = match threads {
        None => problems.iter().map(solve).collect::<Result<_>>()?,
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::structure(e.to_string()))?
            .install(|| problems.par_iter().map(solve).collect::<Result<_>>())?,
    };

    let mut out = Vec::with_capacity(max_n);
    let mut best: Option<(usize, usize)> = None;
    let mut next = 0;
    for n in 1..=max_n {
        while next < problems.len() && problems[next].len() <= n {
            if best.is_none_or(|(v, _)| depths[next] > v) {
                best = Some((depths[next], next));
            }
            next += 1;
        }
        let (value, idx) = best.expect("at least one problem");
        out.push(ShannonEstimate {
            n,
            model,
            value,
            argmax: problems[idx].clone(),
        });
    }
    Ok(out)
}
