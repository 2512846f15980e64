//! Constructive strategies with proven depth bounds.
//!
//! Every construction returns a tree that is verified before it is handed
//! back; a failed verification surfaces as [`Error::Verification`].

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::classify::KLevels;
use crate::error::{Error, Result};
use crate::table::{solution_set, ElementSet, Equation, EquationSystem, InformationSystem, Problem, Tuple, TupleSet};
use crate::trees::{verify_against, DecisionTree, QueryModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ReducednessKind {
    /// Consistent systems reduce to at most `r` equations.
    Reduced,
    /// Inconsistent systems contain an inconsistent part of at most `r` equations.
    IReduced,
}

impl fmt::Display for ReducednessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReducednessKind::Reduced => "reduced",
            ReducednessKind::IReduced => "i-reduced",
        })
    }
}

/// Evidence that a finite system is r-reduced or r-i-reduced. Only
/// [`crate::classify::certify`] issues certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducednessCertificate {
    pub r: usize,
    pub kind: ReducednessKind,
    /// Largest equation system inspected.
    pub cap: usize,
    /// Whether the verdict holds for systems of every size.
    pub exhaustive: bool,
}

impl ReducednessCertificate {
    pub(crate) fn verified(r: usize, kind: ReducednessKind, cap: usize, exhaustive: bool) -> Self {
        ReducednessCertificate { r, kind, cap, exhaustive }
    }

    fn require(&self, kind: ReducednessKind, min_r: usize) -> Result<()> {
        if self.kind != kind {
            return Err(Error::structure(format!("expected an {kind} certificate, got {}", self.kind)));
        }
        if self.r < min_r {
            return Err(Error::structure(format!("certificate needs r >= {min_r}, got {}", self.r)));
        }
        Ok(())
    }
}

fn checked(delta: &TupleSet, t: DecisionTree, model: QueryModel, what: &str) -> Result<DecisionTree> {
    if !verify_against(delta, &t, model)? {
        return Err(Error::Verification(format!("{what} produced a tree that does not solve the problem under {model}")));
    }
    Ok(t)
}

fn nonempty_delta(sys: &InformationSystem, z: &Problem) -> Result<TupleSet> {
    let delta = solution_set(sys, z)?;
    if delta.is_empty() {
        return Err(Error::structure("empty universe"));
    }
    Ok(delta)
}

/// Label for a branch no element reaches.
fn dead_leaf(live: &TupleSet, fallback: Tuple) -> DecisionTree {
    DecisionTree::terminal(live.single().unwrap_or(fallback))
}

/// Repeatedly queries the first live tuple; each counterexample fixes one
/// more coordinate, so at most `n` queries are asked.
pub fn sequential_proper(sys: &InformationSystem, z: &Problem) -> Result<DecisionTree> {
    let delta = nonempty_delta(sys, z)?;
    let t = sequential_node(&delta, delta.members()[0]);
    checked(&delta, t, QueryModel::M4, "sequential strategy")
}

fn sequential_node(live: &TupleSet, fallback: Tuple) -> DecisionTree {
    if live.len() <= 1 {
        return dead_leaf(live, fallback);
    }
    let h = live.members()[0];
    let children = (0..h.width())
        .map(|i| sequential_node(&live.restrict(i, !h.get(i)).expect("width"), h))
        .collect();
    DecisionTree::hypothesis(h, DecisionTree::terminal(h), children)
}

/// `r · I · ln(4n)`: the depth bound of [`halving_proper`].
pub fn halving_bound(r: usize, independence_dimension: usize, n: usize) -> f64 {
    (r * independence_dimension) as f64 * ((4 * n) as f64).ln()
}

/// Majority tuple over `live`; ties go to 0.
fn majority(live: &TupleSet) -> Tuple {
    let n = live.width();
    (0..n).fold(Tuple::zeros(n), |t, i| {
        let ones = live.iter().filter(|x| x.get(i)).count();
        t.with(i, 2 * ones > live.len())
    })
}

/// Halving with proper hypotheses. Queries the majority tuple when it is
/// realized; otherwise queries the row of the first element satisfying every
/// unbalanced majority equation. Each counterexample leaves at most
/// `|Δ|·(1 - 1/r)` tuples.
pub fn halving_proper(sys: &InformationSystem, z: &Problem, cert: &ReducednessCertificate) -> Result<DecisionTree> {
    cert.require(ReducednessKind::IReduced, 2)?;
    let delta = nonempty_delta(sys, z)?;
    let rows: Vec<Tuple> = (0..sys.universe_len()).map(|e| sys.row_tuple(e, z)).collect();
    let t = halving_node(&delta, &delta, &rows, cert.r, delta.members()[0])?;
    checked(&delta, t, QueryModel::M4, "halving strategy")
}

fn halving_node(full: &TupleSet, live: &TupleSet, rows: &[Tuple], r: usize, fallback: Tuple) -> Result<DecisionTree> {
    if live.len() <= 1 {
        return Ok(dead_leaf(live, fallback));
    }
    let delta = majority(live);
    let query = if full.contains(&delta) {
        delta
    } else {
        let unbalanced: Vec<usize> = (0..delta.width())
            .filter(|&i| r * live.iter().filter(|x| x.get(i) != delta.get(i)).count() < live.len())
            .collect();
        *rows
            .iter()
            .find(|row| unbalanced.iter().all(|&i| row.get(i) == delta.get(i)))
            .ok_or_else(|| {
                Error::CertificateViolation(format!(
                    "unbalanced majority equations on coordinates {unbalanced:?} are inconsistent; the system is not {r}-i-reduced"
                ))
            })?
    };
    let children = (0..query.width())
        .map(|i| halving_node(full, &live.restrict(i, !query.get(i))?, rows, r, query))
        .collect::<Result<_>>()?;
    Ok(DecisionTree::hypothesis(query, DecisionTree::terminal(query), children))
}

/// Rewrites a tree using attributes and proper hypotheses into one using
/// proper hypotheses only, with depth at most `2^h - 1`.
pub fn to_proper_only(sys: &InformationSystem, z: &Problem, t: &DecisionTree) -> Result<DecisionTree> {
    let delta = solution_set(sys, z)?;
    if !verify_against(&delta, t, QueryModel::M5)? {
        return Err(Error::Verification("input tree does not solve the problem under m5".into()));
    }
    let out = ProperRewrite { full: &delta }.rewrite(t, &delta);
    checked(&delta, out, QueryModel::M4, "proper-only rewrite")
}

struct ProperRewrite<'a> {
    full: &'a TupleSet,
}

fn confirmed(live: &TupleSet, h: &Tuple) -> TupleSet {
    TupleSet::new(live.width(), live.iter().copied().filter(|t| t == h)).expect("same width")
}

impl ProperRewrite<'_> {
    fn rewrite(&self, t: &DecisionTree, live: &TupleSet) -> DecisionTree {
        match t {
            DecisionTree::Terminal(_) => t.clone(),
            DecisionTree::Hypothesis {
                hypothesis,
                counterexamples,
                ..
            } => DecisionTree::hypothesis(
                *hypothesis,
                DecisionTree::terminal(*hypothesis),
                counterexamples
                    .iter()
                    .enumerate()
                    .map(|(i, c)| self.rewrite(c, &live.restrict(i, !hypothesis.get(i)).expect("width")))
                    .collect(),
            ),
            DecisionTree::Attribute { coord, zero, one } => {
                let t0 = self.rewrite(zero, &live.restrict(*coord, false).expect("width"));
                let t1 = self.rewrite(one, &live.restrict(*coord, true).expect("width"));
                self.compose(&t0, &t1, live)
            }
        }
    }

    /// `t0` with each terminal replaced by `t1`, walking the answers so that
    /// every reachable final terminal becomes a disambiguating hypothesis.
    fn compose(&self, t0: &DecisionTree, t1: &DecisionTree, live: &TupleSet) -> DecisionTree {
        match t0 {
            DecisionTree::Terminal(d) => self.finish(t1, live, *d),
            _ => self.descend(t0, live, &mut |me, sub, l| me.compose(sub, t1, l)),
        }
    }

    fn finish(&self, t1: &DecisionTree, live: &TupleSet, first: Tuple) -> DecisionTree {
        match t1 {
            DecisionTree::Terminal(second) => {
                if live.is_empty() {
                    return t1.clone();
                }
                let (h, other) = if self.full.contains(&first) {
                    (first, *second)
                } else {
                    (*second, first)
                };
                let cex = (0..h.width()).map(|_| DecisionTree::terminal(other)).collect();
                DecisionTree::hypothesis(h, DecisionTree::terminal(h), cex)
            }
            _ => self.descend(t1, live, &mut |me, sub, l| me.finish(sub, l, first)),
        }
    }

    fn descend(
        &self,
        t: &DecisionTree,
        live: &TupleSet,
        leaf: &mut dyn FnMut(&Self, &DecisionTree, &TupleSet) -> DecisionTree,
    ) -> DecisionTree {
        match t {
            DecisionTree::Terminal(_) => leaf(self, t, live),
            DecisionTree::Attribute { coord, zero, one } => DecisionTree::attribute(
                *coord,
                self.descend_child(zero, &live.restrict(*coord, false).expect("width"), leaf),
                self.descend_child(one, &live.restrict(*coord, true).expect("width"), leaf),
            ),
            DecisionTree::Hypothesis {
                hypothesis,
                confirm,
                counterexamples,
            } => DecisionTree::hypothesis(
                *hypothesis,
                self.descend_child(confirm, &confirmed(live, hypothesis), leaf),
                counterexamples
                    .iter()
                    .enumerate()
                    .map(|(i, c)| self.descend_child(c, &live.restrict(i, !hypothesis.get(i)).expect("width"), leaf))
                    .collect(),
            ),
        }
    }

    fn descend_child(
        &self,
        t: &DecisionTree,
        live: &TupleSet,
        leaf: &mut dyn FnMut(&Self, &DecisionTree, &TupleSet) -> DecisionTree,
    ) -> DecisionTree {
        match t {
            DecisionTree::Terminal(_) => leaf(self, t, live),
            _ => self.descend(t, live, leaf),
        }
    }
}

/// Tree of depth at most `r·k` using attributes and proper hypotheses, where
/// `k` is the k-level of the system (capped by `k_cap`).
pub fn k_system_tree(
    sys: &InformationSystem,
    z: &Problem,
    cert: &ReducednessCertificate,
    k_cap: usize,
) -> Result<DecisionTree> {
    cert.require(ReducednessKind::IReduced, 1)?;
    let delta = nonempty_delta(sys, z)?;
    let mut builder = KSystemBuilder {
        sys,
        z,
        r: cert.r,
        levels: KLevels::new(sys),
    };
    let top = builder.levels.level(&sys.universe());
    if top > k_cap {
        return Err(Error::Cap(format!("k-level {top} exceeds cap {k_cap}")));
    }
    let t = builder.build(&sys.universe())?;
    checked(&delta, t, QueryModel::M5, "k-system construction")
}

struct KSystemBuilder<'a> {
    sys: &'a InformationSystem,
    z: &'a Problem,
    r: usize,
    levels: KLevels<'a>,
}

impl KSystemBuilder<'_> {
    fn restrict(&self, set: &ElementSet, coord: usize, value: bool) -> ElementSet {
        let mut out = set.clone();
        let col = self.sys.column(self.z.attribute(coord));
        if value {
            out.intersect_with(col);
        } else {
            out.difference_with(col);
        }
        out
    }

    fn rows(&self, set: &ElementSet) -> TupleSet {
        TupleSet::new(self.z.dim(), set.ones().map(|e| self.sys.row_tuple(e, self.z))).expect("width")
    }

    fn build(&mut self, set: &ElementSet) -> Result<DecisionTree> {
        let n = self.z.dim();
        let live = self.rows(set);
        if live.len() <= 1 {
            return Ok(dead_leaf(&live, Tuple::zeros(n)));
        }
        let k = self.levels.level(set);
        let mut delta = Tuple::zeros(n);
        for i in 0..n {
            let v = [false, true]
                .into_iter()
                .find(|&v| {
                    let rest = self.restrict(set, i, !v);
                    self.levels.level(&rest) < k
                })
                .ok_or_else(|| Error::Verification(format!("no level-lowering value for coordinate {i} at level {k}")))?;
            delta = delta.with(i, v);
        }
        let subtrees = (0..n)
            .map(|i| self.build(&self.restrict(set, i, !delta.get(i))))
            .collect::<Result<Vec<_>>>()?;
        if live.contains(&delta) {
            return Ok(DecisionTree::hypothesis(delta, DecisionTree::terminal(delta), subtrees));
        }
        let core = self.min_inconsistent(set, delta)?;
        if core.len() > self.r {
            return Err(Error::CertificateViolation(format!(
                "smallest inconsistent part of the majority system has {} > {} equations",
                core.len(),
                self.r
            )));
        }
        Ok(cascade(&core, delta, &subtrees, None))
    }

    /// Positions of a smallest subsystem of `{z_i = delta_i}` with no solution in `set`.
    fn min_inconsistent(&self, set: &ElementSet, delta: Tuple) -> Result<Vec<usize>> {
        let n = self.z.dim();
        for size in 1..=n {
            for pos in (0..n).combinations(size) {
                let mut sol = set.clone();
                for &i in &pos {
                    sol = self.restrict(&sol, i, delta.get(i));
                }
                if sol.is_clear() {
                    return Ok(pos);
                }
            }
        }
        Err(Error::Verification("majority tuple is realized".into()))
    }
}

/// Full attribute cascade over `core`; the first mismatch with `delta` grafts
/// the matching subtree, the all-match path is unreachable.
fn cascade(core: &[usize], delta: Tuple, subtrees: &[DecisionTree], mismatch: Option<usize>) -> DecisionTree {
    match core.split_first() {
        None => match mismatch {
            Some(i) => subtrees[i].clone(),
            None => DecisionTree::terminal(Tuple::zeros(delta.width())),
        },
        Some((&i, rest)) => {
            let branch = |v: bool| {
                let m = mismatch.or((v != delta.get(i)).then_some(i));
                cascade(rest, delta, subtrees, m)
            };
            DecisionTree::attribute(i, branch(false), branch(true))
        }
    }
}

/// Attribute tree whose complete paths all have length `d` and consistent
/// equation systems. Attributes are system indices; leaves carry no label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompleteTree {
    Leaf,
    Node {
        attribute: usize,
        zero: Box<CompleteTree>,
        one: Box<CompleteTree>,
    },
}

impl CompleteTree {
    pub fn depth(&self) -> usize {
        match self {
            CompleteTree::Leaf => 0,
            CompleteTree::Node { zero, one, .. } => 1 + zero.depth().max(one.depth()),
        }
    }

    /// `F(G)` in first-visit order.
    pub fn attributes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        if let CompleteTree::Node { attribute, zero, one } = self {
            if !out.contains(attribute) {
                out.push(*attribute);
            }
            zero.collect(out);
            one.collect(out);
        }
    }

    /// Checks the defining conditions: uniform path length `d` and every
    /// path's equation system consistent on `sys`.
    pub fn validate(&self, sys: &InformationSystem, d: usize) -> Result<()> {
        self.validate_from(sys, &sys.universe(), d)
    }

    fn validate_from(&self, sys: &InformationSystem, set: &ElementSet, d: usize) -> Result<()> {
        if set.is_clear() {
            return Err(Error::Verification("inconsistent complete path".into()));
        }
        match self {
            CompleteTree::Leaf if d == 0 => Ok(()),
            CompleteTree::Node { attribute, zero, one } if d > 0 => {
                sys.check_attribute(*attribute)?;
                let col = sys.column(*attribute);
                let mut s1 = set.clone();
                s1.intersect_with(col);
                let mut s0 = set.clone();
                s0.difference_with(col);
                zero.validate_from(sys, &s0, d - 1)?;
                one.validate_from(sys, &s1, d - 1)
            }
            _ => Err(Error::Verification("complete paths differ in length".into())),
        }
    }

    pub fn to_dot(&self, sys: &InformationSystem) -> String {
        let mut out = String::from("digraph complete {\n");
        let mut next = 0usize;
        self.dot_node(sys, &mut out, &mut next);
        out.push_str("}\n");
        out
    }

    fn dot_node(&self, sys: &InformationSystem, out: &mut String, next: &mut usize) -> usize {
        let id = *next;
        *next += 1;
        match self {
            CompleteTree::Leaf => out.push_str(&format!("  n{id} [label=\"\", shape=point];\n")),
            CompleteTree::Node { attribute, zero, one } => {
                let name = sys.attribute_name(*attribute);
                out.push_str(&format!("  n{id} [label=\"{name}\"];\n"));
                for (v, child) in [(0, zero), (1, one)] {
                    let c = child.dot_node(sys, out, next);
                    out.push_str(&format!("  n{id} -> n{c} [label=\"{name}={v}\"];\n"));
                }
            }
        }
        id
    }
}

/// Backtracking search, attributes tried in pool order, memoized on the
/// element set and remaining depth.
pub fn find_d_complete_tree(sys: &InformationSystem, pool: &[usize], d: usize) -> Result<Option<CompleteTree>> {
    if d == 0 {
        return Err(Error::structure("d must be at least 1"));
    }
    for &f in pool {
        sys.check_attribute(f)?;
    }
    let mut memo = HashMap::new();
    Ok(complete_search(sys, pool, &sys.universe(), d, &mut memo))
}

fn complete_search(
    sys: &InformationSystem,
    pool: &[usize],
    set: &ElementSet,
    d: usize,
    memo: &mut HashMap<(ElementSet, usize), Option<CompleteTree>>,
) -> Option<CompleteTree> {
    if d == 0 {
        return Some(CompleteTree::Leaf);
    }
    if set.count_ones(..) < 1 << d {
        return None;
    }
    if let Some(hit) = memo.get(&(set.clone(), d)) {
        return hit.clone();
    }
    let mut found = None;
    for &f in pool {
        let col = sys.column(f);
        let mut one = set.clone();
        one.intersect_with(col);
        let mut zero = set.clone();
        zero.difference_with(col);
        if one.is_clear() || zero.is_clear() {
            continue;
        }
        let Some(z0) = complete_search(sys, pool, &zero, d - 1, memo) else {
            continue;
        };
        let Some(z1) = complete_search(sys, pool, &one, d - 1, memo) else {
            continue;
        };
        found = Some(CompleteTree::Node {
            attribute: f,
            zero: Box::new(z0),
            one: Box::new(z1),
        });
        break;
    }
    memo.insert((set.clone(), d), found.clone());
    found
}

/// Certified lower bound `d` on the hypothesis-only depth of `z`.
pub fn lower_bound_h2(sys: &InformationSystem, z: &Problem, g: &CompleteTree) -> Result<usize> {
    let d = g.depth();
    g.validate(sys, d)?;
    if let Some(f) = g.attributes().into_iter().find(|f| !z.indices().contains(f)) {
        return Err(Error::structure(format!(
            "tree attribute {} is not part of the problem",
            sys.attribute_name(f)
        )));
    }
    Ok(d)
}

/// Largest minimal inconsistent system over `pool` (lexicographically first
/// in literal order), with the problem formed by its attributes.
pub fn minimal_inconsistent_witness(
    sys: &InformationSystem,
    pool: &[usize],
    cap: usize,
    budget: usize,
) -> Result<Option<(EquationSystem, Problem)>> {
    let survey = crate::classify::survey_subsystems(sys, pool, cap, budget)?;
    let Some(p) = survey.inconsistent_witness else {
        return Ok(None);
    };
    let attrs: Vec<usize> = p.iter().map(|e: &Equation| e.attribute).unique().collect();
    let z = Problem::new(sys, attrs)?;
    Ok(Some((p, z)))
}
