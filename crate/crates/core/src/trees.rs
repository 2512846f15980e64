//! Queries, answers and decision trees over a problem, with the solving
//! criterion and DOT export.
//!
//! Coordinates are zero-based in the API and printed one-based (`f1`, `f2`, ...).

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::{solution_set, InformationSystem, Problem, Tuple, TupleSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Query {
    /// Ask for the value of the attribute at a coordinate.
    Attribute(usize),
    /// Ask whether the whole tuple equals the hypothesis.
    Hypothesis(Tuple),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    AttrValue(usize, bool),
    Confirm,
    /// Coordinate `i` differs from the hypothesis at `i`.
    Counterexample(usize),
}

/// A literal `(f_i, value)` of a path word.
pub type Literal = (usize, bool);

impl Answer {
    /// The equations the answer adds, as literals over coordinates.
    pub fn literals(&self, query: &Query) -> Vec<Literal> {
        match (query, self) {
            (Query::Attribute(_), Answer::AttrValue(i, v)) => vec![(*i, *v)],
            (Query::Hypothesis(h), Answer::Confirm) => (0..h.width()).map(|i| (i, h.get(i))).collect(),
            (Query::Hypothesis(h), Answer::Counterexample(i)) => vec![(*i, !h.get(*i))],
            _ => panic!("answer {self:?} does not answer query {query:?}"),
        }
    }
}

/// The five query models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum QueryModel {
    /// Attributes only.
    M1,
    /// Arbitrary hypotheses only.
    M2,
    /// Attributes and arbitrary hypotheses.
    M3,
    /// Proper hypotheses only.
    M4,
    /// Attributes and proper hypotheses.
    M5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypothesisKind {
    None,
    Arbitrary,
    Proper,
}

impl QueryModel {
    pub const ALL: [QueryModel; 5] = [
        QueryModel::M1,
        QueryModel::M2,
        QueryModel::M3,
        QueryModel::M4,
        QueryModel::M5,
    ];

    pub fn allows_attributes(self) -> bool {
        matches!(self, QueryModel::M1 | QueryModel::M3 | QueryModel::M5)
    }

    pub fn hypotheses(self) -> HypothesisKind {
        match self {
            QueryModel::M1 => HypothesisKind::None,
            QueryModel::M2 | QueryModel::M3 => HypothesisKind::Arbitrary,
            QueryModel::M4 | QueryModel::M5 => HypothesisKind::Proper,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            QueryModel::M1 => "m1",
            QueryModel::M2 => "m2",
            QueryModel::M3 => "m3",
            QueryModel::M4 => "m4",
            QueryModel::M5 => "m5",
        }
    }
}

impl fmt::Display for QueryModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QueryModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "m1" | "1" => Ok(QueryModel::M1),
            "m2" | "2" => Ok(QueryModel::M2),
            "m3" | "3" => Ok(QueryModel::M3),
            "m4" | "4" => Ok(QueryModel::M4),
            "m5" | "5" => Ok(QueryModel::M5),
            other => Err(Error::structure(format!("unknown query model '{other}'"))),
        }
    }
}

/// A decision tree over a problem of dimension `n`. Attribute nodes have two
/// children; hypothesis nodes have a confirm child plus one child per
/// coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecisionTree {
    Terminal(Tuple),
    Attribute {
        coord: usize,
        zero: Box<DecisionTree>,
        one: Box<DecisionTree>,
    },
    Hypothesis {
        hypothesis: Tuple,
        confirm: Box<DecisionTree>,
        counterexamples: Vec<DecisionTree>,
    },
}

/// A root-to-terminal path: the answered queries in order and the terminal label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletePath {
    pub steps: Vec<(Query, Answer)>,
    pub label: Tuple,
}

impl DecisionTree {
    pub fn terminal(label: Tuple) -> Self {
        DecisionTree::Terminal(label)
    }

    pub fn attribute(coord: usize, zero: DecisionTree, one: DecisionTree) -> Self {
        DecisionTree::Attribute {
            coord,
            zero: Box::new(zero),
            one: Box::new(one),
        }
    }

    pub fn hypothesis(hypothesis: Tuple, confirm: DecisionTree, counterexamples: Vec<DecisionTree>) -> Self {
        DecisionTree::Hypothesis {
            hypothesis,
            confirm: Box::new(confirm),
            counterexamples,
        }
    }

    /// Maximum number of working nodes on a root-to-terminal path.
    pub fn depth(&self) -> usize {
        match self {
            DecisionTree::Terminal(_) => 0,
            DecisionTree::Attribute { zero, one, .. } => 1 + zero.depth().max(one.depth()),
            DecisionTree::Hypothesis {
                confirm,
                counterexamples,
                ..
            } => 1 + counterexamples.iter().map(|c| c.depth()).fold(confirm.depth(), usize::max),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            DecisionTree::Terminal(_) => 1,
            DecisionTree::Attribute { zero, one, .. } => 1 + zero.node_count() + one.node_count(),
            DecisionTree::Hypothesis {
                confirm,
                counterexamples,
                ..
            } => 1 + confirm.node_count() + counterexamples.iter().map(|c| c.node_count()).sum::<usize>(),
        }
    }

    pub fn query(&self) -> Option<Query> {
        match self {
            DecisionTree::Terminal(_) => None,
            DecisionTree::Attribute { coord, .. } => Some(Query::Attribute(*coord)),
            DecisionTree::Hypothesis { hypothesis, .. } => Some(Query::Hypothesis(*hypothesis)),
        }
    }

    /// Children paired with the answer on their incoming edge.
    pub fn children(&self) -> Vec<(Answer, &DecisionTree)> {
        match self {
            DecisionTree::Terminal(_) => Vec::new(),
            DecisionTree::Attribute { coord, zero, one } => vec![
                (Answer::AttrValue(*coord, false), zero.as_ref()),
                (Answer::AttrValue(*coord, true), one.as_ref()),
            ],
            DecisionTree::Hypothesis {
                confirm,
                counterexamples,
                ..
            } => std::iter::once((Answer::Confirm, confirm.as_ref()))
                .chain(counterexamples.iter().enumerate().map(|(i, c)| (Answer::Counterexample(i), c)))
                .collect(),
        }
    }

    /// Checks widths, coordinates and child counts against dimension `n`.
    pub fn check_structure(&self, n: usize) -> Result<()> {
        match self {
            DecisionTree::Terminal(label) => {
                if label.width() != n {
                    return Err(Error::structure(format!("terminal label {label} has width != {n}")));
                }
                Ok(())
            }
            DecisionTree::Attribute { coord, zero, one } => {
                if *coord >= n {
                    return Err(Error::structure(format!("attribute coordinate {} exceeds {n}", coord + 1)));
                }
                zero.check_structure(n)?;
                one.check_structure(n)
            }
            DecisionTree::Hypothesis {
                hypothesis,
                confirm,
                counterexamples,
            } => {
                if hypothesis.width() != n {
                    return Err(Error::structure(format!("hypothesis {hypothesis} has width != {n}")));
                }
                if counterexamples.len() != n {
                    return Err(Error::structure(format!(
                        "hypothesis node has {} counterexample children, expected {n}",
                        counterexamples.len()
                    )));
                }
                confirm.check_structure(n)?;
                counterexamples.iter().try_for_each(|c| c.check_structure(n))
            }
        }
    }

    /// All complete paths in preorder.
    pub fn paths(&self) -> Vec<CompletePath> {
        let mut out = Vec::new();
        let mut steps = Vec::new();
        collect_paths(self, &mut steps, &mut out);
        out
    }

    /// Replaces every terminal with the tree produced by `f(label)`.
    pub fn map_terminals(&self, f: &mut impl FnMut(Tuple) -> DecisionTree) -> DecisionTree {
        match self {
            DecisionTree::Terminal(label) => f(*label),
            DecisionTree::Attribute { coord, zero, one } => {
                DecisionTree::attribute(*coord, zero.map_terminals(f), one.map_terminals(f))
            }
            DecisionTree::Hypothesis {
                hypothesis,
                confirm,
                counterexamples,
            } => DecisionTree::hypothesis(
                *hypothesis,
                confirm.map_terminals(f),
                counterexamples.iter().map(|c| c.map_terminals(f)).collect(),
            ),
        }
    }

    /// Whether any query kind in the tree is outside what `model` permits.
    /// Properness is not checked here.
    fn kinds_allowed(&self, model: QueryModel) -> bool {
        match self {
            DecisionTree::Terminal(_) => true,
            DecisionTree::Attribute { zero, one, .. } => {
                model.allows_attributes() && zero.kinds_allowed(model) && one.kinds_allowed(model)
            }
            DecisionTree::Hypothesis {
                confirm,
                counterexamples,
                ..
            } => {
                model.hypotheses() != HypothesisKind::None
                    && confirm.kinds_allowed(model)
                    && counterexamples.iter().all(|c| c.kinds_allowed(model))
            }
        }
    }

    /// DOT rendering with preorder node numbering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tree {\n");
        let mut next = 0usize;
        write_dot(self, &mut next, &mut out);
        out.push_str("}\n");
        out
    }
}

fn collect_paths(t: &DecisionTree, steps: &mut Vec<(Query, Answer)>, out: &mut Vec<CompletePath>) {
    match t {
        DecisionTree::Terminal(label) => out.push(CompletePath {
            steps: steps.clone(),
            label: *label,
        }),
        _ => {
            let q = t.query().expect("working node");
            for (a, child) in t.children() {
                steps.push((q, a));
                collect_paths(child, steps, out);
                steps.pop();
            }
        }
    }
}

fn write_dot(t: &DecisionTree, next: &mut usize, out: &mut String) -> usize {
    let id = *next;
    *next += 1;
    match t {
        DecisionTree::Terminal(label) => {
            let _ = writeln!(out, "  n{id} [label=\"{label}\", shape=box];");
        }
        DecisionTree::Attribute { coord, .. } => {
            let _ = writeln!(out, "  n{id} [label=\"f{}\"];", coord + 1);
        }
        DecisionTree::Hypothesis { hypothesis, .. } => {
            let _ = writeln!(out, "  n{id} [label=\"H={hypothesis}\"];");
        }
    }
    let q = t.query();
    for (a, child) in t.children() {
        let child_id = write_dot(child, next, out);
        let label = match (q, a) {
            (_, Answer::AttrValue(i, v)) => format!("f{}={}", i + 1, v as u8),
            (_, Answer::Confirm) => "yes".to_string(),
            (Some(Query::Hypothesis(h)), Answer::Counterexample(i)) => format!("f{}!={}", i + 1, h.get(i) as u8),
            _ => unreachable!(),
        };
        let _ = writeln!(out, "  n{id} -> n{child_id} [label=\"{label}\"];");
    }
    id
}

/// `π(ξ)`: the literals contributed by a complete path, in order.
pub fn path_word(path: &CompletePath) -> Vec<Literal> {
    path.steps.iter().flat_map(|(q, a)| a.literals(q)).collect()
}

/// Renders a path word as `(f2,0)(f1,1)`.
pub fn format_word(word: &[Literal]) -> String {
    word.iter().map(|(i, v)| format!("(f{},{})", i + 1, *v as u8)).collect()
}

/// Whether `t` solves `z` relative to `sys` using only queries legal under
/// `model`. Structural malformation is an error, not `false`.
pub fn verify_solves(sys: &InformationSystem, z: &Problem, t: &DecisionTree, model: QueryModel) -> Result<bool> {
    let delta = solution_set(sys, z)?;
    verify_against(&delta, t, model)
}

/// Same as [`verify_solves`] with a precomputed `Δ_U(z)`.
pub fn verify_against(delta: &TupleSet, t: &DecisionTree, model: QueryModel) -> Result<bool> {
    t.check_structure(delta.width())?;
    if !t.kinds_allowed(model) {
        return Ok(false);
    }
    Ok(verify_node(delta, delta, t, model))
}

fn verify_node(full: &TupleSet, live: &TupleSet, t: &DecisionTree, model: QueryModel) -> bool {
    match t {
        DecisionTree::Terminal(label) => match live.len() {
            0 => true,
            1 => live.single() == Some(*label),
            _ => false,
        },
        DecisionTree::Attribute { coord, zero, one } => {
            verify_node(full, &live.restrict(*coord, false).expect("checked"), zero, model)
                && verify_node(full, &live.restrict(*coord, true).expect("checked"), one, model)
        }
        DecisionTree::Hypothesis {
            hypothesis,
            confirm,
            counterexamples,
        } => {
            if model.hypotheses() == HypothesisKind::Proper && !full.contains(hypothesis) {
                return false;
            }
            let confirmed = TupleSet::new(live.width(), live.iter().copied().filter(|t| t == hypothesis))
                .expect("same width");
            verify_node(full, &confirmed, confirm, model)
                && counterexamples.iter().enumerate().all(|(i, c)| {
                    let restricted = live.restrict(i, !hypothesis.get(i)).expect("checked");
                    verify_node(full, &restricted, c, model)
                })
        }
    }
}

/// Labels of every terminal whose path is consistent with element `e`.
pub fn trace(sys: &InformationSystem, z: &Problem, t: &DecisionTree, e: usize) -> Result<BTreeSet<Tuple>> {
    if e >= sys.universe_len() {
        return Err(Error::structure(format!("unknown element index {e}")));
    }
    z.check_against(sys)?;
    t.check_structure(z.dim())?;
    let row = sys.row_tuple(e, z);
    let mut labels = BTreeSet::new();
    trace_node(t, row, &mut labels);
    Ok(labels)
}

fn trace_node(t: &DecisionTree, row: Tuple, labels: &mut BTreeSet<Tuple>) {
    let q = t.query();
    if let DecisionTree::Terminal(label) = t {
        labels.insert(*label);
        return;
    }
    for (a, child) in t.children() {
        let consistent = a.literals(q.as_ref().expect("working node")).iter().all(|&(i, v)| row.get(i) == v);
        if consistent {
            trace_node(child, row, labels);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tuple {
        Tuple::parse(s).unwrap()
    }

    fn cube_system(n: usize) -> InformationSystem {
        let rows: Vec<Vec<bool>> = (0..1u64 << n)
            .map(|b| Tuple::from_bits(n, b).to_bools())
            .collect();
        InformationSystem::from_rows(
            (0..rows.len()).map(|i| i.to_string()).collect(),
            (1..=n).map(|i| format!("f{i}")).collect(),
            &rows,
        )
        .unwrap()
    }

    fn cube1_tree(swap: bool) -> DecisionTree {
        let (a, b) = if swap { ("1", "0") } else { ("0", "1") };
        DecisionTree::attribute(0, DecisionTree::terminal(t(a)), DecisionTree::terminal(t(b)))
    }

    #[test]
    fn depth_examples() {
        assert_eq!(DecisionTree::terminal(t("0")).depth(), 0);
        assert_eq!(cube1_tree(false).depth(), 1);
        let inner = DecisionTree::attribute(1, DecisionTree::terminal(t("10")), DecisionTree::terminal(t("11")));
        let h = DecisionTree::hypothesis(
            t("01"),
            DecisionTree::terminal(t("01")),
            vec![
                inner,
                DecisionTree::attribute(0, DecisionTree::terminal(t("00")), DecisionTree::terminal(t("10"))),
            ],
        );
        assert_eq!(h.depth(), 2);
    }

    #[test]
    fn path_word_examples() {
        let p = CompletePath {
            steps: vec![(Query::Attribute(1), Answer::AttrValue(1, false))],
            label: t("00"),
        };
        assert_eq!(format_word(&path_word(&p)), "(f2,0)");
        let p = CompletePath {
            steps: vec![(Query::Hypothesis(t("01")), Answer::Confirm)],
            label: t("01"),
        };
        assert_eq!(format_word(&path_word(&p)), "(f1,0)(f2,1)");
        let p = CompletePath {
            steps: vec![(Query::Hypothesis(t("01")), Answer::Counterexample(0))],
            label: t("11"),
        };
        assert_eq!(format_word(&path_word(&p)), "(f1,1)");
        let p = CompletePath {
            steps: vec![],
            label: t("1"),
        };
        assert!(path_word(&p).is_empty());
    }

    #[test]
    fn verify_examples() {
        let single = InformationSystem::new(vec!["a".into()], vec![("f1".into(), vec![true])]).unwrap();
        let z = Problem::all(&single).unwrap();
        assert!(verify_solves(&single, &z, &DecisionTree::terminal(t("1")), QueryModel::M1).unwrap());
        assert!(!verify_solves(&single, &z, &DecisionTree::terminal(t("0")), QueryModel::M1).unwrap());

        let cube = cube_system(1);
        let z = Problem::all(&cube).unwrap();
        assert!(verify_solves(&cube, &z, &cube1_tree(false), QueryModel::M1).unwrap());
        assert!(!verify_solves(&cube, &z, &cube1_tree(true), QueryModel::M1).unwrap());
        // attribute tree is illegal under hypothesis-only models
        assert!(!verify_solves(&cube, &z, &cube1_tree(false), QueryModel::M4).unwrap());
    }

    #[test]
    fn structural_errors_are_not_false() {
        let cube = cube_system(2);
        let z = Problem::all(&cube).unwrap();
        let bad = DecisionTree::hypothesis(t("00"), DecisionTree::terminal(t("00")), vec![]);
        assert!(matches!(verify_solves(&cube, &z, &bad, QueryModel::M2), Err(Error::Structure(_))));
        let bad = DecisionTree::attribute(5, DecisionTree::terminal(t("00")), DecisionTree::terminal(t("00")));
        assert!(verify_solves(&cube, &z, &bad, QueryModel::M1).is_err());
        assert!(verify_solves(&cube, &z, &DecisionTree::terminal(t("0")), QueryModel::M1).is_err());
    }

    #[test]
    fn properness_is_checked_against_full_solution_set() {
        // Δ = {00, 10, 11}; hypothesis 01 is improper.
        let sys = InformationSystem::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                ("f1".into(), vec![false, true, true]),
                ("f2".into(), vec![false, false, true]),
            ],
        )
        .unwrap();
        let z = Problem::all(&sys).unwrap();
        let inner = DecisionTree::attribute(1, DecisionTree::terminal(t("10")), DecisionTree::terminal(t("11")));
        let tree = DecisionTree::hypothesis(
            t("01"),
            DecisionTree::terminal(t("01")),
            vec![
                inner,
                DecisionTree::attribute(0, DecisionTree::terminal(t("00")), DecisionTree::terminal(t("10"))),
            ],
        );
        assert!(verify_solves(&sys, &z, &tree, QueryModel::M3).unwrap());
        assert!(!verify_solves(&sys, &z, &tree, QueryModel::M5).unwrap());
    }

    #[test]
    fn trace_collects_overlapping_branches() {
        let cube = cube_system(2);
        let z = Problem::all(&cube).unwrap();
        // element "3" has row 11: hypothesis 00 admits counterexamples on both coordinates
        let tree = DecisionTree::hypothesis(
            t("00"),
            DecisionTree::terminal(t("00")),
            vec![DecisionTree::terminal(t("10")), DecisionTree::terminal(t("01"))],
        );
        let labels = trace(&cube, &z, &tree, 3).unwrap();
        assert_eq!(labels.into_iter().collect::<Vec<_>>(), vec![t("01"), t("10")]);
        assert!(!verify_solves(&cube, &z, &tree, QueryModel::M2).unwrap());
        assert!(trace(&cube, &z, &tree, 9).is_err());
    }

    #[test]
    fn trace_of_verified_tree_is_singleton() {
        let cube = cube_system(1);
        let z = Problem::all(&cube).unwrap();
        for e in 0..2 {
            let labels = trace(&cube, &z, &cube1_tree(false), e).unwrap();
            assert_eq!(labels.len(), 1);
            assert!(labels.contains(&cube.row_tuple(e, &z)));
        }
    }

    #[test]
    fn dot_export_is_preorder() {
        let tree = DecisionTree::hypothesis(
            t("01"),
            DecisionTree::terminal(t("01")),
            vec![cube_two_leaf(), DecisionTree::terminal(t("00"))],
        );
        let dot = tree.to_dot();
        let expected = "digraph tree {\n  n0 [label=\"H=01\"];\n  n1 [label=\"01\", shape=box];\n  n0 -> n1 [label=\"yes\"];\n  n2 [label=\"f2\"];\n  n3 [label=\"10\", shape=box];\n  n2 -> n3 [label=\"f2=0\"];\n  n4 [label=\"11\", shape=box];\n  n2 -> n4 [label=\"f2=1\"];\n  n0 -> n2 [label=\"f1!=0\"];\n  n5 [label=\"00\", shape=box];\n  n0 -> n5 [label=\"f2!=1\"];\n}\n";
        assert_eq!(dot, expected);
        assert_eq!(
            DecisionTree::terminal(t("1")).to_dot(),
            "digraph tree {\n  n0 [label=\"1\", shape=box];\n}\n"
        );
    }

    fn cube_two_leaf() -> DecisionTree {
        DecisionTree::attribute(1, DecisionTree::terminal(t("10")), DecisionTree::terminal(t("11")))
    }

    #[test]
    fn hypothesis_has_n_plus_one_answers() {
        let tree = DecisionTree::hypothesis(
            t("010"),
            DecisionTree::terminal(t("010")),
            vec![DecisionTree::terminal(t("110")); 3],
        );
        assert_eq!(tree.children().len(), 4);
        assert_eq!(tree.paths().len(), 4);
    }

    #[test]
    fn model_parsing() {
        assert_eq!("M4".parse::<QueryModel>().unwrap(), QueryModel::M4);
        assert!("m9".parse::<QueryModel>().is_err());
    }
}
