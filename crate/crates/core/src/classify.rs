//! Finite-scale classification: independence dimension, reducedness,
//! k-levels, extended indicator estimates, and the canonical systems U1..U7.
//!
//! Universal properties (r-reduced, r-i-reduced) are decided by a depth-first
//! walk over *irredundant* consistent systems: consistent systems in which
//! every equation removes some element the others admit. That family is
//! closed under taking subsystems, so extending only irredundant systems
//! reaches all of them. A system is minimally inconsistent exactly when it is
//! an irredundant system plus one literal that kills all its solutions while
//! each one-smaller part stays satisfiable.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::strategies::{find_d_complete_tree, ReducednessCertificate, ReducednessKind};
use crate::table::{solution_set, ElementSet, Equation, EquationSystem, InformationSystem, Problem};

/// Bounds on every universal or exhaustive check.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct Caps {
    /// Largest equation system examined by the reducedness checks.
    pub subsystem_cap: usize,
    pub k_level_cap: usize,
    /// Maximum search nodes for any single enumeration.
    pub node_budget: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subsystem_cap: 8,
            k_level_cap: 6,
            node_budget: 2_000_000,
        }
    }
}

fn literals(pool: &[usize]) -> Vec<Equation> {
    pool.iter()
        .flat_map(|&f| [Equation::new(f, false), Equation::new(f, true)])
        .collect()
}

/// Result of walking all irredundant systems over a pool up to a cap.
#[derive(Clone, Debug)]
pub struct SubsystemSurvey {
    pub cap: usize,
    /// Size of the largest irredundant consistent system (at most `cap`).
    pub max_irredundant: usize,
    /// Lexicographically first irredundant system of that size.
    pub irredundant_witness: EquationSystem,
    /// Size of the largest minimal inconsistent system (at most `cap`).
    pub max_min_inconsistent: usize,
    pub inconsistent_witness: Option<EquationSystem>,
    /// True when no larger system than `cap` can change the answers.
    pub exhaustive: bool,
    pub nodes: usize,
}

struct SurveyWalk<'a> {
    lits: Vec<Equation>,
    sols: Vec<ElementSet>,
    cap: usize,
    budget: usize,
    nodes: usize,
    best_irr: (usize, Vec<usize>),
    best_inc: (usize, Option<Vec<usize>>),
    _sys: &'a InformationSystem,
}

impl SurveyWalk<'_> {
    fn walk(&mut self, current: &mut Vec<usize>, sol: &ElementSet, sub_sols: &[ElementSet], start: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::budget(format!("subsystem enumeration exceeded {} nodes", self.budget)));
        }
        for e in start..self.lits.len() {
            let sol_e = &self.sols[e];
            let mut inter = sol.clone();
            inter.intersect_with(sol_e);
            if inter.is_clear() {
                let minimal = sub_sols.iter().all(|s| !s.is_disjoint(sol_e));
                let size = current.len() + 1;
                if minimal && size <= self.cap && size > self.best_inc.0 {
                    let mut w = current.clone();
                    w.push(e);
                    self.best_inc = (size, Some(w));
                }
                continue;
            }
            if inter == *sol {
                continue;
            }
            let mut next_subs = Vec::with_capacity(sub_sols.len() + 1);
            let mut irredundant = true;
            for s in sub_sols {
                let mut t = s.clone();
                t.intersect_with(sol_e);
                if t == inter {
                    irredundant = false;
                    break;
                }
                next_subs.push(t);
            }
            if !irredundant {
                continue;
            }
            next_subs.push(sol.clone());
            current.push(e);
            if current.len() > self.best_irr.0 {
                self.best_irr = (current.len(), current.clone());
            }
            if current.len() < self.cap {
                self.walk(current, &inter, &next_subs, e + 1)?;
            }
            current.pop();
        }
        Ok(())
    }
}

/// Walks every irredundant consistent system over `pool` with at most `cap`
/// equations, recording the largest irredundant and minimal inconsistent
/// systems. Literals are ordered by pool position, value 0 before 1.
pub fn survey_subsystems(sys: &InformationSystem, pool: &[usize], cap: usize, budget: usize) -> Result<SubsystemSurvey> {
    for &f in pool {
        sys.check_attribute(f)?;
    }
    let lits = literals(pool);
    let sols = lits.iter().map(|l| sys.satisfying(l.attribute, l.value)).collect();
    let mut walk = SurveyWalk {
        lits,
        sols,
        cap,
        budget,
        nodes: 0,
        best_irr: (0, Vec::new()),
        best_inc: (0, None),
        _sys: sys,
    };
    if cap > 0 {
        walk.walk(&mut Vec::new(), &sys.universe(), &[], 0)?;
    }
    let to_system = |idx: &[usize]| EquationSystem::new(idx.iter().map(|&k| walk.lits[k]).collect());
    // irredundant consistent systems have at most |A| - 1 equations and use
    // each attribute once
    let bound = sys.universe_len().saturating_sub(1).min(pool.len());
    let exhaustive = walk.best_irr.0 < cap || cap >= bound;
    Ok(SubsystemSurvey {
        cap,
        max_irredundant: walk.best_irr.0,
        irredundant_witness: to_system(&walk.best_irr.1),
        max_min_inconsistent: walk.best_inc.0,
        inconsistent_witness: walk.best_inc.1.as_deref().map(to_system),
        exhaustive,
        nodes: walk.nodes,
    })
}

/// Verdict of an r-reduced or r-i-reduced check.
#[derive(Clone, Debug, Serialize)]
pub struct ReducednessCheck {
    pub kind: ReducednessKind,
    pub r: usize,
    pub cap: usize,
    pub holds: bool,
    /// Whether the verdict covers systems of every size, not only up to `cap`.
    pub exhaustive: bool,
    /// A violating system when `holds` is false.
    #[serde(skip)]
    pub witness: Option<EquationSystem>,
}

/// Every consistent system over `pool` has an equivalent subsystem of at most
/// `r` equations. Irredundant systems are closed under subsystems, so only
/// size `r + 1` needs inspection; the check is exact whenever `cap > r`.
pub fn is_r_reduced(sys: &InformationSystem, pool: &[usize], r: usize, cap: usize, budget: usize) -> Result<ReducednessCheck> {
    let limit = cap.min(r + 1);
    let s = survey_subsystems(sys, pool, limit, budget)?;
    let holds = s.max_irredundant <= r;
    Ok(ReducednessCheck {
        kind: ReducednessKind::Reduced,
        r,
        cap,
        holds,
        exhaustive: cap > r || s.exhaustive,
        witness: (!holds).then_some(s.irredundant_witness),
    })
}

/// Every inconsistent system over `pool` has an inconsistent subsystem of at
/// most `r` equations, checked over systems of at most `cap` equations.
pub fn is_r_i_reduced(sys: &InformationSystem, pool: &[usize], r: usize, cap: usize, budget: usize) -> Result<ReducednessCheck> {
    let s = survey_subsystems(sys, pool, cap, budget)?;
    let holds = s.max_min_inconsistent <= r;
    Ok(ReducednessCheck {
        kind: ReducednessKind::IReduced,
        r,
        cap,
        holds,
        exhaustive: s.exhaustive,
        witness: if holds { None } else { s.inconsistent_witness },
    })
}

/// Checks reducedness over all attributes and issues a certificate, or fails
/// with the violating system.
pub fn certify(sys: &InformationSystem, kind: ReducednessKind, r: usize, caps: &Caps) -> Result<ReducednessCertificate> {
    let pool: Vec<usize> = (0..sys.attribute_count()).collect();
    let check = match kind {
        ReducednessKind::Reduced => is_r_reduced(sys, &pool, r, caps.subsystem_cap, caps.node_budget)?,
        ReducednessKind::IReduced => is_r_i_reduced(sys, &pool, r, caps.subsystem_cap, caps.node_budget)?,
    };
    if !check.holds {
        let w = check.witness.map(|w| w.display(sys)).unwrap_or_default();
        return Err(Error::CertificateViolation(format!("system is not {r}-{kind}: witness {w}")));
    }
    Ok(ReducednessCertificate::verified(r, kind, caps.subsystem_cap, check.exhaustive))
}

/// Whether every value combination of `subset` is realized by some element.
pub fn is_independent(sys: &InformationSystem, subset: &[usize]) -> Result<bool> {
    if subset.is_empty() {
        return Ok(true);
    }
    if subset.len() >= 63 {
        return Ok(false);
    }
    let z = Problem::new(sys, subset.to_vec())?;
    Ok(solution_set(sys, &z)?.len() == 1usize << subset.len())
}

/// `I`: the largest independent subset of `pool`, with the lexicographically
/// first witness of that size.
pub fn independence_dimension(sys: &InformationSystem, pool: &[usize], budget: usize) -> Result<(usize, Vec<usize>)> {
    for &f in pool {
        sys.check_attribute(f)?;
    }
    let mut best = Vec::new();
    let mut nodes = 0usize;
    let mut current = Vec::new();
    independent_walk(sys, pool, 0, &[sys.universe()], &mut current, &mut best, &mut nodes, budget)?;
    Ok((best.len(), best.into_iter().map(|k| pool[k]).collect()))
}

#[allow(clippy::too_many_arguments)]
fn independent_walk(
    sys: &InformationSystem,
    pool: &[usize],
    start: usize,
    cells: &[ElementSet],
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
    nodes: &mut usize,
    budget: usize,
) -> Result<()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::budget(format!("independence search exceeded {budget} nodes")));
    }
    if current.len() > best.len() {
        *best = current.clone();
    }
    // each further attribute doubles the cells; stop when they cannot fit
    if cells.len() * 2 > sys.universe_len() {
        return Ok(());
    }
    for k in start..pool.len() {
        if current.len() + 1 + (pool.len() - k - 1) <= best.len() {
            break;
        }
        let col = sys.column(pool[k]);
        let mut split = Vec::with_capacity(cells.len() * 2);
        let mut ok = true;
        for c in cells {
            let ones = c.intersection_count(col);
            if ones == 0 || ones == c.count_ones(..) {
                ok = false;
                break;
            }
            let mut one = c.clone();
            one.intersect_with(col);
            let mut zero = c.clone();
            zero.difference_with(col);
            split.push(zero);
            split.push(one);
        }
        if ok {
            current.push(k);
            independent_walk(sys, pool, k + 1, &split, current, best, nodes, budget)?;
            current.pop();
        }
    }
    Ok(())
}

const MAX_SUBSYSTEM_SEARCH: usize = 24;

/// A smallest subsystem of the consistent system `s` with the same solutions.
pub fn min_equivalent_subsystem(sys: &InformationSystem, s: &EquationSystem) -> Result<EquationSystem> {
    let target = s.solutions(sys)?;
    if target.is_clear() {
        return Err(Error::structure("system is inconsistent"));
    }
    if s.len() > MAX_SUBSYSTEM_SEARCH {
        return Err(Error::budget(format!("subsystem search over {} equations", s.len())));
    }
    for size in 0..=s.len() {
        for pos in (0..s.len()).combinations(size) {
            let sub = s.subsystem(&pos);
            if sub.solutions(sys)? == target {
                return Ok(sub);
            }
        }
    }
    unreachable!("the system itself is equivalent")
}

/// A smallest inconsistent subsystem of the inconsistent system `s`.
pub fn min_inconsistent_subsystem(sys: &InformationSystem, s: &EquationSystem) -> Result<EquationSystem> {
    if s.is_consistent(sys)? {
        return Err(Error::structure("system is consistent"));
    }
    if s.len() > MAX_SUBSYSTEM_SEARCH {
        return Err(Error::budget(format!("subsystem search over {} equations", s.len())));
    }
    for size in 1..=s.len() {
        for pos in (0..s.len()).combinations(size) {
            let sub = s.subsystem(&pos);
            if !sub.is_consistent(sys)? {
                return Ok(sub);
            }
        }
    }
    unreachable!("the system itself is inconsistent")
}

/// Inconsistent, and every subsystem with one equation removed is consistent.
pub fn is_minimal_inconsistent(sys: &InformationSystem, s: &EquationSystem) -> Result<bool> {
    if s.is_consistent(sys)? {
        return Ok(false);
    }
    for skip in 0..s.len() {
        let pos: Vec<usize> = (0..s.len()).filter(|&p| p != skip).collect();
        if !s.subsystem(&pos).is_consistent(sys)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Consistent, and removing any single equation enlarges the solution set.
pub fn is_irredundant(sys: &InformationSystem, s: &EquationSystem) -> Result<bool> {
    let sol = s.solutions(sys)?;
    if sol.is_clear() {
        return Ok(false);
    }
    for skip in 0..s.len() {
        let pos: Vec<usize> = (0..s.len()).filter(|&p| p != skip).collect();
        if s.subsystem(&pos).solutions(sys)? == sol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KLevel {
    Level(usize),
    ExceedsCap(usize),
}

impl KLevel {
    pub fn level(self) -> Option<usize> {
        match self {
            KLevel::Level(k) => Some(k),
            KLevel::ExceedsCap(_) => None,
        }
    }
}

impl fmt::Display for KLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KLevel::Level(k) => write!(f, "{k}"),
            KLevel::ExceedsCap(c) => write!(f, ">{c}"),
        }
    }
}

/// Memoized k-levels of subsystems `(A', F)` for element subsets `A'`.
pub struct KLevels<'a> {
    sys: &'a InformationSystem,
    memo: HashMap<ElementSet, usize>,
}

impl<'a> KLevels<'a> {
    pub fn new(sys: &'a InformationSystem) -> Self {
        KLevels {
            sys,
            memo: HashMap::new(),
        }
    }

    /// Smallest `k` such that `(set, F)` is a k-information system. An attribute
    /// constant on `set` restricts to the empty system (level 0) on one side.
    pub fn level(&mut self, set: &ElementSet) -> usize {
        if let Some(&k) = self.memo.get(set) {
            return k;
        }
        let sys = self.sys;
        let mut worst = None;
        for f in 0..sys.attribute_count() {
            if sys.is_constant_on(f, set) {
                continue;
            }
            let mut one = set.clone();
            one.intersect_with(sys.column(f));
            let mut zero = set.clone();
            zero.difference_with(sys.column(f));
            let a = self.level(&one);
            let m = if a == 0 { 0 } else { a.min(self.level(&zero)) };
            worst = Some(worst.map_or(m, |w: usize| w.max(m)));
        }
        let k = worst.map_or(0, |w| w + 1);
        self.memo.insert(set.clone(), k);
        k
    }
}

pub fn k_level(sys: &InformationSystem, cap: usize) -> KLevel {
    let k = KLevels::new(sys).level(&sys.universe());
    if k > cap {
        KLevel::ExceedsCap(cap)
    } else {
        KLevel::Level(k)
    }
}

/// The seven canonical infinite systems, instantiated at a size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CanonicalKind {
    U1,
    U2,
    U3,
    U4,
    U5,
    U6,
    U7,
}

impl CanonicalKind {
    pub const ALL: [CanonicalKind; 7] = [
        CanonicalKind::U1,
        CanonicalKind::U2,
        CanonicalKind::U3,
        CanonicalKind::U4,
        CanonicalKind::U5,
        CanonicalKind::U6,
        CanonicalKind::U7,
    ];

    /// Row of the extended indicator table (R, D, C, I) this system realizes.
    pub fn expected_indicator(self) -> [bool; 4] {
        match self {
            CanonicalKind::U1 => [false, false, false, false],
            CanonicalKind::U2 => [false, false, false, true],
            CanonicalKind::U3 => [false, true, false, false],
            CanonicalKind::U4 => [false, true, false, true],
            CanonicalKind::U5 => [false, true, true, false],
            CanonicalKind::U6 => [false, true, true, true],
            CanonicalKind::U7 => [true, true, false, true],
        }
    }

    /// Two sizes used to judge whether a parameter grows with the instance.
    pub fn ladder(self) -> (usize, usize) {
        match self {
            CanonicalKind::U1 => (2, 4),
            CanonicalKind::U2 => (2, 4),
            CanonicalKind::U3 => (3, 7),
            CanonicalKind::U4 => (2, 4),
            CanonicalKind::U5 => (3, 4),
            CanonicalKind::U6 => (3, 6),
            CanonicalKind::U7 => (3, 7),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CanonicalKind::U1 => "u1",
            CanonicalKind::U2 => "u2",
            CanonicalKind::U3 => "u3",
            CanonicalKind::U4 => "u4",
            CanonicalKind::U5 => "u5",
            CanonicalKind::U6 => "u6",
            CanonicalKind::U7 => "u7",
        }
    }
}

impl fmt::Display for CanonicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CanonicalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CanonicalKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::structure(format!("unknown canonical system '{s}'")))
    }
}

fn numbered(range: impl Iterator<Item = usize>) -> Vec<String> {
    range.map(|i| i.to_string()).collect()
}

/// Finite instantiation of a canonical system.
///
/// * U1(n): universe {1..n}, every distinct column over it (`g<bits>`).
/// * U2(n): universe {0,1}^n, coordinate projections f1..fn.
/// * U3(n): universe {1..n+1}, p1..pn and l1..ln.
/// * U4(n): universe {1..n+1}^2, f1..fn and f_{i,j} for i,j <= n. The extra
///   row and column keep every finite set of `f_{i,j}=0` equations satisfiable.
/// * U5(n): universe of pairs (i,j) with j <= i <= n, attributes f_i, f_{i,j}.
/// * U6(n): universe {1..n+1}, p1..pn.
/// * U7(n): universe {1..n+1}, l1..ln.
pub fn canonical_system(kind: CanonicalKind, n: usize) -> Result<InformationSystem> {
    if n == 0 {
        return Err(Error::structure("canonical size must be at least 1"));
    }
    let p = |i: usize, j: usize| j == i;
    let l = |i: usize, j: usize| j > i;
    match kind {
        CanonicalKind::U1 => {
            if n > 6 {
                return Err(Error::budget(format!("U1({n}) would have 2^{n} columns")));
            }
            let attrs = (0..1u64 << n)
                .map(|mask| {
                    let col: Vec<bool> = (0..n).map(|e| mask >> (n - 1 - e) & 1 == 1).collect();
                    let name = col.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
                    (format!("g{name}"), col)
                })
                .collect();
            InformationSystem::new(numbered(1..=n), attrs)
        }
        CanonicalKind::U2 => {
            if n > 12 {
                return Err(Error::budget(format!("U2({n}) would have 2^{n} elements")));
            }
            let elems: Vec<u64> = (0..1u64 << n).collect();
            let names = elems
                .iter()
                .map(|&b| crate::table::Tuple::from_bits(n, b).to_string())
                .collect();
            let attrs = (0..n)
                .map(|i| {
                    let col = elems.iter().map(|&b| b >> (n - 1 - i) & 1 == 1).collect();
                    (format!("f{}", i + 1), col)
                })
                .collect();
            InformationSystem::new(names, attrs)
        }
        CanonicalKind::U3 | CanonicalKind::U6 | CanonicalKind::U7 => {
            let universe: Vec<usize> = (1..=n + 1).collect();
            let mut attrs = Vec::new();
            if kind != CanonicalKind::U7 {
                for i in 1..=n {
                    attrs.push((format!("p{i}"), universe.iter().map(|&j| p(i, j)).collect()));
                }
            }
            if kind != CanonicalKind::U6 {
                for i in 1..=n {
                    attrs.push((format!("l{i}"), universe.iter().map(|&j| l(i, j)).collect()));
                }
            }
            InformationSystem::new(numbered(universe.into_iter()), attrs)
        }
        CanonicalKind::U4 => {
            let universe: Vec<(usize, usize)> = (1..=n + 1).cartesian_product(1..=n + 1).collect();
            let mut attrs = Vec::new();
            for i in 1..=n {
                attrs.push((format!("f{i}"), universe.iter().map(|&(a, _)| a > i).collect()));
            }
            for i in 1..=n {
                for j in 1..=n {
                    attrs.push((format!("f{i}_{j}"), universe.iter().map(|&a| a == (i, j)).collect()));
                }
            }
            InformationSystem::new(universe.iter().map(|(a, b)| format!("{a}-{b}")).collect(), attrs)
        }
        CanonicalKind::U5 => {
            let universe: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
            let mut attrs = Vec::new();
            for i in 1..=n {
                attrs.push((format!("f{i}"), universe.iter().map(|&(a, _)| a == i).collect()));
            }
            for &(i, j) in &universe {
                attrs.push((format!("f{i}_{j}"), universe.iter().map(|&a| a == (i, j)).collect()));
            }
            InformationSystem::new(universe.iter().map(|(a, b)| format!("{a}-{b}")).collect(), attrs)
        }
    }
}

fn names(sys: &InformationSystem, pool: &[usize]) -> Vec<String> {
    pool.iter().map(|&f| sys.attribute_name(f).to_string()).collect()
}

/// Size parameters that decide the four indicator bits on one instance.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceParameters {
    pub universe: usize,
    pub attributes: usize,
    /// Largest irredundant consistent system (the least r with r-reduced);
    /// `None` once it reaches the cap.
    pub reduced_r: Option<usize>,
    pub independence_dimension: usize,
    pub k_level: Option<usize>,
    /// Largest minimal inconsistent system found at the cap (the least r
    /// with r-i-reduced when the survey is exhaustive).
    pub i_reduced_r: Option<usize>,
}

pub fn instance_parameters(sys: &InformationSystem, caps: &Caps) -> Result<InstanceParameters> {
    let pool: Vec<usize> = (0..sys.attribute_count()).collect();
    let survey = survey_subsystems(sys, &pool, caps.subsystem_cap, caps.node_budget)?;
    let (dim, _) = independence_dimension(sys, &pool, caps.node_budget)?;
    Ok(InstanceParameters {
        universe: sys.universe_len(),
        attributes: sys.attribute_count(),
        reduced_r: (survey.max_irredundant < survey.cap || survey.exhaustive).then_some(survey.max_irredundant),
        independence_dimension: dim,
        k_level: k_level(sys, caps.k_level_cap).level(),
        i_reduced_r: Some(survey.max_min_inconsistent),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicatorBit {
    pub value: bool,
    pub smaller: Option<usize>,
    pub larger: Option<usize>,
    pub witness: String,
}

/// Estimate of the extended indicator vector (R, D, C, I) from two nested
/// instances: a bit is 1 when its governing parameter does not grow from the
/// smaller instance to the larger one.
#[derive(Clone, Debug, Serialize)]
pub struct IndicatorEstimate {
    pub r: IndicatorBit,
    pub d: IndicatorBit,
    pub c: IndicatorBit,
    pub i: IndicatorBit,
    /// Complexity class 1..=7 matching the bits, if any.
    pub class: Option<usize>,
    pub disclaimer: String,
}

impl IndicatorEstimate {
    pub fn bits(&self) -> [bool; 4] {
        [self.r.value, self.d.value, self.c.value, self.i.value]
    }
}

/// Index (1-based) of `bits` among the seven admissible indicator rows.
pub fn complexity_class(bits: [bool; 4]) -> Option<usize> {
    CanonicalKind::ALL
        .iter()
        .position(|k| k.expected_indicator() == bits)
        .map(|p| p + 1)
}

fn bit(name: &str, smaller: Option<usize>, larger: Option<usize>) -> IndicatorBit {
    let value = match (smaller, larger) {
        (Some(a), Some(b)) => b <= a,
        _ => false,
    };
    let show = |v: Option<usize>| v.map_or_else(|| "over cap".to_string(), |v| v.to_string());
    IndicatorBit {
        value,
        smaller,
        larger,
        witness: format!("{name}: {} -> {}", show(smaller), show(larger)),
    }
}

pub fn estimate_indicator(smaller: &InstanceParameters, larger: &InstanceParameters, caps: &Caps, method: &str) -> IndicatorEstimate {
    let r = bit("least r for r-reduced", smaller.reduced_r, larger.reduced_r);
    let d = bit(
        "independence dimension",
        Some(smaller.independence_dimension),
        Some(larger.independence_dimension),
    );
    let c = bit("k-level", smaller.k_level, larger.k_level);
    let i = bit("least r for r-i-reduced", smaller.i_reduced_r, larger.i_reduced_r);
    let bits = [r.value, d.value, c.value, i.value];
    IndicatorEstimate {
        r,
        d,
        c,
        i,
        class: complexity_class(bits),
        disclaimer: format!(
            "finite-scale estimate ({method}); subsystem cap {}, k-level cap {}; \
             membership of an infinite system is not decidable from finite data",
            caps.subsystem_cap, caps.k_level_cap
        ),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducedSummary {
    /// Least r at the cap; `None` when the cap was reached.
    pub r: Option<usize>,
    pub cap: usize,
    pub exhaustive: bool,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub system: String,
    pub universe: usize,
    pub attributes: usize,
    pub independence_dimension: usize,
    pub independence_witness: Vec<String>,
    pub r_reduced: ReducedSummary,
    pub r_i_reduced: ReducedSummary,
    pub k_level: KLevel,
    pub extended_indicator_estimate: IndicatorEstimate,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn summary(&self) -> String {
        let show = |r: Option<usize>, cap: usize| r.map_or_else(|| format!(">= {cap}"), |r| r.to_string());
        let bits = self.extended_indicator_estimate.bits().map(|b| b as u8);
        let class = self
            .extended_indicator_estimate
            .class
            .map_or_else(|| "none".to_string(), |c| format!("V{c}"));
        format!(
            "system {}: |A| = {}, |F| = {}\n\
             independence dimension: {} {:?}\n\
             least r (reduced): {} witness {:?}\n\
             least r (i-reduced): {} witness {:?}\n\
             k-level: {}\n\
             indicator estimate (R,D,C,I) = ({},{},{},{}) class {}\n",
            self.system,
            self.universe,
            self.attributes,
            self.independence_dimension,
            self.independence_witness,
            show(self.r_reduced.r, self.r_reduced.cap),
            self.r_reduced.witness,
            show(self.r_i_reduced.r, self.r_i_reduced.cap),
            self.r_i_reduced.witness,
            self.k_level,
            bits[0],
            bits[1],
            bits[2],
            bits[3],
            class
        )
    }
}

fn report_with(name: &str, sys: &InformationSystem, caps: &Caps, estimate: IndicatorEstimate) -> Result<ClassificationReport> {
    let pool: Vec<usize> = (0..sys.attribute_count()).collect();
    let (dim, witness) = independence_dimension(sys, &pool, caps.node_budget)?;
    let survey = survey_subsystems(sys, &pool, caps.subsystem_cap, caps.node_budget)?;
    Ok(ClassificationReport {
        system: name.to_string(),
        universe: sys.universe_len(),
        attributes: sys.attribute_count(),
        independence_dimension: dim,
        independence_witness: names(sys, &witness),
        r_reduced: ReducedSummary {
            r: survey.exhaustive.then_some(survey.max_irredundant),
            cap: caps.subsystem_cap,
            exhaustive: survey.exhaustive,
            witness: survey.irredundant_witness.display_list(sys),
        },
        r_i_reduced: ReducedSummary {
            r: survey.exhaustive.then_some(survey.max_min_inconsistent),
            cap: caps.subsystem_cap,
            exhaustive: survey.exhaustive,
            witness: survey
                .inconsistent_witness
                .as_ref()
                .map(|w| w.display_list(sys))
                .unwrap_or_default(),
        },
        k_level: k_level(sys, caps.k_level_cap),
        extended_indicator_estimate: estimate,
    })
}

/// Report for an arbitrary table. Indicator bits compare the system restricted
/// to the first half of its attributes with the full system.
pub fn classify(name: &str, sys: &InformationSystem, caps: &Caps) -> Result<ClassificationReport> {
    let half: Vec<usize> = (0..sys.attribute_count().div_ceil(2)).collect();
    let smaller = instance_parameters(&sys.with_attributes(&half)?, caps)?;
    let larger = instance_parameters(sys, caps)?;
    let estimate = estimate_indicator(&smaller, &larger, caps, "attribute-prefix growth");
    report_with(name, sys, caps, estimate)
}

/// Indicator estimate for a canonical family from its two ladder sizes.
pub fn canonical_indicator(kind: CanonicalKind, caps: &Caps) -> Result<IndicatorEstimate> {
    let (a, b) = kind.ladder();
    let smaller = instance_parameters(&canonical_system(kind, a)?, caps)?;
    let larger = instance_parameters(&canonical_system(kind, b)?, caps)?;
    Ok(estimate_indicator(
        &smaller,
        &larger,
        caps,
        &format!("{kind}({a}) vs {kind}({b}) growth"),
    ))
}

pub fn classify_canonical(kind: CanonicalKind, n: usize, caps: &Caps) -> Result<ClassificationReport> {
    let sys = canonical_system(kind, n)?;
    let estimate = canonical_indicator(kind, caps)?;
    report_with(&format!("{kind}({n})"), &sys, caps, estimate)
}

#[derive(Clone, Debug, Serialize)]
pub struct SauerCheck {
    pub solutions: usize,
    pub dim: usize,
    pub independence_dimension: usize,
    /// `(4n)^I`, saturating.
    pub bound: u128,
    pub holds: bool,
}

/// Compares `|Δ_U(z)|` against `(4n)^I` where `I` is the system's
/// independence dimension.
pub fn sauer_bound(sys: &InformationSystem, z: &Problem, budget: usize) -> Result<SauerCheck> {
    let pool: Vec<usize> = (0..sys.attribute_count()).collect();
    let (dim, _) = independence_dimension(sys, &pool, budget)?;
    let solutions = solution_set(sys, z)?.len();
    let bound = (4 * z.dim() as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    Ok(SauerCheck {
        solutions,
        dim: z.dim(),
        independence_dimension: dim,
        bound,
        holds: solutions as u128 <= bound,
    })
}

/// `true` when the bound holds; a violation is an error.
pub fn sauer_bound_check(sys: &InformationSystem, z: &Problem) -> Result<bool> {
    let c = sauer_bound(sys, z, Caps::default().node_budget)?;
    if !c.holds {
        return Err(Error::Verification(format!(
            "|Δ| = {} exceeds (4·{})^{} = {}",
            c.solutions, c.dim, c.independence_dimension, c.bound
        )));
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessBundle {
    pub kind: CanonicalKind,
    pub n: usize,
    pub checks: Vec<WitnessCheck>,
    pub indicator: IndicatorEstimate,
}

impl WitnessBundle {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn attr(sys: &InformationSystem, name: &str) -> Result<usize> {
    sys.attribute_index(name)
        .ok_or_else(|| Error::structure(format!("missing attribute {name}")))
}

fn system_of(sys: &InformationSystem, eqs: &[(&str, bool)]) -> Result<EquationSystem> {
    Ok(EquationSystem::new(
        eqs.iter()
            .map(|&(n, v)| Ok(Equation::new(attr(sys, n)?, v)))
            .collect::<Result<_>>()?,
    ))
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> WitnessCheck {
    WitnessCheck {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn min_inconsistent_check(sys: &InformationSystem, name: &str, s: &EquationSystem) -> Result<WitnessCheck> {
    let ok = is_minimal_inconsistent(sys, s)?;
    Ok(check(
        name,
        ok,
        format!("{} inconsistent with every proper subsystem consistent: {ok}", s.display(sys)),
    ))
}

fn floor_log2(x: usize) -> usize {
    (usize::BITS - 1 - x.leading_zeros()) as usize
}

/// Reproduces the finite evidence behind the classification of each canonical
/// system at size `n`.
pub fn lemma_witnesses(kind: CanonicalKind, n: usize, caps: &Caps) -> Result<WitnessBundle> {
    let sys = canonical_system(kind, n)?;
    let pool: Vec<usize> = (0..sys.attribute_count()).collect();
    let mut checks = Vec::new();
    let survey = survey_subsystems(&sys, &pool, caps.subsystem_cap, caps.node_budget)?;
    let (dim, _) = independence_dimension(&sys, &pool, caps.node_budget)?;

    match kind {
        CanonicalKind::U1 => {
            if n < 2 {
                return Err(Error::Cap("U1 witnesses need n >= 2".into()));
            }
            // f0 = indicator of {1..n-1}, f_i = indicator of {i}
            let indicator = |members: &[usize]| {
                let bits: String = (1..=n).map(|e| if members.contains(&e) { '1' } else { '0' }).collect();
                format!("g{bits}")
            };
            let head: Vec<usize> = (1..n).collect();
            let f0 = indicator(&head);
            let mut eqs = vec![(f0.as_str().to_owned(), true)];
            for i in 1..n {
                eqs.push((indicator(&[i]), false));
            }
            let refs: Vec<(&str, bool)> = eqs.iter().map(|(s, v)| (s.as_str(), *v)).collect();
            let s = system_of(&sys, &refs)?;
            checks.push(min_inconsistent_check(&sys, "minimal inconsistent system of size n", &s)?);
            checks.push(check(
                "independence dimension grows",
                dim == floor_log2(n),
                format!("I(U1({n})) = {dim}"),
            ));
        }
        CanonicalKind::U2 => {
            let c = is_r_i_reduced(&sys, &pool, 2, caps.subsystem_cap, caps.node_budget)?;
            checks.push(check("2-i-reduced", c.holds, format!("exhaustive: {}", c.exhaustive)));
            checks.push(check("independence dimension equals n", dim == n, format!("I = {dim}")));
        }
        CanonicalKind::U3 => {
            let mut eqs: Vec<(String, bool)> = (1..=n).map(|i| (format!("p{i}"), false)).collect();
            eqs.push((format!("l{n}"), false));
            let refs: Vec<(&str, bool)> = eqs.iter().map(|(s, v)| (s.as_str(), *v)).collect();
            let s = system_of(&sys, &refs)?;
            checks.push(min_inconsistent_check(&sys, "S_n minimal inconsistent", &s)?);
            checks.push(check("independence dimension 1", dim == 1, format!("I = {dim}")));
            let l_pool: Vec<usize> = (1..=n).map(|i| attr(&sys, &format!("l{i}"))).collect::<Result<_>>()?;
            let d = floor_log2(n + 1);
            let g = find_d_complete_tree(&sys, &l_pool, d)?;
            checks.push(check(
                "d-complete tree over l-attributes",
                g.is_some(),
                format!("d = {d}"),
            ));
        }
        CanonicalKind::U4 => {
            let eqs: Vec<(String, bool)> = (1..=n).map(|j| (format!("f1_{j}"), false)).collect();
            let refs: Vec<(&str, bool)> = eqs.iter().map(|(s, v)| (s.as_str(), *v)).collect();
            let s = system_of(&sys, &refs)?;
            let ok = is_irredundant(&sys, &s)?;
            checks.push(check(
                "S_n consistent and irreducible",
                ok,
                format!("{}: every proper subsystem has a larger solution set: {ok}", s.display(&sys)),
            ));
            let c = is_r_i_reduced(&sys, &pool, 2, caps.subsystem_cap, caps.node_budget)?;
            checks.push(check("2-i-reduced", c.holds, format!("cap {}, exhaustive: {}", c.cap, c.exhaustive)));
            checks.push(check("independence dimension 1", dim == 1, format!("I = {dim}")));
            let f_pool: Vec<usize> = (1..=n).map(|i| attr(&sys, &format!("f{i}"))).collect::<Result<_>>()?;
            let d = floor_log2(n + 1);
            let g = find_d_complete_tree(&sys, &f_pool, d)?;
            checks.push(check("d-complete tree over f_i attributes", g.is_some(), format!("d = {d}")));
        }
        CanonicalKind::U5 => {
            let k = k_level(&sys, caps.k_level_cap);
            let expected = if n >= 3 { 2 } else { k.level().unwrap_or(usize::MAX) };
            checks.push(check("2-information system", k == KLevel::Level(expected) && (n < 3 || expected == 2), format!("k-level = {k}")));
            for i in 1..=n {
                let mut eqs: Vec<(String, bool)> = vec![(format!("f{i}"), true)];
                eqs.extend((1..=i).map(|j| (format!("f{i}_{j}"), false)));
                let refs: Vec<(&str, bool)> = eqs.iter().map(|(s, v)| (s.as_str(), *v)).collect();
                let s = system_of(&sys, &refs)?;
                checks.push(min_inconsistent_check(&sys, &format!("S_{i} minimal inconsistent"), &s)?);
            }
        }
        CanonicalKind::U6 => {
            let k = k_level(&sys, caps.k_level_cap);
            checks.push(check("1-information system", k == KLevel::Level(1), format!("k-level = {k}")));
            let c = is_r_i_reduced(&sys, &pool, 2, caps.subsystem_cap, caps.node_budget)?;
            checks.push(check("2-i-reduced", c.holds, format!("exhaustive: {}", c.exhaustive)));
        }
        CanonicalKind::U7 => {
            let c = is_r_reduced(&sys, &pool, 2, caps.subsystem_cap, caps.node_budget)?;
            checks.push(check("2-reduced", c.holds, format!("exhaustive: {}", c.exhaustive)));
            checks.push(check("independence dimension 1", dim == 1, format!("I = {dim}")));
        }
    }

    // reduced systems are (r+1)-i-reduced
    if survey.exhaustive {
        let ok = survey.max_min_inconsistent <= survey.max_irredundant + 1;
        checks.push(check(
            "r-reduced implies (r+1)-i-reduced",
            ok,
            format!(
                "least r reduced {}, least r i-reduced {}",
                survey.max_irredundant, survey.max_min_inconsistent
            ),
        ));
    }

    let indicator = canonical_indicator(kind, caps)?;
    let matches = indicator.bits() == kind.expected_indicator();
    checks.push(check(
        "indicator estimate matches table row",
        matches,
        format!("estimated {:?}, expected {:?}", indicator.bits(), kind.expected_indicator()),
    ));
    Ok(WitnessBundle {
        kind,
        n,
        checks,
        indicator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eqs(sys: &InformationSystem, pairs: &[(&str, bool)]) -> EquationSystem {
        system_of(sys, pairs).unwrap()
    }

    #[test]
    fn canonical_columns() {
        let u7 = canonical_system(CanonicalKind::U7, 3).unwrap();
        let l2 = u7.attribute_index("l2").unwrap();
        assert_eq!((0..4).map(|e| u7.value(l2, e)).collect::<Vec<_>>(), vec![false, false, true, true]);
        let u6 = canonical_system(CanonicalKind::U6, 3).unwrap();
        let p2 = u6.attribute_index("p2").unwrap();
        assert_eq!((0..4).map(|e| u6.value(p2, e)).collect::<Vec<_>>(), vec![false, true, false, false]);
        let u5 = canonical_system(CanonicalKind::U5, 2).unwrap();
        assert_eq!(u5.elements(), &["1-1", "2-1", "2-2"]);
        let f2 = u5.attribute_index("f2").unwrap();
        assert_eq!((0..3).map(|e| u5.value(f2, e)).collect::<Vec<_>>(), vec![false, true, true]);
        let u1 = canonical_system(CanonicalKind::U1, 3).unwrap();
        assert_eq!(u1.attribute_count(), 8);
        assert_eq!(canonical_system(CanonicalKind::U2, 3).unwrap().universe_len(), 8);
        assert!(canonical_system(CanonicalKind::U1, 9).is_err());
    }

    #[test]
    fn independence_examples() {
        let cube = canonical_system(CanonicalKind::U2, 3).unwrap();
        assert_eq!(independence_dimension(&cube, &[0, 1, 2], 1000).unwrap(), (3, vec![0, 1, 2]));
        for (kind, n) in [(CanonicalKind::U4, 3), (CanonicalKind::U7, 5), (CanonicalKind::U3, 4)] {
            let sys = canonical_system(kind, n).unwrap();
            let pool: Vec<usize> = (0..sys.attribute_count()).collect();
            let (d, w) = independence_dimension(&sys, &pool, 100_000).unwrap();
            assert_eq!(d, 1, "{kind}");
            assert!(is_independent(&sys, &w).unwrap());
        }
        assert!(is_independent(&cube, &[]).unwrap());
        assert!(!is_independent(&cube, &[0, 0]).unwrap());
    }

    /// Brute force over all value assignments of all pool subsets.
    fn independence_brute(sys: &InformationSystem) -> usize {
        let m = sys.attribute_count();
        (0..1u32 << m)
            .filter(|mask| {
                let subset: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
                is_independent(sys, &subset).unwrap()
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn independence_matches_brute_force_on_u7_chain() {
        let sys = canonical_system(CanonicalKind::U7, 6).unwrap();
        let pool: Vec<usize> = (0..6).collect();
        assert_eq!(independence_dimension(&sys, &pool, 10_000).unwrap().0, independence_brute(&sys));
        let u1 = canonical_system(CanonicalKind::U1, 3).unwrap();
        let pool: Vec<usize> = (0..8).collect();
        assert_eq!(independence_dimension(&u1, &pool, 10_000).unwrap().0, independence_brute(&u1));
    }

    #[test]
    fn min_equivalent_on_chain() {
        let sys = canonical_system(CanonicalKind::U7, 5).unwrap();
        let s = eqs(&sys, &[("l1", true), ("l2", true), ("l3", false), ("l5", false)]);
        let m = min_equivalent_subsystem(&sys, &s).unwrap();
        assert_eq!(m, eqs(&sys, &[("l2", true), ("l3", false)]));
        assert_eq!(min_equivalent_subsystem(&sys, &EquationSystem::empty()).unwrap(), EquationSystem::empty());
        let one = eqs(&sys, &[("l3", true)]);
        assert_eq!(min_equivalent_subsystem(&sys, &one).unwrap(), one);
        let bad = eqs(&sys, &[("l3", true), ("l3", false)]);
        assert!(min_equivalent_subsystem(&sys, &bad).is_err());
    }

    #[test]
    fn min_inconsistent_examples() {
        let sys = canonical_system(CanonicalKind::U3, 3).unwrap();
        let s = eqs(&sys, &[("p1", false), ("p2", false), ("p3", false), ("l3", false)]);
        assert_eq!(min_inconsistent_subsystem(&sys, &s).unwrap(), s);
        assert!(is_minimal_inconsistent(&sys, &s).unwrap());
        let pool: Vec<usize> = (0..sys.attribute_count()).collect();
        for r in 1..=3 {
            let c = is_r_i_reduced(&sys, &pool, r, 8, 1_000_000).unwrap();
            assert!(!c.holds, "r={r}");
        }
        let s = eqs(&sys, &[("p1", true), ("l2", true), ("p2", false)]);
        let m = min_inconsistent_subsystem(&sys, &s).unwrap();
        assert_eq!(m, eqs(&sys, &[("p1", true), ("l2", true)]));
        assert!(min_inconsistent_subsystem(&sys, &EquationSystem::empty()).is_err());
    }

    #[test]
    fn two_i_reduced_examples() {
        for (kind, n) in [(CanonicalKind::U2, 3), (CanonicalKind::U6, 5), (CanonicalKind::U4, 2)] {
            let sys = canonical_system(kind, n).unwrap();
            let pool: Vec<usize> = (0..sys.attribute_count()).collect();
            let c = is_r_i_reduced(&sys, &pool, 2, 8, 2_000_000).unwrap();
            assert!(c.holds, "{kind}");
        }
        let cube = canonical_system(CanonicalKind::U2, 3).unwrap();
        let s = survey_subsystems(&cube, &[0, 1, 2], 8, 100_000).unwrap();
        assert_eq!(s.max_min_inconsistent, 2);
        assert!(s.exhaustive);
    }

    #[test]
    fn chain_is_two_reduced() {
        let sys = canonical_system(CanonicalKind::U7, 7).unwrap();
        let pool: Vec<usize> = (0..7).collect();
        let c = is_r_reduced(&sys, &pool, 2, 8, 1_000_000).unwrap();
        assert!(c.holds && c.exhaustive);
        let c = is_r_reduced(&sys, &pool, 1, 8, 1_000_000).unwrap();
        assert!(!c.holds);
        assert_eq!(c.witness.unwrap().len(), 2);
    }

    /// Brute-force oracle for the largest minimal inconsistent and irredundant
    /// systems, over all literal subsets.
    fn survey_brute(sys: &InformationSystem) -> (usize, usize) {
        let pool: Vec<usize> = (0..sys.attribute_count()).collect();
        let lits = literals(&pool);
        let mut best = (0, 0);
        for mask in 1u32..1 << lits.len() {
            let s = EquationSystem::new((0..lits.len()).filter(|k| mask >> k & 1 == 1).map(|k| lits[k]).collect());
            if is_irredundant(sys, &s).unwrap() {
                best.0 = best.0.max(s.len());
            }
            if is_minimal_inconsistent(sys, &s).unwrap() {
                best.1 = best.1.max(s.len());
            }
        }
        best
    }

    #[test]
    fn survey_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let u = rng.gen_range(1..=6);
            let m = rng.gen_range(1..=4);
            let rows: Vec<Vec<bool>> = (0..u).map(|_| (0..m).map(|_| rng.gen()).collect()).collect();
            let sys = InformationSystem::from_rows(
                (0..u).map(|i| i.to_string()).collect(),
                (0..m).map(|i| format!("f{i}")).collect(),
                &rows,
            )
            .unwrap();
            let pool: Vec<usize> = (0..m).collect();
            let s = survey_subsystems(&sys, &pool, 16, 1_000_000).unwrap();
            assert!(s.exhaustive);
            assert_eq!((s.max_irredundant, s.max_min_inconsistent), survey_brute(&sys));
            if let Some(w) = &s.inconsistent_witness {
                assert!(is_minimal_inconsistent(&sys, w).unwrap());
            }
            assert!(is_irredundant(&sys, &s.irredundant_witness).unwrap() || s.max_irredundant == 0);
        }
    }

    #[test]
    fn k_level_examples() {
        let constant = InformationSystem::new(
            vec!["a".into(), "b".into()],
            vec![("f".into(), vec![true, true])],
        )
        .unwrap();
        assert_eq!(k_level(&constant, 6), KLevel::Level(0));
        assert_eq!(k_level(&canonical_system(CanonicalKind::U6, 5).unwrap(), 6), KLevel::Level(1));
        assert_eq!(k_level(&canonical_system(CanonicalKind::U5, 3).unwrap(), 6), KLevel::Level(2));
        assert_eq!(k_level(&canonical_system(CanonicalKind::U5, 4).unwrap(), 6), KLevel::Level(2));
        assert_eq!(k_level(&canonical_system(CanonicalKind::U2, 3).unwrap(), 6), KLevel::Level(3));
        assert_eq!(k_level(&canonical_system(CanonicalKind::U2, 3).unwrap(), 2), KLevel::ExceedsCap(2));
    }

    #[test]
    fn k_level_is_monotone_under_restriction() {
        let sys = canonical_system(CanonicalKind::U3, 5).unwrap();
        let mut levels = KLevels::new(&sys);
        let top = levels.level(&sys.universe());
        for f in 0..sys.attribute_count() {
            for v in [false, true] {
                assert!(levels.level(&sys.satisfying(f, v)) <= top);
            }
        }
    }

    #[test]
    fn sauer_examples() {
        let sys = canonical_system(CanonicalKind::U7, 7).unwrap();
        let z = Problem::all(&sys).unwrap();
        let c = sauer_bound(&sys, &z, 10_000).unwrap();
        assert_eq!((c.solutions, c.bound, c.holds), (8, 28, true));
        let cube = canonical_system(CanonicalKind::U2, 2).unwrap();
        let z = Problem::all(&cube).unwrap();
        let c = sauer_bound(&cube, &z, 10_000).unwrap();
        assert_eq!((c.solutions, c.bound), (4, 64));
        assert!(sauer_bound_check(&cube, &z).unwrap());
    }

    #[test]
    fn canonical_indicators_match_table_rows() {
        let caps = Caps::default();
        for kind in CanonicalKind::ALL {
            let est = canonical_indicator(kind, &caps).unwrap();
            assert_eq!(est.bits(), kind.expected_indicator(), "{kind}: {est:?}");
            assert_eq!(est.class, Some(CanonicalKind::ALL.iter().position(|&k| k == kind).unwrap() + 1));
        }
    }

    #[test]
    fn row_eight_is_not_a_class() {
        assert_eq!(complexity_class([true, true, false, false]), None);
    }
}
