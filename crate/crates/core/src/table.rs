//! Finite binary information systems, problems over them, equation systems,
//! and sets of value tuples.
//!
//! An [`InformationSystem`] is a universe of named elements together with a
//! list of named binary attributes. Each attribute is stored as the set of
//! elements on which it takes value 1. A [`Problem`] selects an ordered list of
//! attributes; its [`solution_set`] is the set of value tuples realized by
//! elements of the universe.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// Subset of the universe, indexed by element position.
pub type ElementSet = FixedBitSet;

/// A fixed-width binary tuple. Coordinate 0 is the leftmost character of the
/// bitstring form, so the derived ordering on equal widths is lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tuple {
    width: u8,
    bits: u64,
}

impl Tuple {
    pub const MAX_WIDTH: usize = 64;

    pub fn zeros(width: usize) -> Self {
        assert!(width <= Self::MAX_WIDTH, "tuple width {width} exceeds 64");
        Tuple {
            width: width as u8,
            bits: 0,
        }
    }

    /// Builds a tuple from its integer value in bitstring order (coordinate 0 is
    /// the most significant bit).
    pub fn from_bits(width: usize, bits: u64) -> Self {
        assert!(width <= Self::MAX_WIDTH, "tuple width {width} exceeds 64");
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        Tuple {
            width: width as u8,
            bits: bits & mask,
        }
    }

    pub fn from_bools(values: &[bool]) -> Self {
        values
            .iter()
            .enumerate()
            .fold(Tuple::zeros(values.len()), |t, (i, &v)| t.with(i, v))
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > Self::MAX_WIDTH {
            return Err(Error::structure(format!("tuple '{s}' wider than 64")));
        }
        let mut t = Tuple::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => t = t.with(i, true),
                _ => return Err(Error::structure(format!("invalid tuple character '{c}'"))),
            }
        }
        Ok(t)
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    fn shift(&self, i: usize) -> usize {
        debug_assert!(i < self.width(), "coordinate {i} out of width {}", self.width);
        self.width() - 1 - i
    }

    pub fn get(&self, i: usize) -> bool {
        (self.bits >> self.shift(i)) & 1 == 1
    }

    pub fn with(mut self, i: usize, value: bool) -> Self {
        let s = self.shift(i);
        if value {
            self.bits |= 1 << s;
        } else {
            self.bits &= !(1 << s);
        }
        self
    }

    pub fn flipped(self, i: usize) -> Self {
        let v = self.get(i);
        self.with(i, !v)
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.width()).map(|i| self.get(i)).collect()
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for Tuple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A set of equal-width tuples, kept sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TupleSet {
    width: usize,
    members: Vec<Tuple>,
}

impl TupleSet {
    pub fn empty(width: usize) -> Self {
        TupleSet {
            width,
            members: Vec::new(),
        }
    }

    pub fn new(width: usize, members: impl IntoIterator<Item = Tuple>) -> Result<Self> {
        let mut members: Vec<Tuple> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|t| t.width() != width) {
            return Err(Error::structure(format!(
                "tuple {bad} has width {}, expected {width}",
                bad.width()
            )));
        }
        members.sort_unstable();
        members.dedup();
        Ok(TupleSet { width, members })
    }

    /// All 2^width tuples.
    pub fn cube(width: usize) -> Self {
        assert!(width < 32, "cube of width {width} is too large");
        TupleSet {
            width,
            members: (0..1u64 << width).map(|b| Tuple::from_bits(width, b)).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &Tuple) -> bool {
        self.members.binary_search(t).is_ok()
    }

    pub fn members(&self) -> &[Tuple] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = &Tuple> {
        self.members.iter()
    }

    /// The only member, if there is exactly one.
    pub fn single(&self) -> Option<Tuple> {
        match self.members.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    /// Members whose coordinate `i` equals `value`.
    pub fn restrict(&self, i: usize, value: bool) -> Result<TupleSet> {
        if i >= self.width {
            return Err(Error::structure(format!(
                "coordinate {} out of range for width {}",
                i + 1,
                self.width
            )));
        }
        Ok(TupleSet {
            width: self.width,
            members: self.members.iter().copied().filter(|t| t.get(i) == value).collect(),
        })
    }

    pub fn union(&self, other: &TupleSet) -> Result<TupleSet> {
        TupleSet::new(self.width, self.members.iter().chain(other.members.iter()).copied())
    }
}

impl fmt::Display for TupleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, t) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("}")
    }
}

/// A finite universe of elements with named binary attributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InformationSystem {
    elements: Vec<String>,
    attributes: Vec<String>,
    /// `columns[f]` holds the elements on which attribute `f` equals 1.
    columns: Vec<ElementSet>,
}

impl InformationSystem {
    /// Builds a system from element names and `(name, column)` pairs.
    pub fn new(elements: Vec<String>, attributes: Vec<(String, Vec<bool>)>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::structure("universe must be nonempty"));
        }
        if attributes.is_empty() {
            return Err(Error::structure("at least one attribute is required"));
        }
        let mut seen = HashSet::new();
        for name in &elements {
            if !seen.insert(name.as_str()) {
                return Err(Error::structure(format!("duplicate element '{name}'")));
            }
        }
        let mut seen = HashSet::new();
        let mut names = Vec::with_capacity(attributes.len());
        let mut columns = Vec::with_capacity(attributes.len());
        for (name, column) in attributes {
            if !seen.insert(name.clone()) {
                return Err(Error::structure(format!("duplicate attribute '{name}'")));
            }
            if column.len() != elements.len() {
                return Err(Error::structure(format!(
                    "attribute '{name}' has {} values for {} elements",
                    column.len(),
                    elements.len()
                )));
            }
            let mut set = ElementSet::with_capacity(elements.len());
            for (e, &v) in column.iter().enumerate() {
                set.set(e, v);
            }
            names.push(name);
            columns.push(set);
        }
        Ok(InformationSystem {
            elements,
            attributes: names,
            columns,
        })
    }

    /// Builds a system from per-element rows.
    pub fn from_rows(elements: Vec<String>, attributes: Vec<String>, rows: &[Vec<bool>]) -> Result<Self> {
        if rows.len() != elements.len() {
            return Err(Error::structure("row count differs from element count"));
        }
        let mut cols = vec![Vec::with_capacity(rows.len()); attributes.len()];
        for (e, row) in rows.iter().enumerate() {
            if row.len() != attributes.len() {
                return Err(Error::structure(format!(
                    "row of element '{}' has {} values, expected {}",
                    elements[e],
                    row.len(),
                    attributes.len()
                )));
            }
            for (f, &v) in row.iter().enumerate() {
                cols[f].push(v);
            }
        }
        Self::new(elements, attributes.into_iter().zip(cols).collect())
    }

    /// Parses the CSV table format: header `element,<attr>,...` followed by
    /// rows `id,b,b,...` with `b` in `{0,1}`.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let header = reader
            .headers()
            .map_err(|e| Error::Parse {
                line: 1,
                message: e.to_string(),
            })?
            .clone();
        if header.get(0) != Some("element") {
            return Err(Error::Parse {
                line: 1,
                message: "header must start with 'element'".into(),
            });
        }
        let attributes: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
        let mut elements = Vec::new();
        let mut rows = Vec::new();
        for (k, record) in reader.records().enumerate() {
            let line = k + 2;
            let record = record.map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            let mut fields = record.iter();
            let id = fields.next().unwrap_or_default().to_owned();
            let row = fields
                .map(|b| match b {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    other => Err(Error::Parse {
                        line,
                        message: format!("value '{other}' is not 0 or 1"),
                    }),
                })
                .collect::<Result<Vec<bool>>>()?;
            elements.push(id);
            rows.push(row);
        }
        Self::from_rows(elements, attributes, &rows).map_err(|e| match e {
            Error::Structure(message) => Error::Parse { line: 0, message },
            other => other,
        })
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_csv_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("element");
        for a in &self.attributes {
            out.push(',');
            out.push_str(a);
        }
        out.push('\n');
        for (e, name) in self.elements.iter().enumerate() {
            out.push_str(name);
            for f in 0..self.attributes.len() {
                out.push_str(if self.value(f, e) { ",1" } else { ",0" });
            }
            out.push('\n');
        }
        out
    }

    pub fn universe_len(&self) -> usize {
        self.elements.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn attribute_name(&self, f: usize) -> &str {
        &self.attributes[f]
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == name)
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|a| a == name)
    }

    pub fn value(&self, f: usize, e: usize) -> bool {
        self.columns[f].contains(e)
    }

    pub fn column(&self, f: usize) -> &ElementSet {
        &self.columns[f]
    }

    /// The whole universe as an element set.
    pub fn universe(&self) -> ElementSet {
        let mut all = ElementSet::with_capacity(self.elements.len());
        all.insert_range(..);
        all
    }

    /// `A(f, value)`: the elements where attribute `f` takes `value`.
    pub fn satisfying(&self, f: usize, value: bool) -> ElementSet {
        if value {
            self.columns[f].clone()
        } else {
            let mut s = self.columns[f].clone();
            s.toggle_range(..);
            s
        }
    }

    /// Whether `f` is constant on `set` (vacuously true on the empty set).
    pub fn is_constant_on(&self, f: usize, set: &ElementSet) -> bool {
        let ones = self.columns[f].intersection_count(set);
        ones == 0 || ones == set.count_ones(..)
    }

    pub(crate) fn check_attribute(&self, f: usize) -> Result<()> {
        if f >= self.attributes.len() {
            return Err(Error::structure(format!(
                "attribute index {f} out of range ({} attributes)",
                self.attributes.len()
            )));
        }
        Ok(())
    }

    /// `z(a)`: the values of the problem's attributes on element `e`.
    pub fn row_tuple(&self, e: usize, z: &Problem) -> Tuple {
        z.indices
            .iter()
            .enumerate()
            .fold(Tuple::zeros(z.dim()), |t, (i, &f)| t.with(i, self.value(f, e)))
    }

    /// The system restricted to the attributes in `pool`, in pool order.
    pub fn with_attributes(&self, pool: &[usize]) -> Result<Self> {
        let mut attrs = Vec::with_capacity(pool.len());
        for &f in pool {
            self.check_attribute(f)?;
            let col = (0..self.universe_len()).map(|e| self.value(f, e)).collect();
            attrs.push((self.attributes[f].clone(), col));
        }
        Self::new(self.elements.clone(), attrs)
    }
}

/// An ordered selection of attributes `z = (f_1, ..., f_n)`; repeats allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Problem {
    indices: Vec<usize>,
}

impl Problem {
    pub fn new(sys: &InformationSystem, indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::structure("problem dimension must be at least 1"));
        }
        if indices.len() > Tuple::MAX_WIDTH {
            return Err(Error::structure("problem dimension exceeds 64"));
        }
        for &f in &indices {
            sys.check_attribute(f)?;
        }
        Ok(Problem { indices })
    }

    /// The problem over every attribute of the system, in order.
    pub fn all(sys: &InformationSystem) -> Result<Self> {
        Self::new(sys, (0..sys.attribute_count()).collect())
    }

    pub fn by_names(sys: &InformationSystem, names: &[&str]) -> Result<Self> {
        let indices = names
            .iter()
            .map(|n| {
                sys.attribute_index(n)
                    .ok_or_else(|| Error::structure(format!("unknown attribute '{n}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sys, indices)
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The system attribute at coordinate `i`.
    pub fn attribute(&self, i: usize) -> usize {
        self.indices[i]
    }

    pub(crate) fn check_against(&self, sys: &InformationSystem) -> Result<()> {
        self.indices.iter().try_for_each(|&f| sys.check_attribute(f))
    }
}

/// `f(x) = value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Equation {
    pub attribute: usize,
    pub value: bool,
}

impl Equation {
    pub fn new(attribute: usize, value: bool) -> Self {
        Equation { attribute, value }
    }
}

/// A finite (possibly empty) system of equations over attributes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EquationSystem {
    equations: Vec<Equation>,
}

impl EquationSystem {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(equations: Vec<Equation>) -> Self {
        EquationSystem { equations }
    }

    pub fn from_pairs(pairs: &[(usize, bool)]) -> Self {
        Self::new(pairs.iter().map(|&(f, v)| Equation::new(f, v)).collect())
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn iter(&self) -> impl Iterator<Item = &Equation> {
        self.equations.iter()
    }

    pub fn push(&mut self, eq: Equation) {
        self.equations.push(eq);
    }

    /// Subsystem made of the equations at the given positions.
    pub fn subsystem(&self, positions: &[usize]) -> EquationSystem {
        EquationSystem::new(positions.iter().map(|&p| self.equations[p]).collect())
    }

    /// Elements satisfying every equation; the whole universe when empty.
    pub fn solutions(&self, sys: &InformationSystem) -> Result<ElementSet> {
        let mut set = sys.universe();
        for eq in &self.equations {
            sys.check_attribute(eq.attribute)?;
            set.intersect_with(&sys.satisfying(eq.attribute, eq.value));
        }
        Ok(set)
    }

    pub fn is_consistent(&self, sys: &InformationSystem) -> Result<bool> {
        Ok(!self.solutions(sys)?.is_clear())
    }

    /// Renders `{name=v, ...}` with the system's attribute names.
    pub fn display(&self, sys: &InformationSystem) -> String {
        let parts: Vec<String> = self
            .equations
            .iter()
            .map(|e| format!("{}={}", sys.attribute_name(e.attribute), e.value as u8))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub fn display_list(&self, sys: &InformationSystem) -> Vec<String> {
        self.equations
            .iter()
            .map(|e| format!("{}={}", sys.attribute_name(e.attribute), e.value as u8))
            .collect()
    }
}

/// `Δ_U(z)`: the distinct tuples `z(a)` over all elements `a`.
pub fn solution_set(sys: &InformationSystem, z: &Problem) -> Result<TupleSet> {
    z.check_against(sys)?;
    TupleSet::new(z.dim(), (0..sys.universe_len()).map(|e| sys.row_tuple(e, z)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sys3() -> InformationSystem {
        InformationSystem::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                ("f1".into(), vec![false, true, true]),
                ("f2".into(), vec![false, false, true]),
            ],
        )
        .unwrap()
    }

    fn ts(width: usize, items: &[&str]) -> TupleSet {
        TupleSet::new(width, items.iter().map(|s| Tuple::parse(s).unwrap())).unwrap()
    }

    #[test]
    fn solution_set_reads_rows() {
        let sys = sys3();
        let z = Problem::new(&sys, vec![0, 1]).unwrap();
        assert_eq!(solution_set(&sys, &z).unwrap(), ts(2, &["00", "10", "11"]));
    }

    #[test]
    fn solution_set_of_constant_attribute() {
        let sys = InformationSystem::new(
            vec!["a".into(), "b".into()],
            vec![("c".into(), vec![false, false]), ("d".into(), vec![false, true])],
        )
        .unwrap();
        let z = Problem::new(&sys, vec![0]).unwrap();
        assert_eq!(solution_set(&sys, &z).unwrap(), ts(1, &["0"]));
    }

    #[test]
    fn full_cube_solution_set() {
        let rows: Vec<Vec<bool>> = (0..4).map(|b| vec![b & 2 != 0, b & 1 != 0]).collect();
        let sys = InformationSystem::from_rows(
            (0..4).map(|i| i.to_string()).collect(),
            vec!["f1".into(), "f2".into()],
            &rows,
        )
        .unwrap();
        let z = Problem::all(&sys).unwrap();
        assert_eq!(solution_set(&sys, &z).unwrap(), TupleSet::cube(2));
    }

    #[test]
    fn restrict_examples() {
        let d = ts(2, &["00", "10", "11"]);
        assert_eq!(d.restrict(0, true).unwrap(), ts(2, &["10", "11"]));
        assert_eq!(d.restrict(1, true).unwrap(), ts(2, &["11"]));
        assert!(d.restrict(0, false).unwrap().restrict(0, true).unwrap().is_empty());
        assert!(matches!(d.restrict(2, true), Err(Error::Structure(_))));
    }

    #[test]
    fn empty_system_is_consistent_with_whole_universe() {
        let sys = sys3();
        let s = EquationSystem::empty();
        assert!(s.is_consistent(&sys).unwrap());
        assert_eq!(s.solutions(&sys).unwrap(), sys.universe());
    }

    #[test]
    fn contradictory_pair_is_inconsistent() {
        let sys = sys3();
        let s = EquationSystem::from_pairs(&[(0, false), (0, true)]);
        assert!(!s.is_consistent(&sys).unwrap());
    }

    #[test]
    fn invalid_indices_are_rejected() {
        let sys = sys3();
        assert!(Problem::new(&sys, vec![0, 2]).is_err());
        assert!(Problem::new(&sys, vec![]).is_err());
        assert!(EquationSystem::from_pairs(&[(5, true)]).solutions(&sys).is_err());
    }

    #[test]
    fn repeated_attributes_give_duplicate_coordinates() {
        let sys = sys3();
        let z = Problem::new(&sys, vec![0, 0]).unwrap();
        assert_eq!(solution_set(&sys, &z).unwrap(), ts(2, &["00", "11"]));
    }

    #[test]
    fn structural_invariants_enforced() {
        assert!(InformationSystem::new(vec![], vec![("f".into(), vec![])]).is_err());
        assert!(InformationSystem::new(vec!["a".into()], vec![]).is_err());
        assert!(InformationSystem::new(
            vec!["a".into()],
            vec![("f".into(), vec![true]), ("f".into(), vec![false])]
        )
        .is_err());
        assert!(InformationSystem::new(vec!["a".into()], vec![("f".into(), vec![true, false])]).is_err());
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let sys = sys3();
        let text = sys.to_csv_string();
        assert_eq!(text, "element,f1,f2\n1,0,0\n2,1,0\n3,1,1\n");
        assert_eq!(InformationSystem::from_csv_str(&text).unwrap(), sys);
        assert!(matches!(
            InformationSystem::from_csv_str("element,f\n1,2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            InformationSystem::from_csv_str("id,f\n1,0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(InformationSystem::from_csv_str("element,f,g\n1,0\n").is_err());
    }

    #[test]
    fn tuple_text_form() {
        let t = Tuple::parse("0110").unwrap();
        assert_eq!(t.to_string(), "0110");
        assert!(t.get(1) && t.get(2) && !t.get(0));
        assert_eq!(t.flipped(0).to_string(), "1110");
        assert!(Tuple::parse("01x").is_err());
        assert!(Tuple::parse("00").unwrap() < Tuple::parse("01").unwrap());
        assert!(Tuple::parse("01").unwrap() < Tuple::parse("10").unwrap());
    }

    fn arb_system() -> impl Strategy<Value = InformationSystem> {
        (1usize..7, 1usize..5).prop_flat_map(|(u, m)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), m), u).prop_map(move |rows| {
                InformationSystem::from_rows(
                    (0..u).map(|i| format!("e{i}")).collect(),
                    (0..m).map(|i| format!("f{}", i + 1)).collect(),
                    &rows,
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn restriction_partitions(sys in arb_system()) {
            let z = Problem::all(&sys).unwrap();
            let d = solution_set(&sys, &z).unwrap();
            prop_assert!(d.len() <= sys.universe_len().min(1 << z.dim()));
            prop_assert!(!d.is_empty());
            for i in 0..z.dim() {
                let a = d.restrict(i, false).unwrap();
                let b = d.restrict(i, true).unwrap();
                prop_assert_eq!(a.len() + b.len(), d.len());
                prop_assert_eq!(a.union(&b).unwrap(), d.clone());
            }
        }

        #[test]
        fn consistency_matches_solution_set(sys in arb_system(), bits in any::<u64>(), take in 1usize..5) {
            let m = sys.attribute_count();
            let attrs: Vec<usize> = (0..take.min(m)).collect();
            let z = Problem::new(&sys, attrs.clone()).unwrap();
            let t = Tuple::from_bits(z.dim(), bits);
            let s = EquationSystem::new(attrs.iter().enumerate().map(|(i, &f)| Equation::new(f, t.get(i))).collect());
            prop_assert_eq!(s.is_consistent(&sys).unwrap(), solution_set(&sys, &z).unwrap().contains(&t));
        }

        #[test]
        fn duplicating_an_element_changes_nothing(sys in arb_system(), pick in any::<prop::sample::Index>()) {
            let e = pick.index(sys.universe_len());
            let mut names = sys.elements().to_vec();
            names.push("dup".into());
            let mut rows: Vec<Vec<bool>> = (0..sys.universe_len())
                .map(|a| (0..sys.attribute_count()).map(|f| sys.value(f, a)).collect())
                .collect();
            rows.push(rows[e].clone());
            let bigger = InformationSystem::from_rows(names, sys.attributes().to_vec(), &rows).unwrap();
            let z = Problem::all(&sys).unwrap();
            prop_assert_eq!(solution_set(&sys, &z).unwrap(), solution_set(&bigger, &z).unwrap());
        }
    }
}
