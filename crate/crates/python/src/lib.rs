//! Python bindings for `hyptree`.

use hyptree::classify::{self, CanonicalKind, Caps};
use hyptree::solver::{self, SolverOptions};
use hyptree::strategies::{self, ReducednessKind};
use hyptree::table::{self, Problem};
use hyptree::trees::QueryModel;
use hyptree::Error;
use pyo3::exceptions::{PyMemoryError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Structure(_) | Error::Parse { .. } => PyValueError::new_err(e.to_string()),
        Error::Budget(_) | Error::Cap(_) => PyMemoryError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn model(name: &str) -> PyResult<QueryModel> {
    name.parse().map_err(py_err)
}

fn kind(name: &str) -> PyResult<CanonicalKind> {
    name.parse().map_err(py_err)
}

/// A finite binary information system: elements by attribute columns.
#[pyclass(name = "InformationSystem", frozen)]
struct PySystem {
    inner: table::InformationSystem,
}

impl PySystem {
    fn problem(&self, attrs: Option<Vec<String>>) -> PyResult<Problem> {
        match attrs {
            None => Problem::all(&self.inner),
            Some(names) => {
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                Problem::by_names(&self.inner, &refs)
            }
        }
        .map_err(py_err)
    }
}

#[pymethods]
impl PySystem {
    /// Builds a system from element names, attribute names and 0/1 rows.
    #[new]
    fn new(elements: Vec<String>, attributes: Vec<String>, rows: Vec<Vec<bool>>) -> PyResult<Self> {
        Ok(PySystem {
            inner: table::InformationSystem::from_rows(elements, attributes, &rows).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn from_csv(text: &str) -> PyResult<Self> {
        Ok(PySystem {
            inner: table::InformationSystem::from_csv_str(text).map_err(py_err)?,
        })
    }

    /// Canonical system `u1`..`u7` at size `n`.
    #[staticmethod]
    fn canonical(name: &str, n: usize) -> PyResult<Self> {
        Ok(PySystem {
            inner: classify::canonical_system(kind(name)?, n).map_err(py_err)?,
        })
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.inner.elements().to_vec()
    }

    #[getter]
    fn attributes(&self) -> Vec<String> {
        self.inner.attributes().to_vec()
    }

    fn value(&self, attribute: &str, element: &str) -> PyResult<bool> {
        let f = self
            .inner
            .attribute_index(attribute)
            .ok_or_else(|| PyValueError::new_err(format!("unknown attribute {attribute}")))?;
        let e = self
            .inner
            .element_index(element)
            .ok_or_else(|| PyValueError::new_err(format!("unknown element {element}")))?;
        Ok(self.inner.value(f, e))
    }

    fn to_csv(&self) -> String {
        self.inner.to_csv_string()
    }

    /// Distinct answer tuples of the problem, as bitstrings.
    #[pyo3(signature = (attrs=None))]
    fn solution_set(&self, attrs: Option<Vec<String>>) -> PyResult<Vec<String>> {
        let z = self.problem(attrs)?;
        let delta = table::solution_set(&self.inner, &z).map_err(py_err)?;
        Ok(delta.iter().map(|t| t.to_string()).collect())
    }

    fn __len__(&self) -> usize {
        self.inner.universe_len()
    }

    fn __repr__(&self) -> String {
        format!(
            "InformationSystem(elements={}, attributes={})",
            self.inner.universe_len(),
            self.inner.attribute_count()
        )
    }
}

/// Result of an exact minimum-depth computation.
#[pyclass(name = "DepthResult", frozen, get_all)]
struct PyDepth {
    depth: usize,
    nodes_expanded: u64,
    memo_hits: u64,
    /// DOT rendering of an optimal tree when requested.
    dot: Option<String>,
}

#[pymethods]
impl PyDepth {
    fn __repr__(&self) -> String {
        format!("DepthResult(depth={})", self.depth)
    }
}

#[pyfunction]
#[pyo3(signature = (system, model, attrs=None, extract=false))]
fn min_depth(system: &PySystem, model: &str, attrs: Option<Vec<String>>, extract: bool) -> PyResult<PyDepth> {
    let z = system.problem(attrs)?;
    let r = solver::min_depth_with(&system.inner, &z, self::model(model)?, extract, &SolverOptions::default())
        .map_err(py_err)?;
    Ok(PyDepth {
        depth: r.depth,
        nodes_expanded: r.stats.nodes_expanded as u64,
        memo_hits: r.stats.memo_hits as u64,
        dot: r.optimal_tree.map(|t| t.to_dot()),
    })
}

/// Reference search without memoization; `None` when deeper than `d_max`.
#[pyfunction]
#[pyo3(signature = (system, model, d_max, attrs=None))]
fn oracle_min_depth(system: &PySystem, model: &str, d_max: usize, attrs: Option<Vec<String>>) -> PyResult<Option<usize>> {
    let z = system.problem(attrs)?;
    solver::oracle_min_depth(&system.inner, &z, self::model(model)?, d_max).map_err(py_err)
}

/// `[(n, value, argmax attribute names)]` for `n = 1..=max_n`.
#[pyfunction]
#[pyo3(signature = (system, model, max_n, budget=100_000, threads=None))]
fn shannon(
    system: &PySystem,
    model: &str,
    max_n: usize,
    budget: usize,
    threads: Option<usize>,
) -> PyResult<Vec<(usize, usize, Vec<String>)>> {
    let rows = solver::shannon_profile(&system.inner, self::model(model)?, max_n, budget, threads).map_err(py_err)?;
    Ok(rows
        .into_iter()
        .map(|r| {
            let names = r.argmax.iter().map(|&f| system.inner.attribute_name(f).to_string()).collect();
            (r.n, r.value, names)
        })
        .collect())
}

/// Output of a constructive strategy.
#[pyclass(name = "StrategyResult", frozen, get_all)]
struct PyStrategy {
    depth: usize,
    bound: f64,
    model: String,
    dot: String,
}

/// Runs `sequential`, `halving`, `ksystem` or `proper-only` and returns the
/// verified tree with its proven bound.
#[pyfunction]
#[pyo3(signature = (system, kind, r=2, attrs=None))]
fn strategy(system: &PySystem, kind: &str, r: usize, attrs: Option<Vec<String>>) -> PyResult<PyStrategy> {
    let sys = &system.inner;
    let z = system.problem(attrs)?;
    let caps = Caps::default();
    let pool: Vec<usize> = (0..sys.attribute_count()).collect();
    let (tree, model, bound) = match kind {
        "sequential" => (strategies::sequential_proper(sys, &z), QueryModel::M4, z.dim() as f64),
        "halving" => {
            let cert = classify::certify(sys, ReducednessKind::IReduced, r, &caps).map_err(py_err)?;
            let (dim, _) = classify::independence_dimension(sys, &pool, caps.node_budget).map_err(py_err)?;
            (
                strategies::halving_proper(sys, &z, &cert),
                QueryModel::M4,
                strategies::halving_bound(r, dim, z.dim()),
            )
        }
        "ksystem" => {
            let cert = classify::certify(sys, ReducednessKind::IReduced, r, &caps).map_err(py_err)?;
            let k = classify::k_level(sys, caps.k_level_cap)
                .level()
                .ok_or_else(|| PyMemoryError::new_err("k-level exceeds cap"))?;
            (
                strategies::k_system_tree(sys, &z, &cert, caps.k_level_cap),
                QueryModel::M5,
                (r * k) as f64,
            )
        }
        "proper-only" => {
            let source = solver::min_depth(sys, &z, QueryModel::M5, true)
                .map_err(py_err)?
                .optimal_tree
                .expect("extracted");
            let bound = ((1u64 << source.depth().min(63)) - 1) as f64;
            (strategies::to_proper_only(sys, &z, &source), QueryModel::M4, bound)
        }
        other => return Err(PyValueError::new_err(format!("unknown strategy {other}"))),
    };
    let tree = tree.map_err(py_err)?;
    Ok(PyStrategy {
        depth: tree.depth(),
        bound,
        model: model.to_string(),
        dot: tree.to_dot(),
    })
}

/// `(I, witness attribute names)`.
#[pyfunction]
#[pyo3(signature = (system, budget=2_000_000))]
fn independence_dimension(system: &PySystem, budget: usize) -> PyResult<(usize, Vec<String>)> {
    let pool: Vec<usize> = (0..system.inner.attribute_count()).collect();
    let (d, w) = classify::independence_dimension(&system.inner, &pool, budget).map_err(py_err)?;
    Ok((d, w.iter().map(|&f| system.inner.attribute_name(f).to_string()).collect()))
}

/// k-level, or `None` when it exceeds `cap`.
#[pyfunction]
#[pyo3(signature = (system, cap=6))]
fn k_level(system: &PySystem, cap: usize) -> Option<usize> {
    classify::k_level(&system.inner, cap).level()
}

/// Classification report as JSON text.
#[pyfunction]
#[pyo3(signature = (system, name="table"))]
fn classify_system(system: &PySystem, name: &str) -> PyResult<String> {
    Ok(classify::classify(name, &system.inner, &Caps::default()).map_err(py_err)?.to_json())
}

#[pyfunction]
fn classify_canonical(name: &str, n: usize) -> PyResult<String> {
    Ok(classify::classify_canonical(kind(name)?, n, &Caps::default())
        .map_err(py_err)?
        .to_json())
}

/// `[(check name, passed, detail)]` for a canonical system.
#[pyfunction]
fn lemma_witnesses(name: &str, n: usize) -> PyResult<Vec<(String, bool, String)>> {
    let bundle = classify::lemma_witnesses(kind(name)?, n, &Caps::default()).map_err(py_err)?;
    Ok(bundle.checks.into_iter().map(|c| (c.name, c.passed, c.detail)).collect())
}

#[pymodule]
fn pyhyptree(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySystem>()?;
    m.add_class::<PyDepth>()?;
    m.add_class::<PyStrategy>()?;
    m.add_function(wrap_pyfunction!(min_depth, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_min_depth, m)?)?;
    m.add_function(wrap_pyfunction!(shannon, m)?)?;
    m.add_function(wrap_pyfunction!(strategy, m)?)?;
    m.add_function(wrap_pyfunction!(independence_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(k_level, m)?)?;
    m.add_function(wrap_pyfunction!(classify_system, m)?)?;
    m.add_function(wrap_pyfunction!(classify_canonical, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_witnesses, m)?)?;
    m.add("MODELS", ["m1", "m2", "m3", "m4", "m5"])?;
    Ok(())
}
