//! Python bindings: partition combinatorics, module construction, tensor
//! products and composition factors, plus JSON entry points for the sweep
//! and the registered structure checks.

use std::collections::{BTreeMap, HashMap};

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sgw_core::meataxe::{chop, decide_irreducible, hom_space, iso_simple, SimpleCatalog};
use sgw_core::partition::{self, Partition};
use sgw_core::{Group, Module};

fn parse_parts(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// A module over GF(2), carried by its generator matrices.
#[pyclass(name = "Rep", from_py_object)]
#[derive(Clone)]
struct Rep {
    inner: Module,
}

#[pymethods]
impl Rep {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label.clone()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.group.degree()
    }

    fn __repr__(&self) -> String {
        format!("Rep({}, dim={})", self.inner.label, self.inner.dim)
    }

    /// Generator matrix as a list of 0/1 rows.
    fn generator(&self, index: usize) -> PyResult<Vec<Vec<u8>>> {
        let g = self
            .inner
            .gens
            .get(index)
            .ok_or_else(|| PyValueError::new_err("generator index out of range"))?;
        Ok((0..g.rows())
            .map(|i| (0..g.cols()).map(|j| g.get(i, j) as u8).collect())
            .collect())
    }
}

/// Shared construction context with per-degree simple catalogs.
#[pyclass]
struct Workbench {
    seed: u64,
    catalogs: HashMap<usize, SimpleCatalog>,
}

impl Workbench {
    fn catalog(&mut self, n: usize) -> &SimpleCatalog {
        self.catalogs
            .entry(n)
            .or_insert_with(|| SimpleCatalog::symmetric(n))
    }
}

#[pymethods]
impl Workbench {
    #[new]
    #[pyo3(signature = (seed = 2024))]
    fn new(seed: u64) -> Self {
        Workbench {
            seed,
            catalogs: HashMap::new(),
        }
    }

    fn irreducible(&mut self, parts: Vec<u32>) -> PyResult<Rep> {
        let lam = parse_parts(parts)?;
        let n = lam.n();
        let m = self
            .catalog(n)
            .entries
            .iter()
            .find(|(l, _)| *l == lam)
            .map(|(_, d)| d.clone())
            .ok_or_else(|| PyValueError::new_err(format!("{lam} is not 2-regular")))?;
        Ok(Rep { inner: m })
    }

    fn specht(&self, parts: Vec<u32>) -> PyResult<Rep> {
        let lam = parse_parts(parts)?;
        Ok(Rep {
            inner: sgw_core::specht::specht_module(&lam),
        })
    }

    fn perm(&self, parts: Vec<u32>) -> PyResult<Rep> {
        let lam = parse_parts(parts)?;
        Ok(Rep {
            inner: sgw_core::group::perm_module(lam.parts()),
        })
    }

    fn tensor(&self, a: &Rep, b: &Rep) -> PyResult<Rep> {
        if a.inner.group != b.inner.group {
            return Err(PyValueError::new_err("tensor factors of different groups"));
        }
        Ok(Rep {
            inner: sgw_core::functors::tensor(&a.inner, &b.inner),
        })
    }

    fn restrict(&self, m: &Rep, k: usize) -> PyResult<Rep> {
        match m.inner.group {
            Group::Symmetric(n) if k >= 1 && k <= n => Ok(Rep {
                inner: sgw_core::functors::restrict_to_symmetric(&m.inner, k),
            }),
            _ => Err(PyValueError::new_err("restrict expects 1 <= k <= degree")),
        }
    }

    fn is_irreducible(&mut self, m: &Rep) -> PyResult<bool> {
        let Group::Symmetric(n) = m.inner.group else {
            return Err(PyValueError::new_err("expected a symmetric-group module"));
        };
        let seed = self.seed;
        let catalog = self.catalog(n);
        Ok(decide_irreducible(&m.inner, catalog, seed).0)
    }

    /// Composition factor multiset as {"label": multiplicity}.
    fn chop(&mut self, m: &Rep) -> PyResult<BTreeMap<String, usize>> {
        let Group::Symmetric(n) = m.inner.group else {
            return Err(PyValueError::new_err("expected a symmetric-group module"));
        };
        let seed = self.seed;
        let catalog = self.catalog(n);
        let factors = chop(&m.inner, catalog, seed);
        Ok(factors
            .entries
            .iter()
            .map(|(l, k)| (l.to_string(), *k))
            .collect())
    }

    fn end_dim(&self, m: &Rep) -> usize {
        hom_space(&m.inner, &m.inner).dim()
    }

    /// Label of an isomorphic catalog simple, when one exists.
    fn iso_label(&mut self, m: &Rep) -> PyResult<Option<String>> {
        let Group::Symmetric(n) = m.inner.group else {
            return Err(PyValueError::new_err("expected a symmetric-group module"));
        };
        let seed = self.seed;
        let catalog = self.catalog(n);
        for (lam, d) in &catalog.entries {
            if d.dim == m.inner.dim && iso_simple(d, &m.inner, seed).is_some() {
                return Ok(Some(lam.to_string()));
            }
        }
        Ok(None)
    }
}

#[pyfunction]
fn eps_phi(parts: Vec<u32>) -> PyResult<(usize, usize, usize, usize)> {
    let lam = parse_parts(parts)?;
    let ep = partition::eps_phi(&lam);
    Ok((ep.eps0, ep.eps1, ep.phi0, ep.phi1))
}

#[pyfunction]
fn is_js(parts: Vec<u32>) -> PyResult<bool> {
    let lam = parse_parts(parts)?;
    lam.is_js().map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
fn normal_nodes(parts: Vec<u32>, residue: u8) -> PyResult<Vec<(usize, usize)>> {
    let lam = parse_parts(parts)?;
    let (ns, _) = partition::normal_conormal(&lam, residue);
    Ok(ns.iter().map(|x| (x.row, x.col)).collect())
}

#[pyfunction]
fn conormal_nodes(parts: Vec<u32>, residue: u8) -> PyResult<Vec<(usize, usize)>> {
    let lam = parse_parts(parts)?;
    let (_, cs) = partition::normal_conormal(&lam, residue);
    Ok(cs.iter().map(|x| (x.row, x.col)).collect())
}

#[pyfunction]
fn e_tilde(parts: Vec<u32>, residue: u8, r: usize) -> PyResult<Option<Vec<u32>>> {
    let lam = parse_parts(parts)?;
    if !lam.is_two_regular() {
        return Err(PyValueError::new_err("partition must be 2-regular"));
    }
    Ok(partition::e_tilde_label(&lam, residue, r).map(|p| p.parts().to_vec()))
}

#[pyfunction]
fn f_tilde(parts: Vec<u32>, residue: u8, r: usize) -> PyResult<Option<Vec<u32>>> {
    let lam = parse_parts(parts)?;
    if !lam.is_two_regular() {
        return Err(PyValueError::new_err("partition must be 2-regular"));
    }
    Ok(partition::f_tilde_label(&lam, residue, r).map(|p| p.parts().to_vec()))
}

/// The classified tensor-product family at even n, as part lists.
#[pyfunction]
fn gk_family(n: usize) -> PyResult<Vec<(Vec<u32>, Vec<u32>, Vec<u32>)>> {
    partition::gk_family(n)
        .map(|fam| {
            fam.into_iter()
                .map(|(a, b, c)| {
                    (a.parts().to_vec(), b.parts().to_vec(), c.parts().to_vec())
                })
                .collect()
        })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Full classification sweep; returns the JSON report.
#[pyfunction]
#[pyo3(signature = (n, max_dim = 5000, jobs = 2, seed = 2024))]
fn run_sweep_json(n: usize, max_dim: usize, jobs: usize, seed: u64) -> PyResult<String> {
    let records = sgw_core::sweep::run_sweep(n, max_dim, jobs, seed)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let records = records
        .into_iter()
        .map(sgw_core::report::Record::Sweep)
        .collect();
    Ok(sgw_core::report::Report::new("sweep", vec![n], seed, records).to_json())
}

/// Registered structure checks; returns the JSON report.
#[pyfunction]
#[pyo3(signature = (ns, only = None, seed = 2024))]
fn run_lemmas_json(ns: Vec<usize>, only: Option<Vec<String>>, seed: u64) -> PyResult<String> {
    let checks = sgw_core::lemmas::run_lemmas(&ns, only.as_deref(), seed)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let records = checks
        .into_iter()
        .map(sgw_core::report::Record::Lemma)
        .collect();
    Ok(sgw_core::report::Report::new("lemmas", ns, seed, records).to_json())
}

#[pymodule]
fn sgw_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Rep>()?;
    m.add_class::<Workbench>()?;
    m.add_function(wrap_pyfunction!(eps_phi, m)?)?;
    m.add_function(wrap_pyfunction!(is_js, m)?)?;
    m.add_function(wrap_pyfunction!(normal_nodes, m)?)?;
    m.add_function(wrap_pyfunction!(conormal_nodes, m)?)?;
    m.add_function(wrap_pyfunction!(e_tilde, m)?)?;
    m.add_function(wrap_pyfunction!(f_tilde, m)?)?;
    m.add_function(wrap_pyfunction!(gk_family, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep_json, m)?)?;
    m.add_function(wrap_pyfunction!(run_lemmas_json, m)?)?;
    Ok(())
}
