//! Python bindings. Reports cross the boundary as JSON strings.

use std::sync::Arc;

use fibrancy::kernel::standard::{boundary as boundary_set, delta as delta_set, interval_nerve};
use fibrancy::{Family, Label, SSet, Suite};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn labels(x: &SSet, vertices: &[String]) -> PyResult<Vec<Label>> {
    vertices
        .iter()
        .map(|v| {
            let l: Label = v.parse().map_err(err)?;
            match l {
                Label::Int(k) if x.find(0, &l).is_none() && k >= 0 => Ok(Label::Tuple(vec![k as u32])),
                l => Ok(l),
            }
        })
        .collect()
}

/// A truncated simplicial set.
#[pyclass(frozen, module = "fibrancy_py")]
pub struct SimplicialSet(Arc<SSet>);

#[pymethods]
impl SimplicialSet {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(SimplicialSet(Arc::new(SSet::from_json(s).map_err(err)?)))
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn counts(&self) -> Vec<usize> {
        self.0.counts()
    }

    fn nondegenerate_counts(&self) -> Vec<usize> {
        (0..=self.0.dim()).map(|n| self.0.nondegenerate_count(n)).collect()
    }

    fn vertices(&self) -> Vec<String> {
        self.0.labels(0).iter().map(Label::to_string).collect()
    }

    fn is_valid(&self) -> bool {
        fibrancy::validate_sset(&self.0).is_ok()
    }

    /// `W_ν(X)` for the given vertex labels.
    fn widen(&self, vertices: Vec<String>) -> PyResult<SimplicialSet> {
        let nu = labels(&self.0, &vertices)?;
        let w = fibrancy::widen(&self.0, &nu).map_err(err)?;
        Ok(SimplicialSet(w.object().clone()))
    }

    fn product(&self, other: &SimplicialSet) -> PyResult<SimplicialSet> {
        Ok(SimplicialSet(Arc::new(fibrancy::product(&self.0, &other.0).map_err(err)?)))
    }

    /// Runs the lifting check and returns the report as JSON.
    #[pyo3(signature = (family, max_horn=2))]
    fn check_rlp(&self, family: &str, max_horn: usize) -> PyResult<String> {
        let family: Family = family.parse().map_err(err)?;
        let report = fibrancy::check_rlp(&self.0, family, max_horn).map_err(err)?;
        serde_json::to_string(&report).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("SimplicialSet(dim={}, counts={:?})", self.0.dim(), self.0.counts())
    }
}

/// An injective simplicial map.
#[pyclass(frozen, module = "fibrancy_py")]
pub struct Inclusion(fibrancy::Inclusion);

#[pymethods]
impl Inclusion {
    #[getter]
    fn domain(&self) -> SimplicialSet {
        SimplicialSet(self.0.domain().clone())
    }

    #[getter]
    fn codomain(&self) -> SimplicialSet {
        SimplicialSet(self.0.codomain().clone())
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0.map().to_doc()).map_err(err)
    }

    /// Cell decomposition of the widened inclusion at one narrow vertex, as JSON.
    fn decompose(&self, vertex: &str) -> PyResult<String> {
        let y = labels(self.0.codomain(), &[vertex.to_string()])?.remove(0);
        let d = fibrancy::decompose_single_narrow(&self.0, &y, self.0.dim()).map_err(err)?;
        serde_json::to_string(&d.to_doc()).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Inclusion({:?} -> {:?})", self.0.domain().counts(), self.0.codomain().counts())
    }
}

#[pyfunction]
#[pyo3(signature = (n, dim=4))]
fn delta(n: usize, dim: usize) -> SimplicialSet {
    SimplicialSet(Arc::new(delta_set(n, dim)))
}

#[pyfunction]
#[pyo3(signature = (n, dim=4))]
fn boundary(n: usize, dim: usize) -> PyResult<SimplicialSet> {
    Ok(SimplicialSet(Arc::new(boundary_set(n, dim).map_err(err)?)))
}

/// The nerve of the free-living isomorphism.
#[pyfunction]
#[pyo3(signature = (dim=4))]
fn j(dim: usize) -> SimplicialSet {
    SimplicialSet(Arc::new(interval_nerve(dim)))
}

#[pyfunction]
#[pyo3(signature = (n, i, dim=4))]
fn isoplex(n: usize, i: usize, dim: usize) -> PyResult<SimplicialSet> {
    Ok(SimplicialSet(fibrancy::isoplex(n, i, dim).map_err(err)?.body().clone()))
}

#[pyfunction]
#[pyo3(signature = (n, i, dim=4))]
fn isohorn(n: usize, i: usize, dim: usize) -> PyResult<Inclusion> {
    Ok(Inclusion(fibrancy::isohorn(n, i, dim).map_err(err)?.inclusion().clone()))
}

#[pyfunction]
#[pyo3(signature = (n, dim=4))]
fn class_a(n: usize, dim: usize) -> PyResult<Inclusion> {
    Ok(Inclusion(fibrancy::class_a(n, dim).map_err(err)?))
}

#[pyfunction]
#[pyo3(signature = (n, dim=4))]
fn boundary_inclusion(n: usize, dim: usize) -> PyResult<Inclusion> {
    Ok(Inclusion(fibrancy::lifting::boundary_inclusion(n, dim).map_err(err)?))
}

/// Runs `sec4`, `sec5` or `theorem` and returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (suite, dim=None, max_horn=2))]
fn run_suite(py: Python<'_>, suite: &str, dim: Option<usize>, max_horn: usize) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(err)?;
    let dim = dim.unwrap_or(max_horn + 2);
    let report = py.detach(|| fibrancy::run_suite(suite, dim, max_horn)).map_err(err)?;
    serde_json::to_string(&report).map_err(err)
}

#[pymodule]
fn fibrancy_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<SimplicialSet>()?;
    m.add_class::<Inclusion>()?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(boundary, m)?)?;
    m.add_function(wrap_pyfunction!(j, m)?)?;
    m.add_function(wrap_pyfunction!(isoplex, m)?)?;
    m.add_function(wrap_pyfunction!(isohorn, m)?)?;
    m.add_function(wrap_pyfunction!(class_a, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_inclusion, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widening_and_counts() {
        let w = delta(2, 3).widen(vec!["2".into()]).unwrap();
        assert_eq!(w.counts()[0], 4);
        assert!(w.is_valid());
        assert!(delta(2, 3).widen(vec!["(7)".into()]).is_err());
    }

    #[test]
    fn reports_are_json() {
        let v = isohorn(2, 0, 4).unwrap().domain();
        let r: serde_json::Value = serde_json::from_str(&v.check_rlp("iso_horns", 2).unwrap()).unwrap();
        assert_eq!(r["status"], "fail");
        let d: serde_json::Value = serde_json::from_str(&boundary_inclusion(1, 3).unwrap().decompose("0").unwrap()).unwrap();
        assert_eq!(d["stages"][0]["k"], 1);
    }
}
