//! Python bindings.
//!
//! ```python
//! import antiatom
//! s = antiatom.NumericalSemigroup([9, 10, 11, 12, 13])
//! sol = s.solve()
//! assert sol.pa == 6 and sol.min_size == 31
//! ```

use antiatom_core as core;
use antiatom_core::enumerate::EnumerationQuery;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A subset of the naturals containing 0 with finite complement.
#[pyclass(name = "NumericalSet", module = "antiatom", frozen, skip_from_py_object)]
#[derive(Clone)]
struct NumericalSet(core::NumericalSet);

#[pymethods]
impl NumericalSet {
    #[new]
    fn new(gaps: Vec<u32>) -> PyResult<Self> {
        core::NumericalSet::from_gaps(gaps).map(Self).map_err(err)
    }

    /// Parses `{0,5,7,9,->}`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    #[getter]
    fn gaps(&self) -> Vec<u32> {
        self.0.gaps().to_vec()
    }

    #[getter]
    fn frobenius(&self) -> i64 {
        self.0.frobenius()
    }

    #[getter]
    fn genus(&self) -> usize {
        self.0.genus()
    }

    #[getter]
    fn multiplicity(&self) -> u32 {
        self.0.multiplicity()
    }

    #[getter]
    fn depth(&self) -> u32 {
        self.0.depth()
    }

    fn __contains__(&self, x: u32) -> bool {
        self.0.contains(x)
    }

    fn is_semigroup(&self) -> bool {
        self.0.is_semigroup()
    }

    fn atom_monoid(&self) -> NumericalSemigroup {
        NumericalSemigroup(self.0.atom_monoid())
    }

    fn dual(&self) -> PyResult<Self> {
        self.0.dual().map(Self).map_err(err)
    }

    fn partition(&self) -> Partition {
        Partition(core::enumeration(&self.0))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("NumericalSet({:?})", self.0.gaps())
    }
}

/// A numerical set closed under addition.
#[pyclass(name = "NumericalSemigroup", module = "antiatom", frozen, skip_from_py_object)]
#[derive(Clone)]
struct NumericalSemigroup(core::NumericalSemigroup);

#[pymethods]
impl NumericalSemigroup {
    #[new]
    fn new(generators: Vec<u32>) -> PyResult<Self> {
        core::NumericalSemigroup::from_generators(generators).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_gaps(gaps: Vec<u32>) -> PyResult<Self> {
        core::NumericalSemigroup::from_gaps(gaps).map(Self).map_err(err)
    }

    /// Parses `<9,10,11,12,13>`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    #[getter]
    fn gaps(&self) -> Vec<u32> {
        self.0.gaps().to_vec()
    }

    #[getter]
    fn generators(&self) -> Vec<u32> {
        self.0.minimal_generators().to_vec()
    }

    #[getter]
    fn frobenius(&self) -> i64 {
        self.0.frobenius()
    }

    #[getter]
    fn genus(&self) -> usize {
        self.0.genus()
    }

    #[getter]
    fn multiplicity(&self) -> u32 {
        self.0.multiplicity()
    }

    #[getter]
    fn depth(&self) -> u32 {
        self.0.depth()
    }

    #[getter(r#type)]
    fn semigroup_type(&self) -> usize {
        self.0.semigroup_type()
    }

    #[getter]
    fn pseudo_frobenius(&self) -> PyResult<Vec<u32>> {
        self.0.pseudo_frobenius().map(<[u32]>::to_vec).map_err(err)
    }

    #[getter]
    fn special_gaps(&self) -> Vec<u32> {
        self.0.special_gaps()
    }

    #[getter]
    fn void(&self) -> Vec<u32> {
        self.0.void().to_vec()
    }

    fn __contains__(&self, x: u32) -> bool {
        self.0.contains(x)
    }

    fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }

    fn as_set(&self) -> NumericalSet {
        NumericalSet(self.0.as_set().clone())
    }

    fn partition(&self) -> Partition {
        Partition(core::enumeration(&self.0))
    }

    /// Hasse diagram of the void poset as `(lower, upper)` pairs.
    fn hasse_edges(&self) -> PyResult<Vec<(u32, u32)>> {
        Ok(core::VoidPoset::new(&self.0).map_err(err)?.hasse_edges())
    }

    #[pyo3(signature = (cross_check = false))]
    fn solve(&self, py: Python<'_>, cross_check: bool) -> PyResult<AntiAtomSolution> {
        let s = self.0.clone();
        py.detach(move || core::solve_with(&s, core::SolveOptions { cross_check }))
            .map(AntiAtomSolution)
            .map_err(err)
    }

    fn is_lambda_minimal(&self) -> PyResult<bool> {
        core::is_lambda_minimal(&self.0).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("semigroups serialize")
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("NumericalSemigroup({:?})", self.0.minimal_generators())
    }
}

/// An integer partition, parts weakly decreasing.
#[pyclass(name = "Partition", module = "antiatom", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Partition(core::Partition);

#[pymethods]
impl Partition {
    #[new]
    fn new(parts: Vec<u32>) -> PyResult<Self> {
        core::Partition::new(parts).map(Self).map_err(err)
    }

    #[getter]
    fn parts(&self) -> Vec<u32> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> u64 {
        self.0.size()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    fn durfee(&self) -> usize {
        self.0.durfee()
    }

    fn hook_lengths(&self) -> Vec<Vec<u32>> {
        self.0.hook_lengths()
    }

    fn hook_set(&self) -> Vec<u32> {
        self.0.hook_set().into_iter().collect()
    }

    #[pyo3(signature = (hooks = false))]
    fn render(&self, hooks: bool) -> String {
        self.0.render(hooks)
    }

    /// The numerical set whose profile walk traces this partition.
    fn numerical_set(&self) -> NumericalSet {
        NumericalSet(core::numerical_set_of(&self.0))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

/// Every numerical set with a given atom monoid.
#[pyclass(name = "AntiAtomSolution", module = "antiatom", frozen, skip_from_py_object)]
struct AntiAtomSolution(core::AntiAtomSolution);

#[pymethods]
impl AntiAtomSolution {
    #[getter]
    fn pa(&self) -> usize {
        self.0.pa
    }

    #[getter]
    fn sizes(&self) -> Vec<u64> {
        self.0.sizes()
    }

    #[getter]
    fn base_size(&self) -> u64 {
        self.0.base_size
    }

    #[getter]
    fn min_size(&self) -> u64 {
        self.0.min_size
    }

    #[getter]
    fn lambda_minimal(&self) -> bool {
        self.0.lambda_minimal
    }

    #[getter]
    fn witness_ideal(&self) -> Vec<u32> {
        self.0.witness().ideal.members().to_vec()
    }

    fn witness_partition(&self) -> Partition {
        Partition(self.0.witness().partition())
    }

    /// `(ideal, numerical set, partition size, self-dual)` per associated set.
    fn reports(&self) -> Vec<(Vec<u32>, NumericalSet, u64, bool)> {
        self.0
            .reports
            .iter()
            .map(|r| {
                (
                    r.ideal.members().to_vec(),
                    NumericalSet(r.numerical_set.clone()),
                    r.partition_size,
                    r.self_dual,
                )
            })
            .collect()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0.summary()).expect("summaries serialize")
    }

    fn __repr__(&self) -> String {
        format!(
            "AntiAtomSolution(semigroup={}, pa={}, sizes={:?})",
            self.0.semigroup,
            self.0.pa,
            self.0.sizes()
        )
    }
}

#[pyfunction]
fn solve(py: Python<'_>, s: &NumericalSemigroup) -> PyResult<AntiAtomSolution> {
    s.solve(py, false)
}

#[pyfunction]
fn semigroups_by_genus(py: Python<'_>, genus: u32) -> PyResult<Vec<NumericalSemigroup>> {
    let found = py.detach(|| core::semigroups_by_genus(genus)).map_err(err)?;
    Ok(found.into_iter().map(NumericalSemigroup).collect())
}

#[pyfunction]
fn semigroups_by_frobenius(py: Python<'_>, frobenius: u32) -> PyResult<Vec<NumericalSemigroup>> {
    let found = py.detach(|| core::semigroups_by_frobenius(frobenius)).map_err(err)?;
    Ok(found.into_iter().map(NumericalSemigroup).collect())
}

/// `(total, non-minimal semigroups)` over genus or Frobenius `1..=bound`.
#[pyfunction]
#[pyo3(signature = (mode, bound, only = None))]
fn scan(
    py: Python<'_>,
    mode: &str,
    bound: u32,
    only: Option<u32>,
) -> PyResult<(usize, Vec<NumericalSemigroup>)> {
    let mut query = match mode {
        "genus" => EnumerationQuery::by_genus(bound),
        "frobenius" => EnumerationQuery::by_frobenius(bound),
        _ => return Err(PyValueError::new_err("mode must be 'genus' or 'frobenius'")),
    };
    if let Some(b) = only {
        query = query.only(b);
    }
    let report = py.detach(|| core::scan_minimality(&query)).map_err(err)?;
    Ok((report.total, report.non_minimal.into_iter().map(NumericalSemigroup).collect()))
}

#[pymodule]
fn antiatom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<NumericalSet>()?;
    m.add_class::<NumericalSemigroup>()?;
    m.add_class::<Partition>()?;
    m.add_class::<AntiAtomSolution>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(semigroups_by_genus, m)?)?;
    m.add_function(wrap_pyfunction!(semigroups_by_frobenius, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    Ok(())
}
