//! Python bindings: the four engine entry points, each returning the process
//! exit code (0 all checks pass, 1 a check failed or a solver came back empty,
//! 2 the instance failed to parse) together with the rendered JSON report.

use pyo3::prelude::*;

/// Check the structural axioms of an instance given as JSON text.
#[pyfunction]
#[pyo3(signature = (text, name = "instance"))]
fn validate(text: &str, name: &str) -> (i32, String) {
    let mut out = paracyclic::run::validate(text, name);
    (out.exit_code, out.report.render())
}

/// Run the full law suite of an instance given as JSON text.
#[pyfunction]
#[pyo3(signature = (text, name = "instance", only = None, jobs = 1))]
fn laws(text: &str, name: &str, only: Option<&str>, jobs: usize) -> (i32, String) {
    let mut out = paracyclic::run::laws(text, name, only, jobs);
    (out.exit_code, out.report.render())
}

/// Build the cosimplex up to a degree and optionally check its relations.
#[pyfunction]
#[pyo3(signature = (text, max_degree, name = "instance", check_relations = false, emit_matrices = false))]
fn complex(
    text: &str,
    max_degree: usize,
    name: &str,
    check_relations: bool,
    emit_matrices: bool,
) -> (i32, String) {
    let mut out = paracyclic::run::complex(text, name, max_degree, check_relations, emit_matrices);
    (out.exit_code, out.report.render())
}

/// Search diagonal transpositions with coefficients among m-th roots of unity.
#[pyfunction]
#[pyo3(signature = (text, order, name = "instance"))]
fn solve_transposition(text: &str, order: u64, name: &str) -> (i32, String) {
    let mut out = paracyclic::run::solve_transposition(text, name, order);
    (out.exit_code, out.report.render())
}

#[pymodule]
fn paracyclic_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(laws, m)?)?;
    m.add_function(wrap_pyfunction!(complex, m)?)?;
    m.add_function(wrap_pyfunction!(solve_transposition, m)?)?;
    Ok(())
}
