//! Python bindings: thin wrappers around the kernel types.

use pyo3::prelude::*;

#[pymodule]
fn bigbracket_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
