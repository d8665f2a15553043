use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(gengraph_py::gengraph_py)(py);
        let globals = PyDict::new(py);
        globals.set_item("gg", module).unwrap();
        let code = std::ffi::CString::new(code).unwrap();
        py.run(&code, Some(&globals), None).unwrap();
    });
}

#[test]
fn counts_and_graphs() {
    run(r#"
c2 = gg.Group("C2")
assert gg.phi(c2, 2) == 3
assert gg.counts(c2, 2, 2) == (4, 6, 3)
g = gg.generating_graph(c2, 2, 2)
assert g.planarity()["planar"] and g.loops == [1, 2, 3]
assert gg.stats(gg.Group("S3"), 2)["alpha"] == "3/1"
"#);
}

#[test]
fn errors_map_to_exceptions() {
    run(r#"
try:
    gg.Group("C4C2")
    raise AssertionError("accepted")
except ValueError:
    pass
try:
    gg.phi(gg.Group("S4"), 3, steps=1)
    raise AssertionError("no budget error")
except gg.BudgetError:
    pass
"#);
}
