use std::ffi::CString;

use dlspec::dlspec as module;
use pyo3::prelude::*;

fn run(code: &str) {
    pyo3::append_to_inittab!(module);
    Python::initialize();
    Python::attach(|py| {
        let code = CString::new(code).unwrap();
        py.run(&code, None, None).unwrap_or_else(|e| panic!("{e}"));
    });
}

#[test]
fn module_round_trip() {
    run(r#"
import dlspec
g, roles = dlspec.family("kite:n=9")
assert abs(g.spectral_radius() - 45.5731) <= 5e-4
assert roles["pendant"] == 8
assert len(dlspec.enumerate_unicyclic(7)) == 33
lab = dlspec.LemmaLab()
v = lab.check_c4_family(5)
assert v.passed and v.witness == "c4spider:0,0,0,1"
try:
    dlspec.Graph.from_graph6("C?").spectral_radius()
    raise AssertionError("disconnected graph accepted")
except dlspec.DlspecError as e:
    assert "disconnected" in str(e)
"#);
}
