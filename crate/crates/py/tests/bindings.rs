use pyo3::prelude::*;
use pyo3::types::PyDict;

/// Runs `code` with the module importable as `extq`.
fn run_python(code: &std::ffi::CStr) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "extq").unwrap();
        extq::register(&m).unwrap();
        py.import("sys").unwrap().getattr("modules").unwrap().set_item("extq", &m).unwrap();
        let globals = PyDict::new(py);
        if let Err(e) = py.run(code, Some(&globals), None) {
            e.print(py);
            panic!("python code failed: {e}");
        }
    });
}

#[test]
fn root_datum_and_extended_quotient() {
    run_python(
        c"
import extq
rd = extq.RootDatum('Sp4')
assert rd.rank == 2 and len(rd.roots()) == 8 and rd.weyl_order() == 8
b = extq.BernsteinPoint('SL3')
dims = sorted(c['dim'] for c in b.extended_quotient())
assert dims == [0, 0, 0, 1, 2], dims
assert len(b.fiber('0,0')) == 3
",
    );
}

#[test]
fn snf_and_condition_checker() {
    run_python(
        c"
import extq
r = extq.smith_normal_form([[2, 4], [6, 8]])
assert r['invariant_factors'] == [2, 4]
u, m, v = r['u'], [[2, 4], [6, 8]], r['v']
um = [[sum(u[i][k] * m[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
umv = [[sum(um[i][k] * v[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
assert umv == r['d']
assert extq.check_condition_cc(['A2'], 5)['ok']
assert not extq.check_condition_cc(['A1', 'G2'], 5)['ok']
",
    );
}

#[test]
fn packets_and_errors() {
    run_python(
        c"
import extq
b = extq.BernsteinPoint('SL2')
pk = b.lpackets(torsion_bound=2)
assert [f['t0'] for f in pk['fibers']] == ['(0)', '(1/2)']
assert all(len(p['points']) == 1 for f in pk['fibers'] for p in f['packets'])
assert b.mu_tilde(torsion_bound=2, strict=True)['inconsistencies'] == []
try:
    extq.BernsteinPoint('SL3').mu_tilde(torsion_bound=1, strict=True)
    raise AssertionError('expected a label conflict')
except extq.ExtqError as e:
    assert 'label inconsistency' in str(e)
try:
    extq.RootDatum('XY3')
    raise AssertionError('expected a parse error')
except ValueError:
    pass
assert extq.BernsteinPoint('SL2', ['1/4']).weyl_order == 1
",
    );
}
