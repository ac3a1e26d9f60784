"""Smoke test for the dlspec extension module.

Run after `pip install --no-build-isolation ./crates/py` (or with the built
shared library on PYTHONPATH):  python python/smoke_test.py
"""

import json
import math

import dlspec

TOL = 5e-4


def close(a, b, tol=TOL):
    return abs(a - b) <= tol


def main():
    kite, roles = dlspec.family("kite:n=6")
    assert kite.n == 6 and kite.edge_count == 6 and kite.is_unicyclic()
    assert close(kite.spectral_radius(), 18.7130)
    assert kite.transmissions()[roles["pendant"]] == 14

    h, h_roles = dlspec.family("h:n=6")
    assert h.is_tree() and not dlspec.are_isomorphic(h, kite)
    assert close(dlspec.spectral_radius(h), 17.6056)

    edge = dlspec.Graph.from_graph6("A_")
    values, vectors = dlspec.spectrum(edge)
    assert close(values[0], 2.0, 1e-12) and close(values[1], 0.0, 1e-12)
    assert edge.to_graph6() == "A_"
    assert json.loads(edge.spectrum_json())["radius"] == 2.0

    c4 = dlspec.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert close(c4.spectral_radius(), 6.0, 1e-9)
    assert c4.canonical_form() == c4.relabel([2, 0, 3, 1]).canonical_form()
    assert close(dlspec.cycle_radius_closed_form(5), 8.6180)
    values, vectors = kite.spectrum()
    assert kite.eigen_residual(values[0], vectors[0]) < 1e-8
    assert abs(sum(vectors[0])) < 1e-8

    counts = [len(dlspec.enumerate_unicyclic(n)) for n in range(3, 9)]
    assert counts == [1, 2, 5, 13, 33, 89], counts
    assert dlspec.enumerate_unicyclic(8, shards=4) == dlspec.enumerate_unicyclic(8)

    lab = dlspec.LemmaLab()
    v = lab.check_h_vs_kite(6)
    assert v.passed and close(v.margin, 18.7130 - 17.6056, 1e-3)
    assert json.loads(v.to_json())["lemma"] == "dl1"
    t = lab.extremal_search(10)
    assert t.passed and t.instances == 657
    assert all(x.passed for x in lab.path_shift_sweep(dlspec.family("cycle:n=3")[0], 0, 6))
    assert all(x.passed for x in lab.edge_addition_random_suite(seed=7, trials=50))
    assert dlspec.LemmaLab(strict=100.0).check_c4_family(5).status == "INCONCLUSIVE"
    assert math.isinf(lab.extremal_search(3).margin)

    try:
        dlspec.Graph(2, [(0, 1), (0, 1)])
    except dlspec.DlspecError as e:
        assert "already present" in str(e)
    else:
        raise AssertionError("duplicate edge accepted")
    try:
        dlspec.family("kite:n=2")
    except ValueError:
        pass
    else:
        raise AssertionError("bad order accepted")

    print("dlspec smoke test: ok")


if __name__ == "__main__":
    main()
