import io

import numpy as np
import pytest

from pmspec import oracle
from pmspec.exact import derangement_count, odd_double_factorial, pm_degree
from pmspec.partitions import Partition
from pmspec.pm_spectrum import pm_spectrum_table
from pmspec.sym_spectrum import sym_spectrum_table
from pmspec.tables import SpectrumTable


def test_enumerate_perfect_matchings_counts():
    assert len(oracle.enumerate_perfect_matchings(2)) == 3
    assert len(oracle.enumerate_perfect_matchings(4)) == 105
    assert len(oracle.enumerate_perfect_matchings(5)) == 945


def test_enumeration_is_canonical_and_unique():
    ms = oracle.enumerate_perfect_matchings(3)
    assert len(set(ms)) == len(ms)
    for m in ms:
        covered = sorted(v for pair in m for v in pair)
        assert covered == list(range(1, 7))
        assert all(a < b for a, b in m)
        assert list(m) == sorted(m)


def test_cap_enforced(monkeypatch):
    with pytest.raises(ValueError):
        oracle.enumerate_perfect_matchings(9)
    with pytest.raises(ValueError):
        oracle.build_derangement_graph(9)
    monkeypatch.setenv(oracle.CAP_ENV_VAR, "2")
    with pytest.raises(ValueError):
        oracle.build_pm_graph(3)
    monkeypatch.setenv(oracle.CAP_ENV_VAR, "junk")
    with pytest.raises(ValueError):
        oracle.oracle_cap()


def test_pm_graph_small():
    g = oracle.build_pm_graph(2)
    assert g.vertex_count == 3 and g.degree == 2  # triangle
    assert (g.adjacency == np.ones((3, 3)) - np.eye(3)).all()
    g = oracle.build_pm_graph(3)
    assert g.vertex_count == 15 and g.degree == 8
    g = oracle.build_pm_graph(1)
    assert g.vertex_count == 1 and g.degree == 0


def test_derangement_graph_small():
    g = oracle.build_derangement_graph(2)
    assert g.vertex_count == 2 and g.degree == 1
    g = oracle.build_derangement_graph(3)
    assert g.vertex_count == 6 and g.degree == 2
    g = oracle.build_derangement_graph(4)
    assert g.vertex_count == 24 and g.degree == 9


def test_numeric_spectrum_triangle():
    g = oracle.build_pm_graph(2)
    spec = oracle.numeric_spectrum(g)
    assert np.allclose(spec, [-1.0, -1.0, 2.0])


def test_numeric_spectrum_m6():
    spec = oracle.numeric_spectrum(oracle.build_pm_graph(3))
    rounded = sorted(round(x) for x in spec)
    assert rounded.count(8) == 1 and rounded.count(-2) == 9 and rounded.count(2) == 5


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_certify_pm(n):
    report = oracle.certify(pm_spectrum_table(n), oracle.build_pm_graph(n))
    assert report.spectrum_match
    assert all(ok for _, ok in report.trace_checks)
    assert report.degree_observed == pm_degree(n)
    assert report.vertex_count == odd_double_factorial(n)
    assert report.passed


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_certify_sym(n):
    report = oracle.certify(sym_spectrum_table(n), oracle.build_derangement_graph(n))
    assert report.passed
    assert report.degree_observed == derangement_count(n)


def test_certify_rejects_mismatched_n():
    with pytest.raises(ValueError):
        oracle.certify(pm_spectrum_table(2), oracle.build_pm_graph(3))


def test_injected_fault_is_detected():
    table = pm_spectrum_table(3)
    rows = dict(table.rows)
    rows[Partition((2, 1))] = (-1, 9)  # perturbed eigenvalue
    broken = SpectrumTable(family="pm", n=3, rows=rows)
    report = oracle.certify(broken, oracle.build_pm_graph(3))
    assert not report.spectrum_match
    checks = dict(report.trace_checks)
    assert checks["sum_val"] is False
    assert not report.passed


def test_edge_list_dump():
    buf = io.StringIO()
    count = oracle.write_edge_list(oracle.build_pm_graph(2), buf)
    assert count == 3
    assert buf.getvalue() == "0 1\n0 2\n1 2\n"


def test_report_rendering():
    report = oracle.certify(pm_spectrum_table(3), oracle.build_pm_graph(3))
    text = report.to_text()
    assert "PASS" in text and "15 vertices" in text
    js = report.to_json()
    assert '"spectrum_match":true' in js
