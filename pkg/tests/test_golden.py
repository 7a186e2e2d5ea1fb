import time

from hermitrig.golden import CASES, golden_suite


def test_all_golden_cases_pass():
    start = time.perf_counter()
    summary = golden_suite()
    elapsed = time.perf_counter() - start
    assert summary.ok, "\n".join(summary.lines())
    assert elapsed < 10


def test_perturbed_value_is_caught():
    summary = golden_suite(perturb={"closed_form_p1/a": [0.0, 1e-6]})  # a_2 only
    assert [r[0] for r in summary.failures()] == ["closed_form_p1/a"]
    assert "FAIL  closed_form_p1/a" in "\n".join(summary.lines())


def test_cases_are_uniquely_named():
    idents = [c.ident for c in CASES]
    assert len(idents) == len(set(idents))
    assert all(c.provenance for c in CASES)
