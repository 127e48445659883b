import json

import pytest

from qpl.core import Overpartition
from qpl.enumeration import iter_overpartitions
from qpl.identities import (
    IDENTITIES,
    IDENTITY_IDS,
    brute_force,
    closed_form,
    default_grid,
    overpartition_series,
    theorem_count_check,
    verify,
    verify_all,
)
from qpl.series import QSeries


def test_catalog_is_complete():
    assert IDENTITY_IDS == tuple(f"I{i}" for i in range(1, 20))
    assert set(IDENTITIES) == set(IDENTITY_IDS)


def test_spot_values_from_tables():
    # sums of the excludant tables at weight 4 and 6
    assert closed_form("I2", {"r": 2}, 10)[1].coeff(4) == 40
    assert closed_form("I3", {"r": 2}, 10)[1].coeff(6) == 42
    assert brute_force("I2", {"r": 2}, 10).coeff(4) == 40
    assert brute_force("I3", {"r": 2}, 10).coeff(6) == 42


def test_spot_values_class_counts():
    assert closed_form("I11", {"k": 2}, 6)[1].q_projection().coeff(4) == 12
    assert brute_force("I12", {"k": 2}, 6).q_projection().coeff(4) == 9
    assert brute_force("I7", {"r": 2}, 4).coeff(1, 4) == 2
    assert brute_force("I1", {}, 0).coeff(0) == 1


def test_overpartition_series_values():
    assert overpartition_series(10).coeffs == (1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232)


@pytest.mark.parametrize("r", (1, 2, 3))
def test_repeating_size_stratifications_pass(r):
    assert verify("I5", {"r": r}, 24).passed
    assert verify("I8", {"r": r}, 24).passed
    for m in (1, 2, 5):
        assert verify("I9", {"r": r, "m": m}, 24).passed


@pytest.mark.parametrize("r", (1, 2, 3))
def test_bivariate_generators_pass(r):
    assert verify("I7", {"r": r}, 16).passed
    assert verify("I10", {"r": r}, 16).passed


def test_subtracted_partial_sum_forms_fail_where_analyzed():
    # the subtracted complement restricts small sizes it must leave free; the
    # first failures land at q^(3r+5) for the excludant totals
    for r, first_bad in ((1, 8), (2, 11), (3, 14)):
        report = verify("I2", {"r": r}, 20)
        assert not report.passed
        assert report.mismatches[0].q == first_bad
    report = verify("I4", {}, 20)
    assert not report.passed and report.mismatches[0].q == 8
    report = verify("I6", {"r": 1, "n": 2}, 12)
    assert not report.passed and report.mismatches[0].q == 6
    assert verify("I6", {"r": 2, "n": 1}, 20).passed  # degenerate case holds


def test_corrected_partial_sum_forms_pass():
    for r in (1, 2, 3):
        assert verify("I2", {"r": r, "form": "corrected"}, 24).passed
        for n in (1, 2, 3, 6):
            assert verify("I6", {"r": r, "n": n, "form": "corrected"}, 24).passed
    assert verify("I4", {"form": "corrected"}, 24).passed


def test_i1_matches_enumeration_and_corrected_i2():
    assert verify("I1", {}, 24).passed
    lhs = closed_form("I1", {}, 24)[0]
    rhs = closed_form("I2", {"r": 1, "form": "corrected"}, 24)[0]
    assert lhs == rhs


def test_maes_series_under_both_readings():
    for r in (1, 2, 3):
        assert verify("I3", {"r": r}, 24).passed
    alternate = verify("I3", {"r": 2, "w_reading": "omega_1_n"}, 24)
    assert not alternate.passed
    assert alternate.mismatches[0].q == 3


def test_moment_of_marked_generators_matches_totals():
    for r in (1, 2, 3):
        marked = brute_force("I7", {"r": r}, 20)
        assert marked.z_moment() == brute_force("I2", {"r": r}, 20)
        marked = brute_force("I10", {"r": r}, 20)
        assert marked.z_moment() == brute_force("I3", {"r": r}, 20)


@pytest.mark.parametrize("k", (1, 2, 3, 4))
def test_class_generating_functions(k):
    assert verify("I11", {"k": k}, 16).passed
    assert verify("I12", {"k": k}, 16).passed


def test_basis_polynomial_identities():
    for k in (1, 2, 3):
        for m in range(1, 6):
            for s in range(1, k + 1):
                for j in range(1, m + 2):  # j = m+1 gives the empty case
                    deg = k * (j * (j + 1)) + s * j + k * m + 5
                    assert verify("I13", {"k": k, "m": m, "s": s, "j": j},
                                  min(deg, 40)).passed, (k, m, s, j)
                    assert verify("I14", {"k": k, "m": m, "s": s, "j": j},
                                  min(deg, 40)).passed, (k, m, s, j)


def test_basis_polynomial_worked_example():
    report = verify("I13", {"k": 2, "m": 1, "s": 1, "j": 1}, 6)
    assert report.passed
    lhs, rhs = closed_form("I13", {"k": 2, "m": 1, "s": 1, "j": 1}, 6)
    assert rhs.coeff(0, 1) == 1 and rhs.coeff(1, 1) == 1


def test_series_kernel_identities():
    assert verify("I15", {}, 40).passed
    assert verify("I16", {"A": 12, "B": 5, "k": 3}, 200).passed
    for k in (1, 2, 3):
        for j in range(1, 7):
            assert verify("I17", {"k": k, "j": j}, 40).passed


def test_distinct_partition_identities():
    for k in (1, 2, 3):
        for s in range(1, k + 1):
            assert verify("I18", {"k": k, "s": s}, 24).passed, (k, s)
            assert verify("I19", {"k": k, "s": s}, 24).passed, (k, s)


def test_theorem_counts_small():
    for n in range(0, 13):
        for r in (1, 2, 3):
            assert theorem_count_check("Thm2_1", n, r).passed, (n, r)
            assert theorem_count_check("Thm2_2", n, r).passed, (n, r)


def test_theorem_worked_instances():
    # the two-on-both-sides instances at weights 4 and 6
    by_pair = {}
    for pi in iter_overpartitions(4):
        from qpl.core import count_parts_above, min_excludant_size
        kk = min_excludant_size(pi, 2)
        by_pair.setdefault((kk, count_parts_above(pi, kk)), []).append(pi.text())
    assert sorted(by_pair[(1, 1)]) == ["4", "4~"]
    assert sorted(by_pair[(4, 0)]) == ["3,1", "3,1~", "3~,1", "3~,1~"]


def test_param_validation():
    with pytest.raises(ValueError):
        verify("I2", {"r": 0}, 10)
    with pytest.raises(ValueError):
        verify("I2", {"bogus": 1}, 10)
    with pytest.raises(ValueError):
        verify("I13", {"k": 2, "m": 1, "s": 3, "j": 1}, 10)
    with pytest.raises(ValueError):
        verify("I6", {"r": 1}, 10)  # missing n
    with pytest.raises(ValueError):
        verify("I3", {"r": 1, "w_reading": "nonsense"}, 10)
    with pytest.raises(KeyError):
        verify("I99", {}, 10)


def test_truncation_guards():
    with pytest.raises(ValueError):
        verify("I2", {"r": 1}, 41)  # enumeration-backed entries stop at 40
    with pytest.raises(ValueError):
        brute_force("I2", {"r": 1}, 41)
    with pytest.raises(ValueError):
        verify("I15", {}, 401)
    assert verify("I16", {"A": 4, "B": 2, "k": 1}, 399).passed
    with pytest.raises(ValueError):
        brute_force("I15", {}, 10)  # no enumeration side at all


def test_report_shape_and_determinism():
    report = verify("I2", {"r": 1}, 14)
    payload = json.loads(report.to_json())
    assert set(payload) == {"identity", "params", "trunc", "status", "mismatches"}
    assert payload["status"] == "fail"
    assert payload["mismatches"][0] == {"q": 8, "z": None, "lhs": "246", "rhs": "238"}
    assert all(isinstance(m["lhs"], str) for m in payload["mismatches"])
    again = verify("I2", {"r": 1}, 14)
    assert report.to_json() == again.to_json()


def test_default_grids_cover_documented_ranges():
    assert default_grid("I1") == [{}]
    assert {p["r"] for p in default_grid("I2")} == {1, 2, 3}
    assert {p["form"] for p in default_grid("I2")} == {"subtracted", "corrected"}
    assert {p["n"] for p in default_grid("I6")} == set(range(1, 9))
    assert {p["k"] for p in default_grid("I11")} == {1, 2, 3, 4}
    assert max(p["A"] for p in default_grid("I16")) == 12
    assert all(p["s"] <= p["k"] for p in default_grid("I18"))


def test_verify_all_subset_runs_in_catalog_order():
    reports = verify_all(12, identities=("I15", "I16", "I17"))
    assert [r.identity for r in reports] == \
        ["I15"] + ["I16"] * len(default_grid("I16")) + ["I17"] * len(default_grid("I17"))
    assert all(r.passed for r in reports)
