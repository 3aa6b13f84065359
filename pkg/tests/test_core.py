import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hypersine.core import (EvaluationError, FiniteMeasure,
                            NotHypergroupError, TabulatedFunction,
                            compact_vanishing_check, convolve_power,
                            dump_finite_hypergroup, exp_residual,
                            exponentials, integrate, load_finite_hypergroup,
                            mix, power_identity_check,
                            s3_conjugacy_hypergroup, sine_residual,
                            sine_space, two_point_hypergroup)


def test_point_mass_and_merge():
    mu = FiniteMeasure([(0, 0.25), (1, 0.5), (0, 0.25)])
    assert len(mu) == 2
    assert mu.weight(0) == 0.5
    assert FiniteMeasure.point(3).weight(3) == 1.0


def test_measure_rejects_bad_weights():
    with pytest.raises(NotHypergroupError):
        FiniteMeasure([(0, 0.7), (1, 0.7)])
    with pytest.raises(NotHypergroupError):
        FiniteMeasure([(0, 1.2), (1, -0.2)])
    # tiny negative noise below tolerance is allowed through
    mu = FiniteMeasure([(0, 1.0 + 1e-15), (1, -1e-15)])
    assert abs(mu.weight(1)) <= 1e-14


def test_integrate_reports_offending_element():
    mu = FiniteMeasure([(0, 0.5), (5, 0.5)])
    f = TabulatedFunction([1.0, 2.0])
    with pytest.raises(EvaluationError) as err:
        integrate(f, mu)
    assert "5" in str(err.value)


def test_mix():
    a = FiniteMeasure.point(0)
    b = FiniteMeasure.point(1)
    mu = mix([(0.25, a), (0.75, b)])
    assert mu.weight(0) == 0.25 and mu.weight(1) == 0.75


@given(theta=st.floats(min_value=0.01, max_value=1.0))
def test_two_point_weights_always_normalized(theta):
    hg = two_point_hypergroup(theta)
    for x in hg.elements():
        for y in hg.elements():
            mu = hg.convolve(x, y)
            assert abs(sum(mu.weights) - 1.0) <= 1e-12
            assert all(w >= 0 for w in mu.weights)


def test_two_point_rejects_out_of_range_theta():
    for bad in (0.0, -0.1, 1.5):
        with pytest.raises(ValueError):
            two_point_hypergroup(bad)


def test_two_point_exponentials_are_known_pair():
    hg = two_point_hypergroup(0.3)
    ms = exponentials(hg)
    assert len(ms) == 2
    got = sorted(tuple(round(v.real, 12) for v in m) for m in ms)
    assert got == [(1.0, -0.3), (1.0, 1.0)]


def test_exp_residual_exact_on_two_point():
    theta = 0.25
    hg = two_point_hypergroup(theta)
    rep = exp_residual(hg, TabulatedFunction([1.0, -theta]), hg.all_pairs())
    assert rep.max_abs <= 4 * np.finfo(float).eps


def test_sine_residual_detects_non_sine():
    hg = two_point_hypergroup(0.3)
    f = TabulatedFunction([0.0, 1.0])
    m = TabulatedFunction([1.0, -0.3])
    rep = sine_residual(hg, f, m, hg.all_pairs())
    # the worst pair is (1, 1): f(1*1) - 2 f(1) m(1) = 0.7 + 0.6 = 1.3
    assert rep.max_abs == pytest.approx(1.3)
    assert rep.witness == (1, 1)


def _nullspace_by_elimination(rows, tol=1e-9):
    """Gauss-Jordan nullspace, kept independent of the SVD route."""
    a = [list(map(complex, r)) for r in rows]
    n_rows, n_cols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        piv, best = None, tol
        for i in range(r, n_rows):
            if abs(a[i][c]) > best:
                piv, best = i, abs(a[i][c])
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        scale = a[r][c]
        a[r] = [v / scale for v in a[r]]
        for i in range(n_rows):
            if i != r and abs(a[i][c]) > 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0.0] * n_cols
        vec[fc] = 1.0
        for i, pc in enumerate(pivots):
            vec[pc] = -a[i][fc]
        basis.append(vec)
    return basis


def _sine_system_rows(hg, m_vals):
    rows = []
    n = hg.size
    for x in range(n):
        for y in range(n):
            mu = hg.convolve(x, y)
            row = [0j] * n
            for el, w in mu.items():
                row[el] += w
            row[x] -= m_vals[y]
            row[y] -= m_vals[x]
            rows.append(row)
    return rows


@pytest.mark.parametrize("theta", [0.1, 0.25, 0.5, 0.9])
def test_sine_space_dimension_matches_elimination(theta):
    hg = two_point_hypergroup(theta)
    for m in ([1.0, 1.0], [1.0, -theta]):
        basis = sine_space(hg, m)
        oracle = _nullspace_by_elimination(_sine_system_rows(hg, m))
        assert len(basis) == len(oracle) == 0


def test_s3_exponentials_and_sine_spaces():
    hg = s3_conjugacy_hypergroup()
    ms = exponentials(hg)
    vals = sorted(tuple(round(v.real, 10) for v in m) for m in ms)
    assert vals == [(1.0, -1.0, 1.0), (1.0, 0.0, -0.5), (1.0, 1.0, 1.0)]
    for m in ms:
        basis = sine_space(hg, m)
        oracle = _nullspace_by_elimination(_sine_system_rows(hg, list(m)))
        assert len(basis) == len(oracle) == 0
        assert compact_vanishing_check(hg, TabulatedFunction(list(m)), basis)


def test_sine_space_rejects_non_exponential():
    hg = two_point_hypergroup(0.3)
    with pytest.raises(ValueError):
        sine_space(hg, [1.0, 0.5])


def test_sine_space_on_group_algebra_has_additive_solutions():
    # Z/3 as a hypergroup: convolution is group addition, so sine functions
    # for m == 1 are the additive characters, a 0-dimensional real... no:
    # additive functions on Z/3 must vanish (torsion), dimension 0.
    tensor = np.zeros((3, 3, 3))
    for i in range(3):
        for j in range(3):
            tensor[i, j, (i + j) % 3] = 1.0
    from hypersine.core import FiniteHypergroup
    hg = FiniteHypergroup(tensor, name="z3")
    basis = sine_space(hg, [1.0, 1.0, 1.0])
    oracle = _nullspace_by_elimination(
        _sine_system_rows(hg, [1.0, 1.0, 1.0]))
    assert len(basis) == len(oracle) == 0


def test_finite_hypergroup_validation():
    from hypersine.core import FiniteHypergroup
    bad = np.zeros((2, 2, 2))
    bad[0, 0, 0] = 1.0
    bad[0, 1, 1] = 1.0
    bad[1, 0, 1] = 1.0
    bad[1, 1, 0] = 0.6  # row sums to 0.6 only
    with pytest.raises(NotHypergroupError):
        FiniteHypergroup(bad)


def test_convolve_power_and_identity():
    hg = two_point_hypergroup(0.5)
    mu = convolve_power(hg, 1, 3)
    assert abs(sum(mu.weights) - 1.0) <= 1e-12
    with pytest.raises(ValueError):
        convolve_power(hg, 1, 0)


def test_power_identity_for_zero_sine_function():
    theta = 0.25
    hg = two_point_hypergroup(theta)
    f = TabulatedFunction([0.0, 0.0])
    m = TabulatedFunction([1.0, -theta])
    rep = power_identity_check(hg, f, m, 0, 1, 8)
    assert rep.max_abs <= 1e-12


def test_spec_file_round_trip(tmp_path):
    hg = s3_conjugacy_hypergroup()
    path = tmp_path / "s3.json"
    dump_finite_hypergroup(hg, path)
    back = load_finite_hypergroup(path)
    assert back.size == 3
    assert np.allclose(back.tensor, hg.tensor)


def test_spec_file_rejects_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"size": 2, "tensor": [[[1.0, 0.0]]]}))
    with pytest.raises(ValueError):
        load_finite_hypergroup(path)
