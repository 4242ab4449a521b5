import math
import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tauli import thresholds as th
from tauli._numeric import FLOAT, MPBackend
from tauli.constants import k3
from tauli.errors import DomainError, InadmissibleError
from tauli.tables import TABLE1, TABLE2, TABLE3
from tauli.zero_model import ZeroCountModel, catalog_dirichlet, count_estimate_integer, promote


def test_first_row_thresholds(dirichlet100):
    rep = th.theorem1_N(dirichlet100, 1.0, "1.1")
    assert (rep.N, rep.grid_max) == (2228, 142795217)
    assert rep.binding == "12 log(20 K2)/log R"
    assert len(rep.diagnostics) == 6


def test_last_row_thresholds(dirichlet100):
    rep = th.theorem1_N(dirichlet100, 1.5, "1.0001")
    assert (rep.N, rep.grid_max) == (3384171, 462978327657268)


def test_float_and_text_R_agree(dirichlet100):
    assert th.theorem1_N(dirichlet100, 1.0, 1.001).N == th.theorem1_N(dirichlet100, 1.0, "1.001").N == 212394


def test_grid_is_lazy_multiples(dirichlet100):
    grid = th.theorem1_grid(th.theorem1_N(dirichlet100, 1.0, "1.1"))
    assert isinstance(grid, range)
    assert grid[0] == 2228
    # floor(142795217 / 2228) = 64091 multiples; the last is 64091 * 2228.
    assert len(grid) == 64091
    assert grid[-1] == 142794748
    assert all(n % 2228 == 0 for n in grid[:100])


def test_grid_of_one_element():
    rep = th.ThresholdReport("main1", 1.0, 1.1, N=7, grid_max=13)
    assert list(th.theorem1_grid(rep)) == [7]


def test_grid_needs_first_theorem(dirichlet100):
    with pytest.raises(ValueError):
        th.theorem1_grid(th.theorem3_N(dirichlet100, 1.0, "1.1"))


@pytest.mark.parametrize("R", ["1", "0.5", 1.0])
def test_R_domain(dirichlet100, R):
    with pytest.raises(DomainError):
        th.theorem1_N(dirichlet100, 1.0, R)


def test_tau_domain(dirichlet100):
    with pytest.raises(DomainError):
        th.theorem3_N(dirichlet100, 0.3, "1.1")


def test_large_R_uses_e_branch():
    m = ZeroCountModel(A_F=1.0, B_F=10.0, T0=1.0)
    rep = th.theorem1_N(m, 1.0, 1e6)
    assert ("e", math.e) in rep.diagnostics


def test_third_theorem_branch_and_grid(dirichlet100):
    small = th.theorem3_N(dirichlet100, 1.0, "1.1")
    assert small.N == 838
    assert any(k.startswith("exp(-W-1") for k, _ in small.diagnostics)
    big = th.theorem3_N(dirichlet100, 1.0, str(math.exp(3 / (2 * math.e)) * 1.01))
    assert ("e", math.e) in big.diagnostics
    assert list(small.grid) == [838, 1676, 2514, 3352, 4190]


def test_newform_third_theorem(newform):
    assert th.theorem3_N(newform, 1.0, "1.0001").N == 1498217
    assert th.theorem3_N(newform, 1.5, "1.0000000001").N == 1488036546102


def test_newform_first_theorem_is_finite(newform):
    rep = th.theorem1_N(newform, 1.0, "1.1")
    assert rep.N > 10 ** 6 and rep.grid_max > rep.N


def test_T_floor_trivial_model():
    m = ZeroCountModel(A_F=1.0, B_F=0.0, T0=1.0)
    floor_ = th.theorem2_T_floor(m)
    assert floor_.value == 1.0
    assert [v for _, v in floor_.diagnostics] == [1.0, 1.0, 1.0, 0, 0, 0, 0, 0]


def test_T_floor_dirichlet(dirichlet100):
    floor_ = th.theorem2_T_floor(dirichlet100)
    assert floor_.value == pytest.approx(32.090333665955981, rel=1e-13)
    assert floor_.value < 100


def test_T_floor_newform(newform):
    assert th.theorem2_T_floor(newform).value >= 27


def test_R_cap(dirichlet100):
    cap = th.theorem2_R_cap(dirichlet100, 100, 1.0)
    assert cap == pytest.approx(1.0037638160151783, rel=1e-14)
    assert cap > 1.0001


def test_R_cap_errors(dirichlet100):
    with pytest.raises(InadmissibleError, match="K3"):
        th.theorem2_R_cap(dirichlet100, 5.0, 1.0)


@given(st.floats(min_value=50, max_value=1e6))
def test_R_cap_above_one_and_shrinking_with_count(T):
    m = catalog_dirichlet(100)
    assert th.theorem2_R_cap(m, T, 1.0) > 1


def test_closed_form_interval_is_empty_at_published_heights(dirichlet100):
    # n0 is about sqrt(N/K3) which exceeds T/(e tau) here.
    with pytest.raises(InadmissibleError, match="empty interval"):
        th.theorem2_interval(dirichlet100, 100, 1.0, "1.0001")
    rep = th.theorem2(dirichlet100, 100, 1.0, "1.0001")
    assert not rep.admissible and "empty" in rep.reason


def test_closed_form_rejects_R_above_cap(dirichlet100):
    with pytest.raises(InadmissibleError, match="below -1/e"):
        th.theorem2_interval(dirichlet100, 100, 1.0, "2.0")


def test_closed_form_rejects_low_T(dirichlet100):
    with pytest.raises(InadmissibleError, match="floor"):
        th.theorem2_interval(dirichlet100, 20, 1.0, "1.0001")


@pytest.mark.parametrize("T,R", [(100, "1.0001"), (500, "1.00001"), (10000, "1.000001"), (1e5, "1.0000001")])
def test_unclipped_closed_form_satisfies_direct_inequality(dirichlet100, T, R):
    n0, n1 = th.theorem2_unclipped(dirichlet100, T, 1.0, R)
    K = k3(dirichlet100, T, 1.0)
    N = count_estimate_integer(dirichlet100, T)
    L = th.log_r(R)
    for n in sorted({n0, (n0 + n1) // 2, n1}):
        assert K * n * (n - 1) - N * math.expm1(n * L) >= 0


def test_direct_first_rows(dirichlet100):
    rep = th.theorem2(dirichlet100, 100, 1.0, "1.0001", direct=True)
    assert rep.admissible and rep.interval == (5, 36)
    rep = th.theorem2(dirichlet100, 10000, 1.5, "1.00001", direct=True)
    assert rep.interval == (1748, 2452)


def test_direct_inadmissible(dirichlet100):
    rep = th.theorem2(dirichlet100, 100, 1.0, "1.1", direct=True)
    assert not rep.admissible
    with pytest.raises(InadmissibleError, match="no admissible n"):
        th.interval_direct(0.001, 200, "1.1", 36)


@pytest.mark.parametrize("args", [(0.0, 1, "1.1", 5), (1.0, 0, "1.1", 5), (1.0, 1, "1.1", 1), (1.0, 1, "1", 5)])
def test_direct_domain(args):
    with pytest.raises(DomainError):
        th.interval_direct(*args)


def test_direct_n0_is_one_when_two_qualifies():
    assert th.interval_direct(1.0, 1, "1.0001", 10) == (1, 10)


def test_direct_warns_on_split_runs(monkeypatch):
    values = [(2, 1.0), (3, -1.0), (4, 1.0), (5, 1.0)]
    monkeypatch.setattr(th, "direct_scan_values", lambda *a: values)
    with pytest.warns(RuntimeWarning, match="not contiguous"):
        assert th.interval_direct(1.0, 1, "1.1", 5) == (1, 2)


@given(st.floats(1.0001, 2.0), st.integers(1, 10 ** 4), st.floats(1e-4, 10.0))
def test_direct_interval_properties(R, N, K):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            n0, n1 = th.interval_direct(K, N, R, 60)
        except InadmissibleError:
            return
    assert 1 <= n0 <= n1 <= 60
    L = math.log(R)
    for n in range(max(n0, 2), n1 + 1):
        assert K * n * (n - 1) - N * math.expm1(n * L) >= 0


def test_detector_threshold(dirichlet100):
    from tauli.constants import k1, k4

    K = k1(dirichlet100, 1.0) + k4(dirichlet100, 1.0)
    assert th.detector_threshold(math.e, dirichlet100, 1.0) == pytest.approx(K * math.e)
    assert 0 < th.detector_threshold(838, dirichlet100, 1.0) < math.inf
    with pytest.raises(DomainError):
        th.detector_threshold(2, dirichlet100, 1.0)


def _exprs_table1(model, tau, R, N):
    def t1(b):
        return max(v for _, v in th._theorem1_terms(model, tau, R, b))

    def grid(b):
        m = promote(model, b)
        n = b.num(N)
        from tauli.constants import m_f

        return 5 * n * n * (m.A_F * b.log(n) + m_f(m, b))

    def t3(b):
        return max(v for _, v in th._theorem3_terms(model, tau, R, b))

    return t1, grid, t3


def test_every_tabled_ceiling_is_tight(dirichlet100, newform):
    mp = MPBackend()
    for tau, R, N, G, N3 in TABLE1:
        t1, grid, t3 = _exprs_table1(dirichlet100, tau, R, N)
        assert N - 1 < t1(mp) <= N
        assert G <= grid(mp) < G + 1
        assert N3 - 1 < t3(mp) <= N3
    for tau, R, N3 in TABLE3:
        v = max(x for _, x in th._theorem3_terms(newform, tau, R, mp))
        assert N3 - 1 < v <= N3


def test_every_tabled_interval_from_direct_scan(dirichlet100):
    for T, tau, R, n0, n1 in TABLE2:
        n_max = math.floor(T / (math.e * tau))
        got = th.interval_direct(k3(dirichlet100, T, tau), count_estimate_integer(dirichlet100, T), R, n_max)
        assert got == (n0, n1)


def test_rounding_of_count_does_not_matter(dirichlet100):
    from tauli.zero_model import count_upper

    for T, tau, R, n0, n1 in TABLE2:
        n_max = math.floor(T / (math.e * tau))
        K = k3(dirichlet100, T, tau)
        up = count_upper(dirichlet100, T)
        for N in (math.floor(up), round(up), up):
            assert th.interval_direct(K, N, R, n_max) == (n0, n1)


def test_decimal_reading_of_R_matters(newform):
    # The binary double nearest 1 + 1e-10 is off by about 8e-17 in R - 1,
    # which moves N by more than 10^5.
    exact = th.theorem3_N(newform, 1.0, "1.0000000001").N
    naive = math.ceil(max(v for _, v in th._theorem3_terms(newform, 1.0, "1.0000000001", FLOAT)) * math.log1p(1e-10) / math.log(1 + 1e-10))
    assert exact == 1498141425042
    assert abs(naive - exact) > 10 ** 5
