import math
import random

import numpy as np
import pytest

from pchrom.eigen import spectrum, spectrum_from_values
from pchrom.errors import EmptyGraph, NegativeP
from pchrom.graphio import Graph, named_graph
from pchrom.penergy import (
    DELTA_LIMIT,
    NEAR_ONE,
    limit_coefficients,
    log_energies,
    logsumexp,
    p_energy,
    ratio_H,
    ratio_curve,
)

from _oracles import connected_graphs, direct_f, finite_difference_alpha, random_connected_graph

TURAN = [(r, k) for r in (2, 3, 4) for k in (1, 2, 3)]


def test_logsumexp_matches_naive_and_survives_overflow():
    x = np.array([0.1, -2.0, 3.5])
    assert logsumexp(x) == pytest.approx(math.log(np.exp(x).sum()), rel=1e-14)
    big = np.array([1000.0, 1000.0])
    assert logsumexp(big) == pytest.approx(1000 + math.log(2), rel=1e-14)


@pytest.mark.parametrize("r, k", TURAN)
@pytest.mark.parametrize("p", [0.0, 0.3, 1.0, 2.0, 7.5, 40.0])
def test_turan_energies(r, k, p):
    s = spectrum(named_graph("turan", [k, r]))
    e = p_energy(s, p)
    assert e.log_pos == pytest.approx(p * math.log((r - 1) * k), abs=1e-10)
    assert e.log_neg == pytest.approx(math.log(r - 1) + p * math.log(k), abs=1e-10)


@pytest.mark.parametrize("r, k", TURAN)
@pytest.mark.parametrize("p", [0.0, 0.5, 0.9999, 1.0, 1.3, 2.0, 7.0, 100.0, math.inf])
def test_turan_ratio(r, k, p):
    s = spectrum(named_graph("turan", [k, r]))
    assert ratio_H(s, p) == pytest.approx(r - 1, abs=1e-9)


def test_p_one_energies_equal():
    for g in connected_graphs(6):
        e = p_energy(spectrum(g), 1.0)
        assert abs(e.log_pos - e.log_neg) <= 1e-9


def test_p_two_sums_to_twice_edges():
    for g in connected_graphs(6):
        e = p_energy(spectrum(g), 2.0)
        assert e.pos + e.neg == pytest.approx(2 * g.m, rel=1e-6)


def test_p_zero_counts(h2):
    e = p_energy(spectrum(h2), 0.0)
    assert (e.pos, e.neg) == (2.0, 4.0)
    # counts come from inertia: the zero eigenvalue contributes to neither side
    assert math.exp(e.log_pos) + math.exp(e.log_neg) == 6.0


def test_vectorised_matches_scalar(tilley):
    s = spectrum(tilley)
    ps = [0.0, 0.2, 1.0, 3.0, 60.0]
    lp, ln = log_energies(s, ps)
    for i, p in enumerate(ps):
        e = p_energy(s, p)
        assert (lp[i], ln[i]) == (e.log_pos, e.log_neg)


def test_published_ratios(tilley, h2):
    assert ratio_H(spectrum(tilley), 13.3466) == pytest.approx(2.05114, abs=1e-4)
    assert ratio_H(spectrum(h2), 0.562125) == pytest.approx(2.0064, abs=1e-3)


@pytest.mark.parametrize("p", [0.0, 0.5, 1.0, 2.0, 300.0, math.inf])
def test_single_edge(p):
    assert ratio_H(spectrum(named_graph("complete", [2])), p) == pytest.approx(1.0, abs=1e-12)


def test_limit_examples():
    c4 = limit_coefficients(spectrum(named_graph("cycle", [4])))
    assert c4.alpha_pos == pytest.approx(math.log(2), abs=1e-12)
    assert c4.alpha_neg == pytest.approx(math.log(2), abs=1e-12)
    assert c4.limit_ratio == pytest.approx(1.0, abs=1e-12)
    k2 = limit_coefficients(spectrum(named_graph("complete", [2])))
    assert abs(k2.alpha_pos) <= 1e-15 and abs(k2.alpha_neg) <= 1e-15
    for r, k in TURAN:
        lc = limit_coefficients(spectrum(named_graph("turan", [k, r])))
        assert lc.alpha_pos == pytest.approx(math.log((r - 1) * k), abs=1e-10)
        assert lc.alpha_neg == pytest.approx(math.log(k), abs=1e-10)
        assert lc.limit_ratio == pytest.approx(r - 1, abs=1e-9)


def test_alpha_matches_finite_differences():
    rng = random.Random(5)
    for _ in range(20):
        s = spectrum(random_connected_graph(rng, rng.randint(3, 10), 0.4))
        lc = limit_coefficients(s)
        fd_pos, fd_neg = finite_difference_alpha(s.values)
        assert lc.alpha_pos == pytest.approx(fd_pos, abs=1e-6)
        assert lc.alpha_neg == pytest.approx(fd_neg, abs=1e-6)


def test_continuity_at_one():
    rng = random.Random(17)
    for _ in range(40):
        s = spectrum(random_connected_graph(rng, rng.randint(3, 10), 0.5))
        lim = limit_coefficients(s).limit_ratio
        for p in (1 - 1e-4, 1 + 1e-4):
            assert abs(ratio_H(s, p) - lim) <= 1e-2 * lim


def test_near_one_band_agrees_with_direct_formula(tilley, h2):
    # outside the rounding-sensitive zone both formulations must agree
    for g in (tilley, h2, named_graph("petersen")):
        s = spectrum(g)
        for p in (1 - NEAR_ONE + 1e-3, 0.7, 0.95, 1.05, 1.3, 1 + NEAR_ONE - 1e-3):
            assert 1 + ratio_H(s, p) == pytest.approx(direct_f(s.values, p), rel=1e-9)


def test_curve_continuous_across_band_edges(tilley):
    s = spectrum(tilley)
    for edge in (1 - NEAR_ONE, 1 + NEAR_ONE, 1 - DELTA_LIMIT, 1 + DELTA_LIMIT):
        a, b = ratio_curve(s, [edge - 1e-9, edge + 1e-9])
        assert abs(a - b) <= 1e-6


def test_hoffman_limit_at_500():
    graphs = [named_graph("complete", [n]) for n in range(2, 11)]
    graphs += [named_graph("cycle", [n]) for n in (5, 7, 9, 11)]
    graphs.append(named_graph("petersen"))
    for g in graphs:
        s = spectrum(g)
        target = s.lambda_max / -s.lambda_min
        assert abs(ratio_H(s, 500.0) - target) <= 1e-2 * target


def test_overflow_safety():
    k101 = spectrum(named_graph("complete", [101]))
    assert k101.lambda_max == pytest.approx(100.0)
    h = ratio_H(k101, 1000.0)
    assert math.isfinite(h)
    # (100^p / (100 * 1))^(1/(p-1)) = 100^((p-1)/(p-1)) = 100 with E- = 100 * 1^p
    assert h == pytest.approx(100.0, rel=1e-9)
    s = spectrum_from_values([100.0, 3.0, -1.0, -50.0, -52.0])
    h = ratio_H(s, 1000.0)
    assert math.isfinite(h)
    assert abs(h - 100.0 / 52.0) <= 1e-2 * (100.0 / 52.0)


def test_negative_p_rejected(tilley):
    s = spectrum(tilley)
    for fn in (lambda: p_energy(s, -0.5), lambda: ratio_H(s, -4.0), lambda: ratio_curve(s, [1.0, -1e-9])):
        with pytest.raises(NegativeP):
            fn()
    with pytest.raises(NegativeP):
        ratio_H(s, float("nan"))


def test_empty_graph_rejected():
    s = spectrum(Graph.from_edges(5, []))
    for fn in (lambda: p_energy(s, 1.0), lambda: ratio_H(s, 2.0), lambda: limit_coefficients(s)):
        with pytest.raises(EmptyGraph):
            fn()


PS = [k / 10 for k in range(1, 10)]


def test_edge_energy_inequality():
    ps = np.array(PS)
    for g in connected_graphs(7):
        lp, ln = log_energies(spectrum(g), ps)
        lhs = np.exp(lp) + np.exp(ln)
        assert np.all(lhs >= 2 * g.m ** (ps / 2) * (1 - 1e-9))


def test_min_energy_inequality_and_star_equality():
    ps = np.array(PS)
    for g in connected_graphs(7):
        lp, ln = log_energies(spectrum(g), ps)
        assert np.all(np.exp(np.minimum(lp, ln)) >= (g.n - 1) ** (ps / 2) * (1 - 1e-9))
    for n in range(2, 10):
        lp, ln = log_energies(spectrum(named_graph("star", [n])), ps)
        rhs = (n - 1) ** (ps / 2)
        assert np.allclose(np.exp(np.minimum(lp, ln)), rhs, rtol=0, atol=1e-9)
