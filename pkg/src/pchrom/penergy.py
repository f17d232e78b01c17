"""Signed p-energies and the ratio H(p), kept in the log domain.

E_p^+ = sum of lambda^p over positive eigenvalues, E_p^- the same over
|lambda| for negative ones.  H(p) = max(E+/E-, E-/E+) ** (1/|p-1|), with the
closed-form limit exp|alpha_+ - alpha_-| used in a small band around p = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigen import Spectrum
from .errors import EmptyGraph, NegativeP

DELTA_LIMIT = 1e-6
# inside this distance from p = 1 the ratio is evaluated relative to p = 1
NEAR_ONE = 0.5


@dataclass(frozen=True)
class PEnergyPair:
    p: float
    log_pos: float
    log_neg: float

    @property
    def pos(self) -> float:
        return math.exp(self.log_pos)

    @property
    def neg(self) -> float:
        return math.exp(self.log_neg)


@dataclass(frozen=True)
class LimitCoefficients:
    alpha_pos: float
    alpha_neg: float

    @property
    def limit_ratio(self) -> float:
        return math.exp(abs(self.alpha_pos - self.alpha_neg))


def logsumexp(x: np.ndarray, axis: int = -1) -> np.ndarray:
    """log(sum(exp(x))) along ``axis`` without overflow."""
    x = np.asarray(x, dtype=float)
    top = np.max(x, axis=axis, keepdims=True)
    out = np.log(np.sum(np.exp(x - top), axis=axis)) + np.squeeze(top, axis=axis)
    return out


def _signed_logs(s: Spectrum) -> tuple[np.ndarray, np.ndarray]:
    pos = s.positive()
    neg = s.negative_abs()
    if pos.size == 0 or neg.size == 0:
        raise EmptyGraph("graph has no edges: signed energies are undefined")
    return np.log(pos), np.log(neg)


def _check_p(ps: np.ndarray) -> None:
    if np.any(np.isnan(ps)) or np.any(ps < 0):
        raise NegativeP("p must be >= 0")


def log_energies(s: Spectrum, ps) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``(log E_p^+, log E_p^-)`` for each finite p in ``ps``."""
    ps = np.atleast_1d(np.asarray(ps, dtype=float))
    _check_p(ps)
    lpos, lneg = _signed_logs(s)
    log_pos = logsumexp(ps[:, None] * lpos[None, :], axis=1)
    log_neg = logsumexp(ps[:, None] * lneg[None, :], axis=1)
    # p = 0 energies are the inertia counts by definition
    zero = ps == 0
    log_pos[zero] = math.log(s.n_pos)
    log_neg[zero] = math.log(s.n_neg)
    return log_pos, log_neg


def p_energy(s: Spectrum, p: float) -> PEnergyPair:
    lp, ln = log_energies(s, [p])
    return PEnergyPair(float(p), float(lp[0]), float(ln[0]))


def limit_coefficients(s: Spectrum) -> LimitCoefficients:
    """Normalised lambda*log(lambda) averages; exp|a+ - a-| is H(1)."""
    lpos, lneg = _signed_logs(s)
    pos, neg = np.exp(lpos), np.exp(lneg)
    return LimitCoefficients(
        float(np.dot(pos, lpos) / pos.sum()),
        float(np.dot(neg, lneg) / neg.sum()),
    )


def _log_ratio_near_one(s: Spectrum, q: np.ndarray) -> np.ndarray:
    """log(E_p^+ / E_p^-) at p = 1 + q for small |q|.

    Uses E_1^+ = E_1^- (trace zero) to cancel the p = 1 terms exactly:
    log E_p = log E_1 + log1p(sum_i w_i expm1(q log|lambda_i|)) with
    w_i = |lambda_i| / E_1.  Otherwise the float residue of the trace is
    amplified by 1/|q|.
    """
    lpos, lneg = _signed_logs(s)
    wpos = np.exp(lpos) / np.exp(lpos).sum()
    wneg = np.exp(lneg) / np.exp(lneg).sum()
    spos = np.expm1(q[:, None] * lpos[None, :]) @ wpos
    sneg = np.expm1(q[:, None] * lneg[None, :]) @ wneg
    return np.log1p(spos) - np.log1p(sneg)


def ratio_curve(s: Spectrum, ps) -> np.ndarray:
    """H(p) for an array of p values; ``inf`` entries give lambda_1 / |lambda_n|."""
    ps = np.atleast_1d(np.asarray(ps, dtype=float))
    _check_p(ps)
    out = np.empty_like(ps)
    inf = np.isinf(ps)
    near = np.abs(ps - 1.0) < DELTA_LIMIT
    close = ~near & (np.abs(ps - 1.0) < NEAR_ONE)
    regular = ~inf & ~near & ~close
    if regular.any():
        lp, ln = log_energies(s, ps[regular])
        out[regular] = np.exp(np.abs(lp - ln) / np.abs(ps[regular] - 1.0))
    if close.any():
        q = ps[close] - 1.0
        out[close] = np.exp(np.abs(_log_ratio_near_one(s, q)) / np.abs(q))
    if near.any():
        out[near] = limit_coefficients(s).limit_ratio
    if inf.any():
        _signed_logs(s)
        out[inf] = s.lambda_max / -s.lambda_min
    return out


def ratio_H(s: Spectrum, p: float) -> float:
    return float(ratio_curve(s, [p])[0])
