"""Admissibility thresholds lambda_k^(i) and the interleaving table.

Thresholds with an explicit formula are evaluated from it.  The others are
defined as the least lambda^- value over the strings declared prohibited by
the checks that rule out the corresponding cases; each is then a concrete
number strictly above m(gamma_k^1) whenever those checks pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..spectra import LIMIT, lambda0_gamma1, lambda0_theta_omega, lambda_minus
from ..surd import SurdSum, to_decimal
from .core import REGISTRY, run_check

ALPHA4 = ("2_{2k+1} 1 2_{2k-1} 1 2_{2k} 1 2_{2k+1} 1 2* 2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 "
          "2_{2k-1}")

# Explicit minima: lists of strings whose lambda^-_0 is taken.
EXPLICIT: dict[int, tuple[str, ...]] = {
    2: ("2_{2k-2} 1 2* 2 2 1",),
    4: ("2_{2k} 1 2_{2k+1} 1 2* 2_{2k-2} 1 2_{2k} 1 2 2 1",
        "1 1 2_{2k} 1 2_{2k+1} 1 2* 2_{2k-2} 1 2_{2k} 1 2_4",
        "2_{2k-2} 1 2* 2 2 1"),
    6: ("1 2* 1",
        "2_{2k-1} 1 2_{2k} 1 2_{2k+1} 1 2* 2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 1",
        "1 1 2_{2k-1} 1 2_{2k} 1 2_{2k+1} 1 2* 2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 2 2"),
    8: ("1 2* 1", "2_{2k-2} 1 2* 2 2 1", f"{ALPHA4} 1 2 2 1", f"1 1 {ALPHA4} 1 2_4"),
    11: (f"1 1 {ALPHA4} 1 2_4",
         "1 2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 2* 2_{2k-2} 1 2_{2k} 1 2_{2k+1}",
         "2_{2k-2} 1 2* 2_{2k-4} 1",
         "1 1 2_{2k-1} 1 2* 2_{2k-2} 1 2 2"),
}

# Implicit thresholds: registry entries whose prohibited strings rule out the cases.
SOURCES: dict[int, tuple[str, ...]] = {
    1: ("p1", "L.U2", "L.U4", "L.U5", "bpodd", "l.Aoddeveniii", "ooe-i", "ooe-ii", "L.U6",
        "L.U7-i", "L.U7-ii", "L.U7-iii", "L.U7-iv", "L.U7-v", "l.Aoddodd"),
    3: ("p1", "bpodd", "ext1-split", "ext1B1", "ext1B2-i", "e2.c.o", "g2k-2-i", "e2.d.o"),
    5: ("bpodd", "ext2-split", "Delta-ii", "Delta-even", "e3.c.e", "L.U3.17"),
    7: ("p1", "bpodd", "ooe-i", "ext3-split", "Omega-even", "e4.c.e", "L.U3.21"),
    9: ("p1", "bpodd", "te2-3.1", "te2-3.2", "e2.c.o", "e2.d.o", "rep2", "rep3", "rep4"),
    10: ("bpodd", "t2-3-ii", "e3.c.e"),
}

_MIN_K = {1: 3}


class ThresholdCollapse(ArithmeticError):
    """A computed threshold is not above m(gamma_k^1): the registry is inconsistent."""


def _least(values) -> SurdSum:
    it = iter(values)
    best = next(it)
    for v in it:
        if v < best:
            best = v
    return best


@lru_cache(maxsize=None)
def prohibited_values(lemma_id: str, k: int) -> tuple[tuple[str, SurdSum], ...]:
    if k < REGISTRY[lemma_id].k_min:
        return ()
    _, chk = run_check(lemma_id, k)
    return tuple(chk.prohibited)


@lru_cache(maxsize=None)
def threshold(i: int, k: int) -> SurdSum:
    """lambda_k^(i) for 1 <= i <= 11."""
    if i not in EXPLICIT and i not in SOURCES:
        raise ValueError(f"no threshold lambda^({i})")
    if k < _MIN_K.get(i, 4):
        raise ValueError(f"lambda^({i}) needs k >= {_MIN_K.get(i, 4)}")
    if i in EXPLICIT:
        return _least(lambda_minus(w, 0, k) for w in EXPLICIT[i])
    vals = [v for lid in SOURCES[i] for _, v in prohibited_values(lid, k)]
    if not vals:
        raise ThresholdCollapse(f"lambda^({i}) at k={k} has no sources")
    return _least(vals)


def lambda_1(k: int) -> SurdSum:
    return threshold(1, k)


def threshold_witness(i: int, k: int) -> str:
    """The string realising an implicit threshold (for reports)."""
    if i in EXPLICIT:
        return min(EXPLICIT[i], key=lambda w: lambda_minus(w, 0, k))
    pairs = [(v, w) for lid in SOURCES[i] for w, v in prohibited_values(lid, k)]
    return _least_pair(pairs)[1]


def _least_pair(pairs):
    best = pairs[0]
    for p in pairs[1:]:
        if p[0] < best[0]:
            best = p
    return best


@dataclass(frozen=True)
class Thresholds:
    k: int
    lambda_1: SurdSum
    lambda_2: SurdSum
    lambda_3: SurdSum
    lambda_4: SurdSum
    lambda_5: SurdSum
    lambda_6: SurdSum
    lambda_7: SurdSum
    lambda_8: SurdSum
    lambda_9: SurdSum
    lambda_10: SurdSum
    lambda_11: SurdSum
    mu_1: SurdSum
    nu_1: SurdSum
    lambda_final: SurdSum

    def values(self) -> dict[str, SurdSum]:
        return {name: getattr(self, name) for name in self.__dataclass_fields__ if name != "k"}

    def margins(self, digits: int = 12) -> dict[str, str]:
        g = lambda0_gamma1(self.k)
        return {name: to_decimal(v - g, digits) for name, v in self.values().items()}


@lru_cache(maxsize=None)
def thresholds(k: int) -> Thresholds:
    if not isinstance(k, int) or k < 4:
        raise ValueError(f"thresholds need k >= 4, got {k}")
    lam = {i: threshold(i, k) for i in range(1, 12)}
    mu = _least(lam[i] for i in range(2, 8))
    nu = _least(lam[i] for i in range(8, 12))
    final = _least((lam[1], mu, nu))
    t = Thresholds(k, *(lam[i] for i in range(1, 12)), mu, nu, final)
    g = lambda0_gamma1(k)
    for name, v in t.values().items():
        if not v > g:
            raise ThresholdCollapse(f"{name} at k={k} does not exceed m(gamma_k^1)")
    if not final < lambda0_theta_omega(k - 1):
        raise ThresholdCollapse(f"lambda_final at k={k} is not below m(theta(omega_{k - 1}))")
    return t


@dataclass(frozen=True)
class InterleavingRow:
    k: int
    m_theta_omega: SurdSum
    m_gamma: SurdSum
    m_theta_omega_prev: SurdSum
    gap: SurdSum  # m(theta(omega_k)) - (1 + 3/sqrt 2)
    chain_holds: bool
    decreasing: bool


def interleaving_report(k_lo: int, k_hi: int) -> list[InterleavingRow]:
    """m(theta(omega_k)) < m(gamma_k^1) < m(theta(omega_{k-1})) and the approach to the limit."""
    if k_lo < 3 or k_hi < k_lo:
        raise ValueError(f"need 3 <= k_lo <= k_hi, got {k_lo}, {k_hi}")
    rows = []
    for k in range(k_lo, k_hi + 1):
        w, g, prev = lambda0_theta_omega(k), lambda0_gamma1(k), lambda0_theta_omega(k - 1)
        dec = g < lambda0_gamma1(k - 1) and w < prev
        rows.append(InterleavingRow(k, w, g, prev, w - LIMIT,
                                    LIMIT < w < g < prev, dec))
    return rows
