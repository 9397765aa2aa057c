"""Checks for the interleaving facts and the local uniqueness chain."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from ..cfcore import continuant
from ..spectra import (lambda0_gamma1, lambda0_theta_omega, lambda_at, make_gamma1,
                       markov_value, theta_omega)
from ..surd import eval_cf
from .core import Check, register


def _beta(letters) -> Fraction:
    letters = tuple(letters)
    return Fraction(continuant(letters[:-1]), continuant(letters))


@register("l.2-1")
def interleaving(c: Check) -> None:
    k = c.k
    c.compare("m(theta_omega_k)", c.lw, "<", "m(gamma_k)", c.lg, main=True)
    c.compare("m(gamma_k)", c.lg, "<", "m(theta_omega_{k-1})", lambda0_theta_omega(k - 1))
    c.compare("m(theta_omega_k)", c.lw, "<", "m(theta_omega_{k-1})", lambda0_theta_omega(k - 1))
    c.compare("m(gamma_k)", c.lg, "<", "m(gamma_{k-1})", lambda0_gamma1(k - 1))
    c.compare("m(theta_omega_k)", c.lw, ">", "1 + 3/sqrt2", c.limit)


@register("p1")
def gates(c: Check) -> None:
    v = c.lm("1 2* 1")
    c.compare("lm(1 2* 1)", v, ">", "3.154", Fraction("3.154"), main=True)
    c.prohibited.append(("1 2* 1", v))
    hi = c.lp("1 1 2* 2")
    c.compare("lp(2 2* 2)", c.lp("2 2* 2"), "<", "lp(1 1 2* 2)", hi)
    c.compare("lp(1 1 2* 2)", hi, "<", "3.057", Fraction("3.057"))


@register("t.local-uniqueness")
def local_uniqueness_reduction(c: Check) -> None:
    """Reduction to the categories A, B, C plus existence of the threshold."""
    from .thresholds import lambda_1

    c.compare("lp(1*)", c.lp("1*"), "<", "m(theta_omega)", c.lw)
    c.compare("lp(2 2* 2)", c.lp("2 2* 2"), "<", "m(theta_omega)", c.lw)
    c.compare("lp(1 1 2* 2)", c.lp("1 1 2* 2"), "<", "m(theta_omega)", c.lw)
    c.compare("lm_{-2}(1 2 1 2* 2)", c.lm("1 2 1 2* 2", at=-2), ">", "3.154", Fraction("3.154"))
    c.avoids("2_{2k+2} 1 2* 2_{2k-1}")
    c.compare("lambda^(1)", lambda_1(c.k), ">", "m(gamma)", c.lg, main=True)


@register("L.U1")
def lu1(c: Check) -> None:
    for j in range(c.k + 1):
        c.avoids(f"1 2_{2 * j} 1 2* 2_{{2k-1}}")


@register("L.U2")
def lu2(c: Check) -> None:
    k = c.k
    u = lambda j: f"1 2_{2 * j + 1} 1 2* 2_{{2k-1}}"
    top = c.lp(u(k - 1))
    c.compare(f"lp({u(k)})", c.lp(u(k)), "<", f"lp({u(k - 1)})", top)
    c.compare(f"lp({u(k - 1)})", top, "<", "m(theta_omega)", c.lw)
    low = c.prohibits(u(k - 2), main=True)
    for j in range(k - 2):
        c.compare(f"lm({u(j)})", c.prohibits(u(j)), ">", f"lm({u(k - 2)})", low)

    A, B = "[2; 2_{2k-1} | 21]", "[0; 1 2_{2k-1} 1 | 21]"
    C, D = "[2; 2_{2k-2} 1 | 12]", "[0; 1 2_{2k+1} 1 | 12]"
    c.step("A + B", c.v(A) + c.v(B), "=", f"lp({u(k - 1)})", top)
    c.step("C + D", c.v(C) + c.v(D), "<", "m(theta_omega)", c.lw)
    dec = c.decomposition((C, A), (B, D), ratio=1, X="0.62", Y="0.62")
    c.step("q(12_{2k-1})/q(2_{2k-2})", dec.q, "=", "3 + beta(2_{2k-2})",
           3 + _beta([2] * (2 * k - 2)))

    A, B = "[2; 2_{2k-1} | 12]", "[0; 1 2_{2k-3} 1 | 12]"
    C, D = "[2; 2_{2k-2} 1 | 21]", "[0; 1 2_{2k+1} 1 | 21]"
    c.step("A' + B'", c.v(A) + c.v(B), "=", f"lm({u(k - 2)})", low)
    c.step("C' + D'", c.v(C) + c.v(D), ">", "m(gamma)", c.lg)
    dec = c.decomposition((B, D), (C, A), ratio=1, X="0.4983", Y="0.91", label="'")
    c.const("' q^2", dec.q * dec.q, ">", "2.9")


@register("L.U3")
def lu3(c: Check) -> None:
    for m in range(1, c.k):
        c.avoids(f"2_{{2k+2}} 1 2* 2_{2 * m - 1} 1")


# -- the comparison lemma ----------------------------------------------------

def comparison_lemma_bounds():
    """The worst-case X and Y bounds and their product."""
    t12 = eval_cf((0,), (1, 2))
    t21 = eval_cf((0,), (2, 1))
    xb = (1 + t21 - t12) / (1 + t12 - t21)
    yb_num = 1 + t21 + Fraction(continuant((1, 2, 1)), continuant((2, 1, 2, 1)))
    yb_den = 2 + t12 + Fraction(continuant((2, 1)), continuant((1, 2, 1)))
    yb = (yb_num * yb_num) / (yb_den * yb_den)
    return xb, yb, xb * yb


def _random_tail(rng: random.Random):
    prefix = tuple(rng.choice((1, 2)) for _ in range(rng.randint(0, 6)))
    period = rng.choice(((1, 2), (2, 1), (2,), (1,), (1, 1, 2), (2, 2, 1)))
    return prefix, period


def comparison_lemma_instance(rng: random.Random, max_len: int = 8):
    """A random configuration satisfying the comparison lemma's hypotheses.

    Returns ``(A, B, C, D)`` as exact values with A > C and D > B, built from
    strings a, b with q(b) >= 3 q(a) and tails whose first letters differ.
    """
    while True:
        a = tuple(rng.choice((1, 2)) for _ in range(rng.randint(2, max_len)))
        b = tuple(rng.choice((1, 2)) for _ in range(rng.randint(3, max_len + 3)))
        if continuant(b) >= 3 * continuant(a):
            break
    a0, b0 = rng.choice((1, 2)), rng.choice((0, 1, 2))

    def pair(head, prefix):
        first = rng.choice((1, 2))
        (p1, t1), (p2, t2) = _random_tail(rng), _random_tail(rng)
        x = eval_cf(head + prefix + (first,) + p1, t1)
        y = eval_cf(head + prefix + (3 - first,) + p2, t2)
        return x, y

    A, C = pair((a0,), a)
    if A < C:
        A, C = C, A
    D, B = pair((b0,), b)
    if D < B:
        D, B = B, D
    return A, B, C, D


@register("cL.U1-hypothesis")
def comparison_hypothesis(c: Check) -> None:
    """Worst-case bounds of the comparison lemma plus seeded random instances."""
    xb, yb, prod = comparison_lemma_bounds()
    c.compare("X bound * Y bound", prod, ">", "1/9", Fraction(1, 9), main=True)
    c.const("X bound", xb, ">", 0)
    c.const("Y bound", yb, ">", 0)
    rng = random.Random(1000 + c.k)
    worst = None
    for _ in range(40):
        A, B, C, D = comparison_lemma_instance(rng)
        cmp = c.step("A + B", A + B, ">", "C + D", C + D)
        if worst is None or cmp.margin < worst:
            worst = cmp.margin
    c.note(f"40 random instances, least margin {float(worst):.3e}")


@register("cL.U1-instance")
def comparison_instances(c: Check) -> None:
    """The comparison lemma at the concrete quadruples where it is invoked."""
    c.cl_u1("[2; 2_{2k-4} 1 | 12]", "[0; 1 2_{2k+2} | 12]",
            "[2; 2_{2k-2} 1 | 21]", "[0; 1 2_{2k+1} | 12]", label="(L.U4)", stated=4)
    c.cl_u1("[2; 2_{2k-4} 1 | 12]", "[0; 1 2_{2k-2} | 12]",
            "[2; 2_{2k-2} 1 | 21]", "[0; 1 2_{2k+1} 1 | 21]", label="(bpodd)", stated=4)
    main = [x for x in c.comparisons if "A + B" in x.lhs_label or "C + D" in x.lhs_label]
    c.main = min(main, key=lambda x: float(x.margin))


@register("L.U4")
def lu4(c: Check) -> None:
    k = c.k
    u = lambda m: f"2_{{2k+2}} 1 2* 2_{2 * m} 1"
    low = c.prohibits(u(k - 2), main=True)
    for m in range(k - 2):
        c.compare(f"lm({u(m)})", c.prohibits(u(m)), ">=", f"lm({u(k - 2)})", low)
    A, B = "[2; 2_{2k-4} 1 | 12]", "[0; 1 2_{2k+2} | 12]"
    C, D = "[2; 2_{2k-2} 1 | 21]", "[0; 1 2_{2k+1} | 12]"
    c.step("A + B", c.v(A) + c.v(B), "=", f"lm({u(k - 2)})", low)
    c.step("C + D", c.v(C) + c.v(D), ">", "m(gamma)", c.lg)
    c.cl_u1(A, B, C, D, stated=4)


def _continuant_extremes(length: int, suffix: tuple[int, ...], base: tuple[int, ...]):
    lo = hi = None
    for alpha in itertools.product((1, 2), repeat=length):
        r = Fraction(continuant(alpha + suffix), continuant(alpha + base))
        lo = r if lo is None or r < lo else lo
        hi = r if hi is None or r > hi else hi
    return lo, hi


_BI_MAX_LEN = 10


@register("bi-i")
def bi_i(c: Check) -> None:
    """Continuant ratio bounds, exhausted over all strings up to a fixed length."""
    # a = "1" gives equality in both chains, so the strict bounds start at length 2
    for n in range(2, _BI_MAX_LEN + 1):
        lo, hi = _continuant_extremes(n, (), (2,))
        c.compare(f"min q(a)/q(a2), |a|={n}", lo, ">", "1/3", Fraction(1, 3))
        c.compare(f"max q(a)/q(a2), |a|={n}", hi, "<", "1/2", Fraction(1, 2))
        lo, hi = _continuant_extremes(n, (2, 1), (2,))
        c.compare(f"min q(a21)/q(a2), |a|={n}", lo, ">", "4/3", Fraction(4, 3))
        c.compare(f"max q(a21)/q(a2), |a|={n}", hi, "<", "3/2", Fraction(3, 2))
    c.compare("q(1)/q(12)", Fraction(1, 3), "=", "1/3", Fraction(1, 3))
    c.note("a = 1 attains q(a2)/3 = q(a) and 4q(a2)/3 = q(a21); strictness holds from length 2")


@register("bi-ii")
def bi_ii(c: Check) -> None:
    for n in range(0, _BI_MAX_LEN + 1):
        lo, hi = _continuant_extremes(n, (2, 2, 2), (2, 2, 2, 2))
        c.compare(f"min q(a2_3)/q(a2_4), |a|={n}", lo, ">", "7/17", Fraction(7, 17))
        c.compare(f"max q(a2_3)/q(a2_4), |a|={n}", hi, "<", "5/12", Fraction(5, 12))
        lo, hi = _continuant_extremes(n, (2, 2, 2, 2, 1), (2, 2, 2, 2))
        c.compare(f"min q(a2_41)/q(a2_4), |a|={n}", lo, ">", "24/17", Fraction(24, 17))
        c.compare(f"max q(a2_41)/q(a2_4), |a|={n}", hi, "<", "17/12", Fraction(17, 12))


@register("l.Ck-1")
def l_ck1(c: Check) -> None:
    theta = "2_{2k+2} 1 2* 2_{2k-2} 1"
    v22 = c.lp(theta + " 2 2")
    c.compare(f"lp({theta} 1)", c.lp(theta + " 1"), "<", f"lp({theta} 2 2)", v22)
    c.compare(f"lp({theta} 2 2)", v22, "<", "m(theta_omega)", c.lw, main=True)
    C, D = "[2; 2_{2k-2} 1 ^ 2_2 | 21]", "[0; 1 2_{2k+2} | 21]"
    A, B = "[2; 2_{2k-2} 1 ^ 2_5 | 21]", "[0; 1 2_{2k+1} 1 2_5 | 21]"
    c.step("C + D", c.v(C) + c.v(D), "=", f"lp({theta} 2 2)", v22)
    c.step("A + B", c.v(A) + c.v(B), "<", "m(theta_omega)", c.lw)
    c.decomposition((B, D), (C, A), ratio="1.08", X="112.25", Y="1.9201", q=Fraction(12, 169))


@register("L.U5")
def lu5(c: Check) -> None:
    for j in range(c.k):
        for m in range(c.k - 1):
            c.prohibits(f"1 2_{2 * j + 1} 1 2* 2_{2 * m} 1")


@register("bpodd")
def bpodd(c: Check) -> None:
    k = c.k
    u = lambda m: f"2_{{2k-2}} 1 2* 2_{2 * m} 1"
    low = c.prohibits(u(k - 2), main=True)
    for m in range(k - 2):
        c.compare(f"lm({u(m)})", c.prohibits(u(m)), ">=", f"lm({u(k - 2)})", low)
    A, B = "[2; 2_{2k-4} 1 | 12]", "[0; 1 2_{2k-2} | 12]"
    C, D = "[2; 2_{2k-2} 1 | 21]", "[0; 1 2_{2k+1} 1 | 21]"
    c.step("A + B", c.v(A) + c.v(B), "=", f"lm({u(k - 2)})", low)
    c.step("C + D", c.v(C) + c.v(D), ">", "m(gamma)", c.lg)
    c.cl_u1(A, B, C, D, stated=4)
    c.note("B is the backward expansion of the string itself, [0; 1, 2_{2k-2}, tail 12]; "
           "the printed B carries an extra 1 and does not equal the lambda^- term")


@register("l.Aoddeveniii")
def aoe3(c: Check) -> None:
    k = c.k
    u = lambda j: f"1 2_{2 * j + 1} 1 2* 2_{{2k-2}}"
    low = c.prohibits(u(k - 2), main=True)
    for j in range(k - 2):
        c.compare(f"lm({u(j)})", c.prohibits(u(j)), ">", f"lm({u(k - 2)})", low)
    A, B = "[2; 2_{2k-2} | 21]", "[0; 1 2_{2k-3} 1 | 12]"
    C, D = "[2; 2_{2k-2} 1 | 21]", "[0; 1 2_{2k+1} 1 | 21]"
    c.step("A + B", c.v(A) + c.v(B), "=", f"lm({u(k - 2)})", low)
    c.step("C + D", c.v(C) + c.v(D), ">", "m(gamma)", c.lg)
    c.decomposition((B, D), (C, A), ratio=1, X="0.498", Y="0.85", q="1.6")


@register("ooe-i")
def ooe_i(c: Check) -> None:
    theta = "1 2_{2k-1} 1 2* 2_{2k-2} 1"
    low = c.prohibits(f"1 {theta} 2 2", main=True)
    c.compare(f"lm(2 {theta} 2 2)", c.prohibits(f"2 {theta} 2 2"), ">", f"lm(1 {theta} 2 2)", low)
    A, B = "[2; 2_{2k-2} 1 2 2 | 12]", "[0; 1 2_{2k-1} 1 1 | 21]"
    C, D = "[2; 2_{2k-2} 1 2_5 | 12]", "[0; 1 2_{2k+1} 1 | 21]"
    c.step("A + B", c.v(A) + c.v(B), "=", f"lm(1 {theta} 2 2)", low)
    c.step("C + D", c.v(C) + c.v(D), ">", "m(gamma)", c.lg)
    c.decomposition((B, D), (C, A), ratio="2.399", X="0.6", Y="0.84993", q="2.1692",
                    report_only=("X",))
    c.note("the displayed X does not match the difference formula; X is report-only")


@register("ooe-ii")
def ooe_ii(c: Check) -> None:
    theta = "1 2_{2k-1} 1 2* 2_{2k-2} 1"
    top = c.lp(f"2 2 {theta} 1")
    c.compare(f"lp(1 {theta} 1)", c.lp(f"1 {theta} 1"), "<", f"lp(2 2 {theta} 1)", top)
    c.compare(f"lp(2 2 {theta} 1)", top, "<", "m(theta_omega)", c.lw, main=True)
    A, B = "[2; 2_{2k-2} 1 1 | 12]", "[0; 1 2_{2k-1} 1 2 2 | 21]"
    C, D = "[2; 2_{2k-2} 1 2 2 | 12]", "[0; 1 2_{2k+1} 1 | 12]"
    c.step("A' + B'", c.v(A) + c.v(B), "=", f"lp(2 2 {theta} 1)", top)
    c.step("C' + D'", c.v(C) + c.v(D), "<", "m(theta_omega)", c.lw)
    c.decomposition((C, A), (B, D), ratio="2.529", X="0.65", Y="0.67", q="2.41")


@register("L.U6")
def lu6(c: Check) -> None:
    for j in range(c.k + 1):
        for m in range(c.k - 1):
            c.avoids(f"1 2_{2 * j} 1 2* 2_{2 * m + 1} 1")


def _u(j: int, m: int) -> str:
    return f"1 2_{2 * j} 1 2* 2_{2 * m} 1"


@register("L.U7-i")
def lu7_i(c: Check) -> None:
    k = c.k
    for m in range(1, k):
        for j in range(m):
            c.avoids(_u(j, m))
            c.cl_u1(f"[0; 1 2_{2 * j} 1 | 12]", f"[2; 2_{2 * m} 1 | 21]",
                    "[0; 1 2_{2k+1} 1 | 12]", "[2; 2_{2k-2} 1 | 12]", label=f"(j={j},m={m})")


@register("L.U7-ii")
def lu7_ii(c: Check) -> None:
    k = c.k
    for m in range(k - 1):
        for j in range(m + 1, k + 1):
            c.prohibits(_u(j, m))
            c.cl_u1(f"[2; 2_{2 * m} 1 | 12]", f"[0; 1 2_{2 * j} 1 | 21]",
                    "[2; 2_{2k-2} 1 | 21]", "[0; 1 2_{2k+1} 1 | 21]", label=f"(j={j},m={m})")


@register("L.U7-iii")
def lu7_iii(c: Check) -> None:
    k = c.k
    C, D = "[2; 2_{2k-2} 1 | 21]", "[0; 1 2_{2k+1} 1 | 21]"
    c.step("C' + D'", c.v(C) + c.v(D), ">", "m(gamma)", c.lg)
    for m in range(k - 1):
        u = _u(m, m)
        v1 = c.prohibits(f"{u} 2 2")
        v2 = c.prohibits(f"2 2 {u} 1")
        c.compare(f"lm(1 {u} 1)", c.prohibits(f"1 {u} 1"), ">", f"lm(2 2 {u} 1)", v2)
        tag = f"(m={m})"
        A2, B2 = f"[2; 2_{2 * m} 1 2 2 | 12]", f"[0; 1 2_{2 * m} 1 | 21]"
        A3, B3 = f"[2; 2_{2 * m} 1 1 | 21]", f"[0; 1 2_{2 * m} 1 2 2 | 21]"
        c.step(f"{tag} A'' + B''", c.v(A2) + c.v(B2), "=", f"lm({u} 2 2)", v1)
        c.step(f"{tag} A''' + B'''", c.v(A3) + c.v(B3), "=", f"lm(2 2 {u} 1)", v2)
        c.decomposition((A2, C), (D, B2), ratio="1.55", X="0.899", Y="0.884", q="1.4",
                        q_rel=">=", label=f"{tag}''", report_only=("q",) if m == 0 else ())
        dec = c.decomposition((A3, C), (D, B3), ratio=1, X="0.787", Y="0.839", q="1.4",
                              q_rel=">=", label=f"{tag}'''",
                              report_only=("q", "X") if m == 0 else ("X",))
        c.const(f"{tag}''' ratio as printed", dec.ratio, ">", "1.29", applicable=False)
    c.note("at m=0 the continuant ratio equals 1, below the stated 1.4; the ratios still hold")
    c.note("X''' and the printed 1.29 are report-only: the printed lower bound for X''' "
           "ends A''' with tail 12 where the lambda^- term has tail 21; the ratio is checked "
           "against 1, which is what the conclusion needs")


@register("L.U7-iv")
def lu7_iv(c: Check) -> None:
    u = _u(c.k - 1, c.k - 1)
    top = c.avoids(u, main=True)
    A, B = "[2; 2_{2k-2} 1 | 21]", "[0; 1 2_{2k-2} 1 | 12]"
    C, D = "[2; 2_{2k-2} 1 2 | 21]", "[0; 1 2_{2k+1} 1 2 | 21]"
    c.step("A* + B*", c.v(A) + c.v(B), "=", f"lp({u})", top)
    c.step("C* + D*", c.v(C) + c.v(D), "<", "m(theta_omega)", c.lw)
    c.decomposition((D, B), (A, C), ratio="2.94", X="0.5", Y="0.87", q="2.6")


@register("L.U7-v")
def lu7_v(c: Check) -> None:
    u = _u(c.k, c.k - 1)
    top = c.lp(f"{u} 2 2")
    c.compare(f"lp({u} 1)", c.lp(f"{u} 1"), "<", f"lp({u} 2 2)", top)
    c.compare(f"lp({u} 2 2)", top, "<", "m(theta_omega)", c.lw, main=True)
    A, B = "[2; 2_{2k-2} 1 2 2 | 21]", "[0; 1 2_{2k} 1 | 12]"
    C, D = "[2; 2_{2k-2} 1 2_4 | 12]", "[0; 1 2_{2k+1} 1 2 | 21]"
    c.step("A** + B**", c.v(A) + c.v(B), "=", f"lp({u} 2 2)", top)
    c.step("C** + D**", c.v(C) + c.v(D), "<", "m(theta_omega)", c.lw)
    c.decomposition((D, B), (A, C), ratio="3.93", X="0.71", Y="0.82", q="2.6")


@register("l.Aoddodd")
def aoddodd(c: Check) -> None:
    k = c.k
    C, D = "[2; 2_{2k-2} 1 | 12]", "[0; 1 2_{2k+1} 1 | 12]"
    sqrt2 = eval_cf((1,), (2,))
    for m in range(k - 1):
        for j in range(k + 1):
            u = f"1 2_{2 * j + 1} 1 2* 2_{2 * m + 1} 1"
            tag = f"(j={j},m={m})"
            if j < m:
                c.prohibits(u)
                c.cl_u1(f"[0; 1 2_{2 * j + 1} 1 | 12]", f"[2; 2_{2 * m + 1} 1 | 21]",
                        "[0; 1 2_{2k+1} 1 | 21]", "[2; 2_{2k-2} 1 | 21]", label=tag,
                        stated="3.8")
                continue
            c.avoids(u)
            A, B = f"[2; 2_{2 * m + 1} 1 | 12]", f"[0; 1 2_{2 * j + 1} 1 | 21]"
            if j == k:
                c.cl_u1(A, B, C, D, label=tag, stated=3)
            else:
                c.decomposition((C, A), (B, D), ratio="1.004", X="0.65",
                                Y="0.773" if m > 0 else "0.7",
                                q=sqrt2 if m > 0 else Fraction(3, 2), q_rel=">=", label=tag)
    c.note("the final ratio is (C - A)/(B - D); the text prints the denominator reversed")


@register("p.3-1")
def witness_zero(c: Check) -> None:
    k = c.k
    w = theta_omega(k)
    mv = markov_value(w)
    c.compare("m(theta_omega) witness", mv.witness, "=", "0", 0)
    c.compare("m(theta_omega)", mv.value, "=", "lambda_0(theta_omega)", c.lw)
    period = 6 * k + 3
    others = max((lambda_at(w, i) for i in range(1, period)), key=float)
    c.compare("max_{0<i<6k+3} lambda_i(theta_omega)", others, "<", "lambda_0(theta_omega)", c.lw)

    g = make_gamma1(k)
    mv = markov_value(g)
    c.compare("m(gamma) witness", mv.witness, "=", "0", 0)
    c.compare("m(gamma)", mv.value, "=", "lambda_0(gamma)", c.lg)
    c.compare("runner-up lambda_i(gamma)", mv.runner_up, "<", "lambda_0(gamma)", c.lg, main=True)
    for n in (1, 2, 3):
        c.compare(f"lambda_{-n * period}(gamma)", lambda_at(g, -n * period), "<",
                  "m(gamma)", c.lg)
    for n in (1, 2):
        i = -n * (period + 1)
        c.compare(f"lambda_{i}(gamma)", lambda_at(g, i), "<", "m(gamma)", c.lg)
    c.note(f"the left period of gamma has length 6k+3={period}; positions -(6k+4)n are "
           "checked as well")
