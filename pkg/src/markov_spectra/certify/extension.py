"""Checks for the extension chain alpha^1 -> alpha^2 -> alpha^3 -> alpha^4."""

from __future__ import annotations

from fractions import Fraction

from .core import Check, register

ALPHA1 = "1 2_{2k+1} 1 2* 2_{2k-2} 1"
ALPHA2 = f"1 2_{{2k}} {ALPHA1} 2_{{2k}} 1"
ALPHA3 = f"1 2_{{2k-1}} {ALPHA2} 2_{{2k+1}} 1"

# forward and backward prefixes shared by many quadruples
F = "2; 2_{2k-2} 1"
B = "0; 1 2_{2k+1} 1"


def _equals(c: Check, x: str, y: str, label: str, value) -> None:
    c.step(f"{x} + {y}", c.v(x) + c.v(y), "=", label, value)


def _above_gamma(c: Check, x: str, y: str) -> None:
    """x + y is an upper bound for m(gamma_k^1)."""
    c.step(f"{x} + {y}", c.v(x) + c.v(y), ">", "m(gamma)", c.lg)


def _below_omega(c: Check, x: str, y: str) -> None:
    """x + y is a lower bound for m(theta(omega_k))."""
    c.step(f"{x} + {y}", c.v(x) + c.v(y), "<", "m(theta_omega)", c.lw)


def _chain(c: Check, kind: str, words: list[str], rel: str) -> None:
    """Consecutive exact comparisons of lambda^kind_0 along ``words``."""
    f = c.lm if kind == "m" else c.lp
    vals = [f(w) for w in words]
    for (w1, v1), (w2, v2) in zip(zip(words, vals), zip(words[1:], vals[1:])):
        c.compare(f"l{kind}({w1})", v1, rel, f"l{kind}({w2})", v2)


def _dominated(c: Check, kind: str, words: list[str], top: str) -> None:
    """Every word is no worse than ``top``: lm >= lm(top) or lp <= lp(top)."""
    if kind == "m":
        ref = c.lm(top)
        for w in words:
            if w != top:
                c.compare(f"lm({w})", c.lm(w), ">=", f"lm({top})", ref)
    else:
        ref = c.lp(top)
        for w in words:
            if w != top:
                c.compare(f"lp({w})", c.lp(w), "<=", f"lp({top})", ref)


# -- from alpha^1 to 2_{2k} alpha^1 2_{2k} ----------------------------------------------

def gamma_ab(a: str, b: str) -> str:
    return f"1 2_{{{a}}} {ALPHA1} 2_{{{b}}} 1"


@register("LG1-i", k_min=3)
def lg1_i(c: Check) -> None:
    c.compare(f"lp({ALPHA1} 1)", c.lp(ALPHA1 + " 1"), "<", f"lp({ALPHA1} 2 2 1)",
              c.lp(ALPHA1 + " 2 2 1"))
    v = c.avoids(ALPHA1 + " 2 2 1", main=True)
    A, Bq = f"[{F} 2 2 1 | 12]", f"[{B} | 21]"
    C, D = f"[{F} 2_{{2k}} 1 | 21]", f"[{B} 2_{{2k}} 1 | 21]"
    _equals(c, A, Bq, f"lp({ALPHA1} 2 2 1)", v)
    _below_omega(c, C, D)
    c.cl_u1(A, Bq, C, D, stated=4)


@register("LG1-ii", k_min=3)
def lg1_ii(c: Check) -> None:
    w = f"1 {ALPHA1} 2_4"
    v = c.avoids(w, main=True)
    A, Bq = f"[{F} 2_4 | 21]", f"[{B} 1 | 12]"
    C, D = f"[{F} 2_{{2k}} 1 | 21]", f"[{B} 2_{{2k}} 1 | 21]"
    _equals(c, A, Bq, f"lp({w})", v)
    _below_omega(c, C, D)
    c.cl_u1(A, Bq, C, D, stated=4)


@register("c.Ext1-0", k_min=4)
def c_ext1_0(c: Check) -> None:
    """lambda^(2) exceeds m(gamma); 1 2* 1 and the LG1 strings force 2_2 alpha^1 2_4."""
    c.prohibits("2_{2k-2} 1 2* 2 2 1", main=True)
    c.prohibits("1 2* 1")
    c.avoids(ALPHA1 + " 2 2 1")
    c.avoids(f"1 {ALPHA1} 2_4")


@register("ext1-split", k_min=4)
def ext1_split(c: Check) -> None:
    c.prohibits(f"2_{{2k+1}} {ALPHA1} 2_{{2k+1}}", main=True)


@register("ext1B1", k_min=4)
def ext1b1(c: Check) -> None:
    k = c.k
    top = gamma_ab("2k-1", "2k-1")
    words = [gamma_ab(str(2 * j + 1), str(2 * m + 1)) for j in range(k) for m in range(k)]
    _dominated(c, "m", words, top)
    v = c.prohibits(top, main=True)
    A, C = f"[{F} 2_{{2k-1}} 1 | 12]", f"[{F} 2_{{2k}} 1 2 | 21]"
    Bq, D = f"[{B} 2_{{2k-1}} 1 | 12]", f"[{B} 2_{{2k}} 1 2 | 21]"
    c.step("A", c.v(A), ">", "C", c.v(C))
    c.step("B", c.v(Bq), ">", "D", c.v(D))
    _equals(c, A, Bq, f"lm({top})", v)
    _above_gamma(c, C, D)


@register("ext1B2-i", k_min=4)
def ext1b2_i(c: Check) -> None:
    w = gamma_ab("2k-4", "2k-1")
    c.compare(f"lm({gamma_ab('2k-2', '2k-1')})", c.lm(gamma_ab("2k-2", "2k-1")), ">",
              f"lm({w})", c.lm(w))
    c.prohibits(gamma_ab("2k-2", "2k-1"))
    v = c.prohibits(w, main=True)
    A, Bq = f"[{F} 2_{{2k-1}} 1 | 12]", f"[{B} 2_{{2k-4}} 1 | 21]"
    C, D = f"[{F} 2_{{2k}} 1 2_2 | 12]", f"[{B} 2_{{2k}} 1 2_2 | 12]"
    _equals(c, A, Bq, f"lm({w})", v)
    _above_gamma(c, C, D)
    c.decomposition((A, C), (D, Bq), ratio="1.003", X="0.927", Y="0.752", q="1.2")


@register("ext1B2-ii", k_min=4)
def ext1b2_ii(c: Check) -> None:
    top = gamma_ab("2k-6", "2k-1")
    words = [gamma_ab(str(2 * j), "2k-1") for j in range(c.k - 2)]
    _dominated(c, "p", words, top)
    v = c.avoids(top, main=True)
    A, Bq = c.parts(top, "max")
    C, D = f"[{F} 2_{{2k}} 1 | 21]", f"[{B} 2_{{2k}} 1 | 21]"
    _equals(c, A, Bq, f"lp({top})", v)
    _below_omega(c, C, D)
    c.cl_u1(A, Bq, C, D, stated="3.5")


@register("ext1B3", k_min=4)
def ext1b3(c: Check) -> None:
    top = gamma_ab("2k-1", "2k-2")
    _dominated(c, "p", [gamma_ab("2k-1", str(2 * m)) for m in range(c.k)], top)
    v = c.avoids(top, main=True)
    C, D = f"[{F} 2_{{2k-2}} 1 | 12]", f"[{B} 2_{{2k-1}} 1 | 21]"
    A, Bq = f"[{F} 2_{{2k}} 1 2 | 12]", f"[{B} 2_{{2k}} 1 2 | 12]"
    _equals(c, C, D, f"lp({top})", v)
    _below_omega(c, A, Bq)
    c.cl_u1(A, Bq, C, D, stated=3)


@register("ext1B4", k_min=4)
def ext1b4(c: Check) -> None:
    top = gamma_ab("2k-2", "2k-2")
    words = [gamma_ab(str(2 * j), str(2 * m)) for j in range(c.k) for m in range(c.k)]
    _dominated(c, "p", words, top)
    c.avoids(top, main=True)
    fwd, bwd = c.parts(top, "max")
    c.step(fwd, c.v(fwd), "<", f"[{F} 2_{{2k}} 1 | 21]", c.v(f"[{F} 2_{{2k}} 1 | 21]"))
    c.step(bwd, c.v(bwd), "<", f"[{B} 2_{{2k}} 1 | 21]", c.v(f"[{B} 2_{{2k}} 1 | 21]"))


def u_ext1c(b: str) -> str:
    return f"2_{{2k}} {ALPHA1} 2_{{{b}}} 1"


@register("e2.c.o", k_min=4)
def e2co(c: Check) -> None:
    top = u_ext1c("2k-1")
    _dominated(c, "m", [u_ext1c(str(2 * m + 1)) for m in range(1, c.k)], top)
    v = c.prohibits(top, main=True)
    A, Bq = f"[{F} 2_{{2k-1}} 1 | 12]", f"[{B} 2_{{2k}} | 12]"
    C, D = f"[{F} 2_{{2k}} 1 | 12]", f"[{B} 2_{{2k}} 1 | 12]"
    _equals(c, A, Bq, f"lm({top})", v)
    _above_gamma(c, C, D)
    c.cl_u1(A, Bq, C, D, stated=4)


@register("ext1C-even", k_min=4)
def ext1c_even(c: Check) -> None:
    top = u_ext1c("2k-2")
    _dominated(c, "p", [u_ext1c(str(2 * m)) for m in range(c.k)], top)
    v = c.avoids(top, main=True)
    A, Bq = c.parts(top, "max")
    C, D = f"[{F} 2_{{2k}} 1 | 21]", f"[{B} 2_{{2k}} 1 | 21]"
    _equals(c, A, Bq, f"lp({top})", v)
    _below_omega(c, C, D)
    c.cl_u1(A, Bq, C, D)


def gamma_a(a: str) -> str:
    return f"1 2_{{{a}}} {ALPHA1} 2_{{2k}}"


@register("ext1D-even", k_min=4)
def ext1d_even(c: Check) -> None:
    top = gamma_a("2k-4")
    _dominated(c, "p", [gamma_a(str(2 * j)) for j in range(c.k - 1)], top)
    v = c.avoids(top, main=True)
    C, D = f"[{F} 2_{{2k}} | 21]", f"[{B} 2_{{2k-4}} 1 | 12]"
    A, Bq = f"[{F} 2_{{2k}} 1 2 2 | 21]", f"[{B} 2_{{2k}} 1 2 2 | 21]"
    _equals(c, C, D, f"lp({top})", v)
    _below_omega(c, A, Bq)
    c.decomposition((Bq, D), (C, A), ratio="1.25", X="0.51", Y="0.94", q=Fraction(34, 21))


@register("g2k-2-i", k_min=4)
def g2k2_i(c: Check) -> None:
    g = gamma_a("2k-2")
    _chain(c, "m", [g + " 2", g + " 1 1"], ">")
    v = c.prohibits(g + " 1 1", main=True)
    A, Bq = f"[{F} 2_{{2k}} 1_2 | 12]", f"[{B} 2_{{2k-2}} 1 | 21]"
    C, D = f"[{F} 2_{{2k}} 1 2_2 | 12]", f"[{B} 2_{{2k-1}} | 12]"
    _equals(c, A, Bq, f"lm({g} 1 1)", v)
    _above_gamma(c, C, D)
    c.decomposition((A, C), (D, Bq), ratio=1, X="0.63", Y="0.9", q="2.41",
                    report_only=("X", "Y"))
    c.note("the printed X and Y use the tail 12 after the B prefix where the string forces 21; "
           "X and Y are report-only, the ratio and q are enforced")


@register("g2k-2-ii", k_min=4)
def g2k2_ii(c: Check) -> None:
    w = gamma_a("2k-2") + " 1 2 2"
    v = c.avoids(w, main=True)
    Dp, Cp = f"[{F} 2_{{2k}} 1 2_2 | 12]", f"[{B} 2_{{2k-2}} 1 | 12]"
    Bp, Ap = f"[{F} 2_{{2k}} 1 2_4 | 21]", f"[{B} 2_{{2k}} 1 | 21]"
    _equals(c, Dp, Cp, f"lp({w})", v)
    _below_omega(c, Bp, Ap)
    c.cl_u1(Cp, Dp, Ap, Bp, stated=4, report_only=True)
    c.note("q(2_{2k-2} 1 2_{2k} 1 2_2) / q(1 2_{2k+1} 1 2_{2k-2}) is about 2.657, below the "
           "stated 4 and the comparison lemma's 3; the sum comparison is checked directly")


@register("e2.d.o", k_min=4)
def e2do(c: Check) -> None:
    g = gamma_a("2k-1")
    _chain(c, "m", [g + " 2", g + " 1 1", g + " 1 2 2"], ">")
    v = c.prohibits(g + " 1 2 2", main=True)
    C, D = f"[{F} 2_{{2k}} ^ 1 2_2 | 21]", f"[{B} 2_{{2k-1}} 1 | 12]"
    A, Bq = f"[{F} 2_{{2k}} ^ 1 2_4 | 12]", f"[{B} 2_{{2k}} 1 2_2 | 12]"
    _equals(c, C, D, f"lm({g} 1 2 2)", v)
    _above_gamma(c, A, Bq)
    c.decomposition((D, Bq), (A, C), ratio="3.75", X="574.47", Y="0.5", q=Fraction(4, 35),
                    report_only=("Y",))
    c.note("the printed lower bound for Y evaluates to 0.49938, just under the stated 0.5; "
           "Y is report-only, the ratio is enforced")


@register("c.Ext1-1", k_min=4)
def c_ext1_1(c: Check) -> None:
    from .thresholds import threshold
    c.compare("lambda^(3)", threshold(3, c.k), ">", "m(gamma)", c.lg, main=True)


# -- from 2_{2k} alpha^1 2_{2k} to alpha^2 = 1 2_{2k} alpha^1 2_{2k} 1 ---------------------

W1 = f"2_{{2k}} {ALPHA1} 2_{{2k}}"


@register("te2-3.1", k_min=4)
def te2_31(c: Check) -> None:
    _chain(c, "m", [W1 + " 2", W1 + " 1 1", W1 + " 1 2 2 1"], ">")
    v = c.prohibits(W1 + " 1 2 2 1", main=True)
    A, Bq = f"[{F} 2_{{2k}} 1 2_2 1 | 12]", f"[{B} 2_{{2k}} | 12]"
    C, D = f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} 1 | 12]"
    _equals(c, A, Bq, f"lm({W1} 1 2 2 1)", v)
    _above_gamma(c, C, D)
    c.cl_u1(A, Bq, C, D, stated=4)


@register("te2-3.2", k_min=4)
def te2_32(c: Check) -> None:
    w = W1 + " 1 2_4"
    _chain(c, "m", ["2 " + w, "1 1 " + w], ">")
    v = c.prohibits("1 1 " + w, main=True)
    C, D = f"[{F} 2_{{2k}} 1 ^ 2_4 | 21]", f"[{B} 2_{{2k}} 1 1 | 12]"
    A, Bq = f"[{F} 2_{{2k}} 1 ^ 2_6 | 12]", f"[{B} 2_{{2k}} 1 2 2 | 12]"
    _equals(c, C, D, f"lm(1 1 {w})", v)
    _above_gamma(c, A, Bq)
    c.decomposition((D, Bq), (A, C), ratio="2.43", X="2185.35", Y="1.29", q=Fraction(1, 34))


@register("c.Ext2-0", k_min=4)
def c_ext2_0(c: Check) -> None:
    from .thresholds import threshold
    c.prohibits(W1 + " 1 2 2 1")
    c.prohibits(f"1 1 {W1} 1 2_4")
    c.prohibits("2_{2k-2} 1 2* 2 2 1")
    c.compare("lambda^(4)", threshold(4, c.k), ">", "m(gamma)", c.lg, main=True)


@register("ext2-split", k_min=4)
def ext2_split(c: Check) -> None:
    c.prohibits(f"2_{{2k}} {ALPHA2} 2_{{2k+2}}", main=True)


def delta_ab(a: str, b: str) -> str:
    return f"1 2_{{{a}}} {ALPHA2} 2_{{{b}}} 1"


@register("Delta-i", k_min=4)
def delta_i(c: Check) -> None:
    w = delta_ab("2k-4", "2k-1")
    _chain(c, "p", [delta_ab("2k-2", "2k-1"), w], "<")
    v = c.avoids(w, main=True)
    A, Bq = f"[{F} 2_{{2k}} 1 2_{{2k-1}} 1 | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-4}} 1 | 21]"
    C, D = f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 | 21]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} 1 | 21]"
    _equals(c, A, Bq, f"lp({w})", v)
    _below_omega(c, C, D)
    c.decomposition((C, A), (Bq, D), ratio="1.001", X="0.6", Y="0.84", q="1.41",
                    report_only=("X",))
    c.note("the X printed as '= 0.6' is an approximation; recorded, not enforced")


@register("Delta-ii", k_min=4)
def delta_ii(c: Check) -> None:
    top = delta_ab("2k-6", "2k-1")
    _dominated(c, "m", [delta_ab(str(2 * j), "2k-1") for j in range(c.k - 2)], top)
    v = c.prohibits(top, main=True)
    Bp, Ap = f"[{F} 2_{{2k}} 1 2_{{2k-1}} 1 | 21]", f"[{B} 2_{{2k}} 1 2_{{2k-6}} 1 | 12]"
    Dp, Cp = f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} 1 | 12]"
    _equals(c, Ap, Bp, f"lm({top})", v)
    _above_gamma(c, Cp, Dp)
    c.cl_u1(Ap, Bp, Cp, Dp)


@register("Delta-even", k_min=4)
def delta_even(c: Check) -> None:
    top = delta_ab("2k-2", "2k")
    words = [delta_ab(str(2 * j), str(2 * m)) for j in range(c.k) for m in range(c.k + 1)]
    _dominated(c, "m", words, top)
    v = c.prohibits(top, main=True)
    C, A = f"[{F} 2_{{2k}} 1 2_{{2k}} 1 | 12]", f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 2 | 21]"
    D, Bq = f"[{B} 2_{{2k}} 1 2_{{2k-2}} 1 | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} 1 2 | 21]"
    c.step("C", c.v(C), ">", "A", c.v(A))
    c.step("D", c.v(D), ">", "B", c.v(Bq))
    _equals(c, C, D, f"lm({top})", v)
    _above_gamma(c, A, Bq)


def delta_a(a: str) -> str:
    return f"1 2_{{{a}}} {ALPHA2} 2_{{2k+1}}"


@register("e3.c.e", k_min=4)
def e3ce(c: Check) -> None:
    top = delta_a("2k-2")
    _dominated(c, "m", [delta_a(str(2 * j)) for j in range(c.k)], top)
    v = c.prohibits(top, main=True)
    A, Bq = f"[{F} 2_{{2k}} 1 2_{{2k+1}} | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-2}} 1 | 12]"
    C, D = f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 2_2 | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} 1 | 12]"
    _equals(c, A, Bq, f"lm({top})", v)
    _above_gamma(c, C, D)
    c.decomposition((Bq, D), (C, A), ratio=2, X="0.61", Y="0.83", q=2)
    cw = c.word("2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 2*").letters
    from ..cfcore import continuant
    c.const("beta(c)", Fraction(continuant(cw[:-1]), continuant(cw)), ">", "0.369")


def delta_b(b: str) -> str:
    return f"2_{{2k-1}} {ALPHA2} 2_{{{b}}} 1"


@register("ext2D-odd", k_min=4)
def ext2d_odd(c: Check) -> None:
    w = delta_b("2k-1")
    v = c.avoids(w, main=True)
    A, Bq = f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 | 21]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} 1 2 2 | 21]"
    C, D = f"[{F} 2_{{2k}} 1 2_{{2k-1}} 1 | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} | 21]"
    _equals(c, C, D, f"lp({w})", v)
    _below_omega(c, A, Bq)
    c.cl_u1(A, Bq, C, D, stated=17)


@register("L.U3.17", k_min=4)
def lu3_17(c: Check) -> None:
    top = delta_b("2k")
    _dominated(c, "m", [delta_b(str(2 * m)) for m in range(c.k + 1)], top)
    v = c.prohibits(top, main=True)
    A, Bq = f"[{F} 2_{{2k}} 1 2_{{2k}} 1 | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} | 12]"
    C, D = f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} 1 | 12]"
    _equals(c, A, Bq, f"lm({top})", v)
    _above_gamma(c, C, D)
    c.cl_u1(A, Bq, C, D, stated=4)


@register("c.Ext2-1", k_min=4)
def c_ext2_1(c: Check) -> None:
    from .thresholds import threshold
    c.compare("lambda^(5)", threshold(5, c.k), ">", "m(gamma)", c.lg, main=True)


# -- from 2_{2k-1} alpha^2 2_{2k+1} to alpha^4 ----------------------------------------------

W2 = f"2_{{2k-1}} {ALPHA2} 2_{{2k+1}}"


@register("t2-3-i", k_min=4)
def t23_i(c: Check) -> None:
    _chain(c, "m", [W2 + " 2", W2 + " 1 1"], ">")
    v = c.prohibits(W2 + " 1 1", main=True)
    A, Bq = f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 2 2 | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} 1 2_4 | 12]"
    C, D = f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 1 | 12]", f"[{B} 2_{{2k}} 1 2_{{2k-1}} | 12]"
    _equals(c, C, D, f"lm({W2} 1 1)", v)
    _above_gamma(c, A, Bq)
    c.decomposition((C, A), (Bq, D), ratio="29.9", X="13.08", Y="0.42", q=Fraction(7, 3),
                    report_only=("X",))
    c.note("X = 13.08 depends on an unstated tail choice; recorded, not enforced")


@register("t2-3-ii", k_min=4)
def t23_ii(c: Check) -> None:
    w = W2 + " 1 2 2"
    _chain(c, "m", ["2 " + w, "1 1 " + w], ">")
    v = c.prohibits("1 1 " + w, main=True)
    Ap, Bp = (f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 ^ 2_4 | 12]",
              f"[{B} 2_{{2k}} 1 2_{{2k-1}} ^ 1 2_2 | 12]")
    Cp, Dp = (f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 ^ 2_2 | 21]",
              f"[{B} 2_{{2k}} 1 2_{{2k-1}} ^ 1_2 | 12]")
    _equals(c, Cp, Dp, f"lm(1 1 {w})", v)
    _above_gamma(c, Ap, Bp)
    c.decomposition((Dp, Bp), (Ap, Cp), ratio="6.65", X="15.66", Y="2.66", q=Fraction(2, 5))


@register("c.Ext3-0", k_min=4)
def c_ext3_0(c: Check) -> None:
    from .thresholds import threshold
    c.prohibits("1 2* 1")
    c.prohibits(W2 + " 1 1")
    c.prohibits(f"1 1 {W2} 1 2 2")
    c.compare("lambda^(6)", threshold(6, c.k), ">", "m(gamma)", c.lg, main=True)


@register("ext3-split", k_min=4)
def ext3_split(c: Check) -> None:
    c.prohibits(f"2_{{2k+2}} {ALPHA3} 2_{{2k}}", main=True)


def omega_ab(a: str, b: str) -> str:
    return f"1 2_{{{a}}} {ALPHA3} 2_{{{b}}} 1"


@register("Omega-even", k_min=4)
def omega_even(c: Check) -> None:
    for j in range(c.k + 1):
        for m in range(c.k):
            c.prohibits(omega_ab(str(2 * j), str(2 * m)))
    x = "[0; 2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 2_{2k-1} 1 | 12]"
    y = "[0; 1 2_{2k+1} 1 2_{2k} 1 2_{2k-1} 1 2_{2k+1} 1 | 12]"
    for m in range(c.k):
        lo = f"[0; 2_{{2k-2}} 1 2_{{2k}} 1 2_{{2k+1}} 1 2_{{{2 * m}}} 1 | 21]"
        c.step(lo, c.v(lo), ">", x, c.v(x))
    for j in range(c.k + 1):
        lo = f"[0; 1 2_{{2k+1}} 1 2_{{2k}} 1 2_{{2k-1}} 1 2_{{{2 * j}}} 1 | 12]"
        c.step(lo, c.v(lo), ">", y, c.v(y))


def omega_a(a: str) -> str:
    return f"1 2_{{{a}}} {ALPHA3} 2_{{2k-1}}"


@register("e4.c.e", k_min=4)
def e4ce(c: Check) -> None:
    top = omega_a("2k") + " 1 2 2"
    for j in range(c.k + 1):
        w = omega_a(str(2 * j))
        _chain(c, "m", [w + " 2", w + " 1 1", w + " 1 2 2"], ">")
    _dominated(c, "m", [omega_a(str(2 * j)) + " 1 2 2" for j in range(c.k + 1)], top)
    v = c.prohibits(top, main=True)
    C, D = (f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 2_{{2k-1}} 1 ^ 2_2 | 21]",
            f"[{B} 2_{{2k}} 1 2_{{2k-1}} 1 2_{{2k-1}} ^ 2 1 | 12]")
    A, Bq = (f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 2_{{2k-1}} 1 ^ 2_6 | 12]",
             f"[{B} 2_{{2k}} 1 2_{{2k-1}} 1 2_{{2k-1}} ^ 2 2 1 2_2 | 12]")
    _equals(c, C, D, f"lm({top})", v)
    _above_gamma(c, A, Bq)
    c.decomposition((D, Bq), (A, C), ratio=3, X="24.45", Y="1.17", q=Fraction(44, 135))


def omega_b(b: str) -> str:
    return f"2_{{2k+1}} {ALPHA3} 2_{{{b}}} 1"


@register("L.U3.21", k_min=4)
def lu3_21(c: Check) -> None:
    top = omega_b("2k-2")
    _dominated(c, "m", [omega_b(str(2 * m)) for m in range(c.k)], top)
    v = c.prohibits(top, main=True)
    cw = "2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 2_{2k-2}"
    dw = "1 2_{2k+1} 1 2_{2k} 1 2_{2k-1} 1 2_{2k+1}"
    A, Bq = f"[2; {cw} 1 | 12]", f"[0; {dw} | 12]"
    C, D = f"[2; {cw} 2 | 21]", f"[0; {dw} | 21]"
    _equals(c, A, Bq, f"lm({top})", v)
    _above_gamma(c, C, D)
    c.cl_u1(A, Bq, C, D, stated=4)


@register("c.Ext3-1", k_min=4)
def c_ext3_1(c: Check) -> None:
    from .thresholds import threshold
    c.compare("lambda^(7)", threshold(7, c.k), ">", "m(gamma)", c.lg, main=True)


@register("t.extension", k_min=4)
def t_extension(c: Check) -> None:
    from .thresholds import thresholds
    t = thresholds(c.k)
    c.compare("mu^(1)", t.mu_1, ">", "m(gamma)", c.lg, main=True)
    c.compare("mu^(1)", t.mu_1, "=", "min lambda^(2..7)",
              min((t.lambda_2, t.lambda_3, t.lambda_4, t.lambda_5, t.lambda_6, t.lambda_7),
                  ))
