"""Checks for the replication of alpha^4 into a full period of gamma_k^1."""

from __future__ import annotations

from fractions import Fraction

from .core import Check, register
from .extension import F, B, _above_gamma, _chain, _dominated, _equals
from .thresholds import ALPHA4, EXPLICIT

# the forward and backward expansions of alpha^4 read from the mark
FA = f"{F} 2_{{2k}} 1 2_{{2k+1}} 1 2_{{2k-1}} 1"
BA = f"{B} 2_{{2k}} 1 2_{{2k-1}} 1 2_{{2k+1}} 1"
# the same, stopped one block earlier on the backward side
BA3 = f"{B} 2_{{2k}} 1 2_{{2k-1}} 1"


@register("srl-i", k_min=4)
def srl_i(c: Check) -> None:
    _chain(c, "m", [ALPHA4 + " 2", ALPHA4 + " 1 1", ALPHA4 + " 1 2 2 1"], ">")
    v = c.prohibits(ALPHA4 + " 1 2 2 1", main=True)
    A = f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 2_{{2k-1}} ^ 1 2_4 | 12]"
    C = f"[{F} 2_{{2k}} 1 2_{{2k+1}} 1 2_{{2k-1}} ^ 1 2 2 1 | 12]"
    Bq = f"[{BA3} 2_{{2k-1}} ^ 2 2 1 2_4 | 12]"
    D = f"[{BA3} 2_{{2k-1}} ^ 2 2 | 12]"
    _equals(c, C, D, f"lm({ALPHA4} 1 2 2 1)", v)
    _above_gamma(c, A, Bq)
    c.decomposition((C, A), (Bq, D), ratio=1, X="1.26", Y="2.3", q=Fraction(296, 99),
                    report_only=("X",))
    c.note("X = 1.26 depends on an unstated tail choice; recorded, not enforced")


@register("srl-ii", k_min=4)
def srl_ii(c: Check) -> None:
    w = ALPHA4 + " 1 2_4"
    _chain(c, "m", ["2 " + w, "1 1 " + w], ">")
    v = c.prohibits("1 1 " + w, main=True)
    Ap, Cp = f"[{FA} ^ 2_8 | 12]", f"[{FA} ^ 2_4 | 21]"
    Bp = f"[{BA3} 2_{{2k-1}} ^ 2 2 1 2_4 | 12]"
    Dp = f"[{BA3} 2_{{2k-1}} ^ 2 2 1_2 | 12]"
    _equals(c, Cp, Dp, f"lm(1 1 {w})", v)
    _above_gamma(c, Ap, Bp)
    c.decomposition((Dp, Bp), (Ap, Cp), ratio="6.96", X="41.14", Y=1,
                    q=Fraction(373 * 168, 289 * 527))


@register("crl1", k_min=4)
def crl1(c: Check) -> None:
    from .thresholds import threshold
    for w in EXPLICIT[8]:
        c.prohibits(w)
    c.compare("lambda^(8)", threshold(8, c.k), ">", "m(gamma)", c.lg, main=True)


def rep_word(a: str, b: str, right: str = "1") -> str:
    return f"1 2_{{{a}}} 1 {ALPHA4} 1 2_{{{b}}} {right}"


@register("rep2", k_min=4)
def rep2(c: Check) -> None:
    top = rep_word("2k-2", "2k-2")
    words = [rep_word(str(2 * j), str(2 * m)) for j in range(c.k) for m in range(c.k)]
    _dominated(c, "m", words, top)
    v = c.prohibits(top, main=True)
    C, A = f"[{FA} 2_{{2k-2}} 1 | 12]", f"[{FA} 2_{{2k}} 1 | 21]"
    D, Bq = f"[{BA} 2_{{2k-2}} 1 | 12]", f"[{BA} 2_{{2k}} 1 | 21]"
    c.step("C", c.v(C), ">", "A", c.v(A))
    c.step("D", c.v(D), ">", "B", c.v(Bq))
    _equals(c, C, D, f"lm({top})", v)
    _above_gamma(c, A, Bq)


@register("rep3", k_min=4)
def rep3(c: Check) -> None:
    top = rep_word("2k-2", "2k", "1 2_3")
    _dominated(c, "m", [rep_word(str(2 * j), "2k", "1 2_3") for j in range(c.k)], top)
    v = c.prohibits(top, main=True)
    cw = "2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 2_{2k-1} 1 2_{2k} 1 2_3"
    dw = "1 2_{2k+1} 1 2_{2k} 1 2_{2k-1} 1 2_{2k+1} 1 2_{2k-2}"
    A, Bq = f"[2; {cw} | 21]", f"[0; {dw} 1 | 12]"
    C, D = f"[2; {cw} 2_2 | 21]", f"[0; {dw} 2 | 21]"
    _equals(c, A, Bq, f"lm({top})", v)
    _above_gamma(c, C, D)
    c.decomposition((Bq, D), (C, A), ratio=1, X="0.6339", Y="0.82")


@register("rep4", k_min=4)
def rep4(c: Check) -> None:
    def w(b):
        return f"2 2 1 2_{{2k}} 1 {ALPHA4} 1 2_{{{b}}} 1"
    top = w("2k-2")
    _dominated(c, "m", [w(str(2 * m)) for m in range(c.k)], top)
    v = c.prohibits(top, main=True)
    C, D = f"[{FA} 2_{{2k-2}} 1 | 12]", f"[{BA} 2_{{2k}} ^ 1 2_2 | 12]"
    A, Bq = f"[{FA} 2_{{2k}} 1 2_3 | 12]", f"[{BA} 2_{{2k}} ^ 1 2_3 | 12]"
    _equals(c, C, D, f"lm({top})", v)
    _above_gamma(c, A, Bq)
    c.decomposition((C, A), (Bq, D), ratio=1, X="64.5", Y="0.56", q=35)


@register("crl2", k_min=4)
def crl2(c: Check) -> None:
    from .thresholds import threshold
    c.compare("lambda^(9)", threshold(9, c.k), ">", "m(gamma)", c.lg, main=True)


@register("crl3", k_min=4)
def crl3(c: Check) -> None:
    from .thresholds import threshold
    c.compare("lambda^(10)", threshold(10, c.k), ">", "m(gamma)", c.lg, main=True)


@register("crl4", k_min=4)
def crl4(c: Check) -> None:
    from .thresholds import threshold
    for w in EXPLICIT[11]:
        c.prohibits(w)
    c.compare("lambda^(11)", threshold(11, c.k), ">", "m(gamma)", c.lg, main=True)
    c.note("the conclusion is stated for lambda^(10)-admissible words; "
           "the parameter defined there is lambda^(11), which is what is checked")


@register("l.replicamento", k_min=4)
def replication(c: Check) -> None:
    from .thresholds import thresholds
    t = thresholds(c.k)
    c.compare("nu^(1)", t.nu_1, ">", "m(gamma)", c.lg, main=True)
    c.compare("nu^(1)", t.nu_1, "=", "min lambda^(8..11)",
              min((t.lambda_8, t.lambda_9, t.lambda_10, t.lambda_11)))
