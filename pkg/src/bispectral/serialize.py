"""Canonical text and JSON term-list forms.

Spectral variables print as kappa1..kappaN (kappa_i = (k, f_i)), exponential
symbols as u1..uN with u_i = e^{xbar_i / 2}, so e^{xbar_1} is u1^2.  Terms are
emitted in the fixed monomial order (graded lex on kappa exponents, then lex
on exponential exponents), which makes every rendering deterministic and
hashable.  Rationals serialize as "p" or "p/q" strings; JSON never holds a
float.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

KAPPA = "κ"  # κ


def rational_str(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s)
    raise ValueError(f"expected a rational string, got {s!r}")


def _power_text(sym: str, idx: int, e: int) -> str:
    if e == 1:
        return f"{sym}{idx + 1}"
    return f"{sym}{idx + 1}^{e}"


def _mono_text(exps, sym: str) -> str:
    parts = [_power_text(sym, i, e) for i, e in enumerate(exps) if e != 0]
    return "*".join(parts)


def _join_terms(parts: list[tuple[Fraction, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for i, (coeff, mono) in enumerate(parts):
        mag = abs(coeff)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{rational_str(mag)}*{mono}"
        else:
            body = rational_str(mag)
        if i == 0:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(out)


def kpoly_text(p) -> str:
    return _join_terms([(c, _mono_text(e, KAPPA)) for e, c in p.sorted_terms()])


def exppoly_text(f) -> str:
    return _join_terms([(c, _mono_text(e, "u")) for e, c in f.sorted_terms()])


def element_text(el) -> str:
    if not el.terms:
        return "0"
    parts = []
    for e, coeff in el.sorted_terms():
        mono = _mono_text(e, KAPPA)
        body = f"({exppoly_text(coeff)})"
        parts.append(f"{body}*{mono}" if mono else body)
    return " + ".join(parts)


def ratfn_text(r) -> str:
    if not r.den:
        return kpoly_text(r.num)
    den_parts = []
    for f, e in sorted(r.den.items(), key=lambda kv: kpoly_text(kv[0])):
        t = f"({kpoly_text(f)})"
        den_parts.append(t if e == 1 else f"{t}^{e}")
    return f"({kpoly_text(r.num)}) / ({'*'.join(den_parts)})"


def operator_text(op) -> str:
    from .operators import sorted_op_terms

    lines = []
    for shift, coeff in sorted_op_terms(op):
        sh = "[" + ", ".join(rational_str(c) for c in shift) + "]"
        lines.append(f"({ratfn_text(coeff)}) * T{sh}")
    return "\n".join(lines) if lines else "0"


# -- JSON term lists ------------------------------------------------------------


def kpoly_json(p) -> list:
    return [{"exps": list(e), "coeff": rational_str(c)} for e, c in p.sorted_terms()]


def exppoly_json(f) -> list:
    return [{"uexps": list(e), "coeff": rational_str(c)} for e, c in f.sorted_terms()]


def element_json(el) -> list:
    return [
        {"exps": list(e), "coeff": exppoly_json(coeff)} for e, coeff in el.sorted_terms()
    ]


def ratfn_json(r) -> dict:
    return {
        "num": kpoly_json(r.num),
        "den_factors": [
            {"factor": kpoly_json(f), "power": e}
            for f, e in sorted(r.den.items(), key=lambda kv: kpoly_text(kv[0]))
        ],
    }


def operator_json(op) -> list:
    from .operators import sorted_op_terms

    return [
        {"shift": [rational_str(c) for c in shift], "coeff": ratfn_json(coeff)}
        for shift, coeff in sorted_op_terms(op)
    ]


def text_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def dump_json(obj) -> str:
    """Deterministic JSON: no floats are ever fed in, keys keep insert order."""
    return json.dumps(obj, indent=2, sort_keys=False, allow_nan=False)
