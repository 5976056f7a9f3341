"""Rational functions of the spectral variables, used as operator coefficients.

A RationalFn is num / prod_f f^e where num is a KPoly and the denominator is
kept as a multiset of canonical primitive factors (integer coprime
coefficients, positive leading coefficient).  Denominators only ever enter the
engine as products of shifted linear forms, so keeping them factored makes
addition an LCM merge instead of a blind cross-multiplication, and lets the
numerator be reduced by trial division against the known factors.  No
polynomial gcd is ever computed.  Equality is decided by cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction

from .kpoly import KPoly

DenFactors = dict[KPoly, int]


class RationalFn:
    __slots__ = ("num", "den")

    def __init__(self, num: KPoly, den: DenFactors | None = None, reduce: bool = True):
        self.num = num
        self.den = {} if den is None else den
        if num.is_zero():
            self.den = {}
        elif reduce and self.den:
            self._reduce()

    def _reduce(self):
        num = self.num
        den: DenFactors = {}
        for f, e in self.den.items():
            while e > 0:
                q, r = num.divmod_by(f)
                if r.is_zero():
                    num = q
                    e -= 1
                else:
                    break
            if e > 0:
                den[f] = e
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_kpoly(cls, p: KPoly) -> "RationalFn":
        return cls(p, {})

    @classmethod
    def const(cls, nvars: int, c) -> "RationalFn":
        return cls(KPoly.const(nvars, c), {})

    @classmethod
    def quotient(cls, num: KPoly, den: KPoly) -> "RationalFn":
        """num / den with den normalized into a single canonical factor."""
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        content, prim = den.content_and_primitive()
        num = num.scale(Fraction(1) / content)
        if prim.total_degree() == 0:
            return cls(num, {})
        return cls(num, {prim: 1})

    @classmethod
    def one_minus(cls, c, lin: KPoly) -> "RationalFn":
        """(1 - c/lin) = (lin - c)/lin, the ubiquitous coefficient factor."""
        return cls.quotient(lin - KPoly.const(lin.nvars, c), lin)

    # -- queries ---------------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def den_expanded(self) -> KPoly:
        out = KPoly.const(self.num.nvars, 1)
        for f, e in self.den.items():
            out = out * f**e
        return out

    def equals(self, other: "RationalFn") -> bool:
        """Cross-multiplication equality: a*d == c*b as polynomials."""
        return (self.num * other.den_expanded()) == (other.num * self.den_expanded())

    def as_kpoly(self) -> KPoly:
        if self.den:
            raise ValueError("rational function has a nontrivial denominator")
        return self.num

    # -- arithmetic --------------------------------------------------------------

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, dict(self.den), reduce=False)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        den = dict(self.den)
        for f, e in other.den.items():
            den[f] = den.get(f, 0) + e
        return RationalFn(self.num * other.num, den)

    def scale(self, c) -> "RationalFn":
        return RationalFn(self.num.scale(c), dict(self.den), reduce=False)

    def __add__(self, other: "RationalFn") -> "RationalFn":
        lcm: DenFactors = dict(self.den)
        for f, e in other.den.items():
            if lcm.get(f, 0) < e:
                lcm[f] = e
        a = self.num
        for f, e in lcm.items():
            extra = e - self.den.get(f, 0)
            if extra:
                a = a * f**extra
        b = other.num
        for f, e in lcm.items():
            extra = e - other.den.get(f, 0)
            if extra:
                b = b * f**extra
        return RationalFn(a + b, lcm)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return self + (-other)

    def shift(self, deltas) -> "RationalFn":
        """Substitute kappa -> kappa + deltas in numerator and denominator."""
        num = self.num.shift(deltas)
        den: DenFactors = {}
        for f, e in self.den.items():
            content, prim = f.shift(deltas).content_and_primitive()
            den[prim] = den.get(prim, 0) + e
            if content != 1:
                num = num.scale(Fraction(1) / content**e)
        return RationalFn(num, den)

    def subst_var(self, j: int, repl: KPoly) -> "RationalFn":
        """Substitute kappa_j = repl throughout (used for reflections)."""
        num = self.num.subst_linear(j, repl)
        den: DenFactors = {}
        for f, e in self.den.items():
            g = f.subst_linear(j, repl)
            if g.is_zero():
                raise ZeroDivisionError("substitution annihilates a denominator factor")
            content, prim = g.content_and_primitive()
            den[prim] = den.get(prim, 0) + e
            if content != 1:
                num = num.scale(Fraction(1) / content**e)
        return RationalFn(num, den)

    def __repr__(self):
        from .serialize import kpoly_text

        if not self.den:
            return kpoly_text(self.num)
        den = " * ".join(
            f"({kpoly_text(f)})" + (f"^{e}" if e > 1 else "") for f, e in sorted(
                self.den.items(), key=lambda kv: sorted(kv[0].terms.items())
            )
        )
        return f"({kpoly_text(self.num)}) / ({den})"
