"""Sparse multivariate polynomials in the spectral variables kappa_i.

A KPoly maps exponent tuples (one nonnegative int per variable) to nonzero
Fraction coefficients; {} is the zero polynomial.  The fixed monomial order is
graded lexicographic: monomials compare by (total degree, exponent tuple), and
the leading term is the maximum.  Division is the standard single-divisor
multivariate algorithm in that order, so exact divisibility is decided by a
zero remainder.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

KExp = tuple[int, ...]


def grlex_key(exps: KExp):
    return (sum(exps), exps)


class KPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: dict[KExp, Fraction] | None = None):
        self.nvars = nvars
        self.terms = terms if terms is not None else {}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "KPoly":
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> "KPoly":
        c = Fraction(c)
        if c == 0:
            return cls(nvars, {})
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "KPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def linear_form(cls, coeffs, const=0) -> "KPoly":
        """sum_i coeffs[i]*kappa_i + const."""
        n = len(coeffs)
        terms: dict[KExp, Fraction] = {}
        for i, c in enumerate(coeffs):
            c = Fraction(c)
            if c != 0:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        const = Fraction(const)
        if const != 0:
            terms[(0,) * n] = const
        return cls(n, terms)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading(self) -> tuple[KExp, Fraction]:
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def constant_value(self) -> Fraction:
        """The coefficient of the constant monomial (poly need not be constant)."""
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def homogeneous_part(self, d: int) -> "KPoly":
        return KPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def __eq__(self, other):
        return (
            isinstance(other, KPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "KPoly") -> "KPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return KPoly(self.nvars, out)

    def __neg__(self) -> "KPoly":
        return KPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "KPoly") -> "KPoly":
        return self + (-other)

    def __mul__(self, other: "KPoly") -> "KPoly":
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out: dict[KExp, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return KPoly(self.nvars, out)

    def scale(self, c) -> "KPoly":
        c = Fraction(c)
        if c == 0:
            return KPoly.zero(self.nvars)
        return KPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "KPoly":
        out = KPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- substitutions -------------------------------------------------------

    def shift(self, deltas) -> "KPoly":
        """Substitute kappa_i -> kappa_i + deltas[i], expanding exactly."""
        deltas = [Fraction(d) for d in deltas]
        if all(d == 0 for d in deltas):
            return self
        out: dict[KExp, Fraction] = {}
        for e, c in self.terms.items():
            # expand prod_i (kappa_i + d_i)^{e_i} one variable at a time
            partial: dict[KExp, Fraction] = {(0,) * self.nvars: c}
            for i, (ei, d) in enumerate(zip(e, deltas)):
                if ei == 0:
                    continue
                if d == 0:
                    nxt: dict[KExp, Fraction] = {}
                    for pe, pc in partial.items():
                        ne = list(pe)
                        ne[i] += ei
                        nxt[tuple(ne)] = pc
                    partial = nxt
                    continue
                powers = [Fraction(comb(ei, j)) * d**j for j in range(ei + 1)]
                nxt = {}
                for pe, pc in partial.items():
                    for j, w in enumerate(powers):
                        ne = list(pe)
                        ne[i] += ei - j
                        ne = tuple(ne)
                        s = nxt.get(ne, 0) + pc * w
                        if s:
                            nxt[ne] = s
                        else:
                            nxt.pop(ne, None)
                partial = nxt
            for pe, pc in partial.items():
                s = out.get(pe, 0) + pc
                if s:
                    out[pe] = s
                else:
                    out.pop(pe, None)
        return KPoly(self.nvars, out)

    def subst_linear(self, j: int, repl: "KPoly") -> "KPoly":
        """Substitute kappa_j = repl (repl must not involve kappa_j)."""
        out = KPoly.zero(self.nvars)
        powers: dict[int, KPoly] = {0: KPoly.const(self.nvars, 1)}

        def power(n: int) -> KPoly:
            if n not in powers:
                powers[n] = power(n - 1) * repl
            return powers[n]

        for e, c in self.terms.items():
            ej = e[j]
            rest = list(e)
            rest[j] = 0
            base = KPoly(self.nvars, {tuple(rest): c})
            out = out + (base * power(ej) if ej else base)
        return out

    # -- division ------------------------------------------------------------

    def divmod_by(self, den: "KPoly") -> tuple["KPoly", "KPoly"]:
        """Single-divisor multivariate division: self = q*den + r.

        No monomial of r is divisible by den's leading monomial, so r == 0
        exactly when den divides self.
        """
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = den.leading()
        q: dict[KExp, Fraction] = {}
        r: dict[KExp, Fraction] = {}
        work = dict(self.terms)
        while work:
            e = max(work, key=grlex_key)
            c = work.pop(e)
            diff = tuple(a - b for a, b in zip(e, le))
            if any(d < 0 for d in diff):
                r[e] = c
                continue
            qc = c / lc
            q[diff] = q.get(diff, Fraction(0)) + qc
            for de, dc in den.terms.items():
                if de == le:
                    continue
                te = tuple(a + b for a, b in zip(diff, de))
                s = work.get(te, 0) - qc * dc
                if s:
                    work[te] = s
                else:
                    work.pop(te, None)
        return KPoly(self.nvars, q), KPoly(self.nvars, r)

    def content_and_primitive(self) -> tuple[Fraction, "KPoly"]:
        """Write self = c * p with p having coprime integer coefficients and a
        positive leading (grlex) coefficient.  Zero returns (0, 0)."""
        if not self.terms:
            return Fraction(0), self
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        _, lc = self.leading()
        if lc < 0:
            content = -content
        prim = KPoly(self.nvars, {e: c / content for e, c in self.terms.items()})
        return content, prim

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __repr__(self):
        from .serialize import kpoly_text

        return kpoly_text(self)
