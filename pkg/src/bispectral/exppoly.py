"""Laurent polynomials in the exponential symbols u_i = e^{xbar_i / 2}.

An ExpMonomial is an integer exponent tuple in that half-grain: the monomial
with exponents (2, -2) is e^{xbar_1 - xbar_2}.  The global grain is 2 because
configurations contain half-vectors (f_i +- f_j)/2 whose x-pairings are half
sums of the xbar_i.  For a vector tau given by basis coordinates t_i,
e^{(tau, x)} has exponents (2 t_1, ..., 2 t_N), which the grain keeps integer.

ExpPoly maps exponent tuples to nonzero Fractions.  The canonical term order
is plain lexicographic on the exponent tuple (it is translation invariant, so
it is compatible with multiplication even for negative exponents).
"""

from __future__ import annotations

from fractions import Fraction

UExp = tuple[int, ...]


def expmono_from_vector(tau) -> UExp:
    """Grain-2 exponent tuple of e^{(tau, x)}; rejects off-lattice vectors."""
    out = []
    for t in tau:
        g = 2 * Fraction(t)
        if g.denominator != 1:
            raise ValueError(f"vector coordinate {t} is outside the grain-2 lattice")
        out.append(int(g))
    return tuple(out)


class ExpPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: dict[UExp, Fraction] | None = None):
        self.nvars = nvars
        self.terms = terms if terms is not None else {}
        self._hash = None

    @classmethod
    def zero(cls, nvars: int) -> "ExpPoly":
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> "ExpPoly":
        c = Fraction(c)
        if c == 0:
            return cls(nvars, {})
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: UExp, c=1) -> "ExpPoly":
        c = Fraction(c)
        if c == 0:
            return cls(len(exps), {})
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def from_vector(cls, tau, c=1) -> "ExpPoly":
        """c * e^{(tau, x)} as a one-term ExpPoly."""
        return cls.monomial(expmono_from_vector(tau), c)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: Fraction(1)}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, ExpPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return ExpPoly(self.nvars, out)

    def __neg__(self) -> "ExpPoly":
        return ExpPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + (-other)

    def __mul__(self, other: "ExpPoly") -> "ExpPoly":
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out: dict[UExp, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return ExpPoly(self.nvars, out)

    def scale(self, c) -> "ExpPoly":
        c = Fraction(c)
        if c == 0:
            return ExpPoly.zero(self.nvars)
        return ExpPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def mul_monomial(self, exps: UExp, c=1) -> "ExpPoly":
        c = Fraction(c)
        if c == 0:
            return ExpPoly.zero(self.nvars)
        return ExpPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): c * v for e, v in self.terms.items()},
        )

    def __pow__(self, n: int) -> "ExpPoly":
        out = ExpPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            if n > 1:
                base = base * base
            n >>= 1
        return out

    def direction_scaled(self, factors) -> "ExpPoly":
        """Scale each monomial by a linear function of its exponents:
        term with exponents e gets multiplied by sum_i e_i * factors[i].

        With factors[i] = w_i / 2 this is the directional derivative of the
        pure-x part in direction f_i (the exponent e_i counts halves of
        xbar_i, so the monomial derivative factor t_i w_i equals e_i w_i / 2).
        """
        out: dict[UExp, Fraction] = {}
        for e, c in self.terms.items():
            f = sum((ei * fi for ei, fi in zip(e, factors)), Fraction(0))
            if f:
                out[e] = c * f
        return ExpPoly(self.nvars, out)

    def min_exps(self) -> UExp:
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def divmod_by(self, den: "ExpPoly") -> tuple["ExpPoly", "ExpPoly"]:
        """Laurent division: self = q*den + r with r == 0 iff den divides self.

        Both operands are translated to ordinary polynomials (shifting all
        exponents to be nonnegative) and divided there; exact divisibility is
        unchanged because Laurent monomials are units.
        """
        if den.is_zero():
            raise ZeroDivisionError("division by zero ExpPoly")
        if self.is_zero():
            return self, self
        smin = self.min_exps()
        dmin = den.min_exps()
        num_t = {tuple(a - b for a, b in zip(e, smin)): c for e, c in self.terms.items()}
        den_t = {tuple(a - b for a, b in zip(e, dmin)): c for e, c in den.terms.items()}
        le = max(den_t)
        lc = den_t[le]
        q: dict[UExp, Fraction] = {}
        r: dict[UExp, Fraction] = {}
        work = num_t
        while work:
            e = max(work)
            c = work.pop(e)
            diff = tuple(a - b for a, b in zip(e, le))
            if any(d < 0 for d in diff):
                r[e] = c
                continue
            qc = c / lc
            q[diff] = q.get(diff, Fraction(0)) + qc
            for de, dc in den_t.items():
                if de == le:
                    continue
                te = tuple(a + b for a, b in zip(diff, de))
                s = work.get(te, 0) - qc * dc
                if s:
                    work[te] = s
                else:
                    work.pop(te, None)
        shift_back = tuple(a - b for a, b in zip(smin, dmin))
        qpoly = ExpPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, shift_back)): c for e, c in q.items() if c},
        )
        rpoly = ExpPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, smin)): c for e, c in r.items() if c},
        )
        return qpoly, rpoly

    def exact_div(self, den: "ExpPoly") -> "ExpPoly":
        q, r = self.divmod_by(den)
        if not r.is_zero():
            raise ValueError("ExpPoly division is not exact")
        return q

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __repr__(self):
        from .serialize import exppoly_text

        return exppoly_text(self)


def sinh_factor(nvars: int, tau) -> ExpPoly:
    """e^{(tau,x)} - e^{-(tau,x)}, i.e. 2*sinh(tau, x), as an ExpPoly."""
    e = expmono_from_vector(tau)
    ne = tuple(-a for a in e)
    if e == ne:
        return ExpPoly.zero(nvars)
    return ExpPoly(nvars, {e: Fraction(1), ne: Fraction(-1)})


def cosh_factor(nvars: int, tau) -> ExpPoly:
    """e^{(tau,x)} + e^{-(tau,x)} as an ExpPoly."""
    e = expmono_from_vector(tau)
    ne = tuple(-a for a in e)
    if e == ne:
        return ExpPoly.const(nvars, 2)
    return ExpPoly(nvars, {e: Fraction(1), ne: Fraction(1)})
