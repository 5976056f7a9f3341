"""The universal function carrier: polynomials in k with exponential
coefficients, times an implicit e^{(k,x)}.

An Element maps spectral exponent tuples to ExpPoly coefficients over a fixed
WeightedBasis.  It represents

    ( sum_mono  coeff_mono(x) * kappa^mono ) * e^{(k, x)},

the shape shared by phi_0, every chain function phi_s, the numerator of the
Baker-Akhiezer function, and residuals of all identity checks.  The implicit
exponential factor only matters to the directional derivative (which picks up
kappa_i from it) and to function shifts (which emit e^{(tau,x)} monomials,
applied explicitly by callers).
"""

from __future__ import annotations

from fractions import Fraction

from .basis import Vec, WeightedBasis
from .errors import NotDivisible, ZeroVector
from .exppoly import ExpPoly
from .kpoly import KExp, KPoly, grlex_key


def restriction_pivot(alpha: Vec) -> int:
    """Deterministic pivot for restriction to (k, alpha) = 0: the largest
    index with a nonzero coordinate."""
    for j in range(len(alpha) - 1, -1, -1):
        if alpha[j] != 0:
            return j
    raise ZeroVector("cannot restrict to the hyperplane of the zero vector")


def restriction_replacement(nvars: int, alpha: Vec, const=0) -> tuple[int, KPoly]:
    """Pivot index j and the polynomial to substitute for kappa_j so that
    sum_i a_i kappa_i + const = 0 holds identically."""
    j = restriction_pivot(alpha)
    coeffs = [Fraction(0)] * nvars
    for i, a in enumerate(alpha):
        if i != j and a != 0:
            coeffs[i] = -Fraction(a) / Fraction(alpha[j])
    return j, KPoly.linear_form(coeffs, -Fraction(const) / Fraction(alpha[j]))


class Element:
    __slots__ = ("basis", "terms")

    def __init__(self, basis: WeightedBasis, terms: dict[KExp, ExpPoly] | None = None):
        self.basis = basis
        self.terms = terms if terms is not None else {}

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, basis: WeightedBasis) -> "Element":
        return cls(basis, {})

    @classmethod
    def one(cls, basis: WeightedBasis) -> "Element":
        """The pure plane wave e^{(k,x)}."""
        n = basis.dim
        return cls(basis, {(0,) * n: ExpPoly.const(n, 1)})

    @classmethod
    def from_kpoly(cls, p: KPoly, basis: WeightedBasis) -> "Element":
        one = ExpPoly.const(basis.dim, 1)
        return cls(basis, {e: one.scale(c) for e, c in p.terms.items()})

    @classmethod
    def from_parts(cls, p: KPoly, coeff: ExpPoly, basis: WeightedBasis) -> "Element":
        """p(k) * coeff(x) * e^{(k,x)}."""
        out: dict[KExp, ExpPoly] = {}
        if not coeff.is_zero():
            for e, c in p.terms.items():
                out[e] = coeff.scale(c)
        return cls(basis, out)

    # -- queries -------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.basis, frozenset((e, c) for e, c in self.terms.items())))

    def spectral_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def num_terms(self) -> int:
        return sum(len(c.terms) for c in self.terms.values())

    def homogeneous_part(self, d: int) -> "Element":
        return Element(self.basis, {e: c for e, c in self.terms.items() if sum(e) == d})

    def leading_part(self) -> "Element":
        return self.homogeneous_part(self.spectral_degree())

    def coefficient(self, mono: KExp) -> ExpPoly:
        return self.terms.get(tuple(mono), ExpPoly.zero(self.basis.dim))

    # -- arithmetic --------------------------------------------------------------

    def _merged(self, other: "Element", negate: bool) -> "Element":
        out = dict(self.terms)
        for e, c in other.terms.items():
            c = -c if negate else c
            s = out[e] + c if e in out else c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return Element(self.basis, out)

    def __add__(self, other: "Element") -> "Element":
        return self._merged(other, False)

    def __sub__(self, other: "Element") -> "Element":
        return self._merged(other, True)

    def __neg__(self) -> "Element":
        return Element(self.basis, {e: -c for e, c in self.terms.items()})

    def scale(self, c) -> "Element":
        c = Fraction(c)
        if c == 0:
            return Element.zero(self.basis)
        return Element(self.basis, {e: v.scale(c) for e, v in self.terms.items()})

    def mul_kpoly(self, p: KPoly) -> "Element":
        out: dict[KExp, ExpPoly] = {}
        for e1, coeff in self.terms.items():
            for e2, c in p.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                add = coeff.scale(c)
                s = out[e] + add if e in out else add
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return Element(self.basis, out)

    def mul_exppoly(self, f: ExpPoly) -> "Element":
        if f.is_zero():
            return Element.zero(self.basis)
        out = {}
        for e, coeff in self.terms.items():
            s = coeff * f
            if not s.is_zero():
                out[e] = s
        return Element(self.basis, out)

    def mul_expmono(self, exps, c=1) -> "Element":
        return Element(
            self.basis,
            {e: coeff.mul_monomial(tuple(exps), c) for e, coeff in self.terms.items()},
        )

    # -- the symbolic calculus -----------------------------------------------------

    def shift_substitute(self, tau: Vec) -> "Element":
        """kappa_i -> kappa_i + t_i w_i in every spectral monomial.

        This is the pure spectral substitution f(k) -> f(k + tau) on the
        polynomial part; the exponential bookkeeping e^{(tau,x)} of a genuine
        function shift is applied separately via mul_expmono.
        """
        deltas = self.basis.shift_deltas(tau)
        if all(d == 0 for d in deltas):
            return self
        n = self.basis.dim
        out: dict[KExp, ExpPoly] = {}
        cache: dict[KExp, KPoly] = {}
        for e, coeff in self.terms.items():
            expansion = cache.get(e)
            if expansion is None:
                expansion = KPoly(n, {e: Fraction(1)}).shift(deltas)
                cache[e] = expansion
            for ne, c in expansion.terms.items():
                add = coeff.scale(c)
                s = out[ne] + add if ne in out else add
                if s.is_zero():
                    out.pop(ne, None)
                else:
                    out[ne] = s
        return Element(self.basis, out)

    def restrict(self, alpha: Vec, const=0) -> "Element":
        """Restriction to the (affine) hyperplane (k, alpha) + const = 0,
        substituting the pivot variable exactly."""
        n = self.basis.dim
        j, repl = restriction_replacement(n, alpha, const)
        out = Element.zero(self.basis)
        powers: dict[int, KPoly] = {0: KPoly.const(n, 1)}

        def power(m: int) -> KPoly:
            if m not in powers:
                powers[m] = power(m - 1) * repl
            return powers[m]

        acc: dict[KExp, ExpPoly] = {}
        for e, coeff in self.terms.items():
            ej = e[j]
            rest = list(e)
            rest[j] = 0
            base = KPoly(n, {tuple(rest): Fraction(1)}) * power(ej)
            for ne, c in base.terms.items():
                add = coeff.scale(c)
                s = acc[ne] + add if ne in acc else add
                if s.is_zero():
                    acc.pop(ne, None)
                else:
                    acc[ne] = s
        out.terms.update(acc)
        return out

    def dderiv(self, i: int) -> "Element":
        """Directional derivative along basis vector f_i.

        The implicit e^{(k,x)} contributes kappa_i times the Element; each
        exponential monomial contributes its pairing (tau, f_i) = t_i w_i.
        """
        n = self.basis.dim
        w = self.basis.weights[i]
        out: dict[KExp, ExpPoly] = {}
        for e, coeff in self.terms.items():
            # kappa_i * coeff
            e_up = list(e)
            e_up[i] += 1
            e_up = tuple(e_up)
            s = out[e_up] + coeff if e_up in out else coeff
            if s.is_zero():
                out.pop(e_up, None)
            else:
                out[e_up] = s
            # exponent factor on the x-part
            factors = [Fraction(0)] * n
            factors[i] = w / 2
            d = coeff.direction_scaled(factors)
            if not d.is_zero():
                s = out[e] + d if e in out else d
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return Element(self.basis, out)

    def laplacian(self) -> "Element":
        """sum_i w_i^{-1} (d/d f_i)^2, the invariant Laplace operator."""
        out = Element.zero(self.basis)
        for i in range(self.basis.dim):
            out = out + self.dderiv(i).dderiv(i).scale(Fraction(1) / self.basis.weights[i])
        return out

    def exact_divide(self, den: KPoly) -> "Element":
        """Exact division by a spectral polynomial; raises NotDivisible with
        the offending remainder otherwise."""
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = den.leading()
        q: dict[KExp, ExpPoly] = {}
        work = dict(self.terms)
        remainder: dict[KExp, ExpPoly] = {}
        while work:
            e = max(work, key=grlex_key)
            coeff = work.pop(e)
            diff = tuple(a - b for a, b in zip(e, le))
            if any(d < 0 for d in diff):
                remainder[e] = coeff
                continue
            qc = coeff.scale(Fraction(1) / lc)
            q[diff] = q[diff] + qc if diff in q else qc
            for de, dc in den.terms.items():
                if de == le:
                    continue
                te = tuple(a + b for a, b in zip(diff, de))
                sub = qc.scale(dc)
                s = work[te] - sub if te in work else -sub
                if s.is_zero():
                    work.pop(te, None)
                else:
                    work[te] = s
        if remainder:
            raise NotDivisible(
                "element is not divisible by the given polynomial",
                remainder=Element(self.basis, remainder),
            )
        return Element(self.basis, {e: c for e, c in q.items() if not c.is_zero()})

    def exact_divide_exppoly(self, den: ExpPoly) -> "Element":
        """Divide every exponential coefficient exactly by den."""
        out = {}
        for e, coeff in self.terms.items():
            quot, rem = coeff.divmod_by(den)
            if not rem.is_zero():
                raise NotDivisible(
                    "exponential coefficient is not divisible",
                    remainder=Element(self.basis, {e: rem}),
                )
            out[e] = quot
        return Element(self.basis, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __repr__(self):
        from .serialize import element_text

        return element_text(self)


def shift_substitute(obj, tau: Vec, basis: WeightedBasis | None = None):
    """f(k) -> f(k + tau) on an Element or a KPoly (the latter needs a basis
    for the weights)."""
    if isinstance(obj, Element):
        return obj.shift_substitute(tau)
    if basis is None:
        raise TypeError("shifting a KPoly requires the weighted basis")
    return obj.shift(basis.shift_deltas(tau))


def restrict_to_hyperplane(obj, alpha: Vec, const=0):
    """Restriction of an Element or KPoly to (k, alpha) + const = 0."""
    if isinstance(obj, Element):
        return obj.restrict(alpha, const)
    j, repl = restriction_replacement(obj.nvars, alpha, const)
    return obj.subst_linear(j, repl)


def directional_derivative(e: Element, i: int) -> Element:
    return e.dderiv(i)


def exact_divide(e: Element, den: KPoly) -> Element:
    return e.exact_divide(den)
