"""Difference operators in the spectral variables and the concrete builders.

A DifferenceOperator is a finite sum  sum_tau  a_tau(k) T^tau  in left-normal
form: rational-function coefficients on the left, shifts T^tau f(k) = f(k+tau)
on the right, at most one term per shift vector.  Application to an Element
uses T^tau (P e^{(k,x)}) = P(k+tau) e^{(tau,x)} e^{(k,x)}: the shifted terms
are combined over the least common denominator of the coefficients and the
result is divided out exactly, so a surviving pole raises NotHolomorphic with
the offending remainder (the executable form of the holomorphy propositions).
"""

from __future__ import annotations

from fractions import Fraction

from .basis import Vec, WeightedBasis, vadd, vec, vneg, vscale
from .configs import Configuration, build_family
from .element import Element
from .errors import InvalidParams, NotDivisible, NotHolomorphic, NotMinuscule
from .exppoly import expmono_from_vector
from .kpoly import KPoly
from .ratfun import RationalFn


class DifferenceOperator:
    __slots__ = ("basis", "terms")

    def __init__(self, basis: WeightedBasis, terms: dict[Vec, RationalFn] | None = None):
        self.basis = basis
        self.terms = {}
        if terms:
            for shift, coeff in terms.items():
                if not coeff.is_zero():
                    self.terms[shift] = coeff

    @classmethod
    def zero(cls, basis: WeightedBasis) -> "DifferenceOperator":
        return cls(basis, {})

    @classmethod
    def multiplication(cls, basis: WeightedBasis, p: KPoly) -> "DifferenceOperator":
        """The multiplication operator f(k) -> p(k) f(k)."""
        zero_shift = vec([0] * basis.dim)
        return cls(basis, {zero_shift: RationalFn.from_kpoly(p)})

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)

    def scale(self, c) -> "DifferenceOperator":
        return DifferenceOperator(
            self.basis, {s: coeff.scale(c) for s, coeff in self.terms.items()}
        )

    def __add__(self, other: "DifferenceOperator") -> "DifferenceOperator":
        out = dict(self.terms)
        for s, coeff in other.terms.items():
            out[s] = out[s] + coeff if s in out else coeff
        return DifferenceOperator(self.basis, out)

    def __neg__(self) -> "DifferenceOperator":
        return DifferenceOperator(self.basis, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "DifferenceOperator") -> "DifferenceOperator":
        return self + (-other)

    def reflect(self, j: int) -> "DifferenceOperator":
        """Conjugate by the reflection kappa_j -> -kappa_j (coefficients
        substituted, shift coordinate j negated)."""
        n = self.basis.dim
        repl = KPoly.variable(n, j).scale(-1)
        out: dict[Vec, RationalFn] = {}
        for s, coeff in self.terms.items():
            ns = list(s)
            ns[j] = -ns[j]
            out[tuple(ns)] = coeff.subst_var(j, repl)
        return DifferenceOperator(self.basis, out)

    def __repr__(self):
        from .serialize import operator_text

        return operator_text(self)


def sorted_op_terms(op: DifferenceOperator):
    return sorted(op.terms.items(), key=lambda kv: kv[0])


def operator_equal(a: DifferenceOperator, b: DifferenceOperator) -> bool:
    """Exact equality, coefficient by coefficient, via cross-multiplication."""
    if set(a.terms) != set(b.terms):
        missing = set(a.terms) ^ set(b.terms)
        for s in missing:
            coeff = a.terms.get(s) or b.terms.get(s)
            if not coeff.is_zero():
                return False
    for s, coeff in a.terms.items():
        other = b.terms.get(s)
        if other is None:
            if not coeff.is_zero():
                return False
        elif not coeff.equals(other):
            return False
    return True


def apply_operator(op: DifferenceOperator, e: Element) -> Element:
    """(D f) for f = e, as an Element; raises NotHolomorphic on a true pole."""
    basis = op.basis
    if not op.terms or e.is_zero():
        return Element.zero(basis)
    lcm: dict[KPoly, int] = {}
    for coeff in op.terms.values():
        for f, p in coeff.den.items():
            if lcm.get(f, 0) < p:
                lcm[f] = p
    acc = Element.zero(basis)
    for shift, coeff in op.terms.items():
        cof = coeff.num
        for f, p in lcm.items():
            extra = p - coeff.den.get(f, 0)
            if extra:
                cof = cof * f**extra
        part = e.shift_substitute(shift).mul_kpoly(cof)
        part = part.mul_expmono(expmono_from_vector(shift))
        acc = acc + part
    for f, p in lcm.items():
        for _ in range(p):
            try:
                acc = acc.exact_divide(f)
            except NotDivisible as exc:
                raise NotHolomorphic(
                    f"operator application has a pole along {f!r}",
                    remainder=exc.remainder,
                ) from exc
    return acc


def compose(a: DifferenceOperator, b: DifferenceOperator) -> DifferenceOperator:
    """(a_tau T^tau)(b_sigma T^sigma) = a_tau(k) b_sigma(k+tau) T^{tau+sigma}."""
    basis = a.basis
    out: dict[Vec, RationalFn] = {}
    for tau, ca in a.terms.items():
        deltas = basis.shift_deltas(tau)
        for sigma, cb in b.terms.items():
            coeff = ca * cb.shift(deltas)
            s = vadd(tau, sigma)
            out[s] = out[s] + coeff if s in out else coeff
    return DifferenceOperator(basis, out)


def commutator(a: DifferenceOperator, b: DifferenceOperator) -> DifferenceOperator:
    return compose(a, b) - compose(b, a)


def ad_power(d: DifferenceOperator, p: KPoly, r: int) -> DifferenceOperator:
    """ad_D^r applied to the multiplication operator p(k)."""
    x = DifferenceOperator.multiplication(d.basis, p)
    for _ in range(r):
        x = commutator(d, x)
    return x


# -- concrete builders -------------------------------------------------------------


def _pairing_form(basis: WeightedBasis, alpha: Vec) -> KPoly:
    """(k, alpha) = sum_i a_i kappa_i as a KPoly (weight-free in kappa)."""
    return KPoly.linear_form([Fraction(a) for a in alpha])


def weyl_orbit(basis: WeightedBasis, roots: list[Vec], pi: Vec) -> list[Vec]:
    """Orbit of pi under the group generated by the reflections in `roots`,
    via breadth-first closure; deterministic order (sorted tuples)."""
    seen = {pi}
    frontier = [pi]
    while frontier:
        new = []
        for tau in frontier:
            for alpha in roots:
                c = 2 * basis.inner(tau, alpha) / basis.norm(alpha)
                if c == 0:
                    continue
                img = tuple(t - c * a for t, a in zip(tau, alpha))
                if img not in seen:
                    seen.add(img)
                    new.append(img)
        frontier = new
    return sorted(seen)


def build_macdonald(
    system: Configuration, pi: Vec, check_minuscule: bool = True
) -> DifferenceOperator:
    """The rational Macdonald operator for root-system data and a minuscule
    coweight:  D = sum_{tau in W pi} prod_{alpha: (alpha,tau)=1} (1 - m_alpha/(alpha,k)) T^tau,
    summing over distinct orbit points once each."""
    basis = system.basis
    pi = vec(pi)
    pairs = []
    for v, m in system.entries:
        pairs.append((v, m))
        pairs.append((vneg(v), m))
    if check_minuscule:
        for alpha, _ in pairs:
            val = basis.inner(pi, alpha)
            if val not in (0, 1, -1):
                raise NotMinuscule(f"(pi, {alpha}) = {val} is not in {{0, +-1}}")
    terms: dict[Vec, RationalFn] = {}
    for tau in weyl_orbit(basis, system.vectors(), pi):
        coeff = RationalFn.const(basis.dim, 1)
        for alpha, m in pairs:
            if basis.inner(alpha, tau) == 1:
                coeff = coeff * RationalFn.one_minus(m, _pairing_form(basis, alpha))
        terms[tau] = coeff
    return DifferenceOperator(basis, terms)


def macdonald_dual_a(n: int, m) -> tuple[Configuration, Vec]:
    """Dual-scaled A_n data for the Macdonald operator: vectors (e_i - e_j)/2
    with multiplicity m, and the coweight 2 e_1 (orbit {2 e_i}), so that the
    shifts land on the 2 e_i lattice used by the A_{n,1} operator."""
    base = _scaled_root_a(n, m, Fraction(1, 2))
    pi = vec([2] + [0] * n)
    return base, pi


def _scaled_root_a(n: int, m, scale) -> Configuration:
    cfg = build_family("rootA", n=n, m=m)
    entries = [(vscale(scale, v), mult) for v, mult in cfg.entries]
    return Configuration(cfg.basis, entries, None)


def macdonald_dual_b(n: int, m) -> tuple[Configuration, Vec]:
    """B_n = (1/2) C_n^vee data over the C_n(m,m) weighted basis: vectors
    f_i/(2m+1) with multiplicity m and (f_i +- f_j)/(2m+1) with multiplicity 1,
    coweight pi = f_1."""
    m = Fraction(m)
    if n < 2 or m <= 0 or m.denominator != 1:
        raise InvalidParams("macdonald_dual_b needs n >= 2 and integer m >= 1")
    w = 2 * m + 1
    basis = WeightedBasis([w] * n)
    s = Fraction(1, w)
    entries = []
    for i in range(n):
        entries.append((unit_frac(n, i, s), m))
    for i in range(n):
        for j in range(i + 1, n):
            for sgn in (1, -1):
                v = [Fraction(0)] * n
                v[i], v[j] = s, sgn * s
                entries.append((tuple(v), 1))
    cfg = Configuration(basis, entries, None)
    pi = unit_frac(n, 0, 1)
    return cfg, pi


def unit_frac(dim: int, i: int, scale) -> Vec:
    v = [Fraction(0)] * dim
    v[i] = Fraction(scale)
    return tuple(v)


def build_a_n1_op(n: int, m) -> DifferenceOperator:
    """The A_{n,1}(m) rational Macdonald-type operator: n shifts by 2 e_i plus
    one shift by 2 ebar_{n+1}, with the product coefficients of the deformed
    family."""
    m = Fraction(m)
    if n < 2 or m <= 0 or m.denominator != 1:
        raise InvalidParams("build_a_n1_op needs n >= 2 and a positive integer m")
    cfg = build_family("An1", n=n, m=m)
    basis = cfg.basis
    dim = basis.dim
    k = [KPoly.variable(dim, i) for i in range(dim)]
    one_m = KPoly.const(dim, 1 - m)
    terms: dict[Vec, RationalFn] = {}
    for i in range(n):
        coeff = RationalFn.one_minus(2, k[i] - k[n] + one_m)
        for j in range(n):
            if j != i:
                coeff = coeff * RationalFn.one_minus(2 * m, k[i] - k[j])
        terms[unit_frac(dim, i, 2)] = coeff
    coeff = RationalFn.const(dim, Fraction(1, m))
    for i in range(n):
        coeff = coeff * RationalFn.one_minus(-2 * m, k[i] - k[n] + one_m)
    terms[unit_frac(dim, n, 2)] = coeff
    return DifferenceOperator(basis, terms)


def build_c_nlm_op(n: int, l, m) -> DifferenceOperator:
    """The deformed C_n(l, m) operator: shifts +-f_i with coefficients
    a_i^+- = prod_j a_ij^+- in barred coordinates."""
    l, m = Fraction(l), Fraction(m)
    cfg = build_family("Cnlm", n=n, l=l, m=m)
    basis = cfg.basis
    k = [KPoly.variable(n, i) for i in range(n)]
    lm = KPoly.const(n, l - m)
    terms: dict[Vec, RationalFn] = {}
    for i in range(n):
        for sgn in (1, -1):
            ki = k[i].scale(sgn)
            coeff = RationalFn.const(n, 1)
            for j in range(n):
                if i < n - 1 and j < n - 1 and j != i:
                    coeff = coeff * RationalFn.one_minus(2 * l + 1, ki + k[j])
                    coeff = coeff * RationalFn.one_minus(2 * l + 1, ki - k[j])
                elif i < n - 1 and j == i:
                    coeff = coeff.scale(Fraction(1, 2 * m + 1))
                    coeff = coeff * RationalFn.one_minus((2 * m + 1) * l, ki)
                elif i < n - 1 and j == n - 1:
                    coeff = coeff * RationalFn.one_minus(2 * m + 1, ki + k[n - 1] - lm)
                    coeff = coeff * RationalFn.one_minus(2 * m + 1, ki - k[n - 1] - lm)
                elif i == n - 1 and j < n - 1:
                    coeff = coeff * RationalFn.one_minus(2 * l + 1, ki + k[j] + lm)
                    coeff = coeff * RationalFn.one_minus(2 * l + 1, ki - k[j] + lm)
                else:  # i == j == n-1
                    coeff = coeff.scale(Fraction(1, 2 * l + 1))
                    coeff = coeff * RationalFn.one_minus((2 * l + 1) * m, ki)
            terms[unit_frac(n, i, sgn)] = coeff
    return DifferenceOperator(basis, terms)


def build_a_n2_op(n: int, m) -> DifferenceOperator:
    """The A_{n,2}(m) operator, built from its sandwich form
    (1/ebar_i^2) prod_j (k - m_ij a_ij, a_ij) T_i (1 / prod_j (k - a_ij, a_ij))
    and normalized to left-normal form by shifting the right-hand product."""
    cfg = build_family("An2", n=n, m=m)
    m = Fraction(m)
    basis = cfg.basis
    dim = basis.dim
    terms: dict[Vec, RationalFn] = {}
    for i in range(dim):
        shift = unit_frac(dim, i, 2)
        deltas = basis.shift_deltas(shift)
        coeff = RationalFn.const(dim, Fraction(1) / basis.weights[i])
        for j in range(dim):
            if j == i:
                continue
            alpha = [Fraction(0)] * dim
            alpha[i], alpha[j] = Fraction(1), Fraction(-1)
            alpha = tuple(alpha)
            m_ij = m if (1 <= i <= n - 1 and 1 <= j <= n - 1) else Fraction(1)
            form = _pairing_form(basis, alpha)
            nrm = basis.norm(alpha)
            num = form - KPoly.const(dim, m_ij * nrm)
            den = (form - KPoly.const(dim, nrm)).shift(deltas)
            coeff = coeff * RationalFn.quotient(num, den)
        terms[shift] = coeff
    return DifferenceOperator(basis, terms)


def operator_for(config: Configuration) -> DifferenceOperator:
    """The family operator used by the chain construction."""
    fam = config.family or {}
    name = fam.get("family")
    if name == "Cnlm":
        return build_c_nlm_op(fam["n"], Fraction(fam["l"]), Fraction(fam["m"]))
    if name == "rootC":
        return build_c_nlm_op(fam["n"], Fraction(fam["m"]), Fraction(fam["m"]))
    if name == "An1":
        return build_a_n1_op(fam["n"], Fraction(fam["m"]))
    if name == "An2":
        return build_a_n2_op(fam["n"], Fraction(fam["m"]))
    if name == "rootA":
        data, pi = macdonald_dual_a(fam["n"], Fraction(fam["m"]))
        return build_macdonald(data, pi)
    from .errors import UnsupportedFamily

    raise UnsupportedFamily(f"no operator wired for configuration {config!r}")
