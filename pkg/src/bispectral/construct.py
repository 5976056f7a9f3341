"""Iterative construction of the Baker-Akhiezer function.

Starting from phi_0 = prod_alpha prod_{s<=m_alpha} (k+s alpha, alpha)(k-s alpha, alpha) e^{(k,x)},
the chain phi_{s+1} = (D - lambda(x)) phi_s drops the spectral degree by
exactly one per step; after M = sum m_alpha steps the leading part factors as
c(x) * prod (k,alpha)^{m_alpha}, and one more step gives zero exactly (the
bispectral difference equation).  The function itself is psi = phi_M / c(x).

c(x) is *extracted* from the computed leading coefficient and cross-checked
against the closed product forms; psi is kept as the exact pair
(psi_num = phi_M, normalizer = c) because its exponential coefficients are
coth-type ratios, not Laurent polynomials, so c cannot be divided into the
coefficient ring.  Every verifier consumes the pair and clears c exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .basis import Vec, WeightedBasis, vec, vsub
from .configs import Configuration
from .element import Element
from .errors import (
    ChainDegreeViolation,
    NonzeroTail,
    NormalizerMismatch,
    RecurrenceMismatch,
    UnsupportedFamily,
)
from .exppoly import ExpPoly, sinh_factor
from .kpoly import KPoly
from .operators import (
    DifferenceOperator,
    apply_operator,
    build_macdonald,
    macdonald_dual_a,
    operator_for,
    weyl_orbit,
)


def pairing_form(basis: WeightedBasis, alpha: Vec) -> KPoly:
    return KPoly.linear_form([Fraction(a) for a in alpha])


def leading_product(config: Configuration) -> KPoly:
    """prod_alpha (k, alpha)^{m_alpha}; multiplicities must be integers."""
    out = KPoly.const(config.basis.dim, 1)
    for v, m in config.entries:
        out = out * pairing_form(config.basis, v) ** int(m)
    return out


def initial_phi0(config: Configuration) -> Element:
    """phi_0 as an Element (x-independent coefficients)."""
    n = config.basis.dim
    q = KPoly.const(n, 1)
    for v, m in config.entries:
        if Fraction(m).denominator != 1:
            raise UnsupportedFamily("phi_0 needs integer multiplicities")
        form = pairing_form(config.basis, v)
        nrm = config.basis.norm(v)
        for s in range(1, int(m) + 1):
            c = KPoly.const(n, s * nrm)
            q = q * (form + c) * (form - c)
    return Element.from_kpoly(q, config.basis)


def eigenvalue_lambda(config: Configuration) -> ExpPoly:
    """The x-side eigenvalue lambda(x) matched to the family operator."""
    fam = config.family or {}
    name = fam.get("family")
    n_exp = config.basis.dim
    if name in ("Cnlm", "rootC"):
        n = fam["n"]
        m = Fraction(fam["m"])
        l = Fraction(fam.get("l", fam["m"]))
        out = ExpPoly.zero(n_exp)
        for j in range(n - 1):
            mono = [0] * n_exp
            mono[j] = 2
            out = out + ExpPoly.monomial(tuple(mono), Fraction(1, 2 * m + 1))
            out = out + ExpPoly.monomial(tuple(-x for x in mono), Fraction(1, 2 * m + 1))
        mono = [0] * n_exp
        mono[n - 1] = 2
        out = out + ExpPoly.monomial(tuple(mono), Fraction(1, 2 * l + 1))
        out = out + ExpPoly.monomial(tuple(-x for x in mono), Fraction(1, 2 * l + 1))
        return out
    if name == "An1":
        n = fam["n"]
        m = Fraction(fam["m"])
        out = ExpPoly.zero(n_exp)
        for i in range(n):
            mono = [0] * n_exp
            mono[i] = 4
            out = out + ExpPoly.monomial(tuple(mono))
        mono = [0] * n_exp
        mono[n] = 4
        return out + ExpPoly.monomial(tuple(mono), Fraction(1, m))
    if name == "An2":
        out = ExpPoly.zero(n_exp)
        for i in range(n_exp):
            mono = [0] * n_exp
            mono[i] = 4
            out = out + ExpPoly.monomial(tuple(mono), Fraction(1) / config.basis.weights[i])
        return out
    if name == "rootA":
        data, pi = macdonald_dual_a(fam["n"], Fraction(fam["m"]))
        out = ExpPoly.zero(n_exp)
        for tau in weyl_orbit(data.basis, data.vectors(), pi):
            out = out + ExpPoly.from_vector(tau)
        return out
    raise UnsupportedFamily(f"no eigenvalue wired for configuration {config!r}")


def normalizer_closed_form(config: Configuration):
    """The paper's closed product form for c(x), or None where only the
    extracted value is trusted (root-system path)."""
    fam = config.family or {}
    name = fam.get("family")
    n_exp = config.basis.dim
    M = int(config.total_multiplicity())
    fact = Fraction(1)
    for i in range(2, M + 1):
        fact *= i

    def sinh_vec(coords):
        return sinh_factor(n_exp, vec(coords))

    if name in ("Cnlm", "rootC"):
        n = fam["n"]
        m = int(Fraction(fam["m"]))
        l = int(Fraction(fam.get("l", fam["m"])))
        ratio = int(Fraction(2 * l + 1, 2 * m + 1)) if n >= 3 else 0
        out = ExpPoly.const(n_exp, fact)
        coords = [0] * n
        coords[n - 1] = 1
        out = out * sinh_vec(coords) ** m
        for i in range(n - 1):
            coords = [0] * n
            coords[i] = 1
            out = out * sinh_vec(coords) ** l
        for i in range(n - 1):
            for j in range(i + 1, n - 1):
                for sgn in (-1, 1):
                    coords = [0] * n
                    coords[i], coords[j] = 1, sgn
                    out = out * sinh_vec(coords) ** ratio
        for i in range(n - 1):
            for sgn in (-1, 1):
                coords = [0] * n
                coords[i], coords[n - 1] = 1, sgn
                out = out * sinh_vec(coords)
        return out
    if name == "An1":
        n = fam["n"]
        m = int(Fraction(fam["m"]))
        out = ExpPoly.const(n_exp, fact * Fraction(2) ** M)
        for i in range(n):
            for j in range(i + 1, n):
                ei = [0] * n_exp
                ei[i] = 2
                ej = [0] * n_exp
                ej[j] = 2
                diff = ExpPoly.monomial(tuple(ei)) - ExpPoly.monomial(tuple(ej))
                out = out * diff**m
        for i in range(n):
            ei = [0] * n_exp
            ei[i] = 2
            en = [0] * n_exp
            en[n] = 2
            out = out * (ExpPoly.monomial(tuple(ei)) - ExpPoly.monomial(tuple(en)))
        return out
    if name == "An2":
        n = fam["n"]
        m = Fraction(fam["m"])
        out = ExpPoly.const(n_exp, fact * Fraction(2) ** M)
        for i, j in combinations(range(n + 1), 2):
            m_ij = m if (1 <= i and j <= n - 1) else Fraction(1)
            ei = [0] * n_exp
            ei[i] = 2
            ej = [0] * n_exp
            ej[j] = 2
            diff = ExpPoly.monomial(tuple(ei)) - ExpPoly.monomial(tuple(ej))
            out = out * diff ** int(m_ij)
        return out
    return None


class BAResult:
    """Outcome of the chain construction.

    psi = psi_num / normalizer; chain holds phi_0 .. phi_M; chain_degrees the
    spectral degrees 2M .. M; lam the difference eigenvalue lambda(x)."""

    def __init__(self, config, psi_num, normalizer, lam, chain, chain_degrees):
        self.config = config
        self.psi_num = psi_num
        self.normalizer = normalizer
        self.lam = lam
        self.chain = chain
        self.chain_degrees = chain_degrees

    @property
    def iterations(self) -> int:
        return len(self.chain_degrees) - 1

    def describe(self) -> dict:
        from .serialize import element_json, element_text, exppoly_json, exppoly_text, text_hash

        return {
            "config": self.config.describe(),
            "iterations": self.iterations,
            "chain_degrees": self.chain_degrees,
            "lambda": exppoly_json(self.lam),
            "normalizer": exppoly_json(self.normalizer),
            "psi_num": element_json(self.psi_num),
            "summary": {
                "psi_terms": self.psi_num.num_terms(),
                "psi_hash": text_hash(element_text(self.psi_num)),
                "normalizer_hash": text_hash(exppoly_text(self.normalizer)),
            },
        }


def iterate_ba(config: Configuration, check_normalizer: bool = True) -> BAResult:
    """Run the full chain: M applications of (D - lambda), degree checks, the
    zero tail (one extra application), and normalizer extraction."""
    basis = config.basis
    if not config.entries:
        one = Element.one(basis)
        return BAResult(config, one, ExpPoly.const(basis.dim, 1), ExpPoly.zero(basis.dim), [one], [0])
    M = config.total_multiplicity()
    if M.denominator != 1:
        raise UnsupportedFamily("iteration count must be an integer")
    M = int(M)
    d = operator_for(config)
    lam = eigenvalue_lambda(config)
    phi = initial_phi0(config)
    chain = [phi]
    degrees = [phi.spectral_degree()]
    if degrees[0] != 2 * M:
        raise ChainDegreeViolation(f"phi_0 has degree {degrees[0]}, expected {2 * M}")
    for s in range(M):
        phi = apply_operator(d, phi) - phi.mul_exppoly(lam)
        deg = phi.spectral_degree()
        if deg != 2 * M - s - 1:
            raise ChainDegreeViolation(
                f"degree {deg} after step {s + 1}, expected {2 * M - s - 1}"
            )
        chain.append(phi)
        degrees.append(deg)
    tail = apply_operator(d, phi) - phi.mul_exppoly(lam)
    if not tail.is_zero():
        raise NonzeroTail(
            f"phi_{M + 1} is nonzero (degree {tail.spectral_degree()})"
        )
    lead = phi.leading_part()
    normalizer_el = lead.exact_divide(leading_product(config))
    zero_mono = (0,) * basis.dim
    if set(normalizer_el.terms) != {zero_mono}:
        raise NormalizerMismatch("leading part is not a multiple of prod (k,alpha)^m")
    normalizer = normalizer_el.terms[zero_mono]
    if check_normalizer:
        closed = normalizer_closed_form(config)
        if closed is not None and closed != normalizer:
            raise NormalizerMismatch(
                "extracted c(x) disagrees with the closed product form"
            )
    return BAResult(config, phi, normalizer, lam, chain, degrees)


# -- leading-term recurrences -----------------------------------------------------------


def _expand_c_key(basis: WeightedBasis, key) -> KPoly:
    n = basis.dim
    lams, lamp, lamm = key
    out = KPoly.const(n, 1)
    for i, e in enumerate(lams):
        if e:
            out = out * KPoly.variable(n, i) ** e
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            ep, em = lamp[idx], lamm[idx]
            if ep:
                out = out * (KPoly.variable(n, i) + KPoly.variable(n, j)) ** ep
            if em:
                out = out * (KPoly.variable(n, i) - KPoly.variable(n, j)) ** em
            idx += 1
    return out


def _c_family_initial_state(config: Configuration):
    """Leading monomial of phi_0 in the factored-form basis, with the scalar
    content of the half-vector pairings pulled out front."""
    fam = config.family
    n = fam["n"]
    m = Fraction(fam["m"])
    l = Fraction(fam.get("l", fam["m"]))
    ratio = Fraction(2 * l + 1, 2 * m + 1)
    lams = [2 * int(l)] * (n - 1) + [2 * int(m)]
    lamp, lamm = [], []
    scalar = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            mult = ratio if j < n - 1 else Fraction(1)
            lamp.append(2 * int(mult))
            lamm.append(2 * int(mult))
            scalar *= Fraction(1, 2) ** (4 * int(mult))
    key = (tuple(lams), tuple(lamp), tuple(lamm))
    return {key: ExpPoly.const(config.basis.dim, scalar)}


def _c_family_multiplicity_bounds(config: Configuration):
    fam = config.family
    n = fam["n"]
    m = Fraction(fam["m"])
    l = Fraction(fam.get("l", fam["m"]))
    ratio = Fraction(2 * l + 1, 2 * m + 1)
    sing = [l] * (n - 1) + [m]
    pair = []
    for i in range(n):
        for j in range(i + 1, n):
            pair.append(ratio if j < n - 1 else Fraction(1))
    return sing, pair


def _c_family_step(config: Configuration, state):
    """One application of Eq.-style leading recurrence for the C family."""
    basis = config.basis
    n = basis.dim
    sing_m, pair_m = _c_family_multiplicity_bounds(config)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    E = []
    for i in range(n):
        coords = [0] * n
        coords[i] = 1
        E.append(sinh_factor(n, vec(coords)))
    out: dict = {}

    def add(key, coeff: ExpPoly):
        if coeff.is_zero():
            return
        cur = out.get(key)
        s = cur + coeff if cur is not None else coeff
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s

    for (lams, lamp, lamm), coeff in state.items():
        for i in range(n):
            f = lams[i] - sing_m[i]
            if f and lams[i] > 0:
                nl = list(lams)
                nl[i] -= 1
                add((tuple(nl), lamp, lamm), (coeff * E[i]).scale(f))
        for idx, (i, j) in enumerate(pairs):
            fp = lamp[idx] - pair_m[idx]
            if fp and lamp[idx] > 0:
                np_ = list(lamp)
                np_[idx] -= 1
                add((lams, tuple(np_), lamm), (coeff * (E[i] + E[j])).scale(fp))
            fm = lamm[idx] - pair_m[idx]
            if fm and lamm[idx] > 0:
                nm = list(lamm)
                nm[idx] -= 1
                add((lams, lamp, tuple(nm)), (coeff * (E[i] - E[j])).scale(fm))
    return out


def _a2_family_initial_state(config: Configuration):
    dim = config.basis.dim
    fam = config.family
    n = fam["n"]
    m = Fraction(fam["m"])
    pairs = list(combinations(range(dim), 2))
    key = tuple(
        2 * int(m) if (1 <= i and j <= n - 1) else 2 for (i, j) in pairs
    )
    return {key: ExpPoly.const(dim, 1)}, pairs


def _a2_family_step(config: Configuration, state, pairs):
    basis = config.basis
    dim = basis.dim
    fam = config.family
    n = fam["n"]
    m = Fraction(fam["m"])
    out: dict = {}
    exp2 = []
    for i in range(dim):
        mono = [0] * dim
        mono[i] = 4
        exp2.append(ExpPoly.monomial(tuple(mono)))

    def add(key, coeff: ExpPoly):
        if coeff.is_zero():
            return
        cur = out.get(key)
        s = cur + coeff if cur is not None else coeff
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s

    for key, coeff in state.items():
        for idx, (i, j) in enumerate(pairs):
            m_ij = m if (1 <= i and j <= n - 1) else Fraction(1)
            f = 2 * (key[idx] - m_ij)
            if f and key[idx] > 0:
                nk = list(key)
                nk[idx] -= 1
                add(tuple(nk), (coeff * (exp2[i] - exp2[j])).scale(f))
    return out


def _expand_a2_key(basis: WeightedBasis, key, pairs) -> KPoly:
    n = basis.dim
    out = KPoly.const(n, 1)
    for (i, j), e in zip(pairs, key):
        if e:
            out = out * (KPoly.variable(n, i) - KPoly.variable(n, j)) ** e
    return out


def _state_to_element(config: Configuration, state, expand) -> Element:
    out = Element.zero(config.basis)
    for key, coeff in state.items():
        out = out + Element.from_parts(expand(key), coeff, config.basis)
    return out


def leading_recurrence_report(config: Configuration, chain: list[Element]) -> list[bool]:
    """Predict the leading part of each phi_{s+1} from that of phi_s with the
    closed-form recurrence and compare against the computed chain.  Returns a
    per-step list of booleans; raises RecurrenceMismatch on first failure."""
    fam = (config.family or {}).get("family")
    if fam in ("Cnlm", "rootC"):
        state = _c_family_initial_state(config)
        step = lambda st: _c_family_step(config, st)
        expand = lambda key: _expand_c_key(config.basis, key)
    elif fam == "An2":
        state, pairs = _a2_family_initial_state(config)
        step = lambda st: _a2_family_step(config, st, pairs)
        expand = lambda key: _expand_a2_key(config.basis, key, pairs)
    else:
        raise UnsupportedFamily(f"no leading recurrence for family {fam!r}")
    results = []
    predicted = _state_to_element(config, state, expand)
    if predicted != chain[0].leading_part():
        raise RecurrenceMismatch("initial leading part disagrees with phi_0")
    for s in range(len(chain) - 1):
        state = step(state)
        predicted = _state_to_element(config, state, expand)
        actual = chain[s + 1].leading_part()
        if predicted != actual:
            raise RecurrenceMismatch(f"leading part mismatch at step {s + 1}")
        results.append(True)
    return results
