"""Configurations of vectors with multiplicities and their positive systems.

A Configuration is a weighted basis plus entries (vector, multiplicity).  The
four built-in families and the A_n / C_n root systems are constructed in
weighted-basis coordinates so that every paper quantity stays rational:

  rootA(n, m):  e_i - e_j in R^{n+1}, all multiplicities m
  rootC(n, m):  the C_n root system, realized as Cnlm with l = m
  An1(n, m):    e_p - e_q (mult m) and e_p - sqrt(m) e_{n+1} (mult 1)
  Cnlm(n,l,m):  f_i (mult l), f_n (mult m), (f_i+-f_j)/2 (mult (2l+1)/(2m+1)),
                (f_i+-f_n)/2 (mult 1), over weights (2m+1,...,2m+1, 2l+1)
  An2(n, m):    ebar_0 - ebar_i, ebar_i - ebar_n, ebar_0 - ebar_n (mult 1) and
                e_i - e_j (mult m), over weights (-m-1, 1,..., 1, m)

Positive systems are enumerated exhaustively: all 2^|A| sign vectors are
tested for exact feasibility of a strictly separating rational functional, so
the enumeration is obviously complete at desk scale.  Edge vectors are decided
by the exact conic-combination LP.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .basis import Vec, WeightedBasis, is_zero_vec, parallel_ratio, unit, vec, vneg
from .errors import InvalidParams, TooLarge
from .feasibility import solve_inequalities, solve_system

POSITIVE_SYSTEM_BOUND = 16


class Configuration:
    """A finite set of pairwise non-parallel, non-isotropic vectors with
    positive multiplicities over a weighted basis."""

    def __init__(self, basis: WeightedBasis, entries, family: dict | None = None):
        self.basis = basis
        norm_entries: list[tuple[Vec, Fraction]] = []
        for v, m in entries:
            v = vec(v)
            m = Fraction(m)
            if m <= 0:
                raise InvalidParams(f"multiplicity {m} is not positive")
            norm_entries.append((v, m))
        self.entries = tuple(norm_entries)
        self.family = family
        self._validate()

    def _validate(self):
        for v, _ in self.entries:
            if len(v) != self.basis.dim:
                raise InvalidParams("entry dimension does not match the basis")
            if is_zero_vec(v):
                raise InvalidParams("zero vector in configuration")
            if self.basis.norm(v) == 0:
                raise InvalidParams(f"isotropic vector {v} in configuration")
        for i in range(len(self.entries)):
            for j in range(i + 1, len(self.entries)):
                if parallel_ratio(self.entries[i][0], self.entries[j][0]) is not None:
                    raise InvalidParams(
                        f"parallel entries {self.entries[i][0]} and {self.entries[j][0]}"
                    )
        for _, m in self.entries:
            if m.denominator != 1 and not (
                self.family and self.family.get("family") == "An2"
            ):
                raise InvalidParams("non-integer multiplicity outside the An2 family")

    def total_multiplicity(self) -> Fraction:
        return sum((m for _, m in self.entries), Fraction(0))

    def vectors(self) -> list[Vec]:
        return [v for v, _ in self.entries]

    def mult(self, i: int) -> Fraction:
        return self.entries[i][1]

    def norm(self, i: int) -> Fraction:
        return self.basis.norm(self.entries[i][0])

    def describe(self) -> dict:
        from .serialize import rational_str

        if self.family is not None:
            return dict(self.family)
        return {
            "weights": [rational_str(w) for w in self.basis.weights],
            "entries": [
                {"coords": [rational_str(c) for c in v], "mult": rational_str(m)}
                for v, m in self.entries
            ],
        }

    def __repr__(self):
        fam = self.family or "explicit"
        return f"Configuration({fam}, {len(self.entries)} entries)"


class PositiveSystem:
    """A realizable sign choice: signs[i] * entry_i all pair strictly
    positively with the rational witness functional."""

    def __init__(self, config: Configuration, signs: tuple[int, ...], witness: Vec):
        self.config = config
        self.signs = signs
        self.witness = witness

    def vectors(self) -> list[Vec]:
        return [
            v if s > 0 else vneg(v) for (v, _), s in zip(self.config.entries, self.signs)
        ]

    def mults(self) -> list[Fraction]:
        return [m for _, m in self.config.entries]

    def verify_witness(self) -> bool:
        b = self.config.basis
        return all(b.inner(self.witness, v) > 0 for v in self.vectors())

    def __repr__(self):
        return f"PositiveSystem(signs={self.signs})"


# -- family builders -------------------------------------------------------------


def _root_a(n: int, m) -> Configuration:
    if n < 1:
        raise InvalidParams("rootA needs n >= 1")
    m = Fraction(m)
    if m <= 0 or m.denominator != 1:
        raise InvalidParams("rootA multiplicity must be a positive integer")
    dim = n + 1
    basis = WeightedBasis([1] * dim)
    entries = []
    for i in range(dim):
        for j in range(i + 1, dim):
            v = [0] * dim
            v[i], v[j] = 1, -1
            entries.append((v, m))
    return Configuration(basis, entries, {"family": "rootA", "n": n, "m": str(m)})


def _c_nlm(n: int, l, m, family_name="Cnlm") -> Configuration:
    l, m = Fraction(l), Fraction(m)
    if n < 2 or l <= 0 or m <= 0 or l.denominator != 1 or m.denominator != 1:
        raise InvalidParams("Cnlm needs n >= 2 and positive integers l, m")
    ratio = Fraction(2 * l + 1, 2 * m + 1)
    if n >= 3 and ratio.denominator != 1:
        raise InvalidParams(
            f"(2l+1)/(2m+1) = {ratio} must be a positive integer for n >= 3"
        )
    weights = [2 * m + 1] * (n - 1) + [2 * l + 1]
    basis = WeightedBasis(weights)
    entries = []
    for i in range(n - 1):
        entries.append((unit(n, i), l))
    entries.append((unit(n, n - 1), m))
    half = Fraction(1, 2)
    for i in range(n - 1):
        for j in range(i + 1, n - 1):
            for sgn in (1, -1):
                v = [Fraction(0)] * n
                v[i], v[j] = half, sgn * half
                entries.append((v, ratio))
    for i in range(n - 1):
        for sgn in (1, -1):
            v = [Fraction(0)] * n
            v[i], v[n - 1] = half, sgn * half
            entries.append((v, 1))
    fam = {"family": family_name, "n": n, "l": str(l), "m": str(m)}
    if family_name == "rootC":
        fam = {"family": "rootC", "n": n, "m": str(m)}
    return Configuration(basis, entries, fam)


def _root_c(n: int, m) -> Configuration:
    return _c_nlm(n, m, m, family_name="rootC")


def _a_n1(n: int, m) -> Configuration:
    m = Fraction(m)
    if n < 2 or m <= 0 or m.denominator != 1:
        raise InvalidParams("An1 needs n >= 2 and a positive integer m")
    dim = n + 1
    basis = WeightedBasis([1] * n + [m])
    entries = []
    for p in range(n):
        for q in range(p + 1, n):
            v = [0] * dim
            v[p], v[q] = 1, -1
            entries.append((v, m))
    for p in range(n):
        v = [0] * dim
        v[p], v[n] = 1, -1
        entries.append((v, 1))
    return Configuration(basis, entries, {"family": "An1", "n": n, "m": str(m)})


def _a_n2(n: int, m) -> Configuration:
    m = Fraction(m)
    if n < 2 or m <= 0:
        raise InvalidParams("An2 needs n >= 2 and positive m")
    if n > 2 and m.denominator != 1:
        raise InvalidParams("An2 with n >= 3 needs integer m (multiplicities m appear)")
    dim = n + 1  # indices 0..n
    basis = WeightedBasis([-m - 1] + [1] * (n - 1) + [m])
    entries = []
    for i in range(1, n):
        v = [0] * dim
        v[0], v[i] = 1, -1
        entries.append((v, 1))
    for i in range(1, n):
        v = [0] * dim
        v[i], v[n] = 1, -1
        entries.append((v, 1))
    for i in range(1, n):
        for j in range(i + 1, n):
            v = [0] * dim
            v[i], v[j] = 1, -1
            entries.append((v, m))
    v = [0] * dim
    v[0], v[n] = 1, -1
    entries.append((v, 1))
    return Configuration(basis, entries, {"family": "An2", "n": n, "m": str(m)})


FAMILY_BUILDERS = {
    "rootA": lambda **kw: _root_a(kw["n"], kw["m"]),
    "rootC": lambda **kw: _root_c(kw["n"], kw["m"]),
    "An1": lambda **kw: _a_n1(kw["n"], kw["m"]),
    "Cnlm": lambda **kw: _c_nlm(kw["n"], kw["l"], kw["m"]),
    "An2": lambda **kw: _a_n2(kw["n"], kw["m"]),
}


def build_family(family: str, **params) -> Configuration:
    """Construct one of the built-in configurations.

    family is one of rootA, rootC, An1, Cnlm, An2; params are n and m (plus l
    for Cnlm).  Multiplicity parameters may be given as ints or rational
    strings like "1/2" (An2 with n = 2 only).
    """
    if family not in FAMILY_BUILDERS:
        raise InvalidParams(
            f"unknown family {family!r}; expected one of {sorted(FAMILY_BUILDERS)}"
        )
    try:
        return FAMILY_BUILDERS[family](**params)
    except KeyError as exc:
        raise InvalidParams(f"missing parameter {exc} for family {family}") from exc


def expected_iteration_count(config: Configuration):
    """The closed-form step count for the built-in families (equals the total
    multiplicity; kept separate so tests can cross-check the two)."""
    fam = config.family or {}
    name = fam.get("family")
    if name == "Cnlm" or name == "rootC":
        n = fam["n"]
        l = Fraction(fam.get("l", fam["m"]))
        m = Fraction(fam["m"])
        return (2 + l) * (n - 1) + m + Fraction((n - 1) * (n - 2)) * (2 * l + 1) / (
            2 * m + 1
        )
    if name == "An1":
        n = fam["n"]
        m = Fraction(fam["m"])
        return m * n * (n - 1) / 2 + n
    if name == "An2":
        n = fam["n"]
        m = Fraction(fam["m"])
        return m * (n - 1) * (n - 2) / 2 + 2 * n - 1
    if name == "rootA":
        n = fam["n"]
        m = Fraction(fam["m"])
        return m * n * (n + 1) / 2
    return config.total_multiplicity()


# -- positive systems ----------------------------------------------------------------


def enumerate_positive_systems(config: Configuration, bound: int = POSITIVE_SYSTEM_BOUND):
    """All realizable sign choices, each with an exact witness functional.

    Feasibility of a sign vector sigma is the existence of u with
    (u, sigma_j alpha_j) >= 1 for all j; scaling makes >= 1 equivalent to
    strict positivity.  Systems come in +- pairs by construction.
    """
    k = len(config.entries)
    if k > bound:
        raise TooLarge(f"{k} entries exceed the positive-system bound {bound}")
    b = config.basis
    out = []
    rows = []
    for v, _ in config.entries:
        rows.append(tuple(c * w for c, w in zip(v, b.weights)))
    for signs in product((1, -1), repeat=k):
        ineqs = [
            (tuple(s * c for c in row), Fraction(1)) for s, row in zip(signs, rows)
        ]
        w = solve_inequalities(ineqs, b.dim)
        if w is not None:
            out.append(PositiveSystem(config, signs, w))
    return out


def edge_vector_indices(psys: PositiveSystem) -> list[int]:
    """Indices of entries that are edge vectors of the positive system: alpha
    is an edge iff alpha = sum_{beta != alpha} r_beta beta has no solution
    with r_beta >= 0."""
    vecs = psys.vectors()
    dim = psys.config.basis.dim
    out = []
    for a_idx, alpha in enumerate(vecs):
        others = [v for i, v in enumerate(vecs) if i != a_idx]
        nr = len(others)
        if nr == 0:
            out.append(a_idx)
            continue
        eqs = []
        for coord in range(dim):
            eqs.append((tuple(v[coord] for v in others), alpha[coord]))
        ineqs = [
            (tuple(Fraction(1) if i == j else Fraction(0) for i in range(nr)), 0)
            for j in range(nr)
        ]
        if solve_system(eqs, ineqs, nr) is None:
            out.append(a_idx)
    return out


def edge_vectors(psys: PositiveSystem) -> list[Vec]:
    vecs = psys.vectors()
    return [vecs[i] for i in edge_vector_indices(psys)]
