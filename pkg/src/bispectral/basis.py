"""Weighted orthogonal bases and rational-coordinate vectors.

Every vector in the engine is a tuple of Fractions giving coordinates over an
orthogonal basis f_1, ..., f_N whose squared norms (f_i, f_i) = w_i are fixed
nonzero rationals, possibly negative.  This realizes irrational-length vectors
like sqrt(2m+1) e_i exactly: the basis vector carries the squared norm 2m+1 and
the coordinate stays rational.  The inner product is

    (u, v) = sum_i u_i * v_i * w_i.

Spectral variables are the pairings kappa_i = (k, f_i), so (k, alpha) is the
weight-free linear form sum_i a_i kappa_i while (k, k) = sum_i kappa_i^2 / w_i.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]


def vec(coords: Iterable) -> Vec:
    """Coerce an iterable of ints/strings/Fractions into a coordinate tuple."""
    return tuple(Fraction(c) for c in coords)


def unit(dim: int, i: int, scale=1) -> Vec:
    out = [Fraction(0)] * dim
    out[i] = Fraction(scale)
    return tuple(out)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def parallel_ratio(u: Vec, v: Vec):
    """Return rational c with u = c*v, or None if u is not a multiple of v.

    v must be nonzero.  Used both for the configuration non-parallelism
    invariant and for the integer-series test of the locus checker.
    """
    c = None
    for a, b in zip(u, v, strict=True):
        if b == 0:
            if a != 0:
                return None
        else:
            r = a / b
            if c is None:
                c = r
            elif c != r:
                return None
    if c is None:
        # v == 0 is a caller error; u must be zero too for any ratio to exist
        return None
    return c


class WeightedBasis:
    """Orthogonal basis of dimension N with nonzero rational squared norms."""

    def __init__(self, weights: Sequence):
        ws = tuple(Fraction(w) for w in weights)
        if any(w == 0 for w in ws):
            raise ValueError("basis weights must be nonzero")
        self.weights = ws
        self.dim = len(ws)

    def inner(self, u: Vec, v: Vec) -> Fraction:
        return sum(
            (a * b * w for a, b, w in zip(u, v, self.weights, strict=True)),
            Fraction(0),
        )

    def norm(self, u: Vec) -> Fraction:
        return self.inner(u, u)

    def shift_deltas(self, tau: Vec) -> Vec:
        """Per-variable substitution offsets for k -> k + tau.

        kappa_i = (k, f_i) becomes kappa_i + t_i * w_i.
        """
        return tuple(t * w for t, w in zip(tau, self.weights, strict=True))

    def __eq__(self, other):
        return isinstance(other, WeightedBasis) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"WeightedBasis({[str(w) for w in self.weights]})"
