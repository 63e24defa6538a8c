"""NilCoxeter algebras of W_n and the type D group, with polynomial coefficients.

Products are never rewritten symbolically: xi_u * xi_g is xi_{u s_g} when
l(u s_g) = l(u) + 1 and zero otherwise.  Double Schubert polynomials and
Stanley functions are read off as coefficients of ordered products of the
factors (1 +- t xi_g).  The infinite products C(Z), D(Z) are truncated to
``m`` factors, which is the same as setting z_{m+1} = z_{m+2} = ... = 0.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .poly import ONE, ZERO, Polynomial, scale_pow2, x, y, z
from .weyl import BOX, GroupTag, SignedPermutation, canonical_reduced_word, valid_generator

Factor = tuple[int, Polynomial, int]  # (generator, t, sign): 1 + sign*t*xi_g


class NilCoxeterElement:
    """Finite sum of basis elements xi_w with polynomial coefficients."""

    __slots__ = ("tag", "_terms")

    def __init__(self, tag: GroupTag, terms: dict[SignedPermutation, Polynomial] | None = None):
        self.tag = tag
        self._terms = {}
        for w, c in (terms or {}).items():
            if w.tag is not tag:
                w = w.with_tag(tag)
            if c:
                self._terms[w] = c

    @classmethod
    def one(cls, tag: GroupTag) -> "NilCoxeterElement":
        return cls(tag, {SignedPermutation.identity(tag): ONE})

    @property
    def terms(self) -> dict[SignedPermutation, Polynomial]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, NilCoxeterElement):
            return NotImplemented
        return self.tag is other.tag and self._terms == other._terms

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*xi[{w}]" for w, c in self._terms.items()) or "0"
        return f"NilCoxeterElement({self.tag.value}: {body})"

    def times_generator(self, g: int) -> "NilCoxeterElement":
        """Right multiplication by xi_g."""
        if not valid_generator(g, self.tag):
            raise ValueError(f"generator {g} is not valid in type {self.tag.value}")
        out = {}
        for u, c in self._terms.items():
            if not u.is_right_descent(g):
                out[u.right_multiply(g)] = c
        return NilCoxeterElement(self.tag, out)

    def __mul__(self, other: "NilCoxeterElement") -> "NilCoxeterElement":
        if other.tag is not self.tag:
            raise ValueError("nilCoxeter elements of different types")
        out: dict[SignedPermutation, Polynomial] = {}
        for v, cv in other._terms.items():
            part = self
            for g in canonical_reduced_word(v):
                part = part.times_generator(g)
            for u, cu in part._terms.items():
                out[u] = out.get(u, ZERO) + cu * cv
        return NilCoxeterElement(self.tag, out)

    def multiply_series_factor(self, g: int, t: Polynomial, sign: int = 1) -> "NilCoxeterElement":
        """Return self * (1 + sign * t * xi_g)."""
        if not valid_generator(g, self.tag):
            raise ValueError(f"generator {g} is not valid in type {self.tag.value}")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        st = t if sign == 1 else -t
        out = dict(self._terms)
        for u, c in self._terms.items():
            if u.is_right_descent(g):
                continue
            v = u.right_multiply(g)
            out[v] = out.get(v, ZERO) + c * st
        return NilCoxeterElement(self.tag, out)

    def extract(self, w: SignedPermutation) -> Polynomial:
        return self._terms.get(w.with_tag(self.tag) if w.tag is not self.tag else w, ZERO)


def extract(alpha: NilCoxeterElement, w: SignedPermutation) -> Polynomial:
    return alpha.extract(w)


def multiply_series_factor(alpha: NilCoxeterElement, g: int, t: Polynomial, sign: int = 1) -> NilCoxeterElement:
    return alpha.multiply_series_factor(g, t, sign)


# factor lists, in written order

def factors_A(i: int, t: Polynomial, n: int) -> list[Factor]:
    """A_i(t) = (1 + t xi_{n-1}) ... (1 + t xi_i)."""
    return [(g, t, 1) for g in range(n - 1, i - 1, -1)]


def factors_Atilde(i: int, t: Polynomial, n: int) -> list[Factor]:
    """A~_i(t) = (1 - t xi_i) ... (1 - t xi_{n-1})."""
    return [(g, t, -1) for g in range(i, n)]


def factors_C(t: Polynomial, n: int) -> list[Factor]:
    gens = list(range(n - 1, 0, -1)) + [0, 0] + list(range(1, n))
    return [(g, t, 1) for g in gens]


def factors_D(t: Polynomial, n: int) -> list[Factor]:
    if n < 2:
        return []
    gens = list(range(n - 1, 0, -1)) + [BOX] + list(range(2, n))
    return [(g, t, 1) for g in gens]


def product(tag: GroupTag, factors: Iterable[Factor]) -> NilCoxeterElement:
    alpha = NilCoxeterElement.one(tag)
    for g, t, sign in factors:
        alpha = alpha.multiply_series_factor(g, t, sign)
    return alpha


def series_A(i: int, t: Polynomial, n: int, tag: GroupTag = GroupTag.A) -> NilCoxeterElement:
    return product(tag, factors_A(i, t, n))


def series_Atilde(i: int, t: Polynomial, n: int, tag: GroupTag = GroupTag.A) -> NilCoxeterElement:
    return product(tag, factors_Atilde(i, t, n))


def series_C(t: Polynomial, n: int) -> NilCoxeterElement:
    return product(GroupTag.BC, factors_C(t, n))


def series_D(t: Polynomial, n: int) -> NilCoxeterElement:
    return product(GroupTag.D, factors_D(t, n))


def _double_factors(tag: GroupTag, n: int, m: int, with_y: bool = True) -> Iterator[Factor]:
    if with_y:
        for i in range(n - 1, 0, -1):
            yield from factors_Atilde(i, y(i), n)
    if tag is GroupTag.BC:
        for j in range(1, m + 1):
            yield from factors_C(z(j), n)
    elif tag is GroupTag.D:
        for j in range(1, m + 1):
            yield from factors_D(z(j), n)
    for i in range(1, n):
        yield from factors_A(i, x(i), n)


@lru_cache(maxsize=64)
def double_product(tag: GroupTag, n: int, m: int = 0) -> NilCoxeterElement:
    """A~_{n-1}(y_{n-1})...A~_1(y_1) [C(Z) or D(Z), m factors] A_1(x_1)...A_{n-1}(x_{n-1})."""
    return product(tag, _double_factors(tag, n, m))


@lru_cache(maxsize=64)
def stanley_product(tag: GroupTag, n: int, m: int) -> NilCoxeterElement:
    if tag is GroupTag.BC:
        return product(tag, (f for j in range(1, m + 1) for f in factors_C(z(j), n)))
    if tag is GroupTag.D:
        return product(tag, (f for j in range(1, m + 1) for f in factors_D(z(j), n)))
    raise ValueError("Stanley functions are defined here for types C and D only")


def _rank(w: SignedPermutation, n: int | None) -> int:
    if n is None:
        return max(w.size, 2 if w.tag is GroupTag.D else 1)
    if not w.fits(n):
        raise ValueError(f"{w} does not lie in the rank {n} group")
    return n


def _as(w: SignedPermutation, tag: GroupTag) -> SignedPermutation:
    return w if w.tag is tag else w.with_tag(tag)


def schubert_A(w: SignedPermutation, n: int | None = None) -> Polynomial:
    w = _as(w, GroupTag.A)
    return double_product(GroupTag.A, _rank(w, n), 0).extract(w)


def schubert_C(w: SignedPermutation, n: int | None = None, m: int = 2) -> Polynomial:
    w = _as(w, GroupTag.BC)
    return double_product(GroupTag.BC, _rank(w, n), m).extract(w)


def schubert_B(w: SignedPermutation, n: int | None = None, m: int = 2) -> Polynomial:
    return scale_pow2(schubert_C(w, n, m), -w.neg_count())


def schubert_D(w: SignedPermutation, n: int | None = None, m: int = 2) -> Polynomial:
    w = _as(w, GroupTag.D)
    return double_product(GroupTag.D, _rank(w, n), m).extract(w)


def stanley_F(w: SignedPermutation, m: int, n: int | None = None) -> Polynomial:
    w = _as(w, GroupTag.BC)
    return stanley_product(GroupTag.BC, _rank(w, n), m).extract(w)


def stanley_E(w: SignedPermutation, m: int, n: int | None = None) -> Polynomial:
    w = _as(w, GroupTag.D)
    return stanley_product(GroupTag.D, _rank(w, n), m).extract(w)


def single_schubert(w: SignedPermutation, n: int | None = None, m: int = 2) -> Polynomial:
    """Coefficient of w in [C(Z) or D(Z)] A_1(x_1)...A_{n-1}(x_{n-1}) (no y factors)."""
    tag = w.tag
    n = _rank(w, n)
    return product(tag, _double_factors(tag, n, m, with_y=False)).extract(w)
