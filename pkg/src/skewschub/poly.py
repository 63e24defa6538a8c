"""Sparse multivariate polynomials with exact dyadic-rational coefficients.

Variables come in three families ``x``, ``y`` and ``z`` indexed from 1.  A
monomial is a sorted tuple of ``((family, index), exponent)`` pairs, and a
polynomial is a dict from monomials to ``int`` or ``Fraction`` coefficients.
Coefficients that happen to be integral are always stored as ``int``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

FAMILIES = ("x", "y", "z")

Var = tuple[str, int]
Monomial = tuple[tuple[Var, int], ...]
Coeff = Union[int, Fraction]

ONE_MONOMIAL: Monomial = ()


def _normalize(c) -> Coeff:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c.numerator)
        den = c.denominator
        if den & (den - 1):
            raise ValueError(f"coefficient {c} has a non-dyadic denominator")
        return c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _normalize(Fraction(c))
    raise TypeError(f"unsupported coefficient {c!r}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_key(m: Monomial):
    """Canonical ordering: total degree, then (family, index, exponent) lexicographically."""
    return (mono_degree(m), tuple((f, i, e) for (f, i), e in m))


class Polynomial:
    """Immutable sparse polynomial in the x, y, z variable families."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _normalize(c)
                if c != 0:
                    for (fam, idx), e in m:
                        if fam not in FAMILIES or idx < 1 or e < 1:
                            raise ValueError(f"bad monomial {m!r}")
                    clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        # terms already pruned and normalized
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Coeff) -> "Polynomial":
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def var(cls, family: str, index: int) -> "Polynomial":
        if family not in FAMILIES:
            raise ValueError(f"unknown variable family {family!r}")
        if index < 1:
            raise ValueError("variable index must be positive")
        return cls._raw({(((family, index), 1),): 1})

    @property
    def terms(self) -> dict[Monomial, Coeff]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, monomial: Monomial) -> Coeff:
        return self._terms.get(monomial, 0)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {ONE_MONOMIAL}

    def constant_term(self) -> Coeff:
        return self._terms.get(ONE_MONOMIAL, 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def variables(self) -> set[Var]:
        return {v for m in self._terms for v, _ in m}

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _normalize(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw({m: _normalize(c) for m, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Polynomial.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def scale_pow2(self, e: int) -> "Polynomial":
        factor = Fraction(2) ** e
        return Polynomial._raw({m: _normalize(c * factor) for m, c in self._terms.items()})

    def substitute(self, mapping: Mapping[Var, "Polynomial | Coeff"]) -> "Polynomial":
        """Simultaneous substitution; variables absent from ``mapping`` stay put."""
        images = {v: Polynomial._coerce(p) for v, p in mapping.items()}
        cache: dict[tuple[Var, int], Polynomial] = {}
        result = Polynomial()
        for m, c in self._terms.items():
            term = Polynomial.const(c)
            keep: list[tuple[Var, int]] = []
            for v, e in m:
                if v in images:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = images[v] ** e
                    term = term * cache[key]
                    if not term:
                        break
                else:
                    keep.append((v, e))
            if term and keep:
                term = term * Polynomial._raw({tuple(keep): 1})
            result = result + term
        return result

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        return sorted(self._terms.items(), key=lambda t: mono_key(t[0]))

    # rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"{f}{i}" + (f"^{e}" if e > 1 else "") for (f, i), e in m)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_json_obj(self) -> list[dict]:
        out = []
        for m, c in self.sorted_terms():
            c = Fraction(c)
            mono = {f: [] for f in FAMILIES}
            for (f, i), e in m:
                mono[f].append([i, e])
            out.append({"c": f"{c.numerator}/{c.denominator}", "m": mono})
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Iterable[dict]) -> "Polynomial":
        terms: dict[Monomial, Coeff] = {}
        for term in obj:
            c = Fraction(term["c"])
            mono = []
            for f in FAMILIES:
                for i, e in term["m"].get(f, []):
                    mono.append(((f, int(i)), int(e)))
            m = tuple(sorted(mono))
            if len({v for v, _ in m}) != len(m):
                raise ValueError(f"repeated variable in term {term!r}")
            terms[m] = terms.get(m, 0) + c
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_json_obj(json.loads(text))


def x(i: int) -> Polynomial:
    return Polynomial.var("x", i)


def y(i: int) -> Polynomial:
    return Polynomial.var("y", i)


def z(i: int) -> Polynomial:
    return Polynomial.var("z", i)


ZERO = Polynomial()
ONE = Polynomial.const(1)


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def substitute(p: Polynomial, mapping: Mapping[Var, Polynomial | Coeff]) -> Polynomial:
    return p.substitute(mapping)


def scale_pow2(p: Polynomial, e: int) -> Polynomial:
    return p.scale_pow2(e)


def restrict(p: Polynomial, families: Iterable[str] = (), **keep: int) -> Polynomial:
    """Set whole variable families to zero, or truncate one: ``restrict(p, 'y', z=2)``.

    ``families`` are zeroed entirely; a keyword ``z=2`` zeroes ``z_3, z_4, ...``.
    """
    dead = set(families)
    out = {}
    for m, c in p.items():
        ok = True
        for (f, i), _ in m:
            if f in dead or (f in keep and i > keep[f]):
                ok = False
                break
        if ok:
            out[m] = c
    return Polynomial._raw(out)


def negate_family(p: Polynomial, family: str) -> Polynomial:
    """Substitute v_i -> -v_i for every variable of ``family``."""
    out = {}
    for m, c in p.items():
        sign = -1 if sum(e for (f, _), e in m if f == family) % 2 else 1
        out[m] = sign * c
    return Polynomial._raw(out)


def swap_families(p: Polynomial, a: str, b: str) -> Polynomial:
    """Rename a_i <-> b_i simultaneously."""
    out = {}
    for m, c in p.items():
        mono = tuple(sorted(((b if f == a else a if f == b else f, i), e) for (f, i), e in m))
        out[mono] = c
    return Polynomial._raw(out)
