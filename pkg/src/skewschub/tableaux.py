"""Skew tableaux as chains of partitions, and the tableau-sum formulas.

A tableau on lam/mu is stored as a chain ``mu = nu_0 in nu_1 in ... in nu_p = lam``
with one letter per step; the boxes of nu_i / nu_{i-1} carry the i-th letter.
Every step may be empty.  Each tableau class is described by a list of
``Step`` objects (letter, strip predicate, bound filter, weight), and the
same list drives both the enumerator and the transfer-matrix sum.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator, Optional, Sequence

from .poly import ONE, ZERO, Polynomial, x, y, z
from .shapes import (
    Partition,
    Shape,
    TypedPartition,
    _parts,
    contains,
    ell_k,
    grassmannian,
    is_compatible_pair,
    skew_element,
    is_k_horizontal_strip,
    is_typed_k_horizontal_strip,
    is_extremal,
    is_typed_x_strip_D,
    is_typed_y_strip_D,
    is_x_strip_C,
    is_y_strip_C,
    n_strip_C,
    n_strip_D,
    part,
    partitions_in,
    shapes_between,
    skew_boxes,
)
from .weyl import GroupTag


class Kind(enum.IntEnum):
    PRIMED = 0
    UNMARKED = 1
    CIRCLED = 2
    DOUBLE_PRIMED = 3


@dataclass(frozen=True)
class Letter:
    kind: Kind
    value: int

    @property
    def rank(self) -> tuple[int, int]:
        """Position in the ordered alphabet; i and circled i share a rank."""
        if self.kind is Kind.PRIMED:
            return (0, -self.value)
        if self.kind is Kind.DOUBLE_PRIMED:
            return (2, self.value)
        return (1, self.value)

    @property
    def marked(self) -> bool:
        return self.kind in (Kind.PRIMED, Kind.DOUBLE_PRIMED)

    def __str__(self) -> str:
        suffix = {Kind.PRIMED: "'", Kind.UNMARKED: "", Kind.CIRCLED: "@", Kind.DOUBLE_PRIMED: "''"}
        return f"{self.value}{suffix[self.kind]}"


@dataclass(frozen=True)
class Step:
    letter: Letter
    # (old, new) -> None if the step is forbidden, else (n-statistic, weight per box)
    rule: Callable[[Shape, Shape], Optional[int]]
    var: Polynomial
    circled_if_type2: bool = False

    def letter_for(self, new: Shape) -> Letter:
        if self.circled_if_type2 and isinstance(new, TypedPartition) and new.type == 2:
            return Letter(Kind.CIRCLED, self.letter.value)
        return self.letter


@dataclass(frozen=True)
class SkewTableau:
    outer: Shape
    inner: Shape
    chain: tuple[Shape, ...]
    letters: tuple[Letter, ...]
    n_stat: int
    weight: Polynomial

    @property
    def filling(self) -> dict[tuple[int, int], Letter]:
        out = {}
        for lo, hi, letter in zip(self.chain, self.chain[1:], self.letters):
            for b in skew_boxes(_parts(hi), _parts(lo)):
                out[b] = letter
        return out

    def used_letters(self) -> set[Letter]:
        return set(self.filling.values())

    def has_kind(self, kind: Kind) -> bool:
        return any(l.kind is kind for l in self.filling.values())

    def render(self) -> str:
        return render_filling(self.filling, _parts(self.outer), _parts(self.inner))

    def __str__(self) -> str:
        return self.render()


def render_filling(filling: dict, outer: Partition, inner: Partition) -> str:
    rows = []
    for r in range(1, len(outer) + 1):
        toks = ["."] * part(inner, r) + [str(filling[(r, c)]) for c in range(part(inner, r) + 1, outer[r - 1] + 1)]
        rows.append(" ".join(toks))
    return "\n".join(rows)


def filling_to_chain(filling: dict, inner: Partition, alphabet: Sequence[Letter]) -> list[Partition]:
    """Rebuild the chain of shapes from a filling, one shape per alphabet rank."""
    ranks = sorted({l.rank for l in alphabet})
    chain = [tuple(inner)]
    for rk in ranks:
        rows = list(chain[-1])
        for (r, c), l in filling.items():
            if l.rank == rk:
                while len(rows) < r:
                    rows.append(0)
                rows[r - 1] = max(rows[r - 1], c)
        chain.append(tuple(p for p in rows if p))
    return chain


# engine

def _chain_sum(inner: Shape, outer: Shape, steps: Sequence[Step], shapes: Sequence[Shape]) -> Polynomial:
    """Sum of 2^n * weight over all chains, by transfer matrices."""
    cur: dict[Shape, Polynomial] = {inner: ONE}
    for step in steps:
        nxt: dict[Shape, Polynomial] = {}
        var_pows: dict[int, Polynomial] = {0: ONE}
        for old, acc in cur.items():
            for new in shapes:
                if not contains(_parts(new), _parts(old)):
                    continue
                n = step.rule(old, new)
                if n is None:
                    continue
                size = sum(_parts(new)) - sum(_parts(old))
                if size not in var_pows:
                    var_pows[size] = step.var ** size
                term = acc * var_pows[size] * (2 ** n)
                nxt[new] = nxt.get(new, ZERO) + term
        cur = {s: p for s, p in nxt.items() if p}
    return cur.get(outer, ZERO)


def _chains(inner: Shape, outer: Shape, steps: Sequence[Step], shapes: Sequence[Shape]) -> Iterator[SkewTableau]:
    """Depth-first enumeration; shapes are tried in lexicographic order."""
    outer_parts = _parts(outer)

    def rec(i: int, chain: list, letters: list, n_total: int, weight: Polynomial):
        if i == len(steps):
            if chain[-1] == outer:
                yield SkewTableau(outer, inner, tuple(chain), tuple(letters), n_total, weight)
            return
        step = steps[i]
        old = chain[-1]
        for new in shapes:
            if not contains(_parts(new), _parts(old)) or not contains(outer_parts, _parts(new)):
                continue
            n = step.rule(old, new)
            if n is None:
                continue
            size = sum(_parts(new)) - sum(_parts(old))
            chain.append(new)
            letters.append(step.letter_for(new))
            yield from rec(i + 1, chain, letters, n_total + n, weight * step.var ** size * (2 ** n))
            chain.pop()
            letters.pop()

    yield from rec(0, [inner], [], 0, ONE)


def _sorted_shapes(lam: Shape, mu: Shape, k: int, tag: GroupTag) -> list[Shape]:
    shapes = shapes_between(lam, mu, k, tag)
    return sorted(shapes, key=lambda s: (s.parts, s.type) if isinstance(s, TypedPartition) else (s, 0))


# type A

def _rows_ok(old: Partition, new: Partition, test: Callable[[int, int], bool]) -> bool:
    return all(test(r, c) for r, c in skew_boxes(new, old))


def _is_horizontal_strip(new: Partition, old: Partition) -> bool:
    return all(part(new, r + 1) <= part(old, r) for r in range(1, len(new) + 1))


def _is_vertical_strip(new: Partition, old: Partition) -> bool:
    return all(a - b <= 1 for a, b in zip(new, old + (0,) * len(new)))


def bitableau_steps(lam: Partition, mu: Partition, m: int, n: int) -> list[Step]:
    steps = []
    for a in range(n - 1, 0, -1):
        def rule(old, new, a=a):
            ok = _is_horizontal_strip(new, old) and _rows_ok(
                old, new, lambda r, c: a <= part(mu, r) + m + 1 - r)
            return 0 if ok else None
        steps.append(Step(Letter(Kind.PRIMED, a), rule, x(a)))
    for b in range(1, n):
        def rule(old, new, b=b):
            ok = _is_vertical_strip(new, old) and _rows_ok(
                old, new, lambda r, c: b <= part(lam, r) + m - r)
            return 0 if ok else None
        steps.append(Step(Letter(Kind.UNMARKED, b), rule, -y(b)))
    return steps


def _check_A(lam: Partition, mu: Partition, m: int, n: int) -> None:
    if len(lam) > m or len(mu) > m or not is_compatible_pair(lam, mu, m, GroupTag.A):
        raise ValueError(f"({lam}, {mu}) is not a compatible pair for m={m}")
    if not skew_element(lam, mu, m, GroupTag.A).fits(n):
        raise ValueError(f"the skew permutation of {lam}/{mu} does not lie in S_{n}")


def _shapes_A(lam: Partition, mu: Partition) -> list[Partition]:
    return sorted(nu for nu in partitions_in(lam) if contains(nu, mu))


def enumerate_bitableaux(lam: Partition, mu: Partition, m: int, n: int) -> Iterator[SkewTableau]:
    lam, mu = tuple(lam), tuple(mu)
    _check_A(lam, mu, m, n)
    return _chains(mu, lam, bitableau_steps(lam, mu, m, n), _shapes_A(lam, mu))


def weight_bitableau(U: SkewTableau) -> Polynomial:
    """(xy)^U: each i' contributes x_i and each unmarked i contributes -y_i."""
    w = ONE
    for letter in U.filling.values():
        w = w * (x(letter.value) if letter.kind is Kind.PRIMED else -y(letter.value))
    return w


def tableau_schur(lam: Partition, mu: Partition, m: int, n: int | None = None) -> Polynomial:
    lam, mu = tuple(lam), tuple(mu)
    if n is None:
        n = skew_element(lam, mu, m, GroupTag.A).size
    _check_A(lam, mu, m, n)
    return _chain_sum(mu, lam, bitableau_steps(lam, mu, m, n), _shapes_A(lam, mu))


# type C

def _column_bound(w, j: int) -> int:
    return w(j)


def tritableau_steps_C(lam: Partition, mu: Partition, k: int, n: int, m: int,
                       bounded: bool = True, m_x: int | None = None, m_y: int | None = None) -> list[Step]:
    m_x = n - 1 if m_x is None else m_x
    m_y = n - 1 if m_y is None else m_y
    wl, wm = grassmannian(lam, k, GroupTag.BC), grassmannian(mu, k, GroupTag.BC)
    lk_mu, lk_lam = ell_k(mu, k), ell_k(lam, k)

    def x_ok(a: int, r: int, c: int) -> bool:
        if r <= lk_mu and a > mu[r - 1] - k:
            return False
        return not (c <= k and a > wm(k + 1 - c))

    def y_ok(b: int, r: int, c: int) -> bool:
        if r <= lk_lam and b > lam[r - 1] - k - 1:
            return False
        return not (c <= k and b > wl(k + 1 - c) - 1)

    steps = []
    for a in range(m_x, 0, -1):
        def rule(old, new, a=a):
            if not is_x_strip_C(new, old, k):
                return None
            if bounded and not _rows_ok(old, new, lambda r, c: x_ok(a, r, c)):
                return None
            return 0
        steps.append(Step(Letter(Kind.PRIMED, a), rule, x(a)))
    for i in range(1, m + 1):
        def rule(old, new):
            return n_strip_C(new, old, k) if is_k_horizontal_strip(new, old, k) else None
        steps.append(Step(Letter(Kind.UNMARKED, i), rule, z(i)))
    for b in range(1, m_y + 1):
        def rule(old, new, b=b):
            if not is_y_strip_C(new, old, k):
                return None
            if bounded and not _rows_ok(old, new, lambda r, c: y_ok(b, r, c)):
                return None
            return 0
        steps.append(Step(Letter(Kind.DOUBLE_PRIMED, b), rule, -y(b)))
    return steps


def _check_pair(lam: Shape, mu: Shape, k: int, tag: GroupTag, n: int | None) -> None:
    if not is_compatible_pair(lam, mu, k, tag):
        raise ValueError(f"({lam}, {mu}) is not a compatible pair for k={k}")
    if n is not None and not skew_element(lam, mu, k, tag).fits(n):
        raise ValueError(f"the skew element of {lam}/{mu} does not lie in rank {n}")


def _default_n(lam: Shape, mu: Shape, k: int, tag: GroupTag, n: int | None) -> int:
    if n is not None:
        return n
    size = skew_element(lam, mu, k, tag).size
    return max(size, 2 if tag is GroupTag.D else 1)


def enumerate_k_tritableaux(lam: Partition, mu: Partition, k: int, n: int | None, m: int) -> Iterator[SkewTableau]:
    lam, mu = tuple(lam), tuple(mu)
    n = _default_n(lam, mu, k, GroupTag.BC, n)
    _check_pair(lam, mu, k, GroupTag.BC, n)
    return _chains(mu, lam, tritableau_steps_C(lam, mu, k, n, m), _sorted_shapes(lam, mu, k, GroupTag.BC))


def tableau_theta(lam: Partition, mu: Partition, k: int, n: int | None, m: int) -> Polynomial:
    """Sum of 2^n(U) (xyz)^U over k-tritableaux of shape lam/mu."""
    lam, mu = tuple(lam), tuple(mu)
    n = _default_n(lam, mu, k, GroupTag.BC, n)
    _check_pair(lam, mu, k, GroupTag.BC, n)
    return _chain_sum(mu, lam, tritableau_steps_C(lam, mu, k, n, m), _sorted_shapes(lam, mu, k, GroupTag.BC))


def enumerate_k_tableaux(lam: Partition, mu: Partition, k: int, m: int) -> Iterator[SkewTableau]:
    lam, mu = tuple(lam), tuple(mu)
    _check_pair(lam, mu, k, GroupTag.BC, None)
    steps = tritableau_steps_C(lam, mu, k, 1, m, m_x=0, m_y=0)
    return _chains(mu, lam, steps, _sorted_shapes(lam, mu, k, GroupTag.BC))


def stanley_F_tableau(lam: Partition, mu: Partition, k: int, m: int) -> Polynomial:
    lam, mu = tuple(lam), tuple(mu)
    _check_pair(lam, mu, k, GroupTag.BC, None)
    steps = tritableau_steps_C(lam, mu, k, 1, m, m_x=0, m_y=0)
    return _chain_sum(mu, lam, steps, _sorted_shapes(lam, mu, k, GroupTag.BC))


# type D

def tritableau_steps_D(lam: TypedPartition, mu: TypedPartition, n: int, m: int,
                       bounded: bool = True, m_x: int | None = None, m_y: int | None = None,
                       literal_y_bound: bool = False) -> list[Step]:
    """Steps for typed tritableaux.

    A double-primed letter b'' in column k+1-j needs b <= |w_lam(j)| - 1.  With
    ``literal_y_bound`` the looser b <= |w_lam(j) - 1| is used instead; it admits
    extra fillings whenever w_lam(j) < 0 and breaks the sum formula.
    """
    k = lam.k
    m_x = n - 1 if m_x is None else m_x
    m_y = n - 1 if m_y is None else m_y
    wl, wm = grassmannian(lam, k, GroupTag.D), grassmannian(mu, k, GroupTag.D)
    lp, mp = lam.parts, mu.parts
    lk_mu, lk_lam = mu.ell_k, lam.ell_k

    def x_ok(a: int, r: int, c: int) -> bool:
        if r <= lk_mu and a > mp[r - 1] - k + 1:
            return False
        return not (c <= k and a > abs(wm(k + 1 - c)))

    def y_ok(b: int, r: int, c: int) -> bool:
        if r <= lk_lam and b > lp[r - 1] - k:
            return False
        if c > k:
            return True
        v = wl(k + 1 - c)
        return b <= (abs(v - 1) if literal_y_bound else abs(v) - 1)

    steps = []
    for a in range(m_x, 0, -1):
        def rule(old, new, a=a):
            if not is_typed_x_strip_D(new, old):
                return None
            if bounded and a >= 2 and is_extremal(new, old):
                return None
            if bounded and not _rows_ok(old.parts, new.parts, lambda r, c: x_ok(a, r, c)):
                return None
            return 0
        steps.append(Step(Letter(Kind.PRIMED, a), rule, x(a)))
    for i in range(1, m + 1):
        def rule(old, new):
            return n_strip_D(new, old) if is_typed_k_horizontal_strip(new, old) else None
        steps.append(Step(Letter(Kind.UNMARKED, i), rule, z(i), circled_if_type2=True))
    for b in range(1, m_y + 1):
        def rule(old, new, b=b):
            if not is_typed_y_strip_D(new, old):
                return None
            if bounded and b >= 2 and is_extremal(new, old):
                return None
            if bounded and not _rows_ok(old.parts, new.parts, lambda r, c: y_ok(b, r, c)):
                return None
            return 0
        steps.append(Step(Letter(Kind.DOUBLE_PRIMED, b), rule, -y(b)))
    return steps


def _check_k(lam: TypedPartition, mu: TypedPartition, k: int) -> None:
    if lam.k != k or mu.k != k:
        raise ValueError(f"typed partitions carry k={lam.k}, {mu.k} but k={k} was requested")


def enumerate_typed_tritableaux(lam: TypedPartition, mu: TypedPartition, k: int, n: int | None, m: int) -> Iterator[SkewTableau]:
    _check_k(lam, mu, k)
    n = _default_n(lam, mu, k, GroupTag.D, n)
    _check_pair(lam, mu, k, GroupTag.D, n)
    return _chains(mu, lam, tritableau_steps_D(lam, mu, n, m), _sorted_shapes(lam, mu, k, GroupTag.D))


def tableau_eta(lam: TypedPartition, mu: TypedPartition, k: int, n: int | None, m: int) -> Polynomial:
    """Sum of 2^n(U) (xyz)^U over typed k'-tritableaux of shape lam/mu."""
    _check_k(lam, mu, k)
    n = _default_n(lam, mu, k, GroupTag.D, n)
    _check_pair(lam, mu, k, GroupTag.D, n)
    return _chain_sum(mu, lam, tritableau_steps_D(lam, mu, n, m), _sorted_shapes(lam, mu, k, GroupTag.D))


def enumerate_typed_tableaux(lam: TypedPartition, mu: TypedPartition, m: int) -> Iterator[SkewTableau]:
    k = lam.k
    _check_pair(lam, mu, k, GroupTag.D, None)
    steps = tritableau_steps_D(lam, mu, 1, m, m_x=0, m_y=0)
    return _chains(mu, lam, steps, _sorted_shapes(lam, mu, k, GroupTag.D))


def stanley_E_tableau(lam: TypedPartition, mu: TypedPartition, m: int) -> Polynomial:
    k = lam.k
    _check_pair(lam, mu, k, GroupTag.D, None)
    steps = tritableau_steps_D(lam, mu, 1, m, m_x=0, m_y=0)
    return _chain_sum(mu, lam, steps, _sorted_shapes(lam, mu, k, GroupTag.D))


# mixed Stanley functions

def mixed_stanley(lam: Shape, mu: Shape, k: int, tag: GroupTag, m_x: int, m_z: int, m_y: int) -> Polynomial:
    """J_w (type C) or I_w (type D) truncated to m_x primed, m_z unmarked and m_y double-primed ranks.

    The alphabets are unbounded: no row/column bounds and no non-extremal condition.
    """
    _check_pair(lam, mu, k, tag, None)
    if tag is GroupTag.BC:
        steps = tritableau_steps_C(tuple(lam), tuple(mu), k, 1, m_z, bounded=False, m_x=m_x, m_y=m_y)
    elif tag is GroupTag.D:
        steps = tritableau_steps_D(lam, mu, 1, m_z, bounded=False, m_x=m_x, m_y=m_y)
    else:
        raise ValueError("mixed Stanley functions are defined for types C and D")
    return _chain_sum(mu, lam, steps, _sorted_shapes(lam, mu, k, tag))


def tableau_sum(tableaux) -> Polynomial:
    total = ZERO
    for t in tableaux:
        total = total + t.weight
    return total


# double Schur determinant

def elementary(p: int, r: int, negate: bool = True) -> Polynomial:
    """e_p(-y_1, ..., -y_r) (or of +y when ``negate`` is False)."""
    if p < 0 or p > r:
        return ZERO
    # e_p via the recursion e_p(Y_r) = e_p(Y_{r-1}) + y_r e_{p-1}(Y_{r-1})
    row = [ONE] + [ZERO] * p
    for i in range(1, r + 1):
        v = -y(i) if negate else y(i)
        for q in range(p, 0, -1):
            row[q] = row[q] + v * row[q - 1]
    return row[p]


def schur_single(mu: Partition, m: int) -> Polynomial:
    """s_mu(x_1, ..., x_m) as a sum over semistandard tableaux with entries in [1, m]."""
    mu = tuple(mu)
    if len(mu) > m:
        return ZERO

    def rows(i: int, above: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
        if i == len(mu):
            yield []
            return
        for row in _weak_rows(mu[i], m, above):
            for rest in rows(i + 1, row):
                yield [row] + rest

    total = ZERO
    for t in rows(0, ()):
        mono = ONE
        for row in t:
            for v in row:
                mono = mono * x(v)
        total = total + mono
    return total


def _weak_rows(length: int, m: int, above: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    def rec(pos: int, lo: int) -> Iterator[tuple[int, ...]]:
        if pos == length:
            yield ()
            return
        start = max(lo, above[pos] + 1 if pos < len(above) else 1)
        for v in range(start, m + 1):
            for rest in rec(pos + 1, v):
                yield (v,) + rest
    return rec(0, 1)


def _det(mat: list[list[Polynomial]]) -> Polynomial:
    size = len(mat)
    total = ZERO
    for perm in permutations(range(size)):
        inv = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        term = ONE
        for i, j in enumerate(perm):
            term = term * mat[i][j]
            if not term:
                break
        total = total + (term if inv % 2 == 0 else -term)
    return total


def double_schur_determinant(lam: Partition, m: int, y_count: int | None = None) -> Polynomial:
    """sum_{mu in lam} s_mu(X_m) det(e_{lam_i - mu_j - i + j}(-Y_{lam_i + m - i}))."""
    lam = tuple(lam)
    if len(lam) > m:
        raise ValueError(f"{lam} has more than {m} parts")
    total = ZERO
    for mu in partitions_in(lam):
        mat = []
        for i in range(1, m + 1):
            r = part(lam, i) + m - i
            if y_count is not None:
                r = min(r, y_count)
            mat.append([elementary(part(lam, i) - part(mu, j) - i + j, r) for j in range(1, m + 1)])
        total = total + schur_single(mu, m) * _det(mat)
    return total
