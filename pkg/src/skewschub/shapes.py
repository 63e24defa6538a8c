"""Partitions, (typed) k-strict partitions and their Grassmannian elements.

Partitions are plain tuples of positive parts in weakly decreasing order.
Typed k-strict partitions (type D) are ``TypedPartition`` values.  Boxes are
``(row, col)`` pairs with rows counted from 1; row 0 is the infinite row that
sits above every diagram.

The strip predicates work for both the type C relation (k'-related, compared
through doubled integers ``|2c - 2k - 1| + 2r``) and the type D relation
((k-1)-related, ``|c - k| + r``).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Sequence, Union

from .weyl import GroupTag, SignedPermutation, decreasing_word, increasing_word, reduced_factorization_count

Partition = tuple[int, ...]
Box = tuple[int, int]


def partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition")
    return tuple(p for p in parts if p)


def part(lam: Partition, i: int) -> int:
    """lam_i with 1-based i; zero past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, (lam[0] if lam else 0) + 1))


def contains(lam: Partition, mu: Partition) -> bool:
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def skew_boxes(lam: Partition, mu: Partition) -> list[Box]:
    return [(r, c) for r in range(1, len(lam) + 1) for c in range(part(mu, r) + 1, lam[r - 1] + 1)]


def ell_k(lam: Partition, k: int) -> int:
    return sum(1 for p in lam if p > k)


def is_k_strict(lam: Partition, k: int) -> bool:
    big = [p for p in lam if p > k]
    return len(big) == len(set(big))


def partitions_in(bound: Sequence[int]) -> Iterator[Partition]:
    """All partitions contained in ``bound``, in lexicographic order of parts."""
    bound = tuple(bound)

    def rec(i: int, cap: int) -> Iterator[list[int]]:
        if i == len(bound):
            yield []
            return
        for p in range(0, min(cap, bound[i]) + 1):
            if p == 0:
                yield []
                continue
            for rest in rec(i + 1, p):
                yield [p] + rest

    for parts in rec(0, bound[0] if bound else 0):
        yield tuple(parts)


def k_strict_in(bound: Sequence[int], k: int) -> Iterator[Partition]:
    return (lam for lam in partitions_in(bound) if is_k_strict(lam, k))


# typed partitions

@dataclass(frozen=True, order=True)
class TypedPartition:
    parts: Partition
    k: int
    type: int = 0

    def __post_init__(self):
        object.__setattr__(self, "parts", partition(self.parts))
        if not is_k_strict(self.parts, self.k):
            raise ValueError(f"{self.parts} is not {self.k}-strict")
        has_k = self.k in self.parts
        if self.type not in (0, 1, 2) or (self.type > 0) != has_k:
            raise ValueError(f"type {self.type} is invalid for {self.parts} with k={self.k}")

    @property
    def ell_k(self) -> int:
        return ell_k(self.parts, self.k)

    @property
    def epsilon(self) -> int:
        return self.ell_k + self.type

    def __str__(self) -> str:
        return format_partition(self.parts, self.k, self.type)


def typings(lam: Partition, k: int) -> list[TypedPartition]:
    return [TypedPartition(lam, k, t) for t in ((1, 2) if k in lam else (0,))]


def typed_in(bound: Sequence[int], k: int) -> Iterator[TypedPartition]:
    for lam in k_strict_in(bound, k):
        yield from typings(lam, k)


def epsilon(nu: TypedPartition) -> int:
    return nu.epsilon


def format_partition(lam: Partition, k: int | None = None, type_: int | None = None) -> str:
    out = "[" + ",".join(map(str, lam)) + "]"
    if k is not None:
        out += f" k={k}"
    if type_ is not None:
        out += f" type={type_}"
    return out


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("[]()")
    if not text:
        return ()
    return partition(int(t) for t in text.split(","))


# Grassmannian bijections

def grassmannian_A(lam: Partition, m: int) -> SignedPermutation:
    if len(lam) > m:
        raise ValueError(f"{lam} has more than {m} parts")
    head = [part(lam, m + 1 - i) + i for i in range(1, m + 1)]
    n = max(head, default=0)
    rest = [v for v in range(1, n + 1) if v not in head]
    return SignedPermutation(tuple(head + rest), GroupTag.A)


def shape_A(w: SignedPermutation, m: int) -> Partition:
    if not is_grassmannian_A(w, m):
        raise ValueError(f"{w} is not {m}-Grassmannian")
    return partition(w(m + 1 - i) - (m + 1 - i) for i in range(1, m + 1))


def is_grassmannian_A(w: SignedPermutation, m: int) -> bool:
    return w.in_symmetric_group() and all(w(i) < w(i + 1) for i in range(1, max(len(w.window), m + 1)) if i != m)


def a_code(lam: Partition, k: int) -> tuple[int, ...]:
    cols = conjugate(lam)
    return tuple(sorted(part(cols, c) for c in range(1, k + 1)))


def _fill(head: list[int]) -> list[int]:
    n = max((abs(v) for v in head), default=0)
    used = {abs(v) for v in head}
    return head + [v for v in range(1, n + 1) if v not in used]


def grassmannian_C(lam: Partition, k: int) -> SignedPermutation:
    lam = partition(lam)
    if not is_k_strict(lam, k):
        raise ValueError(f"{lam} is not {k}-strict")
    lk = ell_k(lam, k)
    gamma = a_code(lam, k)
    head = []
    for j in range(1, k + 1):
        g = gamma[j - 1]
        head.append(g + j - sum(1 for p in range(1, lk + 1) if lam[p - 1] + p > g + j + k))
    head += [k - lam[i - 1] for i in range(1, lk + 1)]
    return SignedPermutation(tuple(_fill(head)), GroupTag.BC)


def is_grassmannian_C(w: SignedPermutation, k: int) -> bool:
    win = w.padded(max(len(w.window), k + 1))
    if any(v <= 0 for v in win[:k]):
        return False
    return all(win[i] < win[i + 1] for i in range(len(win) - 1) if i + 1 != k)


def shape_C(w: SignedPermutation, k: int) -> Partition:
    if not is_grassmannian_C(w, k):
        raise ValueError(f"{w} is not {k}-Grassmannian")
    win = w.padded(max(len(w.window), k))
    head, tail = win[:k], win[k:]
    big = [k - v for v in tail if v < 0]
    small = [sum(1 for h in head if h > v) for v in tail if v > 0]
    return partition(big + small)


def grassmannian_D(lam: TypedPartition) -> SignedPermutation:
    k = lam.k
    if k < 1:
        raise ValueError("type D shapes need k >= 1")
    parts = lam.parts
    lk = lam.ell_k
    gamma = a_code(parts, k)
    head = []
    for j in range(1, k + 1):
        g = gamma[j - 1]
        head.append(g + j - sum(1 for p in range(1, lk + 1) if parts[p - 1] + p >= g + j + k))
    head += [k - 1 - parts[i - 1] for i in range(1, lk + 1)]
    win = _fill(head)
    if sum(v < 0 for v in win) % 2:
        win = [-v if abs(v) == 1 else v for v in win]
    if lam.type == 2:
        win = [-v if (i == 0 or abs(v) == 1) else v for i, v in enumerate(win)]
    return SignedPermutation(tuple(win), GroupTag.D)


def element_type(w: SignedPermutation) -> int:
    """0 if |w_1| = 1, 1 if w_1 > 1, 2 if w_1 < -1."""
    w1 = w(1)
    return 0 if abs(w1) == 1 else (1 if w1 > 1 else 2)


def is_grassmannian_D(w: SignedPermutation, k: int) -> bool:
    win = w.padded(max(len(w.window), k + 1))
    if k >= 2 and not (abs(win[0]) < win[1] and all(win[i] < win[i + 1] for i in range(1, k - 1))):
        return False
    return all(win[i] < win[i + 1] for i in range(k, len(win) - 1))


def shape_D(w: SignedPermutation, k: int) -> TypedPartition:
    if w.tag is not GroupTag.D or not is_grassmannian_D(w, k):
        raise ValueError(f"{w} is not a {k}-Grassmannian element of type D")
    t = element_type(w)
    win = list(w.padded(max(len(w.window), k + 1)))
    if t == 2:
        win = [-v if (i == 0 or abs(v) == 1) else v for i, v in enumerate(win)]
    head, tail = win[:k], win[k:]
    big = [k - 1 - v for v in tail if v < -1]
    small = [sum(1 for h in head if abs(h) > abs(v)) for v in tail if v >= -1]
    lam = partition(big + small)
    if k in lam and t == 0:
        raise ValueError(f"{w} does not correspond to a typed {k}-strict partition")
    return TypedPartition(lam, k, t)


Shape = Union[Partition, TypedPartition]


def grassmannian(lam: Shape, k: int, tag: GroupTag) -> SignedPermutation:
    if tag is GroupTag.A:
        return grassmannian_A(lam, k)
    if tag is GroupTag.BC:
        return grassmannian_C(lam, k)
    return grassmannian_D(lam)


def _parts(lam: Shape) -> Partition:
    return lam.parts if isinstance(lam, TypedPartition) else lam


# box relations

def diag_C(box: Box, k: int) -> int:
    r, c = box
    return abs(2 * c - 2 * k - 1) + 2 * r


def diag_D(box: Box, k: int) -> int:
    r, c = box
    return abs(c - k) + r


def is_k_related_C(b1: Box, b2: Box, k: int) -> bool:
    return diag_C(b1, k) == diag_C(b2, k)


def is_k_related_D(b1: Box, b2: Box, k: int) -> bool:
    return diag_D(b1, k) == diag_D(b2, k)


@dataclass(frozen=True)
class StripData:
    """Box sets attached to a pair mu in lam."""
    skew: tuple[Box, ...]
    R: tuple[Box, ...]
    A: tuple[Box, ...]
    is_strip: bool
    components: int
    components_off_first_right_column: int


def _components(boxes: Sequence[Box], k: int) -> tuple[int, int]:
    todo = set(boxes)
    total = off = 0
    while todo:
        stack = [todo.pop()]
        touches = False
        while stack:
            r, c = stack.pop()
            touches |= c == k + 1
            for dr in (-1, 0, 1):
                for dc in (-1, 0, 1):
                    nb = (r + dr, c + dc)
                    if nb in todo:
                        todo.remove(nb)
                        stack.append(nb)
        total += 1
        off += not touches
    return total, off


def strip_data(lam: Partition, mu: Partition, k: int, diag: Callable[[Box, int], int]) -> StripData:
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    skew = skew_boxes(lam, mu)
    in_rim = all(part(lam, r + 1) < c + 1 for r, c in skew)
    right_cols = [c for _, c in skew if c > k]
    horizontal = len(right_cols) == len(set(right_cols))
    left_diags = {diag(b, k) for b in skew if b[1] <= k}

    lam_c, mu_c = conjugate(lam), conjugate(mu)
    # row-zero boxes past this column are unrelated to any left box and form
    # one connected tail with the last materialized box
    cmax = max(part(lam, 1), 2 * k + len(lam)) + 2
    R, A = [], []
    for c in range(k + 1, cmax + 1):
        depth = part(lam_c, c)
        if depth != part(mu_c, c):
            continue
        box = (depth, c)
        (R if diag(box, k) in left_diags else A).append(box)

    r_diags = [diag(b, k) for b in R]
    ok = in_rim and horizontal and len(r_diags) == len(set(r_diags))
    if ok:
        by_col: dict[int, list[Box]] = {}
        for b in skew:
            by_col.setdefault(b[1], []).append(b)
        for col_boxes in by_col.values():
            for b1, b2 in combinations(col_boxes, 2):
                ds = {diag(b1, k), diag(b2, k)}
                rel = [b for b in R if diag(b, k) in ds]
                if len(rel) != 2 or rel[0][0] != rel[1][0]:
                    ok = False
    total, off = _components(A, k)
    return StripData(tuple(skew), tuple(R), tuple(A), ok, total, off)


@lru_cache(maxsize=None)
def _strip_C(lam: Partition, mu: Partition, k: int) -> StripData:
    return strip_data(lam, mu, k, diag_C)


@lru_cache(maxsize=None)
def _strip_D(lam: Partition, mu: Partition, k: int) -> StripData:
    return strip_data(lam, mu, k, diag_D)


def is_k_horizontal_strip(lam: Partition, mu: Partition, k: int) -> bool:
    return _strip_C(tuple(lam), tuple(mu), k).is_strip


def is_typed_k_horizontal_strip(lam: TypedPartition, mu: TypedPartition) -> bool:
    if lam.type + mu.type == 3:
        return False
    return _strip_D(lam.parts, mu.parts, lam.k).is_strip


def n_strip_C(lam: Partition, mu: Partition, k: int) -> int:
    data = _strip_C(tuple(lam), tuple(mu), k)
    if not data.is_strip:
        raise ValueError(f"{lam}/{mu} is not a {k}-horizontal strip")
    return data.components_off_first_right_column


def n_strip_D(lam: TypedPartition, mu: TypedPartition) -> int:
    if not is_typed_k_horizontal_strip(lam, mu):
        raise ValueError(f"{lam}/{mu} is not a typed {lam.k}'-horizontal strip")
    return _strip_D(lam.parts, mu.parts, lam.k).components - 1


# skew elements

def skew_element(lam: Shape, mu: Shape, k: int, tag: GroupTag) -> SignedPermutation:
    return grassmannian(lam, k, tag) * grassmannian(mu, k, tag).inverse()


@lru_cache(maxsize=None)
def _compatible(lam: Shape, mu: Shape, k: int, tag: GroupTag) -> bool:
    if not contains(_parts(lam), _parts(mu)):
        return False
    wl, wm = grassmannian(lam, k, tag), grassmannian(mu, k, tag)
    return (wl * wm.inverse()).length() == wl.length() - wm.length()


def is_compatible_pair(lam: Shape, mu: Shape, k: int, tag: GroupTag) -> bool:
    return _compatible(lam, mu, k, tag)


def is_x_strip_C(lam: Partition, mu: Partition, k: int) -> bool:
    return _word_strip(tuple(lam), tuple(mu), k, GroupTag.BC, decreasing=True)


def is_y_strip_C(lam: Partition, mu: Partition, k: int) -> bool:
    return _word_strip(tuple(lam), tuple(mu), k, GroupTag.BC, decreasing=False)


def is_typed_x_strip_D(lam: TypedPartition, mu: TypedPartition) -> bool:
    return _word_strip(lam, mu, lam.k, GroupTag.D, decreasing=True)


def is_typed_y_strip_D(lam: TypedPartition, mu: TypedPartition) -> bool:
    return _word_strip(lam, mu, lam.k, GroupTag.D, decreasing=False)


@lru_cache(maxsize=None)
def _word_strip(lam: Shape, mu: Shape, k: int, tag: GroupTag, decreasing: bool) -> bool:
    if not is_compatible_pair(lam, mu, k, tag):
        return False
    w = skew_element(lam, mu, k, tag)
    if not w.in_symmetric_group():
        return False
    w = w.with_tag(GroupTag.A)
    found = decreasing_word(w, 1) if decreasing else increasing_word(w, 1)
    return found is not None


def _left_boxes(skew: Sequence[Box], k: int) -> list[Box]:
    return [b for b in skew if b[1] <= k]


def _is_vertical(boxes: Sequence[Box]) -> bool:
    rows = [r for r, _ in boxes]
    return len(rows) == len(set(rows))


def _is_horizontal(boxes: Sequence[Box]) -> bool:
    cols = [c for _, c in boxes]
    return len(cols) == len(set(cols))


def _no_two_related(boxes: Sequence[Box], k: int, diag) -> bool:
    ds = [diag(b, k) for b in boxes]
    return len(ds) == len(set(ds))


def is_x_strip_C_boxes(lam: Partition, mu: Partition, k: int) -> bool:
    """Box characterization of x-strips among k-horizontal strips."""
    if not is_k_horizontal_strip(lam, mu, k) or ell_k(lam, k) != ell_k(mu, k):
        return False
    skew = skew_boxes(lam, mu)
    return _is_vertical(_left_boxes(skew, k)) and _no_two_related(skew, k, diag_C)


def is_y_strip_C_boxes(lam: Partition, mu: Partition, k: int) -> bool:
    if not is_k_horizontal_strip(lam, mu, k) or ell_k(lam, k) != ell_k(mu, k):
        return False
    skew = skew_boxes(lam, mu)
    right = [b for b in skew if b[1] > k]
    return _is_horizontal(_left_boxes(skew, k)) and _is_vertical(right)


def is_extremal(lam: TypedPartition, mu: TypedPartition) -> bool:
    return (lam.ell_k, lam.type) != (mu.ell_k, mu.type)


def _extremal_clause(lam: TypedPartition, mu: TypedPartition) -> bool:
    if not is_extremal(lam, mu):
        return True
    if (lam.type, mu.type) == (0, 0):
        return False
    if mu.epsilon % 2:
        return lam.epsilon % 2 == 1 and mu.type == 0
    return lam.epsilon % 2 == 1 or mu.type == 1


def is_typed_x_strip_D_boxes(lam: TypedPartition, mu: TypedPartition) -> bool:
    if not is_typed_k_horizontal_strip(lam, mu):
        return False
    skew = skew_boxes(lam.parts, mu.parts)
    k = lam.k
    return (_is_vertical(_left_boxes(skew, k)) and _no_two_related(skew, k, diag_D)
            and _extremal_clause(lam, mu))


def is_typed_y_strip_D_boxes(lam: TypedPartition, mu: TypedPartition) -> bool:
    if not is_typed_k_horizontal_strip(lam, mu):
        return False
    skew = skew_boxes(lam.parts, mu.parts)
    k = lam.k
    right = [b for b in skew if b[1] > k]
    return _is_horizontal(_left_boxes(skew, k)) and _is_vertical(right) and _extremal_clause(lam, mu)


def intermediate_count(lam: Shape, mu: Shape, k: int, tag: GroupTag) -> int:
    """Number of nu between mu and lam with (lam, nu) and (nu, mu) compatible."""
    if not is_compatible_pair(lam, mu, k, tag):
        raise ValueError("not a compatible pair")
    return sum(1 for nu in shapes_between(lam, mu, k, tag)
               if is_compatible_pair(lam, nu, k, tag) and is_compatible_pair(nu, mu, k, tag))


def factorization_count(lam: Shape, mu: Shape, k: int, tag: GroupTag) -> int:
    return reduced_factorization_count(skew_element(lam, mu, k, tag))


def shapes_between(lam: Shape, mu: Shape, k: int, tag: GroupTag) -> list[Shape]:
    """Every shape nu of the class of lam with mu in nu in lam (lexicographic)."""
    lp, mp = _parts(lam), _parts(mu)
    out: list[Shape] = []
    for nu in partitions_in(lp):
        if not contains(nu, mp):
            continue
        if tag is GroupTag.A:
            out.append(nu)
        elif tag is GroupTag.BC:
            if is_k_strict(nu, k):
                out.append(nu)
        elif is_k_strict(nu, k):
            out.extend(typings(nu, k))
    return out


def shapes_in(bound: Sequence[int], k: int, tag: GroupTag) -> Iterator[Shape]:
    if tag is GroupTag.A:
        return (lam for lam in partitions_in(bound) if len(lam) <= k)
    if tag is GroupTag.BC:
        return k_strict_in(bound, k)
    return typed_in(bound, k)


def compatible_pairs(bound: Sequence[int], k: int, tag: GroupTag) -> Iterator[tuple[Shape, Shape]]:
    shapes = list(shapes_in(bound, k, tag))
    for lam in shapes:
        for mu in shapes:
            if is_compatible_pair(lam, mu, k, tag):
                yield lam, mu


def skew_pairs(w: SignedPermutation, k: int, bound: Sequence[int]) -> list[tuple[Shape, Shape]]:
    """All compatible pairs (lam, mu) inside ``bound`` with w = w_lam w_mu^{-1}."""
    tag = w.tag
    target = w.length()
    shapes = list(shapes_in(bound, k, tag))
    elems = {}
    for s in shapes:
        try:
            elems[s] = grassmannian(s, k, tag)
        except ValueError:
            continue
    out = []
    for lam in shapes:
        if lam not in elems:
            continue
        wl = elems[lam]
        for mu in shapes:
            if mu not in elems or not contains(_parts(lam), _parts(mu)):
                continue
            wm = elems[mu]
            if wl.length() - wm.length() != target:
                continue
            if (wl * wm.inverse()).with_tag(tag) == w:
                out.append((lam, mu))
    out.sort(key=lambda p: (sum(_parts(p[0])), _sort_key(p[0]), _sort_key(p[1])))
    return out


def _sort_key(s: Shape):
    return (s.parts, s.type) if isinstance(s, TypedPartition) else (s, 0)
