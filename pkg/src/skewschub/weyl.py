"""Signed permutations in S_oo, W_oo (types B/C) and the type D group.

Elements are stored by their window ``(w(1), ..., w(n))`` with trailing fixed
points stripped, so an element of W_n and its image in W_{n+1} compare equal.
Products compose as functions: ``(u * v)(i) == u(v(i))``.

Generators are integers: ``BOX`` (= -1) stands for s_box = s_0 s_1 s_0, 0 for
the sign change s_0, and i >= 1 for the transposition (i, i+1).  With this
encoding the canonical order box < 0 < 1 < 2 < ... is plain integer order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

BOX = -1


class GroupTag(enum.Enum):
    A = "A"
    BC = "BC"
    D = "D"


def valid_generator(g: int, tag: GroupTag) -> bool:
    if g >= 1:
        return True
    if g == 0:
        return tag is GroupTag.BC
    if g == BOX:
        return tag is GroupTag.D
    return False


def _check_generator(g: int, tag: GroupTag) -> None:
    if not valid_generator(g, tag):
        raise ValueError(f"generator {format_letter(g)} is not valid in type {tag.value}")


def _strip(window: Sequence[int]) -> tuple[int, ...]:
    n = len(window)
    while n and window[n - 1] == n:
        n -= 1
    return tuple(window[:n])


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple[int, ...]
    tag: GroupTag = GroupTag.BC
    _len: int = field(default=-1, compare=False, repr=False, hash=False)

    def __post_init__(self):
        w = tuple(self.window)
        if sorted(abs(v) for v in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a signed permutation window")
        negs = sum(v < 0 for v in w)
        if self.tag is GroupTag.A and negs:
            raise ValueError(f"{w} has sign changes; not in S_oo")
        if self.tag is GroupTag.D and negs % 2:
            raise ValueError(f"{w} has an odd number of sign changes; not in type D")
        object.__setattr__(self, "window", _strip(w))

    @classmethod
    def identity(cls, tag: GroupTag = GroupTag.BC) -> "SignedPermutation":
        return cls((), tag)

    @classmethod
    def from_word(cls, word: Sequence[int], tag: GroupTag = GroupTag.BC) -> "SignedPermutation":
        w = cls.identity(tag)
        for g in word:
            w = w.right_multiply(g)
        return w

    @property
    def size(self) -> int:
        """Smallest n with self in W_n (at least 1)."""
        return max(len(self.window), 1)

    def fits(self, n: int) -> bool:
        return len(self.window) <= n

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self.window):
            raise ValueError(f"window {self.window} does not fit in rank {n}")
        return self.window + tuple(range(len(self.window) + 1, n + 1))

    def __call__(self, i: int) -> int:
        if i < 0:
            return -self(-i)
        if i == 0:
            raise ValueError("signed permutations act on nonzero integers")
        return self.window[i - 1] if i <= len(self.window) else i

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        n = max(len(self.window), len(other.window))
        return SignedPermutation(tuple(self(other(i)) for i in range(1, n + 1)), _join(self.tag, other.tag))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * len(self.window)
        for i, v in enumerate(self.window, start=1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(inv), self.tag)

    def with_tag(self, tag: GroupTag) -> "SignedPermutation":
        return SignedPermutation(self.window, tag)

    def is_identity(self) -> bool:
        return not self.window

    def in_symmetric_group(self) -> bool:
        return all(v > 0 for v in self.window)

    def neg_count(self) -> int:
        return sum(v < 0 for v in self.window)

    # generator actions

    def right_multiply(self, g: int) -> "SignedPermutation":
        _check_generator(g, self.tag)
        n = max(len(self.window), g + 1, 2 if g == BOX else 1)
        w = list(self.padded(n))
        if g >= 1:
            w[g - 1], w[g] = w[g], w[g - 1]
        elif g == 0:
            w[0] = -w[0]
        else:
            w[0], w[1] = -w[1], -w[0]
        return SignedPermutation(tuple(w), self.tag)

    def left_multiply(self, g: int) -> "SignedPermutation":
        _check_generator(g, self.tag)
        n = max(len(self.window), g + 1, 2 if g == BOX else 1)
        return SignedPermutation(tuple(_act(g, v) for v in self.padded(n)), self.tag)

    def is_right_descent(self, g: int) -> bool:
        """True iff l(w s_g) < l(w)."""
        if g >= 1:
            return self(g) > self(g + 1)
        if g == 0:
            return self(1) < 0
        return self(1) + self(2) < 0

    def is_left_descent(self, g: int) -> bool:
        return self.inverse().is_right_descent(g)

    def generators_in_play(self) -> list[int]:
        """Generators that can be descents: box/0 (per tag) and 1..size-1."""
        gens = list(range(1, len(self.window)))
        if self.tag is GroupTag.BC:
            gens.insert(0, 0)
        elif self.tag is GroupTag.D:
            gens.insert(0, BOX)
        return gens

    def right_descents(self) -> list[int]:
        return [g for g in self.generators_in_play() if self.is_right_descent(g)]

    def left_descents(self) -> list[int]:
        return self.inverse().right_descents()

    def length(self) -> int:
        if self._len < 0:
            object.__setattr__(self, "_len", len(canonical_reduced_word(self)))
        return self._len

    def __str__(self) -> str:
        return format_element(self)


def _join(a: GroupTag, b: GroupTag) -> GroupTag:
    if a is b:
        return a
    if GroupTag.A in (a, b):
        return b if a is GroupTag.A else a
    raise ValueError(f"cannot multiply elements of types {a.value} and {b.value}")


def _act(g: int, v: int) -> int:
    """Image of the nonzero integer v under the generator s_g."""
    a = abs(v)
    sgn = 1 if v > 0 else -1
    if g >= 1:
        if a == g:
            a = g + 1
        elif a == g + 1:
            a = g
        return sgn * a
    if g == 0:
        return -v if a == 1 else v
    if a == 1:
        return -sgn * 2
    if a == 2:
        return -sgn * 1
    return v


def canonical_reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    """Reduced word found by stripping the smallest right descent repeatedly."""
    letters = []
    while not w.is_identity():
        g = next(g for g in w.generators_in_play() if w.is_right_descent(g))
        letters.append(g)
        w = w.right_multiply(g)
    return tuple(reversed(letters))


def length(w: SignedPermutation) -> int:
    return w.length()


def right_multiply(w: SignedPermutation, g: int) -> SignedPermutation:
    return w.right_multiply(g)


def left_multiply(g: int, w: SignedPermutation) -> SignedPermutation:
    return w.left_multiply(g)


def neg_count(w: SignedPermutation) -> int:
    return w.neg_count()


def length_formula(w: SignedPermutation) -> int:
    """Closed-form length, kept only as a cross-check for descent reduction."""
    win = w.window
    inv = sum(1 for i in range(len(win)) for j in range(i + 1, len(win)) if win[i] > win[j])
    if w.tag is GroupTag.A:
        return inv
    if w.tag is GroupTag.BC:
        return inv + sum(-v for v in win if v < 0)
    return inv + sum(-v - 1 for v in win if v < 0)


def is_reduced_factorization(factors: Sequence[SignedPermutation], w: SignedPermutation) -> bool:
    prod_ = SignedPermutation.identity(w.tag)
    for u in factors:
        prod_ = prod_ * u
    return prod_ == w.with_tag(prod_.tag) and sum(u.length() for u in factors) == w.length()


def reduced_words(w: SignedPermutation) -> Iterator[tuple[int, ...]]:
    """All reduced words of w (exponentially many; desk scale only)."""
    if w.is_identity():
        yield ()
        return
    for g in w.right_descents():
        for word in reduced_words(w.right_multiply(g)):
            yield word + (g,)


def decreasing_word(w: SignedPermutation, p: int = 1) -> tuple[int, ...] | None:
    """The reduced word a_1 > ... > a_r >= p of w, or None if there is none.

    Greedy: a_1 must be the largest left descent of w.
    """
    word = []
    prev = None
    while not w.is_identity():
        if not w.in_symmetric_group():
            return None
        a = max(w.left_descents())
        if a < p or (prev is not None and a >= prev):
            return None
        word.append(a)
        prev = a
        w = w.left_multiply(a)
    return tuple(word)


def increasing_word(w: SignedPermutation, p: int = 1) -> tuple[int, ...] | None:
    """The reduced word p <= a_1 < ... < a_r of w, or None."""
    word = []
    prev = None
    while not w.is_identity():
        if not w.in_symmetric_group():
            return None
        a = min(w.left_descents())
        if a < p or (prev is not None and a <= prev):
            return None
        word.append(a)
        prev = a
        w = w.left_multiply(a)
    return tuple(word)


def is_decreasing_down_to(w: SignedPermutation, p: int) -> bool:
    return decreasing_word(w, p) is not None


def is_increasing_up_from(w: SignedPermutation, p: int) -> bool:
    return increasing_word(w, p) is not None


def unimodal_word(w: SignedPermutation) -> tuple[int, ...] | None:
    """A reduced word a_1 > ... > a_q < ... < a_r for w, or None.

    Depth-first over left descents, pruned to words that stay unimodal.
    """
    return _unimodal(w, None, True)


@lru_cache(maxsize=None)
def _unimodal(w: SignedPermutation, last: int | None, falling: bool) -> tuple[int, ...] | None:
    if w.is_identity():
        return ()
    for g in w.left_descents():
        if last is None or (falling and g < last):
            nxt = (g, True)
        elif g > last:
            nxt = (g, False)
        else:
            continue
        rest = _unimodal(w.left_multiply(g), *nxt)
        if rest is not None:
            return (g,) + rest
    return None


def is_unimodal(w: SignedPermutation) -> bool:
    return unimodal_word(w) is not None


def reduced_factorization_count(w: SignedPermutation) -> int:
    """Number of pairs (u, v) with u v = w and l(u) + l(v) = l(w)."""
    # grow reduced prefixes u one generator at a time: u s_g stays a prefix
    # exactly when g is a left descent of u^{-1} w
    seen = {SignedPermutation.identity(w.tag)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for u in frontier:
            for g in (u.inverse() * w).left_descents():
                v = u.right_multiply(g)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return len(seen)


def elements(n: int, tag: GroupTag) -> Iterator[SignedPermutation]:
    """Every element of S_n, W_n or the type D group of rank n."""
    for perm in permutations(range(1, n + 1)):
        if tag is GroupTag.A:
            yield SignedPermutation(perm, tag)
            continue
        for signs in product((1, -1), repeat=n):
            if tag is GroupTag.D and signs.count(-1) % 2:
                continue
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, perm)), tag)


# text notation

def format_letter(g: int) -> str:
    return "B" if g == BOX else str(g)


def format_word(word: Sequence[int]) -> str:
    return ",".join(format_letter(g) for g in word)


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok.upper() == "B":
            out.append(BOX)
        else:
            g = int(tok)
            if g < 0:
                raise ValueError(f"bad generator {tok!r}")
            out.append(g)
    return tuple(out)


def format_element(w: SignedPermutation) -> str:
    return ",".join(str(v) for v in w.window) or "1"


def parse_element(text: str, tag: GroupTag = GroupTag.BC) -> SignedPermutation:
    text = text.strip()
    if not text:
        return SignedPermutation.identity(tag)
    return SignedPermutation(tuple(int(t) for t in text.split(",")), tag)
