"""Free Lie algebra on x1..xn in the Lyndon basis.

Basis elements are Lyndon words over the alphabet 1..n; the word ``w`` stands
for its standard bracketing ``[P(u), P(v)]`` where ``w = uv`` and ``v`` is the
longest proper Lyndon suffix.  Words are plain tuples of ints, compared with
Python's tuple order, which is exactly the lexicographic order Lyndon words
are defined with (a proper prefix is smaller).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

Word = tuple


def is_lyndon(w: Word) -> bool:
    return len(w) > 0 and all(w < w[i:] for i in range(1, len(w)))


def lyndon_words(n: int, max_len: int) -> Iterator[Word]:
    """All Lyndon words of length <= max_len over 1..n, in lex order (Duval)."""
    if n < 1 or max_len < 1:
        return
    w = [0]
    while w:
        yield tuple(c + 1 for c in w)
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
        if w:
            w[-1] += 1


@lru_cache(maxsize=None)
def standard_factorization(w: Word):
    """(u, v) with w = uv and v the longest proper Lyndon suffix."""
    if len(w) < 2:
        raise ValueError("letters have no standard factorization")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} is not a Lyndon word")


def bracketing(w: Word) -> str:
    if len(w) == 1:
        return f"x{w[0]}"
    u, v = standard_factorization(w)
    return f"[{bracketing(u)},{bracketing(v)}]"


@lru_cache(maxsize=None)
def bracket_words(u: Word, v: Word) -> tuple:
    """[P(u), P(v)] expanded in the Lyndon basis, as ((word, coeff), ...)."""
    if u == v:
        return ()
    if u > v:
        return tuple((w, -c) for w, c in bracket_words(v, u))
    if len(u) == 1 or standard_factorization(u)[1] >= v:
        return ((u + v, 1),)
    # u = [u1, u2] with u2 < v:  [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
    u1, u2 = standard_factorization(u)
    acc: dict = {}
    for w, c in bracket_words(u2, v):
        for w2, c2 in bracket_words(u1, w):
            acc[w2] = acc.get(w2, 0) + c * c2
    for w, c in bracket_words(u1, v):
        for w2, c2 in bracket_words(w, u2):
            acc[w2] = acc.get(w2, 0) + c * c2
    return tuple(sorted((w, c) for w, c in acc.items() if c))


@dataclass(frozen=True)
class LyndonElement:
    word: Word
    index: int  # 1-based position e_index in the basis order
    n: int

    @property
    def degree(self) -> int:
        return len(self.word)

    @property
    def multidegree(self) -> tuple:
        return tuple(self.word.count(i) for i in range(1, self.n + 1))

    @property
    def factorization(self):
        return standard_factorization(self.word) if len(self.word) > 1 else None

    def __str__(self):
        return bracketing(self.word)


def basis_order_key(w: Word):
    return (len(w), w)


def enumerate_basis(n: int, max_degree: int) -> list:
    """Lyndon basis up to max_degree, ordered by (degree, lex); e_i = x_i for i <= n."""
    if n < 1 or max_degree < 1:
        raise ValueError("need n >= 1 and max_degree >= 1")
    words = sorted(lyndon_words(n, max_degree), key=basis_order_key)
    return [LyndonElement(w, i + 1, n) for i, w in enumerate(words)]


class LieBasis:
    """Read-only basis table for (n, max_degree)."""

    def __init__(self, n: int, max_degree: int):
        self.n = n
        self.max_degree = max_degree
        self.elements = enumerate_basis(n, max_degree)
        self.words = [e.word for e in self.elements]
        self._index = {w: i for i, w in enumerate(self.words)}

    def __len__(self):
        return len(self.elements)

    def position(self, w: Word):
        """0-based position of w, or None when w is outside the table."""
        return self._index.get(tuple(w))


class LieElement:
    """A finite linear combination of Lyndon basis elements."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Word, object] | None = None):
        self.n = n
        self.terms = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                w = tuple(w)
                if not is_lyndon(w) or max(w) > n or min(w) < 1:
                    raise ValueError(f"{w} is not a Lyndon word over 1..{n}")
                self.terms[w] = c

    @classmethod
    def basis(cls, n, word):
        return cls(n, {tuple(word): 1})

    @classmethod
    def gen(cls, n, i):
        return cls(n, {(i,): 1})

    def _same(self, other):
        if not isinstance(other, LieElement):
            raise TypeError("expected a LieElement")
        if other.n != self.n:
            raise ValueError("Lie elements over different alphabets")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return LieElement(self.n, out)

    def __neg__(self):
        return LieElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return LieElement(self.n, {w: a * c for w, a in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {len(w) for w in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for w in sorted(self.terms, key=basis_order_key):
            c = self.terms[w]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = bracketing(w) if mag == 1 else f"{mag}*{bracketing(w)}"
            if not out:
                out = ("-" if sign == "-" else "") + body
            else:
                out += f" {sign} {body}"
        return out

    __repr__ = __str__


def lie_bracket(a: LieElement, b: LieElement) -> LieElement:
    a._same(b)
    acc: dict = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            for w, c in bracket_words(u, v):
                acc[w] = acc.get(w, 0) + cu * cv * c
    return LieElement(a.n, acc)

