"""Words in a pc group and the word problem.

Group elements are handled through shortlex normal forms.  The letter order
is the graph's vertex declaration order, with ``x`` before ``x^-1``.
Internally a letter is an integer code ``2*i`` (for ``x_i``) or ``2*i + 1``
(for ``x_i^-1``), so integer order is the shortlex letter order and
``c ^ 1`` is the inverse letter.

Two reductions are provided.  Piling keeps one stack per generator: a
letter ``x`` is pushed on its own pile and a blocker is pushed on the pile
of every generator not commuting with ``x``; a letter cancels when the top
of its pile holds its inverse.  Triviality tests and cancellation pairings
come from piling.  Normal forms are built letter by letter with
:func:`insert_letter`, so the normal form of ``w x`` is computed from that
of ``w``; depiling the piles gives the same words and is kept as a check.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .graph import CommutationGraph

__all__ = [
    "Letter",
    "Word",
    "WordParseError",
    "NotTrivialError",
    "parse_word",
    "normal_form",
    "is_trivial",
    "words_equal",
    "alphabet",
    "raw_alphabet",
    "cancellation_pairing",
    "outside_pairs",
    "cyclic_permutations",
    "is_eliminable",
    "commutator",
]

_BLOCK = -1


class WordParseError(ValueError):
    pass


class NotTrivialError(ValueError):
    """Raised when a word that must represent the identity does not."""


class Letter(NamedTuple):
    base: str
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.base, -self.sign)

    def __str__(self):
        return self.base if self.sign > 0 else self.base + "^-1"


class Word(tuple):
    """A finite sequence of letters; not necessarily reduced."""

    def __new__(cls, letters: Iterable = ()):
        out = []
        for x in letters:
            if isinstance(x, str):
                x = Letter(x, 1)
            elif not isinstance(x, Letter):
                x = Letter(*x)
            out.append(x)
        return super().__new__(cls, out)

    def __add__(self, other):
        return Word(tuple.__add__(self, Word(other)))

    def __getitem__(self, key):
        got = tuple.__getitem__(self, key)
        return Word(got) if isinstance(key, slice) else got

    def __str__(self):
        return " ".join(map(str, self))

    def __repr__(self):
        return f"Word({str(self)!r})"

    def inverse(self) -> "Word":
        return Word(x.inverse() for x in reversed(self))

    def bases(self) -> set[str]:
        return {x.base for x in self}

    def dotted(self) -> str:
        """Letters joined by '.', as used in exported vertex names."""
        return ".".join(map(str, self))


def parse_word(g: CommutationGraph, text: str) -> Word:
    """Parse whitespace separated generator tokens, optionally with ``^-1``."""
    letters = []
    for tok in text.split():
        if tok.endswith("^-1"):
            name, sign = tok[:-3], -1
        else:
            name, sign = tok, 1
        if not name or "^" in name:
            raise WordParseError(f"malformed token {tok!r}")
        if name not in g.index:
            raise WordParseError(f"unknown generator {name!r}")
        letters.append(Letter(name, sign))
    return Word(letters)


def as_word(g: CommutationGraph, w) -> Word:
    if isinstance(w, str):
        return parse_word(g, w)
    w = w if isinstance(w, Word) else Word(w)
    for x in w:
        if x.base not in g.index:
            raise ValueError(f"unknown generator {x.base!r}")
    return w


def encode(g: CommutationGraph, w) -> tuple[int, ...]:
    index = g.index
    return tuple(2 * index[x.base] + (x.sign < 0) for x in as_word(g, w))


def decode(g: CommutationGraph, codes: Sequence[int]) -> Word:
    vs = g.vertices
    return Word(Letter(vs[c >> 1], -1 if c & 1 else 1) for c in codes)


def invert_codes(codes: Sequence[int]) -> tuple[int, ...]:
    return tuple(c ^ 1 for c in reversed(codes))


def pile(g: CommutationGraph, codes: Sequence[int]) -> list[list[int]]:
    """Pile a coded word; entries are letter codes or blockers."""
    nc = g.noncommuting
    piles: list[list[int]] = [[] for _ in g.vertices]
    for c in codes:
        i = c >> 1
        own = piles[i]
        if own and own[-1] == c ^ 1:
            own.pop()
            for j in nc[i]:
                piles[j].pop()
        else:
            own.append(c)
            for j in nc[i]:
                piles[j].append(_BLOCK)
    return piles


def depile(g: CommutationGraph, piles: list[list[int]]) -> tuple[int, ...]:
    nc = g.noncommuting
    heads = [0] * len(piles)
    sizes = [len(p) for p in piles]
    total = sum(1 for p in piles for c in p if c != _BLOCK)
    out = []
    for _ in range(total):
        best = None
        for i, p in enumerate(piles):
            h = heads[i]
            if h < sizes[i]:
                c = p[h]
                if c != _BLOCK and (best is None or c < best):
                    best = c
        i = best >> 1
        heads[i] += 1
        for j in nc[i]:
            heads[j] += 1
        out.append(best)
    return tuple(out)


def piled_codes(g: CommutationGraph, codes: Sequence[int]) -> tuple[int, ...]:
    """Normal form by piling then depiling; agrees with :func:`fold_codes`."""
    return depile(g, pile(g, codes))


def trivial_codes(g: CommutationGraph, codes: Sequence[int]) -> bool:
    return not any(pile(g, codes))


def insert_letter(g: CommutationGraph, nf: tuple[int, ...], c: int) -> tuple[int, ...]:
    """Normal form of ``nf * c`` for a coded normal form ``nf``.

    Scan back over the letters commuting with ``c``.  If the inverse of
    ``c`` shows up it is deleted; otherwise ``c`` is placed just before the
    first letter larger than it in the commuting tail.
    """
    adj = g.adj[c >> 1]
    inv = c ^ 1
    k = len(nf) - 1
    while k >= 0:
        m = nf[k]
        if m == inv:
            return nf[:k] + nf[k + 1:]
        if (m >> 1) not in adj:
            break
        k -= 1
    k += 1
    n = len(nf)
    while k < n and nf[k] < c:
        k += 1
    return nf[:k] + (c,) + nf[k:]


def fold_codes(g: CommutationGraph, codes: Sequence[int]) -> tuple[int, ...]:
    nf: tuple[int, ...] = ()
    for c in codes:
        nf = insert_letter(g, nf, c)
    return nf


def normal_form(g: CommutationGraph, w) -> Word:
    """The shortlex least reduced word representing the same element as ``w``."""
    return decode(g, fold_codes(g, encode(g, w)))


def is_trivial(g: CommutationGraph, w) -> bool:
    return trivial_codes(g, encode(g, w))


def words_equal(g: CommutationGraph, u, v) -> bool:
    return fold_codes(g, encode(g, u)) == fold_codes(g, encode(g, v))


def commutator(u: Word, v: Word) -> Word:
    """``u^-1 v^-1 u v``."""
    return u.inverse() + v.inverse() + u + v


def alphabet(g: CommutationGraph, w) -> set[str]:
    """Generators occurring in the reduced form of ``w``."""
    return normal_form(g, w).bases()


def raw_alphabet(w: Word) -> set[str]:
    """Generators occurring in ``w`` as written."""
    return Word(w).bases()


def extends_normal(g: CommutationGraph, nf: Sequence[int], c: int) -> bool:
    """Whether ``nf + (c,)`` is again a shortlex normal form.

    ``nf`` must itself be a normal form.  Scanning back from the end over
    letters commuting with ``c``: meeting ``c``'s inverse means the product
    is not reduced, and meeting a larger letter means ``c`` could move left
    of it.  The scan stops at the first letter that blocks ``c``.
    """
    adj = g.adj[c >> 1]
    inv = c ^ 1
    for k in range(len(nf) - 1, -1, -1):
        m = nf[k]
        if m == inv:
            return False
        b = m >> 1
        if b in adj:
            if m > c:
                return False
        else:
            return True
    return True


def iter_normal_forms(
    g: CommutationGraph, max_len: int, gens: Optional[Iterable[str]] = None
) -> Iterator[tuple[int, ...]]:
    """Coded normal forms of length <= max_len in shortlex order, one per element.

    With ``gens`` only elements of the parabolic subgroup on those
    generators are produced.
    """
    if gens is None:
        letters = range(2 * len(g.vertices))
    else:
        idx = sorted(g.index[x] for x in gens)
        letters = [c for i in idx for c in (2 * i, 2 * i + 1)]
    layer: list[tuple[int, ...]] = [()]
    yield ()
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for c in letters:
                if extends_normal(g, w, c):
                    nxt.append(w + (c,))
        yield from nxt
        layer = nxt
        if not layer:
            break


# -- cancellation pairings ---------------------------------------------------


def cancellation_pairing(g: CommutationGraph, w) -> list[tuple[int, int]]:
    """Pair each position of a trivial word with the position it cancels.

    Pairs are returned in the order they were formed by piling, which is a
    valid elimination order.
    """
    codes = encode(g, w)
    nc = g.noncommuting
    piles: list[list[int]] = [[] for _ in g.vertices]
    pairs = []
    for pos, c in enumerate(codes):
        i = c >> 1
        own = piles[i]
        if own and own[-1] != _BLOCK and codes[own[-1]] == c ^ 1:
            pairs.append((own.pop(), pos))
            for j in nc[i]:
                piles[j].pop()
        else:
            own.append(pos)
            for j in nc[i]:
                piles[j].append(_BLOCK)
    if any(piles):
        raise NotTrivialError(f"word {as_word(g, w)} is not trivial")
    return pairs


def is_eliminable(g: CommutationGraph, w, pairs) -> bool:
    """Check a pairing by repeatedly removing a pair whose inner letters all commute with it."""
    w = as_word(g, w)
    n = len(w)
    partner = {}
    for i, j in pairs:
        if not (0 <= i < j < n) or i in partner or j in partner:
            return False
        if w[i].base != w[j].base or w[i].sign != -w[j].sign:
            return False
        partner[i], partner[j] = j, i
    if len(partner) != n:
        return False
    alive = [True] * n
    remaining = {(min(i, j), max(i, j)) for i, j in pairs}
    while remaining:
        for i, j in sorted(remaining):
            x = w[i].base
            if all(
                g.has_edge(x, w[k].base)
                for k in range(i + 1, j)
                if alive[k]
            ):
                alive[i] = alive[j] = False
                remaining.discard((i, j))
                break
        else:
            return False
    return True


def outside_pairs(g: CommutationGraph, w, pairs, x: str) -> list[tuple[int, int]]:
    """Pairs on generator ``x`` with no ``x``-letter strictly inside them."""
    w = as_word(g, w)
    if x not in w.bases():
        raise ValueError(f"generator {x!r} does not occur in the word")
    out = []
    for i, j in sorted(pairs):
        if w[i].base == x and all(w[k].base != x for k in range(i + 1, j)):
            out.append((i, j))
    return out


def cyclic_permutations(w) -> list[Word]:
    w = Word(w)
    if not w:
        return [w]
    return [w[k:] + w[:k] for k in range(len(w))]
