"""Maps between pc groups given by images of generators.

A generator map extends to a homomorphism exactly when every defining
relator ``[x, y]`` (one per edge of the source graph) is sent to the
identity.  Injectivity cannot be decided by search; :func:`kernel_search`
only rules out kernel elements up to a given length.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import CommutationGraph
from .words import (
    Word,
    WordParseError,
    as_word,
    commutator,
    decode,
    encode,
    invert_codes,
    is_trivial,
    iter_normal_forms,
    parse_word,
    trivial_codes,
)

__all__ = [
    "GeneratorMap",
    "MapParseError",
    "NotAHomomorphism",
    "RelatorCheck",
    "parse_map",
    "apply",
    "check_relators",
    "is_homomorphism",
    "kernel_search",
    "parabolic_restriction_injective",
]

log = logging.getLogger(__name__)


class MapParseError(ValueError):
    pass


class NotAHomomorphism(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorMap:
    source: CommutationGraph
    target: CommutationGraph
    images: dict

    def __post_init__(self):
        missing = [x for x in self.source.vertices if x not in self.images]
        if missing:
            raise ValueError(f"no image given for {missing}")
        extra = set(self.images) - set(self.source.vertices)
        if extra:
            raise ValueError(f"images given for unknown generators {sorted(extra)}")
        fixed = {x: as_word(self.target, w) for x, w in self.images.items()}
        object.__setattr__(self, "images", fixed)

    def __getitem__(self, x: str) -> Word:
        return self.images[x]

    def to_text(self) -> str:
        lines = []
        for x in self.source.vertices:
            img = self.images[x]
            lines.append(f"{x} -> {img if img else '1'}")
        return "\n".join(lines) + "\n"


def parse_map(source: CommutationGraph, target: CommutationGraph, text: str) -> GeneratorMap:
    """Parse lines ``x -> w``; ``1`` (or nothing) stands for the identity."""
    images = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        lhs, sep, rhs = line.partition("->")
        if not sep:
            raise MapParseError(f"line {lineno}: expected 'name -> word', got {raw!r}")
        x = lhs.strip()
        if x not in source.index:
            raise MapParseError(f"line {lineno}: {x!r} is not a source generator")
        if x in images:
            raise MapParseError(f"line {lineno}: duplicate line for {x!r}")
        rhs = rhs.strip()
        if rhs == "1":
            rhs = ""
        try:
            images[x] = parse_word(target, rhs)
        except WordParseError as e:
            raise MapParseError(f"line {lineno}: {e}") from None
    missing = [x for x in source.vertices if x not in images]
    if missing:
        raise MapParseError(f"missing image for generators {missing}")
    return GeneratorMap(source, target, images)


def apply(m: GeneratorMap, w) -> Word:
    """Letterwise substitution; the result is not reduced."""
    out = []
    for x in as_word(m.source, w):
        img = m.images[x.base]
        out.extend(img if x.sign > 0 else img.inverse())
    return Word(out)


@dataclass(frozen=True)
class RelatorCheck:
    relator: Word
    image: Word
    trivial: bool

    def __str__(self):
        verdict = "ok" if self.trivial else "FAILS"
        return f"[{self.relator[2].base},{self.relator[3].base}] -> {self.image}: {verdict}"


def check_relators(m: GeneratorMap) -> list[RelatorCheck]:
    """One entry per edge ``{x, y}`` of the source, for the relator ``[x, y]``."""
    out = []
    for x, y in m.source.sorted_edges():
        rel = commutator(Word([x]), Word([y]))
        img = apply(m, rel)
        out.append(RelatorCheck(rel, img, is_trivial(m.target, img)))
    return out


def is_homomorphism(m: GeneratorMap) -> bool:
    return all(r.trivial for r in check_relators(m))


def _image_codes(m: GeneratorMap) -> list[tuple[int, ...]]:
    # indexed by source letter code
    out = []
    for x in m.source.vertices:
        img = encode(m.target, m.images[x])
        out.append(img)
        out.append(invert_codes(img))
    return out


def kernel_search(
    m: GeneratorMap, max_len: int, gens: Optional[Iterable[str]] = None
) -> Optional[Word]:
    """Shortest, then shortlex least, nontrivial kernel element of length <= max_len.

    Source elements are visited once each through their normal forms.
    ``gens`` restricts the search to the parabolic subgroup they generate.
    Returns None when no such element exists up to that length.
    """
    bad = [r for r in check_relators(m) if not r.trivial]
    if bad:
        raise NotAHomomorphism(f"relator {bad[0]} is not sent to the identity")
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    imgs = _image_codes(m)
    tgt = m.target
    count = 0
    for w in iter_normal_forms(m.source, max_len, gens):
        if not w:
            continue
        count += 1
        image = tuple(c for letter in w for c in imgs[letter])
        if trivial_codes(tgt, image):
            log.info("kernel witness after %d elements", count)
            return decode(m.source, w)
    log.info("no kernel element among %d elements of length <= %d", count, max_len)
    return None


def parabolic_restriction_injective(m: GeneratorMap, gens: Iterable[str], max_len: int) -> bool:
    return kernel_search(m, max_len, gens=list(gens)) is None
