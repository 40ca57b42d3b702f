"""Coloured generator sequences, shuffles and normalizing paths.

A shuffle interleaves ``r`` composable sequences of Delta^op generators, one
per colour ``1..r``, leftmost entry applied last.  Sorting it by colour
(higher colours leftmost) through adjacent swaps of a lower colour standing
left of a higher one gives a normalizing path; every such path has length
equal to the inversion count of the colour word.

Identity entries are semantically inert padding: the constructor strips
them and keeps the per-colour source dimensions instead, which is enough to
recover every "target of the right-closest member" quantity the downstream
constructions need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EndpointMismatch, IndexOutOfRange, NotANormalizingPath, ParseError
from .simplicial import IDENTITY, BasicArrow, SimplicialWord, parse_word, word


@dataclass(frozen=True, slots=True)
class ColouredGenerator:
    arrow: BasicArrow
    colour: int

    def __str__(self) -> str:
        return f"({self.arrow} @{self.colour})"


@dataclass(frozen=True, slots=True)
class ColouredShuffle:
    """An interleaving of ``r`` coloured generator sequences.

    ``src_dims[c-1]`` is the source dimension of the colour-``c`` composite;
    colours with no entries keep their declared (or default 1) dimension.
    """

    r: int
    entries: tuple[ColouredGenerator, ...]
    src_dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise IndexOutOfRange("arity must be at least 1")
        if len(self.src_dims) != self.r:
            raise EndpointMismatch("need one source dimension per colour")
        if any(e.arrow.kind == IDENTITY for e in self.entries):
            raise EndpointMismatch("shuffle entries must be identity-free; use shuffle()")
        for e in self.entries:
            if not 1 <= e.colour <= self.r:
                raise IndexOutOfRange(f"colour {e.colour} outside 1..{self.r}")
        for c in range(1, self.r + 1):
            cur = self.src_dims[c - 1]
            for e in reversed(self.entries):
                if e.colour != c:
                    continue
                if e.arrow.src != cur:
                    raise EndpointMismatch(
                        f"colour {c} subsequence does not compose at {e.arrow}"
                    )
                cur = e.arrow.tgt

    @property
    def tgt_dims(self) -> tuple[int, ...]:
        dims = list(self.src_dims)
        for e in self.entries:
            dims[e.colour - 1] = e.arrow.tgt
        return tuple(dims)

    def colour_word(self) -> tuple[int, ...]:
        return tuple(e.colour for e in self.entries)

    def colour_component(self, c: int) -> SimplicialWord:
        """The colour-``c`` subsequence as a word of Delta^op."""
        return word(
            tuple(e.arrow for e in self.entries if e.colour == c),
            src=self.src_dims[c - 1],
        )

    def is_sorted(self) -> bool:
        cw = self.colour_word()
        return all(a >= b for a, b in zip(cw, cw[1:]))

    def swap(self, pos: int) -> "ColouredShuffle":
        """Exchange entries ``pos`` and ``pos+1``; needs colour(pos) < colour(pos+1)."""
        if not 0 <= pos < len(self.entries) - 1:
            raise IndexOutOfRange(f"no adjacent pair at position {pos}")
        a, b = self.entries[pos], self.entries[pos + 1]
        if a.colour >= b.colour:
            raise NotANormalizingPath(
                f"swap at {pos} does not move a lower colour right ({a.colour} vs {b.colour})"
            )
        entries = self.entries[:pos] + (b, a) + self.entries[pos + 2 :]
        return ColouredShuffle(self.r, entries, self.src_dims)

    def __str__(self) -> str:
        return shuffle_to_text(self)


def shuffle(
    entries: list[ColouredGenerator] | tuple[ColouredGenerator, ...],
    r: int | None = None,
    src_dims: dict[int, int] | tuple[int, ...] | None = None,
) -> ColouredShuffle:
    """Build a shuffle, stripping identity entries.

    Source dimensions are derived from the entries; for colours without
    entries they come from ``src_dims`` (default 1).
    """
    entries = tuple(entries)
    if r is None:
        r = max((e.colour for e in entries), default=1)
    derived: dict[int, int] = {}
    for e in reversed(entries):
        derived.setdefault(e.colour, e.arrow.src)
    if isinstance(src_dims, tuple):
        src_dims = {c + 1: d for c, d in enumerate(src_dims)}
    declared = dict(src_dims or {})
    dims = []
    for c in range(1, r + 1):
        d = derived.get(c, declared.get(c, 1))
        if c in declared and c in derived and declared[c] != derived[c]:
            raise EndpointMismatch(
                f"declared source {declared[c]} for colour {c}, entries say {derived[c]}"
            )
        dims.append(d)
    stripped = tuple(e for e in entries if e.arrow.kind != IDENTITY)
    return ColouredShuffle(r, stripped, tuple(dims))


def concat_sorted(components: list[SimplicialWord], r: int | None = None) -> ColouredShuffle:
    """The colour-sorted shuffle ``Phi^r ... Phi^1`` of the given components."""
    r = len(components) if r is None else r
    entries = []
    for c in range(r, 0, -1):
        entries.extend(ColouredGenerator(a, c) for a in components[c - 1].word)
    return shuffle(
        entries, r=r, src_dims={c + 1: w.src for c, w in enumerate(components)}
    )


# --- powers ----------------------------------------------------------------


def _right_closest_target(theta: ColouredShuffle, pos: int, colour: int) -> int:
    """Target of the right-closest colour-``colour`` entry after ``pos``.

    Falls back to the colour's source dimension, which is what appending an
    identity of that colour on the right would give.
    """
    for e in theta.entries[pos + 1 :]:
        if e.colour == colour:
            return e.arrow.tgt
    return theta.src_dims[colour - 1]


def inner_power(theta: ColouredShuffle, pos: int) -> int:
    """Product of right-closest targets over the colours above ``entries[pos]``."""
    if not 0 <= pos < len(theta.entries):
        raise IndexOutOfRange(f"no entry at position {pos}")
    k = theta.entries[pos].colour
    result = 1
    for c in range(k + 1, theta.r + 1):
        result *= _right_closest_target(theta, pos, c)
    return result


def outer_power(theta: ColouredShuffle, pos: int) -> int:
    """Product of right-closest targets over the colours below ``entries[pos]``."""
    if not 0 <= pos < len(theta.entries):
        raise IndexOutOfRange(f"no entry at position {pos}")
    k = theta.entries[pos].colour
    result = 1
    for c in range(1, k):
        result *= _right_closest_target(theta, pos, c)
    return result


# --- normalizing paths -------------------------------------------------------


def inversion_count(theta: ColouredShuffle) -> int:
    cw = theta.colour_word()
    return sum(1 for i in range(len(cw)) for j in range(i + 1, len(cw)) if cw[i] < cw[j])


def next_swaps(theta: ColouredShuffle) -> list[int]:
    cw = theta.colour_word()
    return [p for p in range(len(cw) - 1) if cw[p] < cw[p + 1]]


@dataclass(frozen=True, slots=True)
class NormalizingPath:
    """A swap sequence taking ``start`` to its colour-sorted form."""

    start: ColouredShuffle
    swaps: tuple[int, ...]

    def __post_init__(self) -> None:
        cur = self.start
        for p in self.swaps:
            try:
                cur = cur.swap(p)
            except (IndexOutOfRange, NotANormalizingPath) as exc:
                raise NotANormalizingPath(str(exc)) from exc
        if not cur.is_sorted():
            raise NotANormalizingPath("swap sequence does not sort the shuffle")

    @property
    def length(self) -> int:
        return len(self.swaps)

    def states(self) -> list[ColouredShuffle]:
        out = [self.start]
        for p in self.swaps:
            out.append(out[-1].swap(p))
        return out

    @property
    def end(self) -> ColouredShuffle:
        cur = self.start
        for p in self.swaps:
            cur = cur.swap(p)
        return cur


def canonical_path(theta: ColouredShuffle) -> NormalizingPath:
    """The path that always swaps at the leftmost eligible position."""
    swaps = []
    cur = theta
    while True:
        options = next_swaps(cur)
        if not options:
            break
        swaps.append(options[0])
        cur = cur.swap(options[0])
    return NormalizingPath(theta, tuple(swaps))


@dataclass(frozen=True, slots=True)
class PathEnumeration:
    paths: tuple[NormalizingPath, ...]
    truncated: bool

    def __iter__(self):
        return iter(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def __getitem__(self, i):
        return self.paths[i]


def enumerate_paths(theta: ColouredShuffle, limit: int | None = None) -> PathEnumeration:
    """All normalizing paths, depth-first with leftmost swaps explored first."""
    collected: list[NormalizingPath] = []
    truncated = False

    def walk(cur: ColouredShuffle, acc: list[int]) -> bool:
        nonlocal truncated
        options = next_swaps(cur)
        if not options:
            if limit is not None and len(collected) >= limit:
                truncated = True
                return False
            collected.append(NormalizingPath(theta, tuple(acc)))
            return True
        for p in options:
            acc.append(p)
            keep_going = walk(cur.swap(p), acc)
            acc.pop()
            if not keep_going:
                return False
        return True

    walk(theta, [])
    return PathEnumeration(tuple(collected), truncated)


# --- text grammar ----------------------------------------------------------

_ENTRY = re.compile(r"\(\s*([A-Za-z0-9_]+)\s*@(\d+)\s*\)")


def shuffle_to_text(theta: ColouredShuffle) -> str:
    return " ".join(str(e) for e in theta.entries)


def parse_shuffle(text: str, r: int | None = None,
                  src_dims: dict[int, int] | None = None) -> ColouredShuffle:
    """Parse ``(d3_2 @2) (d2_1 @1) ...``; identity entries are allowed and stripped."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty shuffle text")
    pos = 0
    entries = []
    while pos < len(stripped):
        m = _ENTRY.match(stripped, pos)
        if m is None:
            raise ParseError(f"bad shuffle entry at: {stripped[pos:pos + 20]!r}")
        token, colour = m.group(1), int(m.group(2))
        arrow = parse_word(token)
        if len(arrow.word) > 1:
            raise ParseError(f"shuffle entries must be single generators: {token!r}")
        basic = arrow.word[0] if arrow.word else None
        if basic is None:
            from .simplicial import identity_arrow

            basic = identity_arrow(arrow.src)
        entries.append(ColouredGenerator(basic, colour))
        pos = m.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    try:
        return shuffle(entries, r=r, src_dims=src_dims)
    except (EndpointMismatch, IndexOutOfRange) as exc:
        raise ParseError(str(exc)) from exc
