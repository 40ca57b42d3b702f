"""The category Delta^op by generators and relations.

Objects are the natural numbers in the geometric convention (object ``n``
has elements ``{0..n}``).  Arrows are composable words of face generators
``d_i^n : n -> n-1`` and degeneracy generators ``s_i^n : n-1 -> n``, written
outermost-left: the word ``f_k ... f_1`` denotes ``f_k o ... o f_1``.

Two independent routes decide equality of words:

* ``normalize`` rewrites with the basic equations, oriented left to right,
  to the unique normal form ``s_{l_1} o ... o s_{l_k} o d_{j_1} o ... o d_{j_m}``
  with ``l_1 > ... > l_k`` and ``j_1 >= ... >= j_m``;
* ``to_monotone`` interprets a word as a monotone map between finite
  ordinals, which is faithful for Delta^op.

The two must always agree; the test suite checks this exhaustively at small
sizes.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .errors import EndpointMismatch, IndexOutOfRange, ParseError

FACE = "d"
DEGENERACY = "s"
IDENTITY = "id"


@dataclass(frozen=True, slots=True)
class BasicArrow:
    """One generator of Delta^op: a face, a degeneracy, or an identity.

    ``dim`` is the superscript, ``idx`` the subscript.  ``d_i^n`` runs
    ``n -> n-1`` and needs ``0 <= i <= n``; ``s_i^n`` runs ``n-1 -> n`` and
    needs ``0 <= i <= n-1``; ``id_n`` is stored with ``idx == 0``.
    """

    kind: str
    dim: int
    idx: int = 0

    def __post_init__(self) -> None:
        if self.kind == FACE:
            if self.dim < 1 or not 0 <= self.idx <= self.dim:
                raise IndexOutOfRange(f"face d{self.dim}_{self.idx} is not a generator")
        elif self.kind == DEGENERACY:
            if self.dim < 1 or not 0 <= self.idx <= self.dim - 1:
                raise IndexOutOfRange(f"degeneracy s{self.dim}_{self.idx} is not a generator")
        elif self.kind == IDENTITY:
            if self.dim < 0 or self.idx != 0:
                raise IndexOutOfRange(f"bad identity id{self.dim}_{self.idx}")
        else:
            raise IndexOutOfRange(f"unknown generator kind {self.kind!r}")

    @property
    def src(self) -> int:
        if self.kind == FACE:
            return self.dim
        if self.kind == DEGENERACY:
            return self.dim - 1
        return self.dim

    @property
    def tgt(self) -> int:
        if self.kind == FACE:
            return self.dim - 1
        if self.kind == DEGENERACY:
            return self.dim
        return self.dim

    def __str__(self) -> str:
        if self.kind == IDENTITY:
            return f"id{self.dim}"
        return f"{self.kind}{self.dim}_{self.idx}"


def face(dim: int, idx: int) -> BasicArrow:
    return BasicArrow(FACE, dim, idx)


def degeneracy(dim: int, idx: int) -> BasicArrow:
    return BasicArrow(DEGENERACY, dim, idx)


def identity_arrow(dim: int) -> BasicArrow:
    return BasicArrow(IDENTITY, dim)


@dataclass(frozen=True, slots=True)
class SimplicialWord:
    """A composable word of basic arrows, outermost entry first.

    Identity entries may appear; they do not count towards ``length`` and
    ``normalize`` drops them.
    """

    src: int
    tgt: int
    word: tuple[BasicArrow, ...]

    def __post_init__(self) -> None:
        cur = self.src
        for a in reversed(self.word):
            if a.src != cur:
                raise EndpointMismatch(
                    f"entry {a} expects source {a.src}, chain is at {cur}"
                )
            cur = a.tgt
        if cur != self.tgt:
            raise EndpointMismatch(f"word ends at {cur}, target says {self.tgt}")

    @property
    def length(self) -> int:
        return sum(1 for a in self.word if a.kind != IDENTITY)

    def __str__(self) -> str:
        return word_to_text(self)


def word(arrows: list[BasicArrow] | tuple[BasicArrow, ...], src: int | None = None) -> SimplicialWord:
    """Build a word from its entries; ``src`` is only needed when empty."""
    arrows = tuple(arrows)
    if not arrows:
        if src is None:
            raise EndpointMismatch("empty word needs an explicit dimension")
        return SimplicialWord(src, src, ())
    s = arrows[-1].src
    if src is not None and src != s:
        raise EndpointMismatch(f"declared source {src} but word starts at {s}")
    return SimplicialWord(s, arrows[0].tgt, arrows)


def identity_word(dim: int) -> SimplicialWord:
    return SimplicialWord(dim, dim, ())


def compose(f: SimplicialWord, g: SimplicialWord) -> SimplicialWord:
    """The word for ``f o g`` (g applied first)."""
    if f.src != g.tgt:
        raise EndpointMismatch(f"cannot compose: f starts at {f.src}, g ends at {g.tgt}")
    return SimplicialWord(g.src, f.tgt, f.word + g.word)


# --- rewriting -------------------------------------------------------------
#
# Redexes are adjacent pairs (outer, inner) in a word, i.e. outer o inner,
# matching a left-hand side of the basic equations.  ``_contract`` returns the
# replacement entries together with a label naming the rule, or ``None``.


def _contract(outer: BasicArrow, inner: BasicArrow) -> tuple[list[BasicArrow], str] | None:
    if outer.kind == FACE and inner.kind == FACE:
        j, l, n = outer.idx, inner.idx, inner.dim
        if l - 1 >= j:
            return [face(n - 1, l - 1), face(n, j)], "dd"
        return None
    if outer.kind == DEGENERACY and inner.kind == DEGENERACY:
        j, l, n = outer.idx, inner.idx, inner.dim
        if l + 1 > j:
            return [degeneracy(n + 1, l + 1), degeneracy(n, j)], "ss"
        return None
    if outer.kind == FACE and inner.kind == DEGENERACY:
        j, l, n = outer.idx, inner.idx, inner.dim
        if j <= l - 1:
            return [degeneracy(n - 1, l - 1), face(n - 1, j)], "ds_lt"
        if l in (j, j - 1):
            return [], "ds_id"
        return [degeneracy(n - 1, l), face(n - 1, j - 1)], "ds_gt"
    return None


def normalize_trace(f: SimplicialWord) -> tuple[SimplicialWord, list[tuple[int, str, SimplicialWord]]]:
    """Normalize, recording each contraction as (position, rule, word after)."""
    entries = [a for a in f.word if a.kind != IDENTITY]
    steps: list[tuple[int, str, SimplicialWord]] = []
    i = 0
    while i < len(entries) - 1:
        hit = _contract(entries[i], entries[i + 1])
        if hit is None:
            i += 1
            continue
        replacement, rule = hit
        pos = i
        entries[i : i + 2] = replacement
        steps.append((pos, rule, word(tuple(entries), src=f.src)))
        # the new leftmost redex can only appear one slot to the left
        i = max(i - 1, 0)
    result = SimplicialWord(f.src, f.tgt, tuple(entries))
    return result, steps


def normalize(f: SimplicialWord) -> SimplicialWord:
    """The unique normal form of ``f`` under the basic equations."""
    entries = [a for a in f.word if a.kind != IDENTITY]
    i = 0
    while i < len(entries) - 1:
        hit = _contract(entries[i], entries[i + 1])
        if hit is None:
            i += 1
        else:
            entries[i : i + 2] = hit[0]
            i = max(i - 1, 0)
    return SimplicialWord(f.src, f.tgt, tuple(entries))


def is_normal(f: SimplicialWord) -> bool:
    """Whether ``f`` literally has the normal shape."""
    entries = f.word
    if all(a.kind == IDENTITY for a in entries):
        return len(entries) <= 1
    if any(a.kind == IDENTITY for a in entries):
        return False
    split = 0
    while split < len(entries) and entries[split].kind == DEGENERACY:
        split += 1
    if any(a.kind != FACE for a in entries[split:]):
        return False
    degens = entries[:split]
    faces = entries[split:]
    if any(a.idx <= b.idx for a, b in zip(degens, degens[1:])):
        return False
    if any(a.idx < b.idx for a, b in zip(faces, faces[1:])):
        return False
    return True


# --- semantic oracle -------------------------------------------------------


@dataclass(frozen=True, slots=True)
class MonotoneMap:
    """A weakly increasing map ``{0..src_size} -> {0..tgt_size}``."""

    src_size: int
    tgt_size: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.src_size + 1:
            raise EndpointMismatch("table length must be src_size + 1")
        if any(v < 0 or v > self.tgt_size for v in self.table):
            raise IndexOutOfRange("table entry out of range")
        if any(a > b for a, b in zip(self.table, self.table[1:])):
            raise IndexOutOfRange("table not weakly increasing")


def _sem_apply(a: BasicArrow, v: int) -> int:
    # d_i^n reads as the injection skipping i, s_i^n as the surjection
    # hitting i twice.
    if a.kind == FACE:
        return v if v < a.idx else v + 1
    if a.kind == DEGENERACY:
        return v if v <= a.idx else v - 1
    return v


def to_monotone(f: SimplicialWord) -> MonotoneMap:
    """Interpret ``f : n -> m`` of Delta^op as a monotone map ``{0..m} -> {0..n}``."""
    values = list(range(f.tgt + 1))
    for a in f.word:
        values = [_sem_apply(a, v) for v in values]
    return MonotoneMap(f.tgt, f.src, tuple(values))


def equal(f: SimplicialWord, g: SimplicialWord) -> bool:
    """Whether two words denote the same arrow of Delta^op."""
    if f.src != g.src or f.tgt != g.tgt:
        raise EndpointMismatch("cannot compare words with different endpoints")
    return normalize(f).word == normalize(g).word


# --- particular arrows -----------------------------------------------------


def segal_arrow(m: int, t: int) -> SimplicialWord:
    """A canonical word for the arrow ``i_t : m -> 1`` picking the t-th slot.

    Applied to a labelled m-tuple, the bar construction sends it to the
    projection onto position ``t``: the trailing top faces drop positions
    ``t+1..m`` and the ``d_0`` entries then drop positions ``1..t-1``.
    """
    if m < 1 or not 1 <= t <= m:
        raise IndexOutOfRange(f"no arrow i_{t}: {m} -> 1")
    entries = [face(x, 0) for x in range(2, t + 1)] + [face(x, x) for x in range(t + 1, m + 1)]
    return word(tuple(entries), src=m)


def random_word(src: int, length: int, seed: int, max_dim: int | None = None) -> SimplicialWord:
    """A seeded composable word from ``src``, uniform over applicable generators.

    ``max_dim`` optionally forbids visiting dimensions above the bound.
    """
    rng = random.Random(seed)
    applied: list[BasicArrow] = []
    cur = src
    for _ in range(length):
        choices: list[BasicArrow] = []
        if cur >= 1:
            choices.extend(face(cur, i) for i in range(cur + 1))
        if max_dim is None or cur + 1 <= max_dim:
            choices.extend(degeneracy(cur + 1, i) for i in range(cur + 1))
        if not choices:
            raise IndexOutOfRange(f"no applicable generators at dimension {cur}")
        pick = rng.choice(choices)
        applied.append(pick)
        cur = pick.tgt
    return word(tuple(reversed(applied)), src=src)


# --- text grammar ----------------------------------------------------------

_TOKEN = re.compile(r"^(?:([ds])(\d+)_(\d+)|id(\d+))$")


def word_to_text(f: SimplicialWord) -> str:
    if not f.word:
        return f"id{f.src}"
    return " . ".join(str(a) for a in f.word)


def parse_word(text: str) -> SimplicialWord:
    """Parse the ``d2_1 . d3_3`` grammar; leftmost factor is applied last."""
    parts = [p.strip() for p in text.split(".")]
    if parts == [""]:
        raise ParseError("empty word text")
    entries: list[BasicArrow] = []
    for part in parts:
        m = _TOKEN.match(part)
        if m is None:
            raise ParseError(f"bad generator token {part!r}")
        try:
            if m.group(4) is not None:
                entries.append(identity_arrow(int(m.group(4))))
            elif m.group(1) == FACE:
                entries.append(face(int(m.group(2)), int(m.group(3))))
            else:
                entries.append(degeneracy(int(m.group(2)), int(m.group(3))))
        except IndexOutOfRange as exc:
            raise ParseError(str(exc)) from exc
    try:
        return word(tuple(entries))
    except EndpointMismatch as exc:
        raise ParseError(f"word does not compose: {exc}") from exc
