"""Interchange tuples for one adjacent swap, and their 0-1 mask calculus.

The natural transformation exchanged past a swap of a colour-``k`` generator
with a colour-``l`` generator (``k < l``) is presented as a tuple of entry
schemas: the hole identity ``1`` almost everywhere, and a single structural
constant family (``kappa``, ``tau``, ``beta`` or ``iota``) at positions
determined by the generator indices.  Ambient colours enter through formal
multiplication by 0-1 matrices with exactly one 1 per column; these masks
are stored as column-to-row index maps, never as dense matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ColourOrder, ShapeMismatch
from .simplicial import DEGENERACY, FACE, IDENTITY, BasicArrow

# Entry schemas: the hole identity is the string "1"; constants carry their
# colour pair.  Objects for iota instances are recovered later, at
# instantiation time, from the grid the tuple acts on.

ONE = "1"


@dataclass(frozen=True, slots=True)
class KappaSchema:
    k: int
    l: int

    def __str__(self) -> str:
        return f"kappa[{self.k},{self.l}]"


@dataclass(frozen=True, slots=True)
class TauSchema:
    k: int
    l: int

    def __str__(self) -> str:
        return f"tau[{self.k},{self.l}]"


@dataclass(frozen=True, slots=True)
class BetaSchema:
    k: int
    l: int

    def __str__(self) -> str:
        return f"beta[{self.k},{self.l}]"


@dataclass(frozen=True, slots=True)
class IotaSchema:
    k: int
    l: int

    def __str__(self) -> str:
        return f"iota[{self.k},{self.l}]"


Entry = str | KappaSchema | TauSchema | BetaSchema | IotaSchema


@dataclass(frozen=True, slots=True)
class NatTuple:
    """A component presentation of a natural transformation."""

    entries: tuple[Entry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Entry:
        return self.entries[i]

    def nontrivial(self) -> list[tuple[int, Entry]]:
        return [(i, e) for i, e in enumerate(self.entries) if e != ONE]

    def __str__(self) -> str:
        runs: list[tuple[str, int]] = []
        for e in self.entries:
            text = str(e)
            if runs and runs[-1][0] == text:
                runs[-1] = (text, runs[-1][1] + 1)
            else:
                runs.append((text, 1))
        shown = ", ".join(t if n == 1 else f"{t}^{n}" for t, n in runs)
        return f"({shown})"


@dataclass(frozen=True, slots=True)
class Mask:
    """A 0-1 matrix with one 1 per column, as the map column -> row."""

    rows: int
    cols: int
    row_of: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.row_of) != self.cols:
            raise ShapeMismatch("row_of must assign a row to every column")
        if any(not 0 <= r < self.rows for r in self.row_of):
            raise ShapeMismatch("row index out of range")


def apply_mask(t: NatTuple, mask: Mask) -> NatTuple:
    if len(t) != mask.rows:
        raise ShapeMismatch(f"tuple of length {len(t)} against {mask.rows} mask rows")
    return NatTuple(tuple(t.entries[r] for r in mask.row_of))


def identity_mask(n: int) -> Mask:
    return Mask(n, n, tuple(range(n)))


def mask_compose(m1: Mask, m2: Mask) -> Mask:
    """The mask whose application equals applying ``m1`` then ``m2``."""
    if m2.rows != m1.cols:
        raise ShapeMismatch("mask shapes do not chain")
    return Mask(m1.rows, m2.cols, tuple(m1.row_of[r] for r in m2.row_of))


def mask_kron(u: int, n: int, v: int, m: int, w: int) -> Mask:
    """The Kronecker mask ``(1..1)_u (x) I_n (x) (1..1)_v (x) I_m (x) (1..1)_w``.

    Ones-row factors replicate, identity factors select; all sizes may be 0
    (an empty ones factor kills every column).
    """
    rows = n * m
    row_of = []
    for a in range(u):
        for b in range(n):
            for c in range(v):
                for d in range(m):
                    row_of.extend([b * m + d] * w)
    return Mask(rows, u * n * v * m * w, tuple(row_of))


def mask_kron3(u: int, n: int, v1: int, m: int, v2: int, p: int, w: int) -> Mask:
    """Three identity factors interleaved with four ones factors."""
    rows = n * m * p
    row_of = []
    for a in range(u):
        for b in range(n):
            for c in range(v1):
                for d in range(m):
                    for e in range(v2):
                        for f in range(p):
                            row_of.extend([(b * m + d) * p + f] * w)
    return Mask(rows, u * n * v1 * m * v2 * p * w, tuple(row_of))


# --- the two-colour base table ----------------------------------------------


def _is_trivial(a: BasicArrow) -> bool:
    if a.kind == IDENTITY:
        return True
    return a.kind == FACE and a.idx in (0, a.dim)


def chi_pair(f: BasicArrow, g: BasicArrow, k: int = 1, l: int = 2) -> NatTuple:
    """The base tuple exchanged past a single ``(f,k)(g,l)`` swap.

    Identity except when both generators are inner (a degeneracy, or a face
    that is neither the first nor the last): then a single constant sits at
    the position carved out by the generator indices, in a tuple of length
    ``tgt(f) * tgt(g)``.
    """
    if not 1 <= k < l:
        raise ColourOrder(f"need colours k < l, got ({k},{l})")
    size = f.tgt * g.tgt
    if _is_trivial(f) or _is_trivial(g):
        return NatTuple((ONE,) * size)
    row = f.idx - (1 if f.kind == FACE else 0)
    col = g.idx - (1 if g.kind == FACE else 0)
    pos = row * g.tgt + col
    if f.kind == DEGENERACY and g.kind == DEGENERACY:
        entry: Entry = KappaSchema(k, l)
    elif f.kind == FACE and g.kind == DEGENERACY:
        entry = TauSchema(k, l)
    elif f.kind == DEGENERACY and g.kind == FACE:
        entry = BetaSchema(k, l)
    else:
        entry = IotaSchema(k, l)
    entries = [ONE] * size
    entries[pos] = entry
    return NatTuple(tuple(entries))


def chi_general(k: int, l: int, u: int, v: int, w: int,
                f: BasicArrow, g: BasicArrow) -> NatTuple:
    """The r-colour tuple: the base pair masked by the ambient dimensions."""
    if not 1 <= k < l:
        raise ColourOrder(f"need colours k < l, got ({k},{l})")
    return apply_mask(chi_pair(f, g, k, l), mask_kron(u, f.tgt, v, g.tgt, w))
