"""The iterated reduced bar construction and its verification checks.

Grids are flat tuples of model objects or arrows indexed lexicographically
by one coordinate per colour, colour 1 slowest.  A shuffle acts on a grid
entry by entry, right to left: a face tensors two adjacent slices of its
colour's axis (or drops an outermost slice), a degeneracy inserts a slice
of units.  ``phi`` composes, along a normalizing path, the interchange
tuples attached to each adjacent swap; ``omega`` is ``phi`` of the
concatenation of normal-form sequences and is the lax structure map
``W(f2) o W(f1) -> W(f2 o f1)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import prod

from .chi import ONE, BetaSchema, IotaSchema, KappaSchema, TauSchema, chi_pair
from .errors import (
    ColourOrder,
    EndpointMismatch,
    NotANormalizingPath,
    NotEqualArrows,
    ShapeMismatch,
)
from .model import FinSetSplitModel, FreeTermModel, random_fin_arrow
from .rewrite import term_equal
from .shuffle import (
    ColouredGenerator,
    ColouredShuffle,
    NormalizingPath,
    canonical_path,
    enumerate_paths,
    shuffle,
)
from .simplicial import (
    FACE,
    IDENTITY,
    BasicArrow,
    SimplicialWord,
    compose as compose_words,
    equal as words_equal,
    identity_word,
    normalize,
    segal_arrow,
)
from .terms import ObjVar


@dataclass(frozen=True, slots=True)
class ObjectGrid:
    dims: tuple[int, ...]
    cells: tuple

    def __post_init__(self) -> None:
        if len(self.cells) != prod(self.dims):
            raise ShapeMismatch(
                f"{len(self.cells)} cells for dims {self.dims}"
            )


@dataclass(frozen=True, slots=True)
class ArrowGrid:
    dims: tuple[int, ...]
    cells: tuple
    dom: ObjectGrid
    cod: ObjectGrid

    def __post_init__(self) -> None:
        if len(self.cells) != prod(self.dims):
            raise ShapeMismatch(f"{len(self.cells)} cells for dims {self.dims}")
        if self.dom.dims != self.dims or self.cod.dims != self.dims:
            raise ShapeMismatch("dom/cod grids must share the arrow grid's dims")


def grids_equal(a, b) -> bool:
    if type(a) is not type(b) or a.dims != b.dims:
        return False
    if isinstance(a, ArrowGrid):
        return (
            a.cells == b.cells
            and a.dom.cells == b.dom.cells
            and a.cod.cells == b.cod.cells
        )
    return a.cells == b.cells


def identity_grid(model, og: ObjectGrid) -> ArrowGrid:
    return ArrowGrid(og.dims, tuple(model.id(c) for c in og.cells), og, og)


def compose_grids(model, second: ArrowGrid, first: ArrowGrid) -> ArrowGrid:
    if first.cod.dims != second.dom.dims or first.cod.cells != second.dom.cells:
        raise EndpointMismatch("arrow grids do not chain")
    cells = tuple(model.compose(s, f) for s, f in zip(second.cells, first.cells))
    return ArrowGrid(first.dims, cells, first.dom, second.cod)


# --- the action of one generator --------------------------------------------


def _act_cells(dims, cells, axis, arrow, combine, unit_cell):
    n = arrow.src
    if dims[axis] != n:
        raise ShapeMismatch(
            f"axis {axis} has size {dims[axis]}, generator {arrow} expects {n}"
        )
    outer = prod(dims[:axis])
    inner = prod(dims[axis + 1 :])
    if arrow.kind == IDENTITY:
        return dims, cells
    new_dims = dims[:axis] + (arrow.tgt,) + dims[axis + 1 :]
    out = []
    block = n * inner
    j = arrow.idx
    for a in range(outer):
        base = a * block
        slices = [cells[base + b * inner : base + (b + 1) * inner] for b in range(n)]
        if arrow.kind == FACE:
            if j == 0:
                kept = slices[1:]
            elif j == n:
                kept = slices[:-1]
            else:
                merged = tuple(combine(x, y) for x, y in zip(slices[j - 1], slices[j]))
                kept = slices[: j - 1] + [merged] + slices[j + 1 :]
        else:
            kept = slices[:j] + [tuple(unit_cell() for _ in range(inner))] + slices[j:]
        for s in kept:
            out.extend(s)
    return new_dims, tuple(out)


def _act_object(model, grid: ObjectGrid, colour: int, arrow: BasicArrow) -> ObjectGrid:
    dims, cells = _act_cells(
        grid.dims,
        grid.cells,
        colour - 1,
        arrow,
        lambda x, y: model.tensor_obj(colour, x, y),
        lambda: model.unit(colour),
    )
    return ObjectGrid(dims, cells)


def _act_arrow(model, grid: ArrowGrid, colour: int, arrow: BasicArrow) -> ArrowGrid:
    dims, cells = _act_cells(
        grid.dims,
        grid.cells,
        colour - 1,
        arrow,
        lambda x, y: model.tensor_arr(colour, x, y),
        lambda: model.id(model.unit(colour)),
    )
    return ArrowGrid(
        dims,
        cells,
        _act_object(model, grid.dom, colour, arrow),
        _act_object(model, grid.cod, colour, arrow),
    )


def apply_generator(model, grid, colour: int, arrow: BasicArrow):
    if isinstance(grid, ArrowGrid):
        return _act_arrow(model, grid, colour, arrow)
    return _act_object(model, grid, colour, arrow)


def w_basic(model, colour: int, f: BasicArrow, inner: int, outer: int, cells,
            arrows: bool = False) -> tuple:
    """One bar-construction step on a flat tuple of length outer*src(f)*inner."""
    cells = tuple(cells)
    if len(cells) != outer * f.src * inner:
        raise ShapeMismatch(
            f"{len(cells)} cells, expected {outer}*{f.src}*{inner}"
        )
    dims = (outer, f.src, inner)
    if arrows:
        _, out = _act_cells(
            dims, cells, 1, f,
            lambda x, y: model.tensor_arr(colour, x, y),
            lambda: model.id(model.unit(colour)),
        )
    else:
        _, out = _act_cells(
            dims, cells, 1, f,
            lambda x, y: model.tensor_obj(colour, x, y),
            lambda: model.unit(colour),
        )
    return out


def w_shuffle(model, theta: ColouredShuffle, grid):
    """The composite functor of a shuffle, applied right to left."""
    if grid.dims != theta.src_dims:
        raise ShapeMismatch(
            f"grid dims {grid.dims} do not match shuffle sources {theta.src_dims}"
        )
    for entry in reversed(theta.entries):
        grid = apply_generator(model, grid, entry.colour, entry.arrow)
    return grid


# --- multi-arrows ------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class MultiArrow:
    """One arrow of the r-th power of Delta^op, componentwise."""

    components: tuple[SimplicialWord, ...]

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def src(self) -> tuple[int, ...]:
        return tuple(c.src for c in self.components)

    @property
    def tgt(self) -> tuple[int, ...]:
        return tuple(c.tgt for c in self.components)


def multi_identity(dims: tuple[int, ...]) -> MultiArrow:
    return MultiArrow(tuple(identity_word(d) for d in dims))


def multi_compose(second: MultiArrow, first: MultiArrow) -> MultiArrow:
    if second.src != first.tgt:
        raise EndpointMismatch(
            f"multi-arrows do not compose: {second.src} vs {first.tgt}"
        )
    return MultiArrow(
        tuple(compose_words(s, f) for s, f in zip(second.components, first.components))
    )


def _sorted_entries(components: tuple[SimplicialWord, ...]) -> list[ColouredGenerator]:
    entries: list[ColouredGenerator] = []
    for c in range(len(components), 0, -1):
        entries.extend(ColouredGenerator(a, c) for a in components[c - 1].word)
    return entries


def nf_shuffle(ma: MultiArrow) -> ColouredShuffle:
    """The colour-sorted shuffle of the normal forms of the components."""
    nfs = tuple(normalize(c) for c in ma.components)
    return shuffle(
        _sorted_entries(nfs),
        r=ma.r,
        src_dims={c + 1: w.src for c, w in enumerate(nfs)},
    )


def w_multi(model, ma: MultiArrow, grid):
    """The bar construction on one multi-arrow (any representative works)."""
    return w_shuffle(model, nf_shuffle(ma), grid)


# --- the interchange grid at one swap ----------------------------------------


def chi_swap_grid(model, k: int, l: int, f: BasicArrow, g: BasicArrow,
                  source: ObjectGrid) -> ArrowGrid:
    """Components of the swap ``(f,k)(g,l) -> (g,l)(f,k)`` at ``source``.

    The entry schemas come from the base table masked by the ambient
    dimensions, which the grid's own shape supplies; objects for the
    interchange instances are read off the source grid around the swap
    site.
    """
    if not 1 <= k < l:
        raise ColourOrder(f"swap needs k < l, got ({k},{l})")
    dims = source.dims
    n, m = f.src, g.src
    if dims[k - 1] != n or dims[l - 1] != m:
        raise ShapeMismatch(
            f"grid dims {dims} do not match generators {f} at {k}, {g} at {l}"
        )
    dom_grid = _act_object(model, _act_object(model, source, l, g), k, f)
    cod_grid = _act_object(model, _act_object(model, source, k, f), l, g)
    n2, m2 = f.tgt, g.tgt
    u = prod(dims[: k - 1])
    v = prod(dims[k : l - 1])
    w = prod(dims[l:])
    base = chi_pair(f, g, k, l).entries

    def src_index(a: int, b: int, c: int, d: int, e: int) -> int:
        return (((a * n + b) * v + c) * m + d) * w + e

    cells = []
    idx = 0
    for a in range(u):
        for b in range(n2):
            for c in range(v):
                for d in range(m2):
                    for e in range(w):
                        entry = base[b * m2 + d]
                        if entry == ONE:
                            cell = model.id(dom_grid.cells[idx])
                        elif isinstance(entry, KappaSchema):
                            cell = model.kappa(k, l)
                        elif isinstance(entry, TauSchema):
                            cell = model.tau(k, l)
                        elif isinstance(entry, BetaSchema):
                            cell = model.beta(k, l)
                        else:
                            assert isinstance(entry, IotaSchema)
                            cell = model.iota(
                                k, l,
                                source.cells[src_index(a, b, c, d, e)],
                                source.cells[src_index(a, b, c, d + 1, e)],
                                source.cells[src_index(a, b + 1, c, d, e)],
                                source.cells[src_index(a, b + 1, c, d + 1, e)],
                            )
                        if (
                            model.dom(cell) != dom_grid.cells[idx]
                            or model.cod(cell) != cod_grid.cells[idx]
                        ):
                            raise EndpointMismatch(
                                f"component {idx} of chi({f},{g}) has wrong endpoints"
                            )
                        cells.append(cell)
                        idx += 1
    return ArrowGrid(dom_grid.dims, tuple(cells), dom_grid, cod_grid)


# --- phi and omega ------------------------------------------------------------


def phi(model, theta: ColouredShuffle, source: ObjectGrid,
        path: NormalizingPath | None = None) -> ArrowGrid:
    """The natural transformation from the shuffle to its sorted form.

    Computed along ``path`` (default: leftmost swaps); by the path
    independence theorems the result does not depend on the choice.
    """
    if source.dims != theta.src_dims:
        raise ShapeMismatch(
            f"source dims {source.dims} do not match shuffle sources {theta.src_dims}"
        )
    if path is None:
        path = canonical_path(theta)
    elif path.start != theta:
        raise NotANormalizingPath("path does not start at the given shuffle")
    current = theta
    acc = identity_grid(model, w_shuffle(model, theta, source))
    for p in path.swaps:
        first, second = current.entries[p], current.entries[p + 1]
        # push the source through the context right of the swap
        stage = source
        for entry in reversed(current.entries[p + 2 :]):
            stage = apply_generator(model, stage, entry.colour, entry.arrow)
        step = chi_swap_grid(
            model, first.colour, second.colour, first.arrow, second.arrow, stage
        )
        for entry in reversed(current.entries[:p]):
            step = apply_generator(model, step, entry.colour, entry.arrow)
        acc = compose_grids(model, step, acc)
        current = current.swap(p)
    return acc


def omega(model, first: MultiArrow, second: MultiArrow,
          source: ObjectGrid) -> ArrowGrid:
    """The lax structure map ``W(second) o W(first) -> W(second o first)``."""
    if second.src != first.tgt:
        raise EndpointMismatch(
            f"multi-arrows do not compose: {second.src} vs {first.tgt}"
        )
    nf2 = tuple(normalize(c) for c in second.components)
    nf1 = tuple(normalize(c) for c in first.components)
    entries = _sorted_entries(nf2) + _sorted_entries(nf1)
    theta = shuffle(
        entries, r=first.r, src_dims={c + 1: w.src for c, w in enumerate(nf1)}
    )
    return phi(model, theta, source)


@dataclass(frozen=True, slots=True)
class LaxReport:
    diagram: bool
    left_leg: bool
    right_leg: bool

    def __bool__(self) -> bool:
        return self.diagram and self.left_leg and self.right_leg


def lax_check(model, f1: MultiArrow, f2: MultiArrow, f3: MultiArrow,
              source: ObjectGrid) -> LaxReport:
    """Both composites of the coherence square for a composable triple.

    Also checks the two intermediate identities used to prove it: the
    concatenated normal-form shuffle against the normal form of the
    composite, on either side.
    """
    f21 = multi_compose(f2, f1)
    f32 = multi_compose(f3, f2)
    nf1 = tuple(normalize(c) for c in f1.components)
    nf2 = tuple(normalize(c) for c in f2.components)
    nf3 = tuple(normalize(c) for c in f3.components)

    w1 = w_multi(model, f1, source)
    path_a = compose_grids(
        model, omega(model, f1, f32, source), omega(model, f2, f3, w1)
    )
    path_b = compose_grids(
        model,
        omega(model, f21, f3, source),
        w_shuffle(model, nf_shuffle(f3), omega(model, f1, f2, source)),
    )
    diagram = grids_equal(path_a, path_b)

    def sides_match(theta_x: ColouredShuffle, theta_y: ColouredShuffle) -> bool:
        return grids_equal(
            phi(model, theta_x, source), phi(model, theta_y, source)
        )

    nf32 = tuple(normalize(c) for c in f32.components)
    nf21 = tuple(normalize(c) for c in f21.components)
    left_theta = shuffle(
        _sorted_entries(tuple(
            compose_words(a, b) for a, b in zip(nf3, nf2)
        )) + _sorted_entries(nf1),
        r=f1.r,
        src_dims={c + 1: w.src for c, w in enumerate(nf1)},
    )
    left = sides_match(
        left_theta,
        shuffle(
            _sorted_entries(nf32) + _sorted_entries(nf1),
            r=f1.r,
            src_dims={c + 1: w.src for c, w in enumerate(nf1)},
        ),
    )
    right_theta = shuffle(
        _sorted_entries(nf3) + _sorted_entries(tuple(
            compose_words(a, b) for a, b in zip(nf2, nf1)
        )),
        r=f1.r,
        src_dims={c + 1: w.src for c, w in enumerate(nf1)},
    )
    right = sides_match(
        right_theta,
        shuffle(
            _sorted_entries(nf3) + _sorted_entries(nf21),
            r=f1.r,
            src_dims={c + 1: w.src for c, w in enumerate(nf21)},
        ),
    )
    return LaxReport(diagram, left, right)


# --- path independence, hexagons, swap lemmas ---------------------------------


def path_independence(model, theta: ColouredShuffle, source: ObjectGrid,
                      limit: int | None = None) -> tuple[bool, bool]:
    """Whether every normalizing path yields the same grid; (verdict, truncated)."""
    enum = enumerate_paths(theta, limit)
    if len(enum) <= 1:
        return True, enum.truncated
    reference = phi(model, theta, source, enum[0])
    for candidate in enum.paths[1:]:
        if not grids_equal(reference, phi(model, theta, source, candidate)):
            return False, enum.truncated
    return True, enum.truncated


def _context_shuffle(entries, r, explicit_dims, context_dims):
    dims = dict(explicit_dims)
    for colour, d in (context_dims or {}).items():
        dims.setdefault(colour, d)
    return shuffle(entries, r=r, src_dims=dims)


def hexagon_shuffle(a: int, b: int, c: int, f: BasicArrow, g: BasicArrow,
                    h: BasicArrow, r: int | None = None,
                    context_dims: dict[int, int] | None = None) -> ColouredShuffle:
    if not a < b < c:
        raise ColourOrder(f"hexagon colours must increase, got ({a},{b},{c})")
    r = r if r is not None else c
    return _context_shuffle(
        [ColouredGenerator(f, a), ColouredGenerator(g, b), ColouredGenerator(h, c)],
        r,
        {a: f.src, b: g.src, c: h.src},
        context_dims,
    )


def hexagon_check(model, a: int, b: int, c: int, f: BasicArrow, g: BasicArrow,
                  h: BasicArrow, source: ObjectGrid | None = None,
                  r: int | None = None,
                  context_dims: dict[int, int] | None = None) -> bool:
    """Commutation of the two ways to sort ``(f,a)(g,b)(h,c)``."""
    theta = hexagon_shuffle(a, b, c, f, g, h, r, context_dims)
    if source is None:
        source = default_grid(model, theta.src_dims)
    ok, _ = path_independence(model, theta, source)
    return ok


def lemma_swap_check(model, k: int, phi_word: SimplicialWord,
                     phi_word2: SimplicialWord, g: BasicArrow, l: int,
                     source: ObjectGrid | None = None, r: int | None = None,
                     context_dims: dict[int, int] | None = None) -> bool:
    """Equality of ``phi`` for two spellings of the same colour-k arrow.

    ``phi_word`` and ``phi_word2`` must denote the same arrow of Delta^op
    (for instance the two sides of a basic equation, or a word and its
    normal form); the single colour-``l`` generator ``g`` is the witness
    pushed past them.
    """
    if k == l:
        raise ColourOrder("the passing generator must have a different colour")
    if not words_equal(phi_word, phi_word2):
        raise NotEqualArrows("the two words denote different arrows")
    r = r if r is not None else max(k, l)

    def theta_for(wrd: SimplicialWord) -> ColouredShuffle:
        phi_entries = [ColouredGenerator(x, k) for x in wrd.word]
        g_entry = [ColouredGenerator(g, l)]
        entries = phi_entries + g_entry if k < l else g_entry + phi_entries
        return _context_shuffle(
            entries, r, {k: wrd.src, l: g.src}, context_dims
        )

    t1, t2 = theta_for(phi_word), theta_for(phi_word2)
    if source is None:
        source = default_grid(model, t1.src_dims)
    return grids_equal(phi(model, t1, source), phi(model, t2, source))


# --- symbolic witnesses --------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ComponentWitness:
    index: int
    verdict: str  # syntactic | equation | unknown | refuted
    equations: tuple[int, ...] = ()


@dataclass(frozen=True, slots=True)
class WitnessReport:
    components: tuple[ComponentWitness, ...]

    def nontrivial(self) -> tuple[ComponentWitness, ...]:
        return tuple(c for c in self.components if c.verdict != "syntactic")

    def unknowns(self) -> tuple[ComponentWitness, ...]:
        return tuple(c for c in self.components if c.verdict == "unknown")

    def equations_used(self) -> tuple[int, ...]:
        seen: list[int] = []
        for c in self.components:
            for e in c.equations:
                if e not in seen:
                    seen.append(e)
        return tuple(seen)

    def all_resolved(self) -> bool:
        return all(c.verdict in ("syntactic", "equation") for c in self.components)


def grid_witness(g1: ArrowGrid, g2: ArrowGrid, arity: int, depth: int = 3) -> WitnessReport:
    """Componentwise comparison of two symbolic grids, naming the equation used."""
    if g1.dims != g2.dims:
        raise ShapeMismatch("witness grids have different dims")
    out = []
    for i, (t1, t2) in enumerate(zip(g1.cells, g2.cells)):
        if t1 == t2:
            out.append(ComponentWitness(i, "syntactic"))
            continue
        res = term_equal(t1, t2, arity, depth)
        if res.verdict == "proven":
            out.append(ComponentWitness(i, "equation", res.equations_used))
        else:
            out.append(ComponentWitness(i, res.verdict))
    return WitnessReport(tuple(out))


def symbolic_grid(dims: tuple[int, ...], prefix: str = "X") -> ObjectGrid:
    return ObjectGrid(dims, tuple(ObjVar(f"{prefix}{i}") for i in range(prod(dims))))


def hexagon_witness(a: int, b: int, c: int, f: BasicArrow, g: BasicArrow,
                    h: BasicArrow, r: int | None = None,
                    context_dims: dict[int, int] | None = None,
                    depth: int = 3) -> WitnessReport:
    """Symbolic hexagon comparison; names the equation at each component."""
    theta = hexagon_shuffle(a, b, c, f, g, h, r, context_dims)
    model = FreeTermModel(theta.r)
    source = symbolic_grid(theta.src_dims)
    left = phi(model, theta, source, NormalizingPath(theta, (0, 1, 0)))
    right = phi(model, theta, source, NormalizingPath(theta, (1, 0, 1)))
    return grid_witness(left, right, theta.r, depth)


def equation_witness(k: int, phi_word: SimplicialWord, phi_word2: SimplicialWord,
                     g: BasicArrow, l: int, r: int | None = None,
                     context_dims: dict[int, int] | None = None,
                     depth: int = 3) -> WitnessReport:
    """Symbolic version of ``lemma_swap_check`` with per-component evidence."""
    if k == l:
        raise ColourOrder("the passing generator must have a different colour")
    if not words_equal(phi_word, phi_word2):
        raise NotEqualArrows("the two words denote different arrows")
    r = r if r is not None else max(k, l)
    model = FreeTermModel(r)

    def theta_for(wrd: SimplicialWord) -> ColouredShuffle:
        phi_entries = [ColouredGenerator(x, k) for x in wrd.word]
        g_entry = [ColouredGenerator(g, l)]
        entries = phi_entries + g_entry if k < l else g_entry + phi_entries
        return _context_shuffle(entries, r, {k: wrd.src, l: g.src}, context_dims)

    t1, t2 = theta_for(phi_word), theta_for(phi_word2)
    source = symbolic_grid(t1.src_dims)
    return grid_witness(
        phi(model, t1, source), phi(model, t2, source), r, depth
    )


# --- the Segal condition -------------------------------------------------------


def segal_check(model, r: int, coord: int, m: int,
                fixed_dims: dict[int, int] | None = None, seed: int = 0) -> bool:
    """Tupling the m projection arrows in one coordinate is the identity.

    Checked exactly on an object grid and on a seeded arrow grid: the slice
    of the grid at coordinate value ``t`` must be reproduced verbatim by
    the arrow picking the t-th slot.
    """
    fixed = dict(fixed_dims or {})
    dims = tuple(m if z == coord else fixed.get(z, 1) for z in range(1, r + 1))
    source = default_grid(model, dims, seed=seed)
    arrow_grid = None
    if isinstance(model, FinSetSplitModel):
        rng = random.Random(seed + 1)
        target = default_grid(model, dims, seed=seed + 2)
        arrows = tuple(
            random_fin_arrow(rng, d, c) for d, c in zip(source.cells, target.cells)
        )
        arrow_grid = ArrowGrid(dims, arrows, source, target)

    axis = coord - 1
    inner = prod(dims[axis + 1 :])
    outer = prod(dims[:axis])

    def slice_cells(cells: tuple, t: int) -> tuple:
        out = []
        block = m * inner
        for a in range(outer):
            base = a * block + (t - 1) * inner
            out.extend(cells[base : base + inner])
        return tuple(out)

    for t in range(1, m + 1):
        ma = MultiArrow(tuple(
            segal_arrow(m, t) if z == coord else identity_word(dims[z - 1])
            for z in range(1, r + 1)
        ))
        proj_obj = w_multi(model, ma, source)
        if proj_obj.cells != slice_cells(source.cells, t):
            return False
        if arrow_grid is not None:
            proj_arr = w_multi(model, ma, arrow_grid)
            if (
                proj_arr.cells != slice_cells(arrow_grid.cells, t)
                or proj_arr.dom.cells != slice_cells(source.cells, t)
                or proj_arr.cod.cells != slice_cells(arrow_grid.cod.cells, t)
            ):
                return False
    return True


# --- default grids -------------------------------------------------------------


def default_grid(model, dims: tuple[int, ...], seed: int = 0,
                 max_size: int = 2) -> ObjectGrid:
    """A deterministic input grid: sizes cycling 1..max_size, or variables."""
    count = prod(dims)
    if isinstance(model, FreeTermModel):
        return symbolic_grid(dims)
    cells = tuple(1 + ((i + seed) % max_size) for i in range(count))
    return ObjectGrid(dims, cells)
