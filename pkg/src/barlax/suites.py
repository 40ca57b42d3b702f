"""Verification suites over the finite combinatorial content.

Each suite sweeps one family of facts at configurable bounds and returns
one record per instance group.  Records serialize as JSON lines; given the
same configuration and seed the report is byte-identical, so ``elapsed``
counts elementary checks rather than wall clock.  ``BARLAX_WORKERS`` caps
the worker pool; the report order is canonical (sorted by instance key)
regardless of scheduling.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache

from .bar import (
    MultiArrow,
    default_grid,
    grids_equal,
    hexagon_check,
    hexagon_witness,
    lax_check,
    lemma_swap_check,
    phi,
    segal_check,
)
from .errors import ConfigError
from .model import CorruptedIotaModel, FinSetSplitModel, FreeTermModel, check_equation
from .equations import ALL_IDS, EQ_VARS, colour_arity
from .shuffle import (
    ColouredGenerator,
    ColouredShuffle,
    NormalizingPath,
    shuffle,
)
from .simplicial import (
    BasicArrow,
    degeneracy,
    face,
    identity_arrow,
    normalize,
    random_word,
    word,
)

SUITE_NAMES = (
    "equations",
    "lemma43",
    "lemma44",
    "hexagon",
    "paths",
    "lax",
    "segal",
)


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    r: int = 3
    model: str | None = None
    split: int | None = None
    max_dim: int = 3
    max_size: int = 3
    max_len: int = 3
    seed: int = 0
    trials: int = 50
    limit: int | None = None
    out: str | None = None

    def __post_init__(self) -> None:
        if self.suite not in SUITE_NAMES + ("all",):
            raise ConfigError(f"unknown suite {self.suite!r}")
        if min(self.r, self.max_dim, self.max_size, self.max_len) < 0 or self.r < 1:
            raise ConfigError("bounds must be positive")
        if self.split is not None and not 0 <= self.split <= self.r:
            raise ConfigError(f"split {self.split} outside 0..{self.r}")

    def pick_model(self, r: int | None = None):
        """The model a single-model suite should use at arity ``r``."""
        r = r if r is not None else self.r
        if self.model:
            return parse_model(self.model)
        split = self.split if self.split is not None else r // 2
        return FinSetSplitModel(r, min(split, r))

    def splits_for(self, r: int) -> list[int]:
        if self.split is not None:
            return [self.split] if self.split <= r else []
        return list(range(r + 1))


@dataclass(frozen=True)
class Record:
    suite: str
    instance: str
    bounds: str
    verdict: bool
    elapsed: int
    witness: str | None = None

    def to_json(self) -> str:
        doc = {
            "suite": self.suite,
            "instance": self.instance,
            "bounds": self.bounds,
            "verdict": "pass" if self.verdict else "fail",
            "elapsed": self.elapsed,
        }
        if self.witness is not None:
            doc["witness"] = self.witness
        return json.dumps(doc, sort_keys=True)


def parse_model(spec: str):
    """Parse ``finset:r=3,split=1`` / ``finset-corrupt:...`` / ``free:r=3``."""
    try:
        kind, _, args = spec.partition(":")
        fields = dict(
            part.split("=") for part in args.split(",") if part
        )
        if kind == "free":
            return FreeTermModel(int(fields["r"]))
        if kind == "finset":
            return FinSetSplitModel(int(fields["r"]), int(fields["split"]))
        if kind == "finset-corrupt":
            return CorruptedIotaModel(int(fields["r"]), int(fields["split"]))
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad model spec {spec!r}: {exc}") from None
    raise ConfigError(f"unknown model kind in {spec!r}")


def model_name(model) -> str:
    if isinstance(model, CorruptedIotaModel):
        return f"finset-corrupt:r={model.arity},split={model.split}"
    if isinstance(model, FinSetSplitModel):
        return f"finset:r={model.arity},split={model.split}"
    return f"free:r={model.arity}"


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("BARLAX_WORKERS", "1")))
    except ValueError:
        return 1


def _run_cells(cells):
    """Evaluate (key, thunk) cells, possibly in parallel; order-stable output."""
    n = _workers()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(lambda kv: kv[1](), cells))
    else:
        results = [thunk() for _, thunk in cells]
    return sorted(
        (record for record in results), key=lambda rec: (rec.suite, rec.instance)
    )


# --- enumeration helpers -------------------------------------------------------


def generators_at(dim: int, max_dim: int) -> list[BasicArrow]:
    out: list[BasicArrow] = []
    if dim >= 1:
        out.extend(face(dim, i) for i in range(dim + 1))
    if dim + 1 <= max_dim:
        out.extend(degeneracy(dim + 1, i) for i in range(dim + 1))
    return out


def iter_words(max_len: int, max_dim: int):
    """Every composable word with all generator dimensions <= max_dim."""
    for src in range(max_dim + 1):
        stack = [((), src)]
        while stack:
            entries, dim = stack.pop()
            yield word(tuple(reversed(entries)), src=src)
            if len(entries) < max_len:
                for g in generators_at(dim, max_dim):
                    stack.append((entries + (g,), g.tgt))


def iter_shuffles(r: int, max_len: int, max_dim: int):
    """Every shuffle of up to ``max_len`` generators in ``r`` colours.

    Start dimensions range over ``{0..max_dim}`` per colour and every
    intermediate dimension stays within the bound.
    """
    for start in itertools.product(range(max_dim + 1), repeat=r):
        stack = [((), start)]
        while stack:
            entries, dims = stack.pop()
            yield ColouredShuffle(
                r, tuple(ColouredGenerator(g, c) for g, c in reversed(entries)), start
            )
            if len(entries) < max_len:
                for c in range(1, r + 1):
                    for g in generators_at(dims[c - 1], max_dim):
                        stack.append(
                            (entries + ((g, c),),
                             dims[: c - 1] + (g.tgt,) + dims[c:])
                        )


@lru_cache(maxsize=None)
def paths_of_colour_word(cw: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Swap sequences of every normalizing path; depends only on the colours."""
    swaps = [p for p in range(len(cw) - 1) if cw[p] < cw[p + 1]]
    if not swaps:
        return ((),)
    out = []
    for p in swaps:
        rest = cw[:p] + (cw[p + 1], cw[p]) + cw[p + 2 :]
        out.extend((p,) + tail for tail in paths_of_colour_word(rest))
    return tuple(out)


def random_shuffle(r: int, length: int, max_dim: int, rng: random.Random,
                   multi_path_only: bool = False) -> ColouredShuffle:
    while True:
        start = tuple(rng.randint(0, max_dim) for _ in range(r))
        dims = list(start)
        picked = []
        ok = True
        for _ in range(length):
            c = rng.randrange(r)
            options = generators_at(dims[c], max_dim)
            if not options:
                ok = False
                break
            g = rng.choice(options)
            picked.append((g, c + 1))
            dims[c] = g.tgt
        if not ok:
            continue
        sh = ColouredShuffle(
            r, tuple(ColouredGenerator(g, c) for g, c in reversed(picked)), start
        )
        if multi_path_only and len(paths_of_colour_word(sh.colour_word())) < 2:
            continue
        return sh


def basic_arrows(max_dim: int, include_identities: bool = True) -> list[BasicArrow]:
    out: list[BasicArrow] = []
    if include_identities:
        out.extend(identity_arrow(n) for n in range(max_dim + 1))
    for n in range(1, max_dim + 1):
        out.extend(face(n, i) for i in range(n + 1))
        out.extend(degeneracy(n, i) for i in range(n))
    return out


def basic_equation_pairs(max_dim: int):
    """All instances of the basic equations, as (family, lhs word, rhs word)."""
    pairs = []
    for n in range(2, max_dim + 1):
        for l in range(n + 1):
            for j in range(l):  # l - 1 >= j
                family = "dd_near" if l == j + 1 else "dd_far"
                pairs.append(
                    (family,
                     word((face(n - 1, j), face(n, l))),
                     word((face(n - 1, l - 1), face(n, j)))))
    for n in range(1, max_dim):
        for l in range(n):
            for j in range(n + 2):
                if l + 1 > j:
                    pairs.append(
                        ("ss",
                         word((degeneracy(n + 1, j), degeneracy(n, l))),
                         word((degeneracy(n + 1, l + 1), degeneracy(n, j)))))
    for n in range(1, max_dim + 1):
        for l in range(n):
            for j in range(n + 1):
                lhs = word((face(n, j), degeneracy(n, l)))
                if j <= l - 1:
                    pairs.append(
                        ("ds_lt", lhs, word((degeneracy(n - 1, l - 1), face(n - 1, j)))))
                elif l == j:
                    pairs.append(("ds_id_j", lhs, word((), src=n - 1)))
                elif l == j - 1:
                    pairs.append(("ds_id_j1", lhs, word((), src=n - 1)))
                else:
                    pairs.append(
                        ("ds_gt", lhs, word((degeneracy(n - 1, l), face(n - 1, j - 1)))))
    return pairs


# --- suites --------------------------------------------------------------------


def suite_equations(config: SuiteConfig) -> list[Record]:
    """Equations (1)-(12) per colour pair and (13)-(20) per triple, exhaustively."""
    if config.model:
        models = [parse_model(config.model)]
        if any(isinstance(m, FreeTermModel) for m in models):
            raise ConfigError("the equations suite needs a finite-set model")
    else:
        models = [
            FinSetSplitModel(r, s)
            for r in range(2, config.r + 1)
            for s in config.splits_for(r)
        ]
    sizes = range(1, config.max_size + 1)
    cells = []
    for model in models:
        for eq_id in ALL_IDS:
            width = colour_arity(eq_id)
            if model.arity < width:
                continue
            for colours in itertools.combinations(range(1, model.arity + 1), width):
                key = (
                    f"model={model_name(model)} eq={eq_id:02d} "
                    f"colours={','.join(map(str, colours))}"
                )

                def thunk(model=model, eq_id=eq_id, colours=colours, key=key):
                    checked = 0
                    witness = None
                    ok = True
                    for objs in itertools.product(sizes, repeat=EQ_VARS.get(eq_id, 0)):
                        checked += 1
                        if not check_equation(model, eq_id, colours, objs):
                            ok = False
                            if witness is None:
                                witness = f"objects={objs}"
                    return Record(
                        "equations", key,
                        f"sizes<={config.max_size}", ok, checked, witness,
                    )

                cells.append((key, thunk))
    return _run_cells(cells)


def suite_lemma43(config: SuiteConfig) -> list[Record]:
    """Swapping one generator past both sides of every basic equation."""
    pairs = basic_equation_pairs(config.max_dim)
    passing = basic_arrows(config.max_dim)
    embeddings = []
    for k, l in itertools.permutations(range(1, config.r + 1), 2):
        ctx = {z: 2 for z in range(1, config.r + 1) if z not in (k, l)}
        embeddings.append((k, l, ctx))
    cells = []
    families = sorted({fam for fam, _, _ in pairs})
    for fam in families:
        instances = [(w1, w2) for f, w1, w2 in pairs if f == fam]
        for k, l, ctx in embeddings:
            key = f"family={fam} k={k} l={l} r={config.r}"

            def thunk(instances=instances, k=k, l=l, ctx=ctx, key=key):
                model = config.pick_model()
                checked = 0
                witness = None
                ok = True
                for w1, w2 in instances:
                    for g in passing:
                        checked += 1
                        if not lemma_swap_check(
                            model, k, w1, w2, g, l, r=config.r, context_dims=ctx
                        ):
                            ok = False
                            if witness is None:
                                witness = f"pair=({w1},{w2}) g={g}"
                return Record(
                    "lemma43", key,
                    f"dims<={config.max_dim}", ok, checked, witness,
                )

            cells.append((key, thunk))
    return _run_cells(cells)


def suite_lemma44(config: SuiteConfig) -> list[Record]:
    """phi agrees on a word and its normal form, past one passing generator."""
    model = config.pick_model()
    passing = basic_arrows(min(config.max_dim, 3), include_identities=False)
    rng = random.Random(config.seed)
    cells = []

    def build(words, tag):
        key = f"words={tag} r={config.r}"

        def thunk(words=words, key=key):
            checked = 0
            witness = None
            ok = True
            for w1 in words:
                w2 = normalize(w1)
                if w1.word == w2.word:
                    continue
                g = passing[checked % len(passing)]
                for k, l in ((1, 2), (2, 1)):
                    checked += 1
                    ctx = {z: 2 for z in range(1, config.r + 1) if z not in (k, l)}
                    if not lemma_swap_check(
                        model, k, w1, w2, g, l, r=config.r, context_dims=ctx
                    ):
                        ok = False
                        if witness is None:
                            witness = f"word={w1} g={g} k={k} l={l}"
            return Record(
                "lemma44", key, f"dims<={config.max_dim}", ok, checked, witness
            )

        cells.append((key, thunk))

    exhaustive = list(iter_words(min(config.max_len, 3), config.max_dim))
    build(exhaustive, f"exhaustive len<={min(config.max_len, 3)}")
    if config.max_len >= 4:
        sample = [
            random_word(rng.randint(0, config.max_dim), config.max_len,
                        rng.randrange(10 ** 9), max_dim=config.max_dim)
            for _ in range(config.trials)
        ]
        build(sample, f"random len={config.max_len} trials={config.trials}")
    return _run_cells(cells)


def suite_hexagon(config: SuiteConfig) -> list[Record]:
    """Lemma-style hexagons: concrete sweeps plus the symbolic witness table."""
    arrows = basic_arrows(config.max_dim)
    cells = []
    if config.model:
        models = [parse_model(config.model)]
    else:
        models = [FinSetSplitModel(3, s) for s in config.splits_for(3)]
    for model in models:
        for kf, kg, kh in itertools.product(("id", "d", "s"), repeat=3):
            key = f"model={model_name(model)} kinds={kf}{kg}{kh}"

            def thunk(model=model, kf=kf, kg=kg, kh=kh, key=key):
                checked = 0
                witness = None
                ok = True
                for f in arrows:
                    if f.kind != kf:
                        continue
                    for g in arrows:
                        if g.kind != kg:
                            continue
                        for h in arrows:
                            if h.kind != kh:
                                continue
                            checked += 1
                            if not hexagon_check(model, 1, 2, 3, f, g, h):
                                ok = False
                                if witness is None:
                                    witness = f"f={f} g={g} h={h}"
                return Record(
                    "hexagon", key, f"dims<={config.max_dim}", ok, checked, witness
                )

            cells.append((key, thunk))

    # the nontrivial-case table: one component, one equation, fixed position
    expected = {
        ("s", "s", "s"): 13, ("s", "s", "d"): 14, ("s", "d", "s"): 15,
        ("s", "d", "d"): 16, ("d", "s", "s"): 17, ("d", "s", "d"): 18,
        ("d", "d", "s"): 19, ("d", "d", "d"): 20,
    }

    def component_formula(f, g, h):
        # 1-based flat position of the single nontrivial component
        def coord(a):
            return a.idx if a.kind == "s" else a.idx - 1

        m2, p2 = g.tgt, h.tgt
        return (coord(f) * m2 + coord(g)) * p2 + coord(h) + 1

    def nontrivial_pool(kind):
        if kind == "s":
            return [degeneracy(n, i) for n in range(1, config.max_dim + 1)
                    for i in range(n)]
        return [face(n, j) for n in range(2, config.max_dim + 1)
                for j in range(1, n)]

    for (kf, kg, kh), eq in sorted(expected.items()):
        key = f"witness kinds={kf}{kg}{kh} eq={eq}"

        def thunk(kf=kf, kg=kg, kh=kh, eq=eq, key=key):
            checked = 0
            witness = None
            ok = True
            for f in nontrivial_pool(kf):
                for g in nontrivial_pool(kg):
                    for h in nontrivial_pool(kh):
                        checked += 1
                        rep = hexagon_witness(1, 2, 3, f, g, h)
                        nt = rep.nontrivial()
                        want = component_formula(f, g, h) - 1
                        if not (
                            len(nt) == 1
                            and nt[0].index == want
                            and nt[0].verdict == "equation"
                            and nt[0].equations == (eq,)
                        ):
                            ok = False
                            if witness is None:
                                got = [(c.index, c.verdict, c.equations) for c in nt]
                                witness = f"f={f} g={g} h={h} got={got} want=({want},{eq})"
            return Record(
                "hexagon", key, f"dims<={config.max_dim}", ok, checked, witness
            )

        cells.append((key, thunk))
    return _run_cells(cells)


def suite_paths(config: SuiteConfig) -> list[Record]:
    """Path lengths (exhaustive on colour words) and grid path independence."""
    cells = []

    # every normalizing path has length = inversion count; the swap structure
    # depends only on the colour word, checked exhaustively per length
    for length in range(min(config.max_len + 3, 6) + 1):
        key = f"lengths len={length} r<={config.r}"

        def thunk(length=length, key=key):
            checked = 0
            ok = True
            witness = None
            for cw in itertools.product(range(1, config.r + 1), repeat=length):
                inv = sum(
                    1
                    for i in range(length)
                    for j in range(i + 1, length)
                    if cw[i] < cw[j]
                )
                for swaps in paths_of_colour_word(cw):
                    checked += 1
                    if len(swaps) != inv:
                        ok = False
                        witness = f"colours={cw} path={swaps}"
            return Record("paths", key, f"len={length}", ok, checked, witness)

        cells.append((key, thunk))

    model = config.pick_model()

    def check_shuffle(sh: ColouredShuffle, sizes_seed: int) -> tuple[bool, int, str | None]:
        swap_lists = paths_of_colour_word(sh.colour_word())
        if len(swap_lists) == 1:
            return True, 1, None
        grid = default_grid(model, sh.src_dims, seed=sizes_seed)
        reference = phi(model, sh, grid, NormalizingPath(sh, swap_lists[0]))
        for swaps in swap_lists[1:]:
            if not grids_equal(reference, phi(model, sh, grid, NormalizingPath(sh, swaps))):
                return False, len(swap_lists), f"shuffle={sh} paths differ"
        return True, len(swap_lists), None

    key = f"pathind exhaustive r<={config.r} len<={config.max_len} dims<={config.max_dim}"

    def exhaustive_thunk(key=key):
        checked = 0
        ok = True
        witness = None
        for sh in iter_shuffles(config.r, config.max_len, config.max_dim):
            good, n, w = check_shuffle(sh, 0)
            checked += n
            if not good:
                ok = False
                if witness is None:
                    witness = w
        return Record(
            "paths", key,
            f"r<={config.r} len<={config.max_len} dims<={config.max_dim}",
            ok, checked, witness,
        )

    cells.append((key, exhaustive_thunk))

    for length in sorted({config.max_len + 1, 5}):
        if length <= config.max_len or length > 5:
            continue
        key = f"pathind random len={length} trials={config.trials}"

        def random_thunk(length=length, key=key):
            rng = random.Random(config.seed + length)
            checked = 0
            ok = True
            witness = None
            for i in range(config.trials):
                sh = random_shuffle(config.r, length, config.max_dim, rng,
                                    multi_path_only=True)
                good, n, w = check_shuffle(sh, i)
                checked += n
                if not good:
                    ok = False
                    if witness is None:
                        witness = w
            return Record(
                "paths", key, f"len={length} dims<={config.max_dim}",
                ok, checked, witness,
            )

        cells.append((key, random_thunk))
    return _run_cells(cells)


def suite_lax(config: SuiteConfig) -> list[Record]:
    """Seeded composable triples through the coherence square."""
    cells = []
    for r in range(2, config.r + 1):
        model = config.pick_model(r)
        if model.arity != r:
            continue
        for trial in range(config.trials):
            key = f"r={r} trial={trial:03d}"

            def thunk(r=r, model=model, trial=trial, key=key):
                rng = random.Random(config.seed * 1000003 + r * 1009 + trial)
                dims = tuple(rng.randint(0, config.max_dim) for _ in range(r))
                triple = []
                cur = dims
                for _ in range(3):
                    comps = tuple(
                        random_word(d, rng.randint(0, 2), rng.randrange(10 ** 9),
                                    max_dim=config.max_dim)
                        for d in cur
                    )
                    ma = MultiArrow(comps)
                    triple.append(ma)
                    cur = ma.tgt
                f1, f2, f3 = triple
                grid = default_grid(model, dims, seed=trial)
                rep = lax_check(model, f1, f2, f3, grid)
                witness = None if rep else (
                    f"f1={[str(c) for c in f1.components]} "
                    f"f2={[str(c) for c in f2.components]} "
                    f"f3={[str(c) for c in f3.components]} report={rep}"
                )
                return Record(
                    "lax", key, f"dims<={config.max_dim}", bool(rep), 3, witness
                )

            cells.append((key, thunk))
    return _run_cells(cells)


def suite_segal(config: SuiteConfig) -> list[Record]:
    """Tupling the projection arrows is the identity, coordinate by coordinate."""
    cells = []
    max_m = 4
    for r in range(1, config.r + 1):
        model = config.pick_model(r)
        if model.arity != r:
            continue
        for coord in range(1, r + 1):
            for m in range(1, max_m + 1):
                for fill in (1, 2):
                    key = f"r={r} coord={coord} m={m} fill={fill}"

                    def thunk(r=r, model=model, coord=coord, m=m, fill=fill, key=key):
                        fixed = {
                            z: (1 if z < coord else fill)
                            for z in range(1, r + 1)
                            if z != coord
                        }
                        ok = segal_check(model, r, coord, m, fixed, seed=config.seed)
                        return Record(
                            "segal", key, f"m<={max_m}", ok, m,
                            None if ok else f"fixed={fixed}",
                        )

                    cells.append((key, thunk))
    return _run_cells(cells)


SUITES = {
    "equations": suite_equations,
    "lemma43": suite_lemma43,
    "lemma44": suite_lemma44,
    "hexagon": suite_hexagon,
    "paths": suite_paths,
    "lax": suite_lax,
    "segal": suite_segal,
}


def run_suite(config: SuiteConfig) -> list[Record]:
    if config.suite == "all":
        records = []
        for name in SUITE_NAMES:
            records.extend(SUITES[name](replace(config, suite=name)))
        return records
    return SUITES[config.suite](config)
