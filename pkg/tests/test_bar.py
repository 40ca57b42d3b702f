"""The bar construction on grids: functors, swaps, phi, omega, and the checks."""

import random

import pytest

from barlax import (
    ArrowGrid,
    FinSetSplitModel,
    FreeTermModel,
    MultiArrow,
    NormalizingPath,
    ObjectGrid,
    chi_swap_grid,
    default_grid,
    degeneracy,
    equation_witness,
    face,
    grids_equal,
    hexagon_check,
    hexagon_witness,
    identity_word,
    lax_check,
    lemma_swap_check,
    multi_compose,
    omega,
    parse_shuffle,
    parse_word,
    path_independence,
    phi,
    random_word,
    segal_check,
    symbolic_grid,
    w_basic,
    w_multi,
    w_shuffle,
    word,
)
from barlax.bar import identity_grid
from barlax.errors import (
    ColourOrder,
    EndpointMismatch,
    NotANormalizingPath,
    NotEqualArrows,
    ShapeMismatch,
)
from barlax.model import random_fin_arrow
from barlax.terms import ObjUnit, ObjVar, obj_tensor

TWO_COLOUR = "(d3_2 @2) (d2_1 @1) (d3_1 @1) (s3_0 @2) (d3_1 @2)"
THREE_COLOUR = "(d2_2 @1) (s3_1 @3) (d3_1 @1) (d2_1 @2) (s2_1 @3)"

MIXED = FinSetSplitModel(2, 1)
FREE2 = FreeTermModel(2)
FREE3 = FreeTermModel(3)


def var_grid(dims, names):
    return ObjectGrid(dims, tuple(ObjVar(n) for n in names))


# --- single steps ----------------------------------------------------------------


def test_w_basic_insert_unit_into_empty():
    assert w_basic(FREE2, 2, degeneracy(1, 0), 1, 1, ()) == (ObjUnit(2),)


def test_w_basic_face_merges_slices():
    cells = tuple(ObjVar(n) for n in "ABCD")
    out = w_basic(FREE2, 1, face(2, 1), 2, 1, cells)
    assert out == (
        obj_tensor(1, ObjVar("A"), ObjVar("C")),
        obj_tensor(1, ObjVar("B"), ObjVar("D")),
    )


def test_w_basic_outer_face_drops():
    cells = tuple(ObjVar(n) for n in "ABCD")
    assert w_basic(FREE2, 1, face(2, 0), 2, 1, cells) == cells[2:]
    assert w_basic(FREE2, 1, face(2, 2), 2, 1, cells) == cells[:2]


def test_w_basic_shape_check():
    with pytest.raises(ShapeMismatch):
        w_basic(FREE2, 1, face(2, 1), 2, 1, (ObjVar("A"),))


# --- whole-shuffle functors --------------------------------------------------------


def test_two_colour_worked_example_symbolically():
    theta = parse_shuffle(TWO_COLOUR)
    grid = var_grid((3, 3), "ABCDEFGHJ")
    out = w_shuffle(FREE2, theta, grid)
    a, b, c, d, e, f, g, h, j = (ObjVar(x) for x in "ABCDEFGHJ")
    i2 = ObjUnit(2)
    assert out.dims == (1, 2)
    assert out.cells[0] == obj_tensor(1, i2, i2, i2)
    assert out.cells[1] == obj_tensor(
        2,
        obj_tensor(1, obj_tensor(2, a, b), obj_tensor(2, d, e), obj_tensor(2, g, h)),
        obj_tensor(1, c, f, j),
    )


def test_two_colour_worked_example_sizes():
    theta = parse_shuffle(TWO_COLOUR)
    out = w_shuffle(MIXED, theta, ObjectGrid((3, 3), (2,) * 9))
    assert out.cells == (3, 72)


def test_three_colour_worked_example_symbolically():
    theta = parse_shuffle(THREE_COLOUR)
    grid = var_grid((3, 2, 1), "ABCDEF")
    out = w_shuffle(FREE3, theta, grid)
    a, b, c, d = (ObjVar(x) for x in "ABCD")
    i3 = ObjUnit(3)
    assert out.dims == (1, 1, 3)
    assert out.cells == (
        obj_tensor(1, obj_tensor(2, a, b), obj_tensor(2, c, d)),
        i3,
        obj_tensor(1, obj_tensor(2, i3, i3), obj_tensor(2, i3, i3)),
    )


def test_interleaving_matters():
    # the same per-colour sequences, shuffled differently, give different
    # functors: witnessed by a size computation
    mixed = parse_shuffle(TWO_COLOUR)
    sorted_form = parse_shuffle("(d3_2 @2) (s3_0 @2) (d3_1 @2) (d2_1 @1) (d3_1 @1)")
    grid = ObjectGrid((3, 3), (2,) * 9)
    assert w_shuffle(MIXED, mixed, grid).cells != w_shuffle(MIXED, sorted_form, grid).cells


def test_empty_shuffle_is_identity():
    theta = parse_shuffle("(id2 @1) (id3 @2)")
    grid = default_grid(MIXED, (2, 3))
    assert w_shuffle(MIXED, theta, grid) == grid


def test_w_shuffle_checks_dims():
    theta = parse_shuffle(TWO_COLOUR)
    with pytest.raises(ShapeMismatch):
        w_shuffle(MIXED, theta, ObjectGrid((2, 3), (1,) * 6))


# --- the swap grid -----------------------------------------------------------------


def test_single_swap_grid_is_the_instantiated_tuple():
    # one swap of (d_1^2, 1) past (d_1^2, 2): a lone interchange instance
    source = var_grid((2, 2), "ABCD")
    grid = chi_swap_grid(FREE2, 1, 2, face(2, 1), face(2, 1), source)
    a, b, c, d = (ObjVar(x) for x in "ABCD")
    assert grid.dims == (1, 1)
    cell = grid.cells[0]
    assert cell.dom == obj_tensor(1, obj_tensor(2, a, b), obj_tensor(2, c, d))
    assert cell.cod == obj_tensor(2, obj_tensor(1, a, c), obj_tensor(1, b, d))
    assert (cell.a, cell.b, cell.c, cell.d) == (a, b, c, d)


def test_swap_grid_padding_cells_are_identities():
    source = var_grid((3, 2), "ABCDEF")
    grid = chi_swap_grid(FREE2, 1, 2, face(3, 1), degeneracy(3, 1), source)
    assert grid.dims == (2, 3)
    nontrivial = [i for i, cell in enumerate(grid.cells) if str(cell) != "1"]
    assert nontrivial == [1]  # (j-1)(m+1)+i = 0*3+1


def test_phi_of_sorted_shuffle_is_identity():
    theta = parse_shuffle("(d3_2 @2) (s3_0 @2) (d3_1 @2) (d2_1 @1) (d3_1 @1)")
    grid = default_grid(MIXED, (3, 3))
    out = phi(MIXED, theta, grid)
    assert out.cells == identity_grid(MIXED, out.dom).cells


def test_phi_endpoints():
    theta = parse_shuffle(TWO_COLOUR)
    grid = default_grid(MIXED, (3, 3))
    out = phi(MIXED, theta, grid)
    assert out.dom.cells == w_shuffle(MIXED, theta, grid).cells
    sorted_form = parse_shuffle("(d3_2 @2) (s3_0 @2) (d3_1 @2) (d2_1 @1) (d3_1 @1)")
    assert out.cod.cells == w_shuffle(MIXED, sorted_form, grid).cells


def test_phi_path_independence_worked_example():
    theta = parse_shuffle(TWO_COLOUR)
    for cells in ((1,) * 9, (1, 2) * 4 + (1,)):
        grid = ObjectGrid((3, 3), cells)
        printed = phi(MIXED, theta, grid, NormalizingPath(theta, (2, 3, 1, 2)))
        canonical = phi(MIXED, theta, grid)
        assert grids_equal(printed, canonical)
        ok, _ = path_independence(MIXED, theta, grid)
        assert ok


def test_phi_rejects_foreign_path():
    theta = parse_shuffle(TWO_COLOUR)
    other = parse_shuffle("(d2_1 @1) (d2_1 @2)")
    with pytest.raises(NotANormalizingPath):
        phi(MIXED, theta, default_grid(MIXED, (3, 3)),
            NormalizingPath(other, (0,)))


def test_phi_of_single_swap_is_the_swap_grid():
    theta = parse_shuffle("(d2_1 @1) (d2_1 @2)")
    grid = default_grid(MIXED, (2, 2))
    via_phi = phi(MIXED, theta, grid)
    direct = chi_swap_grid(MIXED, 1, 2, face(2, 1), face(2, 1), grid)
    assert grids_equal(via_phi, direct)


def test_disjoint_swaps_commute():
    # two non-overlapping eligible swaps applied in either order give the
    # same composite transformation
    theta = parse_shuffle("(d1_1 @1) (s2_1 @2) (d2_1 @1) (d2_1 @2)")
    grid = default_grid(MIXED, theta.src_dims)
    first = theta.swap(0)
    a1 = phi(MIXED, theta, grid, NormalizingPath(theta, (0, 2) + canonical_tail(first.swap(2))))
    a2 = phi(MIXED, theta, grid, NormalizingPath(theta, (2, 0) + canonical_tail(first.swap(2))))
    assert grids_equal(a1, a2)


def canonical_tail(sh):
    from barlax import canonical_path

    return canonical_path(sh).swaps


# --- omega and the coherence square -------------------------------------------------


def test_omega_of_identities_is_identity():
    ma = MultiArrow((identity_word(2), identity_word(2)))
    grid = default_grid(MIXED, (2, 2))
    out = omega(MIXED, ma, ma, grid)
    assert out.cells == tuple(MIXED.id(c) for c in out.dom.cells)


def test_omega_endpoints_are_the_two_composites():
    f1 = MultiArrow((parse_word("s1_0"), identity_word(2)))
    f2 = MultiArrow((parse_word("d1_1"), parse_word("d2_1")))
    grid = default_grid(MIXED, (0, 2))
    out = omega(MIXED, f1, f2, grid)
    assert out.dom.cells == w_multi(MIXED, f2, w_multi(MIXED, f1, grid)).cells
    assert out.cod.cells == w_multi(MIXED, multi_compose(f2, f1), grid).cells


def test_omega_single_cross_swap_yields_a_table_instance():
    # one colour-1 face of the second arrow crossing one colour-2
    # degeneracy of the first: the structure map is a lone tau with
    # identity padding
    first = MultiArrow((identity_word(2), parse_word("s2_1")))
    second = MultiArrow((parse_word("d2_1"), identity_word(2)))
    grid = default_grid(MIXED, (2, 1))
    out = omega(MIXED, first, second, grid)
    assert out.dims == (1, 2)
    assert out.cells[0] == MIXED.id(out.dom.cells[0])
    assert out.cells[1] == MIXED.tau(1, 2)


def test_omega_normalizes_its_inputs_first():
    # spelling a component differently does not change the structure map
    first = MultiArrow((parse_word("d2_1 . d3_3"), identity_word(1)))
    same = MultiArrow((parse_word("d2_2 . d3_1"), identity_word(1)))
    second = MultiArrow((parse_word("s2_1"), parse_word("s2_0")))
    grid = default_grid(MIXED, (3, 1))
    assert grids_equal(
        omega(MIXED, first, second, grid), omega(MIXED, same, second, grid)
    )


def test_omega_requires_composability():
    f1 = MultiArrow((identity_word(2),))
    f2 = MultiArrow((identity_word(3),))
    with pytest.raises(EndpointMismatch):
        omega(FinSetSplitModel(1, 1), f1, f2, default_grid(FinSetSplitModel(1, 1), (2,)))


def test_omega_is_natural_in_the_input():
    # both whiskerings of omega around an arbitrary arrow grid agree
    rng = random.Random(5)
    f1 = MultiArrow((parse_word("d2_1"), parse_word("s2_1")))
    f2 = MultiArrow((parse_word("s1_0 . d1_1"), parse_word("s3_1")))
    dims = f1.src
    src = default_grid(MIXED, dims, seed=0)
    tgt = default_grid(MIXED, dims, seed=1)
    cells = tuple(
        random_fin_arrow(rng, d, c) for d, c in zip(src.cells, tgt.cells)
    )
    alpha = ArrowGrid(dims, cells, src, tgt)
    dom_leg = omega(MIXED, f1, f2, src)
    cod_leg = omega(MIXED, f1, f2, tgt)
    composite = multi_compose(f2, f1)
    lhs_cells = tuple(
        MIXED.compose(a, b)
        for a, b in zip(w_multi(MIXED, composite, alpha).cells, dom_leg.cells)
    )
    rhs_cells = tuple(
        MIXED.compose(a, b)
        for a, b in zip(
            cod_leg.cells,
            w_multi(MIXED, f2, w_multi(MIXED, f1, alpha)).cells,
        )
    )
    assert lhs_cells == rhs_cells


def test_lax_check_identities():
    ma = MultiArrow((identity_word(1), identity_word(2)))
    assert lax_check(MIXED, ma, ma, ma, default_grid(MIXED, (1, 2)))


def test_lax_check_seeded_triples():
    rng = random.Random(11)
    for _ in range(6):
        dims = tuple(rng.randint(0, 2) for _ in range(2))
        triple = []
        cur = dims
        for _ in range(3):
            ma = MultiArrow(tuple(
                random_word(d, rng.randint(0, 2), rng.randrange(10 ** 6), max_dim=3)
                for d in cur
            ))
            triple.append(ma)
            cur = ma.tgt
        report = lax_check(MIXED, *triple, default_grid(MIXED, dims))
        assert report.diagram and report.left_leg and report.right_leg


def test_lax_check_three_colours():
    model = FinSetSplitModel(3, 2)
    rng = random.Random(23)
    for _ in range(3):
        dims = tuple(rng.randint(1, 2) for _ in range(3))
        triple = []
        cur = dims
        for _ in range(3):
            ma = MultiArrow(tuple(
                random_word(d, rng.randint(0, 1), rng.randrange(10 ** 6), max_dim=3)
                for d in cur
            ))
            triple.append(ma)
            cur = ma.tgt
        assert lax_check(model, *triple, default_grid(model, dims))


# --- hexagons and swap lemmas --------------------------------------------------------


def test_hexagon_trivial_when_outer_face():
    model = FinSetSplitModel(3, 1)
    assert hexagon_check(model, 1, 2, 3, face(2, 0), degeneracy(1, 0), face(2, 1))


def test_hexagon_specific_triple():
    model = FinSetSplitModel(3, 1)
    assert hexagon_check(model, 1, 2, 3, face(2, 1), degeneracy(1, 0), face(2, 1))


def test_hexagon_needs_increasing_colours():
    with pytest.raises(ColourOrder):
        hexagon_check(MIXED, 2, 1, 3, face(2, 1), face(2, 1), face(2, 1))


def test_hexagon_with_ambient_context():
    model = FinSetSplitModel(4, 2)
    assert hexagon_check(
        model, 1, 2, 4, face(2, 1), degeneracy(2, 1), degeneracy(1, 0),
        r=4, context_dims={3: 2},
    )


def test_lemma_swap_basic_equation_cases():
    # two faces rewritten by the face relation, passing a face
    w1 = parse_word("d2_1 . d3_2")
    w2 = parse_word("d2_1 . d3_1")
    assert lemma_swap_check(MIXED, 1, w1, w2, face(3, 1), 2)
    rep = equation_witness(1, w1, w2, face(3, 1), 2)
    assert [(c.index, c.equations) for c in rep.nontrivial()] == [(0, (1,))]

    # a cancelling pair against the identity word, passing a degeneracy
    w3 = parse_word("d3_1 . s3_1")
    w4 = identity_word(2)
    assert lemma_swap_check(MIXED, 1, w3, w4, degeneracy(3, 1), 2)
    rep = equation_witness(1, w3, w4, degeneracy(3, 1), 2)
    assert [(c.index, c.equations) for c in rep.nontrivial()] == [(1, (5,))]


def test_lemma_swap_equal_words_trivial():
    w1 = parse_word("d2_1 . d3_2")
    assert lemma_swap_check(MIXED, 1, w1, w1, face(3, 1), 2)
    rep = equation_witness(1, w1, w1, face(3, 1), 2)
    assert all(c.verdict == "syntactic" for c in rep.components)


def test_lemma_swap_dual_arrangement():
    # the passing generator sits left of a higher-coloured pair
    w1 = parse_word("d2_1 . d3_2")
    w2 = parse_word("d2_1 . d3_1")
    assert lemma_swap_check(MIXED, 2, w1, w2, degeneracy(2, 1), 1)


def test_lemma_swap_rejects_unequal_words():
    with pytest.raises(NotEqualArrows):
        lemma_swap_check(MIXED, 1, parse_word("d3_0 . s3_1"),
                         identity_word(2), face(3, 1), 2)
    with pytest.raises(ColourOrder):
        lemma_swap_check(MIXED, 1, parse_word("d2_1"), parse_word("d2_1"),
                         face(2, 1), 1)


def test_hexagon_witness_row_examples():
    rep = hexagon_witness(1, 2, 3, face(2, 1), degeneracy(2, 0), face(2, 1))
    assert [(c.index, c.equations) for c in rep.nontrivial()] == [(0, (18,))]
    rep = hexagon_witness(1, 2, 3, degeneracy(1, 0), degeneracy(1, 0), degeneracy(1, 0))
    assert [(c.index, c.equations) for c in rep.nontrivial()] == [(0, (13,))]
    assert rep.all_resolved()


# --- the Segal condition --------------------------------------------------------------


def test_segal_trivial_m1():
    assert segal_check(MIXED, 2, 1, 1, {2: 2})


def test_segal_two_by_two():
    assert segal_check(MIXED, 2, 1, 2, {2: 2})
    assert segal_check(MIXED, 2, 2, 2, {1: 3})


def test_segal_three_colours():
    model = FinSetSplitModel(3, 2)
    for coord in (1, 2, 3):
        for m in (2, 3, 4):
            fixed = {z: (1 if z < coord else 2) for z in (1, 2, 3) if z != coord}
            assert segal_check(model, 3, coord, m, fixed)


def test_segal_arrow_is_projection_on_labelled_tuples():
    from barlax import segal_arrow
    from barlax.shuffle import ColouredGenerator, shuffle

    for m in range(1, 6):
        grid = ObjectGrid((m,), tuple(ObjVar(f"A{t}") for t in range(1, m + 1)))
        for t in range(1, m + 1):
            theta = shuffle(
                [ColouredGenerator(a, 1) for a in segal_arrow(m, t).word],
                r=1, src_dims={1: m},
            )
            out = w_shuffle(FreeTermModel(1), theta, grid)
            assert out.cells == (ObjVar(f"A{t}"),)


def test_grid_shape_validation():
    with pytest.raises(ShapeMismatch):
        ObjectGrid((2, 2), (1, 1, 1))
    src = ObjectGrid((2,), (1, 1))
    with pytest.raises(ShapeMismatch):
        ArrowGrid((2,), (None, None), src, ObjectGrid((3,), (1, 1, 1)))
