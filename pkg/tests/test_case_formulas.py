"""The published per-component formulas for one generator passing a pair.

For a two-entry colour-k word rewritten by a basic equation, the swap
transformation past one colour-l generator is a tuple that is identity
everywhere except at one or two positions carrying explicit constants or
two-step composites.  These shapes are written out here verbatim, per case
family, and compared against the symbolic ``phi``; the same shapes masked
by an inert third colour are spot-checked as well.
"""

import pytest

from barlax import FreeTermModel, phi, shuffle, symbolic_grid
from barlax.shuffle import ColouredGenerator
from barlax.simplicial import degeneracy, face, word
from barlax.terms import (
    ObjUnit,
    TermId,
    beta,
    compose_terms,
    iota,
    kappa,
    tau,
    tensor_terms,
    term_id,
)


def sym_phi(entries, r=2, context=None):
    theta = shuffle(entries, r=r, src_dims=context)
    model = FreeTermModel(r)
    return phi(model, theta, symbolic_grid(theta.src_dims))


def coloured(wrd, colour):
    return [ColouredGenerator(a, colour) for a in wrd.word]


def shape_of(grid):
    """(length, {position: cell}) for the non-identity cells."""
    special = {
        i: cell for i, cell in enumerate(grid.cells) if not isinstance(cell, TermId)
    }
    return len(grid.cells), special


I1, I2 = ObjUnit(1), ObjUnit(2)


def two_faces(n, j, l):
    return word((face(n - 1, j), face(n, l)))


def two_degeneracies(n, j, l):
    return word((degeneracy(n + 1, j), degeneracy(n, l)))


def face_then_degeneracy(n, j, l):
    return word((face(n, j), degeneracy(n, l)))


# --- family 1.1: two faces, far apart (j <= l-2), both sides two constants ---


@pytest.mark.parametrize("n,j,l", [(4, 1, 3), (5, 1, 3), (5, 2, 4)])
@pytest.mark.parametrize("passing", ["s", "d"])
def test_far_faces_give_two_constants(n, j, l, passing):
    # both faces must be inner for the two-constant shape
    if passing == "s":
        g = degeneracy(3, 1)  # m' = 3, inner index i = 1
        m2, i_off, const = 3, 1, tau(1, 2)
        first = (j - 1) * m2 + i_off
        second = (l - 2) * m2 + i_off
    else:
        g = face(3, 1)  # m' = 2, i - 1 = 0
        m2, i_off = 2, 0
        first = (j - 1) * m2 + i_off
        second = (l - 2) * m2 + i_off
    for phi_word in (two_faces(n, j, l),):
        grid = sym_phi(coloured(phi_word, 1) + [ColouredGenerator(g, 2)])
        length, special = shape_of(grid)
        assert length == (n - 2) * m2
        assert sorted(special) == sorted({first, second})
        if passing == "s":
            assert all(cell == tau(1, 2) for cell in special.values())
        else:
            assert all(type(cell).__name__ == "TermIota" for cell in special.values())


# --- family 1.2: adjacent faces, one composite component -----------------------


def test_near_faces_give_one_composite():
    n, j = 3, 1  # d_j o d_{j+1} against d_j o d_j
    g = degeneracy(3, 1)
    grid = sym_phi(coloured(two_faces(n, j, j + 1), 1) + [ColouredGenerator(g, 2)])
    length, special = shape_of(grid)
    pos = (j - 1) * 3 + 1
    assert length == (n - 2) * 3 and sorted(special) == [pos]
    assert special[pos] == compose_terms(
        tau(1, 2), tensor_terms(1, term_id(I2), tau(1, 2))
    )
    other = sym_phi(coloured(two_faces(n, j, j), 1) + [ColouredGenerator(g, 2)])
    _, special2 = shape_of(other)
    assert special2[pos] == compose_terms(
        tau(1, 2), tensor_terms(1, tau(1, 2), term_id(I2))
    )


def test_near_faces_with_inner_face_give_interchange_composite():
    n, j = 3, 1
    g = face(3, 1)  # m = 3, i = 1
    grid = sym_phi(coloured(two_faces(n, j, j + 1), 1) + [ColouredGenerator(g, 2)])
    length, special = shape_of(grid)
    pos = (j - 1) * 2 + 0
    assert sorted(special) == [pos]
    cell = special[pos]
    # iota o (1 (x)_1 iota), with the inner instance on the right factors
    assert type(cell).__name__ == "TermComp"
    outer, inner = cell.parts
    assert type(outer).__name__ == "TermIota"
    assert type(inner).__name__ == "TermTen" and inner.colour == 1


# --- family 2: two degeneracies, two kappas -------------------------------------


@pytest.mark.parametrize("n,j,l", [(2, 0, 0), (2, 1, 1), (3, 0, 2)])
def test_degeneracy_pair_gives_two_kappas(n, j, l):
    if not l + 1 > j:
        pytest.skip("not a redex instance")
    g = degeneracy(2, 0)  # m' = 2, i = 0
    m2, i_off = 2, 0
    grid = sym_phi(
        coloured(two_degeneracies(n, j, l), 1) + [ColouredGenerator(g, 2)]
    )
    length, special = shape_of(grid)
    assert length == (n + 1) * m2  # the pair runs n-1 -> n+1
    first = j * m2 + i_off
    second = (l + 1) * m2 + i_off
    assert sorted(special) == sorted({first, second})
    assert all(cell == kappa(1, 2) for cell in special.values())


# --- families 3.1 / 3.4: face past degeneracy, mixed constants ------------------


def test_face_left_of_degeneracy_gives_tau_then_kappa():
    n, j, l = 3, 1, 2  # j <= l-1, face inner
    g = degeneracy(3, 1)
    grid = sym_phi(
        coloured(face_then_degeneracy(n, j, l), 1) + [ColouredGenerator(g, 2)]
    )
    length, special = shape_of(grid)
    m2 = 3
    tau_pos = (j - 1) * m2 + 1
    kappa_pos = (l - 1) * m2 + 1
    assert length == (n - 1) * m2  # the pair is an endo of n-1
    assert special == {tau_pos: tau(1, 2), kappa_pos: kappa(1, 2)}


def test_face_right_of_degeneracy_gives_kappa_then_tau():
    n, j, l = 4, 3, 1  # j >= l+2 with the face still inner
    g = degeneracy(3, 1)
    grid = sym_phi(
        coloured(face_then_degeneracy(n, j, l), 1) + [ColouredGenerator(g, 2)]
    )
    length, special = shape_of(grid)
    m2 = 3
    kappa_pos = l * m2 + 1
    tau_pos = (j - 1) * m2 + 1
    assert length == (n - 1) * m2
    assert special == {kappa_pos: kappa(1, 2), tau_pos: tau(1, 2)}


def test_face_right_of_degeneracy_with_inner_face():
    n, j, l = 4, 3, 1
    g = face(3, 2)  # m' = 2, i - 1 = 1
    grid = sym_phi(
        coloured(face_then_degeneracy(n, j, l), 1) + [ColouredGenerator(g, 2)]
    )
    _, special = shape_of(grid)
    beta_pos = l * 2 + 1
    iota_pos = (j - 1) * 2 + 1
    assert sorted(special) == sorted({beta_pos, iota_pos})
    assert special[beta_pos] == beta(1, 2)
    assert type(special[iota_pos]).__name__ == "TermIota"


# --- families 3.2 / 3.3: cancelling pairs give unit-law composites ---------------


@pytest.mark.parametrize("l_offset,expected_factors", [(0, "right"), (-1, "left")])
def test_cancelling_pair_composites(l_offset, expected_factors):
    n, j = 3, 1
    l = j + l_offset
    g = degeneracy(3, 1)
    grid = sym_phi(
        coloured(face_then_degeneracy(n, j, l), 1) + [ColouredGenerator(g, 2)]
    )
    _, special = shape_of(grid)
    pos = (j - 1) * 3 + 1
    assert sorted(special) == [pos]
    if expected_factors == "right":
        wanted = compose_terms(tau(1, 2), tensor_terms(1, term_id(I2), kappa(1, 2)))
    else:
        wanted = compose_terms(tau(1, 2), tensor_terms(1, kappa(1, 2), term_id(I2)))
    assert special[pos] == wanted


# --- the same shapes under an inert third colour ----------------------------------


def test_masked_variant_low_pair_replicates_constants():
    # an inert colour-3 dimension q replicates each constant q times in place
    n, j, l, q = 4, 1, 3, 2
    g = degeneracy(3, 1)
    grid = sym_phi(
        coloured(two_faces(n, j, l), 1) + [ColouredGenerator(g, 2)],
        r=3, context={3: q},
    )
    length, special = shape_of(grid)
    m2 = 3
    assert length == (n - 2) * m2 * q
    base = {(j - 1) * m2 + 1, (l - 2) * m2 + 1}
    wanted = {p * q + e for p in base for e in range(q)}
    assert set(special) == wanted
    assert all(cell == tau(1, 2) for cell in special.values())


def test_masked_variant_high_pair_repeats_blocks():
    # passing a colour-3 generator with an inert colour-1 dimension u
    # repeats the whole block u times
    u, n = 2, 2
    g = degeneracy(3, 1)  # m' = 3, inner index 1
    grid = sym_phi(
        coloured(two_degeneracies(n, 0, 0), 2) + [ColouredGenerator(g, 3)],
        r=3, context={1: u},
    )
    length, special = shape_of(grid)
    block = (n + 1) * 3  # n' * m' for the pair
    assert length == u * block
    base = {0 * 3 + 1, 1 * 3 + 1}
    wanted = {a * block + p for a in range(u) for p in base}
    assert set(special) == wanted
    assert all(cell == kappa(2, 3) for cell in special.values())


def test_masked_variant_outer_pair_interleaves():
    # skipping the middle colour: each constant spreads with stride m'
    v, n = 2, 2
    g = degeneracy(3, 1)
    grid = sym_phi(
        coloured(two_degeneracies(n, 0, 0), 1) + [ColouredGenerator(g, 3)],
        r=3, context={2: v},
    )
    length, special = shape_of(grid)
    m2 = 3
    assert length == (n + 1) * v * m2
    rows = {0, 1}  # the two kappa rows of the unmasked tuple sit at b*m'+1
    wanted = {(b * v + c) * m2 + 1 for b in rows for c in range(v)}
    assert set(special) == wanted
    assert all(cell == kappa(1, 3) for cell in special.values())
