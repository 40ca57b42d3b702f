"""Computable models carrying several strict monoidal structures at once.

``FinSetSplitModel(r, s)`` is the category of finite ordinals and functions,
with tensors ``1..s`` given by disjoint union (unit 0) and tensors ``s+1..r``
by Cartesian product (unit 1); index arithmetic makes every structure strict
on the nose.  Its structural arrows are the canonical bicartesian ones.
``FreeTermModel(r)`` interprets the same interface symbolically, with object
words as objects and structural terms as arrows.

``check_equation`` evaluates any of the twenty defining equations in a
model; the suite in :mod:`barlax.suites` sweeps it exhaustively.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Protocol, runtime_checkable

from .equations import EQ_VARS, default_vars, equation_sides
from .errors import ArityMismatch, ColourOrder, EndpointMismatch, UnboundVariable
from .terms import (
    Obj,
    ObjTensor,
    ObjUnit,
    ObjVar,
    Term,
    TermBeta,
    TermComp,
    TermId,
    TermIota,
    TermKappa,
    TermTau,
    TermTen,
    beta as term_beta,
    compose_terms,
    iota as term_iota,
    kappa as term_kappa,
    obj_tensor,
    tau as term_tau,
    tensor_terms,
    term_id,
)


@runtime_checkable
class NFoldModel(Protocol):
    """What a model with ``arity`` interchanging strict tensors must provide.

    Each tensor must be strictly associative and unital on objects and
    arrows; the structural arrows for every ordered colour pair are not
    assumed coherent here, the verification suites check that.
    """

    arity: int

    def unit(self, k: int): ...

    def tensor_obj(self, k: int, a, b): ...

    def tensor_arr(self, k: int, f, g): ...

    def id(self, obj): ...

    def dom(self, arrow): ...

    def cod(self, arrow): ...

    def compose(self, f2, f1): ...

    def equal_arrows(self, a, b) -> bool: ...

    def kappa(self, k: int, l: int): ...

    def beta(self, k: int, l: int): ...

    def tau(self, k: int, l: int): ...

    def iota(self, k: int, l: int, a, b, c, d): ...


@dataclass(frozen=True, slots=True)
class FinArrow:
    """A function between finite ordinals, as a value table."""

    dom: int
    cod: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.dom:
            raise EndpointMismatch("table length must equal the domain size")
        if any(not 0 <= v < self.cod for v in self.table):
            raise EndpointMismatch("table value outside the codomain")

    def __call__(self, i: int) -> int:
        return self.table[i]

    def serialize(self) -> list[int]:
        """Wire format: an array of naturals, [dom, cod, values...]."""
        return [self.dom, self.cod, *self.table]

    @classmethod
    def deserialize(cls, data) -> "FinArrow":
        return cls(int(data[0]), int(data[1]), tuple(int(v) for v in data[2:]))


def id_fin(n: int) -> FinArrow:
    return FinArrow(n, n, tuple(range(n)))


def random_fin_arrow(rng: random.Random, dom: int, cod: int) -> FinArrow:
    if cod == 0 and dom > 0:
        raise EndpointMismatch("no arrows into the empty set from a nonempty one")
    return FinArrow(dom, cod, tuple(rng.randrange(cod) for _ in range(dom)))


@dataclass(frozen=True)
class FinSetSplitModel:
    """Finite ordinals with ``split`` coproduct tensors then product tensors."""

    arity: int
    split: int

    def __post_init__(self) -> None:
        if not 0 <= self.split <= self.arity or self.arity < 1:
            raise ArityMismatch(f"bad split {self.split} for arity {self.arity}")

    # colour k uses disjoint union iff k <= split
    def _is_sum(self, k: int) -> bool:
        self._check_colour(k)
        return k <= self.split

    def _check_colour(self, k: int) -> None:
        if not 1 <= k <= self.arity:
            raise ArityMismatch(f"colour {k} outside 1..{self.arity}")

    def unit(self, k: int) -> int:
        return 0 if self._is_sum(k) else 1

    def tensor_obj(self, k: int, a: int, b: int) -> int:
        return a + b if self._is_sum(k) else a * b

    def tensor_arr(self, k: int, f: FinArrow, g: FinArrow) -> FinArrow:
        if self._is_sum(k):
            table = tuple(f.table) + tuple(f.cod + v for v in g.table)
            return FinArrow(f.dom + g.dom, f.cod + g.cod, table)
        table = tuple(
            f.table[i] * g.cod + g.table[j]
            for i in range(f.dom)
            for j in range(g.dom)
        )
        return FinArrow(f.dom * g.dom, f.cod * g.cod, table)

    def id(self, obj: int) -> FinArrow:
        return id_fin(obj)

    def dom(self, arrow: FinArrow) -> int:
        return arrow.dom

    def cod(self, arrow: FinArrow) -> int:
        return arrow.cod

    def compose(self, f2: FinArrow, f1: FinArrow) -> FinArrow:
        """``f2 o f1``, with ``f1`` applied first."""
        if f2.dom != f1.cod:
            raise EndpointMismatch(f"compose: {f2.dom} != {f1.cod}")
        return FinArrow(f1.dom, f2.cod, tuple(f2.table[v] for v in f1.table))

    def equal_arrows(self, a: FinArrow, b: FinArrow) -> bool:
        return a == b

    # --- structural arrows ---------------------------------------------

    def _check_pair(self, k: int, l: int) -> None:
        self._check_colour(k)
        self._check_colour(l)
        if k >= l:
            raise ColourOrder(f"structural arrows need k < l, got ({k},{l})")

    def kappa(self, k: int, l: int) -> FinArrow:
        self._check_pair(k, l)
        if self._is_sum(l):
            return id_fin(0)
        if not self._is_sum(k):
            return id_fin(1)
        return FinArrow(0, 1, ())

    def beta(self, k: int, l: int) -> FinArrow:
        self._check_pair(k, l)
        # I_k -> I_k (x)_l I_k is the identity on 0 or 1 in every region
        return id_fin(self.unit(k) if self._is_sum(l) else self.unit(k) ** 2)

    def tau(self, k: int, l: int) -> FinArrow:
        self._check_pair(k, l)
        if self._is_sum(l):
            return id_fin(0)
        if not self._is_sum(k):
            return id_fin(1)
        return FinArrow(2, 1, (0, 0))

    def iota(self, k: int, l: int, a: int, b: int, c: int, d: int) -> FinArrow:
        """``(a (x)_l b) (x)_k (c (x)_l d)  ->  (a (x)_k c) (x)_l (b (x)_k d)``."""
        self._check_pair(k, l)
        if self._is_sum(l):
            # both coproducts: move the middle blocks past each other
            table = (
                list(range(a))
                + [a + c + x for x in range(b)]
                + [a + x for x in range(c)]
                + list(range(a + b + c, a + b + c + d))
            )
            return FinArrow(a + b + c + d, a + c + b + d, tuple(table))
        if not self._is_sum(k):
            # both products: permute the two middle index positions
            table = []
            for x in range(a):
                for y in range(b):
                    for z in range(c):
                        for t in range(d):
                            table.append(((x * c + z) * b + y) * d + t)
            return FinArrow(a * b * c * d, a * b * c * d, tuple(table))
        # mixed: the canonical injection of a sum of products into a
        # product of sums
        table = []
        for x in range(a):
            for y in range(b):
                table.append(x * (b + d) + y)
        for z in range(c):
            for t in range(d):
                table.append((a + z) * (b + d) + (b + t))
        return FinArrow(a * b + c * d, (a + c) * (b + d), tuple(table))


@dataclass(frozen=True)
class CorruptedIotaModel(FinSetSplitModel):
    """Negative control: every iota is post-composed with a transposition.

    Whenever the codomain has at least two points, the first two are
    swapped, so the interchange is deliberately wrong while all endpoints
    still line up.  Equation (2) must catch it.
    """

    def iota(self, k: int, l: int, a: int, b: int, c: int, d: int) -> FinArrow:
        base = super().iota(k, l, a, b, c, d)
        if base.cod < 2:
            return base
        flip = {0: 1, 1: 0}
        return FinArrow(base.dom, base.cod, tuple(flip.get(v, v) for v in base.table))


@dataclass(frozen=True)
class FreeTermModel:
    """The symbolic model: object words and structural terms."""

    arity: int

    def _check_colour(self, k: int) -> None:
        if not 1 <= k <= self.arity:
            raise ArityMismatch(f"colour {k} outside 1..{self.arity}")

    def unit(self, k: int) -> Obj:
        self._check_colour(k)
        return ObjUnit(k)

    def tensor_obj(self, k: int, a: Obj, b: Obj) -> Obj:
        self._check_colour(k)
        return obj_tensor(k, a, b)

    def tensor_arr(self, k: int, f: Term, g: Term) -> Term:
        self._check_colour(k)
        return tensor_terms(k, f, g)

    def id(self, obj: Obj) -> Term:
        return term_id(obj)

    def dom(self, arrow: Term) -> Obj:
        return arrow.dom

    def cod(self, arrow: Term) -> Obj:
        return arrow.cod

    def compose(self, f2: Term, f1: Term) -> Term:
        return compose_terms(f2, f1)

    def equal_arrows(self, a: Term, b: Term) -> bool:
        return a == b

    def kappa(self, k: int, l: int) -> Term:
        self._check_colour(l)
        return term_kappa(k, l)

    def beta(self, k: int, l: int) -> Term:
        self._check_colour(l)
        return term_beta(k, l)

    def tau(self, k: int, l: int) -> Term:
        self._check_colour(l)
        return term_tau(k, l)

    def iota(self, k: int, l: int, a: Obj, b: Obj, c: Obj, d: Obj) -> Term:
        self._check_colour(l)
        return term_iota(k, l, a, b, c, d)


def structural(model, name: str, k: int, l: int, *objects):
    """The model's structural arrow by name: kappa, beta, tau or iota."""
    if name == "iota":
        if len(objects) != 4:
            raise ArityMismatch("iota takes four objects")
        return model.iota(k, l, *objects)
    if objects:
        raise ArityMismatch(f"{name} takes no objects")
    if name == "kappa":
        return model.kappa(k, l)
    if name == "beta":
        return model.beta(k, l)
    if name == "tau":
        return model.tau(k, l)
    raise ArityMismatch(f"unknown structural arrow {name!r}")


# --- evaluation --------------------------------------------------------------


def eval_obj(model, obj: Obj, assignment: dict[str, object]):
    if isinstance(obj, ObjVar):
        try:
            return assignment[obj.name]
        except KeyError:
            raise UnboundVariable(f"no object assigned to {obj.name}") from None
    if isinstance(obj, ObjUnit):
        return model.unit(obj.colour)
    if isinstance(obj, ObjTensor):
        value = eval_obj(model, obj.factors[0], assignment)
        for f in obj.factors[1:]:
            value = model.tensor_obj(obj.colour, value, eval_obj(model, f, assignment))
        return value
    raise UnboundVariable(f"not an object word: {obj!r}")


def eval_term(model, term: Term, assignment: dict[str, object] | None = None):
    """Interpret a structural term in a model, homomorphically."""
    assignment = assignment or {}
    if isinstance(term, TermId):
        return model.id(eval_obj(model, term.obj, assignment))
    if isinstance(term, TermKappa):
        return model.kappa(term.k, term.l)
    if isinstance(term, TermBeta):
        return model.beta(term.k, term.l)
    if isinstance(term, TermTau):
        return model.tau(term.k, term.l)
    if isinstance(term, TermIota):
        return model.iota(
            term.k, term.l,
            eval_obj(model, term.a, assignment),
            eval_obj(model, term.b, assignment),
            eval_obj(model, term.c, assignment),
            eval_obj(model, term.d, assignment),
        )
    if isinstance(term, TermTen):
        value = eval_term(model, term.factors[0], assignment)
        for f in term.factors[1:]:
            value = model.tensor_arr(term.colour, value, eval_term(model, f, assignment))
        return value
    if isinstance(term, TermComp):
        value = eval_term(model, term.parts[-1], assignment)
        for p in reversed(term.parts[:-1]):
            value = model.compose(eval_term(model, p, assignment), value)
        return value
    raise UnboundVariable(f"not a term: {term!r}")


def check_equation(model, eq_id: int, colours: tuple[int, ...],
                   objects: tuple[object, ...] = ()) -> bool:
    """Evaluate both sides of an equation in a model and compare extensionally.

    ``objects`` supplies the model objects for the equation's parameters
    (six for (1) and (7), two for (2),(3),(8),(9), eight for (20), none
    otherwise).
    """
    need = EQ_VARS.get(eq_id, 0)
    if len(objects) != need:
        raise ArityMismatch(f"equation {eq_id} needs {need} objects, got {len(objects)}")
    params = default_vars(eq_id)
    lhs, rhs = equation_sides(eq_id, colours, params)
    assignment = {p.name: o for p, o in zip(params, objects)}
    return model.equal_arrows(
        eval_term(model, lhs, assignment), eval_term(model, rhs, assignment)
    )
