"""Formal objects and structural arrow terms over the interchange signature.

Objects are words built from named variables, per-colour units ``I_k`` and
per-colour tensors, kept in strict normal form: nested tensors of the same
colour are flattened and unit factors of that colour are deleted.  Arrow
terms are generated by identities, the constants ``kappa/beta/tau/iota`` for
each ordered colour pair, binary tensors and composition, and are kept in a
mild canonical form (flattened composition without identities, flattened
tensors with adjacent identity factors merged).  Canonical equality is
exactly equality modulo the strict-monoidal identity laws.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ArityMismatch, ColourOrder, EndpointMismatch

# --- object words ------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ObjVar:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class ObjUnit:
    colour: int

    def __str__(self) -> str:
        return f"I{self.colour}"


@dataclass(frozen=True, slots=True)
class ObjTensor:
    colour: int
    factors: tuple["Obj", ...]

    def __str__(self) -> str:
        inner = f" x{self.colour} ".join(str(f) for f in self.factors)
        return f"({inner})"


Obj = ObjVar | ObjUnit | ObjTensor


def obj_tensor(colour: int, *factors: Obj) -> Obj:
    """Strict tensor on object words: flatten, drop same-colour units."""
    flat: list[Obj] = []
    for f in factors:
        if isinstance(f, ObjTensor) and f.colour == colour:
            flat.extend(f.factors)
        elif isinstance(f, ObjUnit) and f.colour == colour:
            continue
        else:
            flat.append(f)
    if not flat:
        return ObjUnit(colour)
    if len(flat) == 1:
        return flat[0]
    return ObjTensor(colour, tuple(flat))


def obj_vars(o: Obj) -> set[str]:
    if isinstance(o, ObjVar):
        return {o.name}
    if isinstance(o, ObjTensor):
        out: set[str] = set()
        for f in o.factors:
            out |= obj_vars(f)
        return out
    return set()


# --- arrow terms -------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    dom: Obj = field(init=False)
    cod: Obj = field(init=False)


def _set(obj: Term, **kw) -> None:
    for k, v in kw.items():
        object.__setattr__(obj, k, v)


@dataclass(frozen=True)
class TermId(Term):
    obj: Obj

    def __post_init__(self) -> None:
        _set(self, dom=self.obj, cod=self.obj)

    def __str__(self) -> str:
        return "1"


@dataclass(frozen=True)
class TermKappa(Term):
    k: int
    l: int

    def __post_init__(self) -> None:
        _check_pair(self.k, self.l)
        _set(self, dom=ObjUnit(self.k), cod=ObjUnit(self.l))

    def __str__(self) -> str:
        return f"kappa[{self.k},{self.l}]"


@dataclass(frozen=True)
class TermBeta(Term):
    k: int
    l: int

    def __post_init__(self) -> None:
        _check_pair(self.k, self.l)
        unit = ObjUnit(self.k)
        _set(self, dom=unit, cod=obj_tensor(self.l, unit, unit))

    def __str__(self) -> str:
        return f"beta[{self.k},{self.l}]"


@dataclass(frozen=True)
class TermTau(Term):
    k: int
    l: int

    def __post_init__(self) -> None:
        _check_pair(self.k, self.l)
        unit = ObjUnit(self.l)
        _set(self, dom=obj_tensor(self.k, unit, unit), cod=unit)

    def __str__(self) -> str:
        return f"tau[{self.k},{self.l}]"


@dataclass(frozen=True)
class TermIota(Term):
    k: int
    l: int
    a: Obj
    b: Obj
    c: Obj
    d: Obj

    def __post_init__(self) -> None:
        _check_pair(self.k, self.l)
        _set(
            self,
            dom=obj_tensor(self.k, obj_tensor(self.l, self.a, self.b),
                           obj_tensor(self.l, self.c, self.d)),
            cod=obj_tensor(self.l, obj_tensor(self.k, self.a, self.c),
                           obj_tensor(self.k, self.b, self.d)),
        )

    def __str__(self) -> str:
        return f"iota[{self.k},{self.l}]({self.a},{self.b},{self.c},{self.d})"


@dataclass(frozen=True)
class TermTen(Term):
    colour: int
    factors: tuple[Term, ...]

    def __post_init__(self) -> None:
        _set(
            self,
            dom=obj_tensor(self.colour, *(f.dom for f in self.factors)),
            cod=obj_tensor(self.colour, *(f.cod for f in self.factors)),
        )

    def __str__(self) -> str:
        inner = f" *{self.colour} ".join(str(f) for f in self.factors)
        return f"({inner})"


@dataclass(frozen=True)
class TermComp(Term):
    parts: tuple[Term, ...]  # parts[0] applied last

    def __post_init__(self) -> None:
        _set(self, dom=self.parts[-1].dom, cod=self.parts[0].cod)

    def __str__(self) -> str:
        return "(" + " . ".join(str(p) for p in self.parts) + ")"


def _check_pair(k: int, l: int) -> None:
    if not 1 <= k < l:
        raise ColourOrder(f"structural constants need colours k < l, got ({k},{l})")


def term_id(obj: Obj) -> Term:
    return TermId(obj)


def kappa(k: int, l: int) -> Term:
    return TermKappa(k, l)


def beta(k: int, l: int) -> Term:
    return TermBeta(k, l)


def tau(k: int, l: int) -> Term:
    return TermTau(k, l)


def iota(k: int, l: int, a: Obj, b: Obj, c: Obj, d: Obj) -> Term:
    return TermIota(k, l, a, b, c, d)


def tensor_terms(colour: int, *factors: Term) -> Term:
    """Strict n-ary tensor of terms with identity bookkeeping.

    Nested same-colour tensors are flattened, identity factors on the colour
    unit are deleted, and adjacent identity factors merge into one identity.
    """
    flat: list[Term] = []
    for f in factors:
        if isinstance(f, TermTen) and f.colour == colour:
            flat.extend(f.factors)
        else:
            flat.append(f)
    merged: list[Term] = []
    for f in flat:
        if isinstance(f, TermId):
            if isinstance(f.obj, ObjUnit) and f.obj.colour == colour:
                continue
            if merged and isinstance(merged[-1], TermId):
                merged[-1] = TermId(obj_tensor(colour, merged[-1].obj, f.obj))
                continue
        merged.append(f)
    if not merged:
        return TermId(ObjUnit(colour))
    if len(merged) == 1:
        return merged[0]
    return TermTen(colour, tuple(merged))


def compose_terms(*parts: Term) -> Term:
    """Composition ``parts[0] o parts[1] o ...`` with flattening and id removal."""
    flat: list[Term] = []
    for p in parts:
        if isinstance(p, TermComp):
            flat.extend(p.parts)
        else:
            flat.append(p)
    for f, g in zip(flat, flat[1:]):
        if f.dom != g.cod:
            raise EndpointMismatch(f"cannot compose {f} after {g}: {f.dom} != {g.cod}")
    kept = [p for p in flat if not isinstance(p, TermId)]
    if not kept:
        if not flat:
            raise ArityMismatch("composition of nothing")
        return flat[0]
    if len(kept) == 1:
        return kept[0]
    return TermComp(tuple(kept))


def term_vars(t: Term) -> set[str]:
    if isinstance(t, TermId):
        return obj_vars(t.obj)
    if isinstance(t, TermIota):
        return obj_vars(t.a) | obj_vars(t.b) | obj_vars(t.c) | obj_vars(t.d)
    if isinstance(t, TermTen):
        out: set[str] = set()
        for f in t.factors:
            out |= term_vars(f)
        return out
    if isinstance(t, TermComp):
        out = set()
        for p in t.parts:
            out |= term_vars(p)
        return out
    return set()


def subst_obj(o: Obj, binding: dict[str, Obj]) -> Obj:
    if isinstance(o, ObjVar):
        return binding.get(o.name, o)
    if isinstance(o, ObjTensor):
        return obj_tensor(o.colour, *(subst_obj(f, binding) for f in o.factors))
    return o


def subst_term(t: Term, binding: dict[str, Obj]) -> Term:
    if isinstance(t, TermId):
        return TermId(subst_obj(t.obj, binding))
    if isinstance(t, TermIota):
        return TermIota(
            t.k, t.l,
            subst_obj(t.a, binding), subst_obj(t.b, binding),
            subst_obj(t.c, binding), subst_obj(t.d, binding),
        )
    if isinstance(t, TermTen):
        return tensor_terms(t.colour, *(subst_term(f, binding) for f in t.factors))
    if isinstance(t, TermComp):
        return compose_terms(*(subst_term(p, binding) for p in t.parts))
    return t
