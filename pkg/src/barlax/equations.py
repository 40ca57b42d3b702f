"""The twenty defining equations of iterated monoidal structure, as terms.

Equations 1-12 constrain one ordered colour pair (k, l); equations 13-20
constrain one ordered triple (k, l, m).  Each is stored as a builder that
produces the two sides as structural terms over supplied object words, so
the same templates drive concrete evaluation, rewriting and witness
reporting.
"""

from __future__ import annotations

from .errors import ArityMismatch, ColourOrder
from .terms import (
    Obj,
    ObjUnit,
    ObjVar,
    Term,
    beta,
    compose_terms,
    iota,
    kappa,
    obj_tensor,
    tau,
    tensor_terms,
    term_id,
)

PAIR_IDS = tuple(range(1, 13))
TRIPLE_IDS = tuple(range(13, 21))
ALL_IDS = PAIR_IDS + TRIPLE_IDS

# number of object parameters each equation takes
EQ_VARS = {1: 6, 2: 2, 3: 2, 7: 6, 8: 2, 9: 2, 20: 8}


def colour_arity(eq_id: int) -> int:
    if eq_id in PAIR_IDS:
        return 2
    if eq_id in TRIPLE_IDS:
        return 3
    raise ArityMismatch(f"no equation {eq_id}")


def default_vars(eq_id: int) -> tuple[ObjVar, ...]:
    return tuple(ObjVar(f"V{i}") for i in range(EQ_VARS.get(eq_id, 0)))


def equation_sides(eq_id: int, colours: tuple[int, ...],
                   objs: tuple[Obj, ...] = ()) -> tuple[Term, Term]:
    """Both sides of the equation at the given colours and object parameters."""
    if len(colours) != colour_arity(eq_id):
        raise ArityMismatch(
            f"equation {eq_id} needs {colour_arity(eq_id)} colours, got {len(colours)}"
        )
    if any(a >= b for a, b in zip(colours, colours[1:])):
        raise ColourOrder(f"colours must be strictly increasing, got {colours}")
    need = EQ_VARS.get(eq_id, 0)
    if len(objs) != need:
        raise ArityMismatch(f"equation {eq_id} needs {need} objects, got {len(objs)}")

    if eq_id in PAIR_IDS:
        k, l = colours
        uk, ul = ObjUnit(k), ObjUnit(l)
        if eq_id == 1:
            a, b, c, d, e, f = objs
            lhs = compose_terms(
                iota(k, l, a, d, obj_tensor(k, b, c), obj_tensor(k, e, f)),
                tensor_terms(k, term_id(obj_tensor(l, a, d)), iota(k, l, b, e, c, f)),
            )
            rhs = compose_terms(
                iota(k, l, obj_tensor(k, a, b), obj_tensor(k, d, e), c, f),
                tensor_terms(k, iota(k, l, a, d, b, e), term_id(obj_tensor(l, c, f))),
            )
        elif eq_id == 2:
            a, b = objs
            lhs = compose_terms(
                iota(k, l, a, b, uk, uk),
                tensor_terms(k, term_id(obj_tensor(l, a, b)), beta(k, l)),
            )
            rhs = term_id(obj_tensor(l, a, b))
        elif eq_id == 3:
            a, b = objs
            lhs = compose_terms(
                iota(k, l, uk, uk, a, b),
                tensor_terms(k, beta(k, l), term_id(obj_tensor(l, a, b))),
            )
            rhs = term_id(obj_tensor(l, a, b))
        elif eq_id == 4:
            lhs = compose_terms(tau(k, l), tensor_terms(k, term_id(ul), tau(k, l)))
            rhs = compose_terms(tau(k, l), tensor_terms(k, tau(k, l), term_id(ul)))
        elif eq_id == 5:
            lhs = compose_terms(tau(k, l), tensor_terms(k, term_id(ul), kappa(k, l)))
            rhs = term_id(ul)
        elif eq_id == 6:
            lhs = compose_terms(tau(k, l), tensor_terms(k, kappa(k, l), term_id(ul)))
            rhs = term_id(ul)
        elif eq_id == 7:
            a, b, c, d, e, f = objs
            lhs = compose_terms(
                tensor_terms(l, term_id(obj_tensor(k, a, d)), iota(k, l, b, c, e, f)),
                iota(k, l, a, obj_tensor(l, b, c), d, obj_tensor(l, e, f)),
            )
            rhs = compose_terms(
                tensor_terms(l, iota(k, l, a, b, d, e), term_id(obj_tensor(k, c, f))),
                iota(k, l, obj_tensor(l, a, b), c, obj_tensor(l, d, e), f),
            )
        elif eq_id == 8:
            a, b = objs
            lhs = compose_terms(
                tensor_terms(l, term_id(obj_tensor(k, a, b)), tau(k, l)),
                iota(k, l, a, ul, b, ul),
            )
            rhs = term_id(obj_tensor(k, a, b))
        elif eq_id == 9:
            a, b = objs
            lhs = compose_terms(
                tensor_terms(l, tau(k, l), term_id(obj_tensor(k, a, b))),
                iota(k, l, ul, a, ul, b),
            )
            rhs = term_id(obj_tensor(k, a, b))
        elif eq_id == 10:
            lhs = compose_terms(tensor_terms(l, term_id(uk), beta(k, l)), beta(k, l))
            rhs = compose_terms(tensor_terms(l, beta(k, l), term_id(uk)), beta(k, l))
        elif eq_id == 11:
            lhs = compose_terms(tensor_terms(l, term_id(uk), kappa(k, l)), beta(k, l))
            rhs = term_id(uk)
        elif eq_id == 12:
            lhs = compose_terms(tensor_terms(l, kappa(k, l), term_id(uk)), beta(k, l))
            rhs = term_id(uk)
        else:  # pragma: no cover
            raise ArityMismatch(f"no equation {eq_id}")
        return lhs, rhs

    k, l, m = colours
    uk, ul, um = ObjUnit(k), ObjUnit(l), ObjUnit(m)
    if eq_id == 13:
        lhs = compose_terms(kappa(l, m), kappa(k, l))
        rhs = kappa(k, m)
    elif eq_id == 14:
        lhs = compose_terms(beta(l, m), kappa(k, l))
        rhs = compose_terms(tensor_terms(m, kappa(k, l), kappa(k, l)), beta(k, m))
    elif eq_id == 15:
        lhs = compose_terms(
            tau(l, m), tensor_terms(l, kappa(k, m), kappa(k, m)), beta(k, l)
        )
        rhs = kappa(k, m)
    elif eq_id == 16:
        lhs = compose_terms(
            iota(l, m, uk, uk, uk, uk),
            tensor_terms(l, beta(k, m), beta(k, m)),
            beta(k, l),
        )
        rhs = compose_terms(tensor_terms(m, beta(k, l), beta(k, l)), beta(k, m))
    elif eq_id == 17:
        lhs = compose_terms(kappa(l, m), tau(k, l))
        rhs = compose_terms(tau(k, m), tensor_terms(k, kappa(l, m), kappa(l, m)))
    elif eq_id == 18:
        lhs = compose_terms(beta(l, m), tau(k, l))
        rhs = compose_terms(
            tensor_terms(m, tau(k, l), tau(k, l)),
            iota(k, m, ul, ul, ul, ul),
            tensor_terms(k, beta(l, m), beta(l, m)),
        )
    elif eq_id == 19:
        lhs = compose_terms(
            tau(l, m),
            tensor_terms(l, tau(k, m), tau(k, m)),
            iota(k, l, um, um, um, um),
        )
        rhs = compose_terms(tau(k, m), tensor_terms(k, tau(l, m), tau(l, m)))
    elif eq_id == 20:
        a, b, c, d, e, f, g, h = objs
        lhs = compose_terms(
            iota(l, m, obj_tensor(k, a, e), obj_tensor(k, b, f),
                 obj_tensor(k, c, g), obj_tensor(k, d, h)),
            tensor_terms(l, iota(k, m, a, b, e, f), iota(k, m, c, d, g, h)),
            iota(k, l, obj_tensor(m, a, b), obj_tensor(m, c, d),
                 obj_tensor(m, e, f), obj_tensor(m, g, h)),
        )
        rhs = compose_terms(
            tensor_terms(m, iota(k, l, a, c, e, g), iota(k, l, b, d, f, h)),
            iota(k, m, obj_tensor(l, a, c), obj_tensor(l, b, d),
                 obj_tensor(l, e, g), obj_tensor(l, f, h)),
            tensor_terms(k, iota(l, m, a, b, c, d), iota(l, m, e, f, g, h)),
        )
    else:  # pragma: no cover
        raise ArityMismatch(f"no equation {eq_id}")
    return lhs, rhs
