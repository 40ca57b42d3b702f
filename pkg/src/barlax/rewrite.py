"""Bounded equational reasoning between structural terms.

``term_equal`` runs a bidirectional breadth-first search between two terms
modulo the twenty defining equations (instantiated at every colour pair and
triple of the ambient arity, whiskered freely through tensor and
composition contexts) plus the functoriality of each tensor.  The strict
identity laws are handled by the canonical form from :mod:`barlax.terms`
and cost no search steps.

The search is a semi-decision: it answers ``proven`` with the list of
equations used, ``refuted`` when evaluation in a registered finite-set
model separates the two terms, and ``unknown`` otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .equations import ALL_IDS, colour_arity, default_vars, equation_sides
from .errors import EndpointMismatch
from .model import FinSetSplitModel, eval_term
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
    compose_terms,
    subst_term,
    tensor_terms,
    term_id,
    term_vars,
)

Binding = dict[str, Obj]


def _obj_factors(obj: Obj, colour: int) -> tuple[Obj, ...]:
    if isinstance(obj, ObjTensor) and obj.colour == colour:
        return obj.factors
    if isinstance(obj, ObjUnit) and obj.colour == colour:
        return ()
    return (obj,)


def _fold(colour: int, factors: tuple[Obj, ...]) -> Obj:
    from .terms import obj_tensor

    return obj_tensor(colour, *factors)


def match_obj(pattern: Obj, obj: Obj, binding: Binding) -> list[Binding]:
    """All extensions of ``binding`` making ``pattern`` equal to ``obj``."""
    if isinstance(pattern, ObjVar):
        bound = binding.get(pattern.name)
        if bound is None:
            new = dict(binding)
            new[pattern.name] = obj
            return [new]
        return [binding] if bound == obj else []
    if isinstance(pattern, ObjUnit):
        return [binding] if pattern == obj else []
    if isinstance(pattern, ObjTensor):
        parts = _obj_factors(obj, pattern.colour)
        out: list[Binding] = []
        for cut in _splits(len(parts), len(pattern.factors)):
            candidates = [binding]
            for pf, (lo, hi) in zip(pattern.factors, cut):
                piece = _fold(pattern.colour, parts[lo:hi])
                candidates = [
                    b2 for b in candidates for b2 in match_obj(pf, piece, b)
                ]
                if not candidates:
                    break
            out.extend(candidates)
        return out
    return []


def _splits(n: int, groups: int) -> list[tuple[tuple[int, int], ...]]:
    """All ways to cut ``range(n)`` into ``groups`` consecutive (maybe empty) runs."""
    out = []
    for cuts in itertools.combinations_with_replacement(range(n + 1), groups - 1):
        bounds = (0,) + cuts + (n,)
        if all(a <= b for a, b in zip(bounds, bounds[1:])):
            out.append(tuple(zip(bounds, bounds[1:])))
    return out


def match_term(pattern: Term, term: Term, binding: Binding) -> list[Binding]:
    if isinstance(pattern, TermId):
        if not isinstance(term, TermId):
            return []
        return match_obj(pattern.obj, term.obj, binding)
    if isinstance(pattern, (TermKappa, TermBeta, TermTau)):
        return [binding] if pattern == term else []
    if isinstance(pattern, TermIota):
        if not isinstance(term, TermIota) or (pattern.k, pattern.l) != (term.k, term.l):
            return []
        candidates = [binding]
        for p, o in ((pattern.a, term.a), (pattern.b, term.b),
                     (pattern.c, term.c), (pattern.d, term.d)):
            candidates = [b2 for b in candidates for b2 in match_obj(p, o, b)]
            if not candidates:
                return []
        return candidates
    if isinstance(pattern, TermTen):
        if (
            not isinstance(term, TermTen)
            or term.colour != pattern.colour
            or len(term.factors) != len(pattern.factors)
        ):
            return []
        candidates = [binding]
        for p, o in zip(pattern.factors, term.factors):
            candidates = [b2 for b in candidates for b2 in match_term(p, o, b)]
            if not candidates:
                return []
        return candidates
    if isinstance(pattern, TermComp):
        if not isinstance(term, TermComp) or len(term.parts) != len(pattern.parts):
            return []
        candidates = [binding]
        for p, o in zip(pattern.parts, term.parts):
            candidates = [b2 for b in candidates for b2 in match_term(p, o, b)]
            if not candidates:
                return []
        return candidates
    return []


# --- rule instantiation -------------------------------------------------------


@dataclass(frozen=True)
class Rule:
    lhs: Term
    rhs: Term
    label: str


def rules_for_arity(r: int) -> tuple[Rule, ...]:
    """Both orientations of every equation at every colour tuple within ``r``."""
    rules: list[Rule] = []
    for eq_id in ALL_IDS:
        width = colour_arity(eq_id)
        for colours in itertools.combinations(range(1, r + 1), width):
            objs = default_vars(eq_id)
            lhs, rhs = equation_sides(eq_id, colours, objs)
            label = f"eq{eq_id}"
            rules.append(Rule(lhs, rhs, label))
            rules.append(Rule(rhs, lhs, label))
    return tuple(rules)


def _rule_hits(term: Term, rules: tuple[Rule, ...]):
    for rule in rules:
        for binding in match_term(rule.lhs, term, {}):
            candidate = subst_term(rule.rhs, binding)
            if candidate.dom == term.dom and candidate.cod == term.cod:
                yield candidate, rule.label


def _functoriality_moves(term: Term):
    """Slide composition through a tensor, one layer at a time."""
    if isinstance(term, TermTen) and any(isinstance(f, TermComp) for f in term.factors):
        heads, tails = [], []
        for f in term.factors:
            if isinstance(f, TermComp):
                heads.append(f.parts[0])
                tails.append(compose_terms(*f.parts[1:]))
            else:
                heads.append(term_id(f.cod))
                tails.append(f)
        yield (
            compose_terms(tensor_terms(term.colour, *heads),
                          tensor_terms(term.colour, *tails)),
            "funct",
        )
        heads, tails = [], []
        for f in term.factors:
            if isinstance(f, TermComp):
                heads.append(compose_terms(*f.parts[:-1]))
                tails.append(f.parts[-1])
            else:
                heads.append(f)
                tails.append(term_id(f.dom))
        yield (
            compose_terms(tensor_terms(term.colour, *heads),
                          tensor_terms(term.colour, *tails)),
            "funct",
        )
    if isinstance(term, TermComp):
        for i in range(len(term.parts) - 1):
            a, b = term.parts[i], term.parts[i + 1]
            if (
                isinstance(a, TermTen)
                and isinstance(b, TermTen)
                and a.colour == b.colour
                and len(a.factors) == len(b.factors)
            ):
                try:
                    merged = tensor_terms(
                        a.colour,
                        *(compose_terms(x, y) for x, y in zip(a.factors, b.factors)),
                    )
                except EndpointMismatch:
                    continue
                yield (
                    compose_terms(*term.parts[:i], merged, *term.parts[i + 2 :]),
                    "funct",
                )


def _local_rewrites(term: Term, rules: tuple[Rule, ...]):
    yield from _rule_hits(term, rules)
    yield from _functoriality_moves(term)


def all_rewrites(term: Term, rules: tuple[Rule, ...]):
    """One-step rewrites of ``term`` at any contiguous slice of any subterm."""
    yield from _local_rewrites(term, rules)
    if isinstance(term, TermComp):
        n = len(term.parts)
        for i in range(n):
            for new, label in all_rewrites(term.parts[i], rules):
                yield compose_terms(*term.parts[:i], new, *term.parts[i + 1 :]), label
        for i in range(n):
            for j in range(i + 2, n + 1):
                if i == 0 and j == n:
                    continue
                piece = TermComp(term.parts[i:j])
                for new, label in _local_rewrites(piece, rules):
                    yield (
                        compose_terms(*term.parts[:i], new, *term.parts[j:]),
                        label,
                    )
    elif isinstance(term, TermTen):
        n = len(term.factors)
        for i in range(n):
            for new, label in all_rewrites(term.factors[i], rules):
                yield (
                    tensor_terms(term.colour, *term.factors[:i], new,
                                 *term.factors[i + 1 :]),
                    label,
                )
        for i in range(n):
            for j in range(i + 2, n + 1):
                if i == 0 and j == n:
                    continue
                piece = TermTen(term.colour, term.factors[i:j])
                for new, label in _local_rewrites(piece, rules):
                    yield (
                        tensor_terms(term.colour, *term.factors[:i], new,
                                     *term.factors[j:]),
                        label,
                    )


# --- the semi-decision ---------------------------------------------------------


@dataclass(frozen=True)
class TermEqualResult:
    verdict: str  # proven | refuted | unknown
    chain: tuple[str, ...] | None = None
    probe: str | None = None

    def __bool__(self) -> bool:
        return self.verdict == "proven"

    @property
    def equations_used(self) -> tuple[int, ...]:
        if self.chain is None:
            return ()
        seen = []
        for label in self.chain:
            if label.startswith("eq"):
                n = int(label[2:])
                if n not in seen:
                    seen.append(n)
        return tuple(seen)


def _probe_assignments(names: list[str]) -> list[dict[str, int]]:
    out = [{n: 2 for n in names}]
    out.append({n: 1 + (i % 3) for i, n in enumerate(names)})
    return out


def refute_by_evaluation(a: Term, b: Term, arity: int) -> str | None:
    """Name of a finite-set probe separating the terms, or ``None``."""
    names = sorted(term_vars(a) | term_vars(b))
    for split in range(arity + 1):
        model = FinSetSplitModel(arity, split)
        for assignment in _probe_assignments(names):
            if eval_term(model, a, assignment) != eval_term(model, b, assignment):
                return f"finset:r={arity},split={split} sizes={assignment}"
    return None


def term_equal(a: Term, b: Term, arity: int, depth: int = 6,
               max_states: int = 20000) -> TermEqualResult:
    """Decide ``a = b`` modulo the defining equations, within a depth budget."""
    if a.dom != b.dom or a.cod != b.cod:
        raise EndpointMismatch(
            f"terms have different endpoints: {a.dom}->{a.cod} vs {b.dom}->{b.cod}"
        )
    if a == b:
        return TermEqualResult("proven", ())
    rules = rules_for_arity(arity)
    # chains[side][term] = labels from the corresponding root
    seen_a: dict[Term, tuple[str, ...]] = {a: ()}
    seen_b: dict[Term, tuple[str, ...]] = {b: ()}
    frontier_a, frontier_b = [a], [b]
    for _ in range(depth):
        if not frontier_a and not frontier_b:
            break
        grow_a = bool(frontier_a) and (
            not frontier_b or len(seen_a) <= len(seen_b)
        )
        frontier, seen, other = (
            (frontier_a, seen_a, seen_b) if grow_a else (frontier_b, seen_b, seen_a)
        )
        new_frontier = []
        for t in frontier:
            for candidate, label in all_rewrites(t, rules):
                if candidate in seen:
                    continue
                seen[candidate] = seen[t] + (label,)
                if candidate in other:
                    chain = (
                        seen_a[candidate] + tuple(reversed(seen_b[candidate]))
                        if candidate in seen_a and candidate in seen_b
                        else seen[candidate]
                    )
                    return TermEqualResult("proven", chain)
                new_frontier.append(candidate)
                if len(seen_a) + len(seen_b) > max_states:
                    break
            else:
                continue
            break
        if grow_a:
            frontier_a = new_frontier
        else:
            frontier_b = new_frontier
        if len(seen_a) + len(seen_b) > max_states:
            break
    probe = refute_by_evaluation(a, b, arity)
    if probe is not None:
        return TermEqualResult("refuted", None, probe)
    return TermEqualResult("unknown")
