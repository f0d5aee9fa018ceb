"""Turn an ambiguous system into a combinatorial specification.

Summands with distinct roots are already disjoint, so only same-root
groups need work.  An ambiguous group of terms is replaced by one cell per
nonempty subset of the group: the members of that subset intersected with
the complements of the rest.  Complementing flips avoidance constraints
into containment constraints, which is what restrictions with mandatory
patterns are for.  Restrictions appearing on right sides only then receive
equations of their own: the closure shape with avoidance pushed down as in
the builder, followed by containment pushed down through the embeddings of
each mandatory pattern in the root (one summand per embedding).  The new
equations may again be ambiguous; the loop continues until the system is
closed and every equation is disjoint, which happens after finitely many
rounds because every constraint pattern lives in the pattern closure of
the basis.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .perms import Perm, embeddings, root_perm
from .restrictions import (
    MODE_AMBIGUOUS,
    MODE_DISJOINT,
    Equation,
    Restriction,
    System,
    Term,
    intersect_terms,
    complement_term,
    make_equation,
    restriction_key,
    term_key,
)
from .builder import add_constraints, closure_terms

# Hard ceiling on system growth; hitting it signals a bug, not a big input.
MAX_EQUATIONS = 50_000


class IterationLimitError(RuntimeError):
    """Safety valve for runaway disambiguation."""


def _with_contain(r: Restriction, pattern: Perm) -> Restriction:
    return Restriction(r.flavor, r.avoid, r.contain + (pattern,))


def add_mandatory(term: Term, pattern: Perm) -> list[Term]:
    """Rewrite a term restricted to permutations containing a pattern.

    One summand per embedding of the pattern in the root: the components
    hosting a nonempty block must contain the pattern induced on them.  The union
    is exact but possibly ambiguous (an occurrence may realize several
    embeddings); duplicates are merged and statically empty summands
    dropped.
    """
    out = set()
    for emb in embeddings(pattern, root_perm(term.root)):
        args = list(term.args)
        dead = False
        for slot in emb.nonempty_slots():
            forced = _with_contain(args[slot], emb.induced(pattern, slot))
            if forced.empty:
                dead = True
                break
            args[slot] = forced
        if not dead:
            out.add(Term(term.root, tuple(args)))
    return sorted(out, key=term_key)


def restriction_equation(r: Restriction, simples: Iterable[Perm]) -> Equation:
    """An equation describing one restriction, in possibly ambiguous form.

    Starts from the closure shape of the restriction's flavor, pushes every
    avoided pattern down, then every mandatory pattern.  The atom survives
    only when the size-1 permutation itself satisfies the restriction,
    i.e. when no pattern is mandatory.
    """
    if r.empty:
        raise ValueError(f"no equation for statically empty {r.name()}")
    terms: list[Term] = []
    for base in closure_terms(r.flavor, tuple(simples)):
        terms.extend(add_constraints(base, r.avoid))
    for mandatory in r.contain:
        terms = [t2 for t in terms for t2 in add_mandatory(t, mandatory)]
    return make_equation(r, not r.contain, terms, MODE_AMBIGUOUS)


def _expand_group(terms: list[Term]) -> list[Term]:
    """Replace an ambiguous same-root group by an equivalent disjoint one.

    One cell per nonempty subset of the group: intersect the subset's
    terms, then intersect with each complement cell of every term outside
    the subset, distributing intersection over the complements' disjoint
    unions.
    """
    k = len(terms)
    complements = [complement_term(t) for t in terms]
    out: set[Term] = set()
    for mask in range(1, 1 << k):
        inside = [terms[i] for i in range(k) if mask >> i & 1]
        cell = inside[0]
        for t in inside[1:]:
            cell = intersect_terms(cell, t)
            if cell is None:
                break
        if cell is None:
            continue
        partial = [cell]
        for i in range(k):
            if mask >> i & 1:
                continue
            nxt = []
            for p in partial:
                for c in complements[i]:
                    q = intersect_terms(p, c)
                    if q is not None:
                        nxt.append(q)
            partial = sorted(set(nxt), key=term_key)
            if not partial:
                break
        out.update(partial)
    return sorted(out, key=term_key)


def _group_ambiguous(terms: list[Term]) -> bool:
    """A same-root group needs expansion when some pair may intersect."""
    return any(intersect_terms(a, b) is not None
               for a, b in itertools.combinations(terms, 2))


def disambiguate_equation(eq: Equation) -> Equation:
    """Make one equation's union disjoint, preserving its members.

    The atom never meets a term (terms produce size >= 2 only), so only
    same-root term groups with a possibly nonempty pairwise intersection
    are expanded.
    """
    groups: dict = {}
    for t in eq.terms:
        groups.setdefault(t.root, []).append(t)
    new_terms: list[Term] = []
    for root in groups:
        ts = groups[root]
        if len(ts) > 1 and _group_ambiguous(ts):
            new_terms.extend(_expand_group(ts))
        else:
            new_terms.extend(ts)
    return make_equation(eq.lhs, eq.has_atom, new_terms, MODE_DISJOINT)


def disambiguate_system(system: System) -> System:
    """The combinatorial specification equivalent to the given system.

    Alternates two moves until a fixed point: make every equation disjoint,
    and add equations for restrictions that occur on a right side only.
    The root and its members are unchanged.
    """
    equations = dict(system.equations)
    while True:
        pending = sorted((lhs for lhs, eq in equations.items()
                          if eq.mode == MODE_AMBIGUOUS), key=restriction_key)
        for lhs in pending:
            equations[lhs] = disambiguate_equation(equations[lhs])
        missing = sorted({a for eq in equations.values()
                          for t in eq.terms for a in t.args
                          if a not in equations}, key=restriction_key)
        if not pending and not missing:
            break
        for lhs in missing:
            equations[lhs] = restriction_equation(lhs, system.simples)
        if len(equations) > MAX_EQUATIONS:
            raise IterationLimitError(
                f"system grew past {MAX_EQUATIONS} equations")
    return System(root=system.root, equations=equations, basis=system.basis,
                  simples=system.simples, mode=MODE_DISJOINT)
