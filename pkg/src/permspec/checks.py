"""Oracle cross-validation of built systems.

Every check here compares a system against direct, decomposition-based
membership of concrete permutations, so a passing report means the
equations describe exactly the sets they claim to.  Used by the command
line ``check`` subcommand and by the test suite.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from .perms import Perm, enumerate_avoiders
from .restrictions import (
    MODE_DISJOINT,
    System,
    in_restriction,
    rhs_multiplicity,
)
from .engine import count_coefficients


@lru_cache(maxsize=None)
def perms_of_size(n: int) -> tuple[Perm, ...]:
    return tuple(Perm(v) for v in itertools.permutations(range(1, n + 1)))


def equation_violations(system: System, max_size: int) -> list[str]:
    """Left side vs right side, per equation, on every permutation.

    In an ambiguous system a member must land in at least one summand; in
    a disjoint one, in exactly one.  Non-members must land in none.
    """
    simples = system.simples_set()
    exact = system.mode == MODE_DISJOINT
    out = []
    for n in range(1, max_size + 1):
        for p in perms_of_size(n):
            for lhs, eq in system.equations.items():
                member = in_restriction(p, lhs, simples)
                mult = rhs_multiplicity(p, eq, simples)
                ok = (mult == (1 if member else 0)) if exact else \
                    (member == (mult > 0))
                if not ok:
                    out.append(f"{lhs.name()} vs {p}: member={member}, "
                               f"summand multiplicity={mult}")
    return out


def conservation_violations(before: System, after: System,
                            max_size: int) -> list[str]:
    """Right-side membership unchanged for every equation both systems share."""
    simples_b = before.simples_set()
    simples_a = after.simples_set()
    shared = [r for r in before.equations if r in after.equations]
    out = []
    for n in range(1, max_size + 1):
        for p in perms_of_size(n):
            for lhs in shared:
                was = rhs_multiplicity(p, before.equations[lhs], simples_b) > 0
                now = rhs_multiplicity(p, after.equations[lhs], simples_a) > 0
                if was != now:
                    out.append(f"{lhs.name()} vs {p}: before={was}, after={now}")
    return out


def count_violations(system: System, basis: Sequence[Perm],
                     max_size: int) -> list[str]:
    """Root coefficients vs brute-force enumeration of the avoidance class."""
    table = count_coefficients(system, max_size)
    out = []
    for n in range(1, max_size + 1):
        want = len(enumerate_avoiders(basis, n, cap=max(10, max_size)))
        got = table.root_count(n)
        if got != want:
            out.append(f"size {n}: engine {got}, enumeration {want}")
    return out


def run_check(ambiguous: System, disjoint: System,
              max_size: int) -> list[tuple[str, bool, str]]:
    """The full cross-validation suite; one (name, passed, detail) per check."""
    results = []

    def record(name: str, violations: list[str]):
        detail = "" if not violations else \
            f"{len(violations)} violation(s); first: {violations[0]}"
        results.append((name, not violations, detail))

    record("ambiguous equation membership",
           equation_violations(ambiguous, max_size))
    record("specification partition",
           equation_violations(disjoint, max_size))
    record("conservation through disambiguation",
           conservation_violations(ambiguous, disjoint, max_size))
    record("counting equality",
           count_violations(disjoint, disjoint.basis, max_size))
    return results
