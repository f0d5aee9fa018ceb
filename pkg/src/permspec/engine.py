"""Counting back end: generating-function view and exact coefficients.

A disjoint system translates directly: the atom becomes z, disjoint union
becomes a sum, and inflating a root by components becomes a product of
their series.  Coefficients are computed by exact integer dynamic
programming over the size: every term has at least two components of size
at least one each, so a coefficient at size n only needs component
coefficients at sizes strictly below n and no fixpoint iteration is
needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .restrictions import (
    MODE_DISJOINT,
    Equation,
    Restriction,
    System,
    Term,
    restriction_key,
)

DEFAULT_COUNT_DEPTH = 40


@dataclass(frozen=True)
class GfEquation:
    name: str
    has_atom: bool
    products: tuple[tuple[str, ...], ...]

    def render(self) -> str:
        pieces = (["z"] if self.has_atom else []) + [
            "*".join(f"F{{{n}}}(z)" for n in prod) for prod in self.products]
        return f"F{{{self.name}}}(z) = " + (" + ".join(pieces) if pieces else "0")


@dataclass(frozen=True)
class GfSystem:
    root_name: str
    equations: tuple[GfEquation, ...]

    def render(self) -> str:
        return "\n".join(eq.render() for eq in self.equations)


def _ordered_lhs(system: System) -> list[Restriction]:
    rest = sorted((r for r in system.equations if r != system.root),
                  key=restriction_key)
    return ([system.root] if system.root in system.equations else []) + rest


def emit_gf_equations(system: System) -> GfSystem:
    """The generating-function equations of a combinatorial specification."""
    if system.mode != MODE_DISJOINT:
        raise ValueError("generating functions need a disjoint system")
    out = []
    for lhs in _ordered_lhs(system):
        eq = system.equations[lhs]
        products = tuple(tuple(a.name() for a in t.args) for t in eq.terms)
        out.append(GfEquation(lhs.name(), eq.has_atom, products))
    return GfSystem(system.root.name(), tuple(out))


class CountTable:
    """Exact coefficients per nonterminal up to a size bound.

    Also serves the sampler: for each term it can produce the table of
    suffix convolutions needed to draw component sizes one at a time.
    """

    def __init__(self, system: System, depth: int):
        if system.mode != MODE_DISJOINT:
            raise ValueError("counting needs a disjoint system")
        if not system.is_closed():
            raise ValueError("counting needs a closed system")
        if depth < 1:
            raise ValueError("depth must be >= 1")
        self.system = system
        self.depth = depth
        self.counts: dict[Restriction, list[int]] = {
            r: [0] * (depth + 1) for r in system.equations}
        self._suffixes: dict[Term, list[list[int]]] = {}
        for n in range(1, depth + 1):
            for r, eq in system.equations.items():
                total = 1 if (eq.has_atom and n == 1) else 0
                for t in eq.terms:
                    total += self._term_count_at(t, n)
                self.counts[r][n] = total

    def _term_count_at(self, term: Term, n: int) -> int:
        k = len(term.args)
        if n < k:
            return 0
        ways = [0] * (n + 1)
        ways[0] = 1
        for idx, comp in enumerate(term.args):
            remaining = k - idx - 1
            comp_counts = self.counts[comp]
            nxt = [0] * (n + 1)
            for s in range(idx, n - remaining):
                w = ways[s]
                if not w:
                    continue
                for m in range(1, n - remaining - s + 1):
                    c = comp_counts[m]
                    if c:
                        nxt[s + m] += w * c
            ways = nxt
        return ways[n]

    def count(self, r: Restriction, n: int) -> int:
        if n > self.depth:
            raise ValueError(f"size {n} exceeds table depth {self.depth}")
        return self.counts[r][n]

    def root_count(self, n: int) -> int:
        return self.count(self.system.root, n)

    def root_counts(self) -> list[tuple[int, int]]:
        return [(n, self.counts[self.system.root][n])
                for n in range(1, self.depth + 1)]

    def suffix_tables(self, term: Term) -> list[list[int]]:
        """``tables[i][r]``: ways components i.. sum to total size r."""
        cached = self._suffixes.get(term)
        if cached is not None:
            return cached
        k = len(term.args)
        tables = [[0] * (self.depth + 1) for _ in range(k + 1)]
        tables[k][0] = 1
        for i in reversed(range(k)):
            comp_counts = self.counts[term.args[i]]
            for r in range(1, self.depth + 1):
                total = 0
                for m in range(1, r + 1):
                    c = comp_counts[m]
                    nxt = tables[i + 1][r - m]
                    if c and nxt:
                        total += c * nxt
                tables[i][r] = total
        self._suffixes[term] = tables
        return tables

    def term_count(self, term: Term, n: int) -> int:
        return self.suffix_tables(term)[0][n]


def count_coefficients(system: System, depth: int = DEFAULT_COUNT_DEPTH) -> CountTable:
    """Exact membership counts per nonterminal for sizes 1..depth."""
    return CountTable(system, depth)


def unproductive_nonterminals(system: System) -> frozenset[Restriction]:
    """Nonterminals that generate no permutation at all.

    Least fixpoint: a nonterminal is productive when its equation has the
    atom or some term with every component productive.
    """
    productive: set[Restriction] = set()
    changed = True
    while changed:
        changed = False
        for r, eq in system.equations.items():
            if r in productive:
                continue
            if eq.has_atom or any(
                    all(a in productive for a in t.args) for t in eq.terms):
                productive.add(r)
                changed = True
    return frozenset(set(system.equations) - productive)


def prune_unproductive(system: System) -> System:
    """Drop unproductive nonterminals and the terms that mention them.

    The root equation is kept even when unproductive (it then generates
    nothing); root coefficients are unchanged by the pruning.
    """
    dead = unproductive_nonterminals(system)
    equations = {}
    for r, eq in system.equations.items():
        if r in dead and r != system.root:
            continue
        kept = tuple(t for t in eq.terms
                     if not any(a in dead for a in t.args))
        equations[r] = Equation(eq.lhs, eq.has_atom, kept, eq.mode)
    return System(root=system.root, equations=equations, basis=system.basis,
                  simples=system.simples, mode=system.mode)
