"""The lcm lattice of a monomial ideal.

Elements are the unit (bottom) together with the lcms of all nonempty sets
of minimal generators, ordered by divisibility.  Covers are computed from
atom joins: the elements covering m are the divisibility-minimal members of
{lcm(m, a) : a an atom, lcm(m, a) != m}.

Rankedness: with equigenerated atoms the check is the degree criterion,
every cover above the bottom raises degree by exactly one (sufficient for
rankedness since degree then grades every interval).  With mixed-degree
atoms the general definition is checked instead: all maximal chains of
every interval have equal length, decided by memoized chain-length sets
over the cover relation, guarded by a budget.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .monomials import Monomial, canonical_key, lcm, unit

__all__ = [
    "LcmLattice",
    "build_lattice",
    "RankedReport",
    "is_ranked",
    "maximal_chains",
    "LabelChainReport",
    "natural_label_check",
    "ChainBudgetExceeded",
]


class ChainBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class LcmLattice:
    n: int
    atoms: tuple[Monomial, ...]
    elements: frozenset[Monomial]

    @property
    def bottom(self) -> Monomial:
        return unit(self.n)

    @cached_property
    def top(self) -> Monomial:
        out = self.atoms[0]
        for a in self.atoms[1:]:
            out = lcm(out, a)
        return out

    def __contains__(self, m: Monomial) -> bool:
        return m in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def sorted_elements(self) -> tuple[Monomial, ...]:
        return tuple(sorted(self.elements, key=canonical_key))

    @cached_property
    def covers(self):
        """Map m -> tuple of elements covering m, canonically ordered."""
        out = {}
        for m in self.sorted_elements:
            joins = {lcm(m, a) for a in self.atoms}
            joins.discard(m)
            covs = [
                j
                for j in joins
                if not any(k != j and k.divides(j) for k in joins)
            ]
            out[m] = tuple(sorted(covs, key=canonical_key))
        return out

    def interval(self, lo: Monomial, hi: Monomial) -> tuple[Monomial, ...]:
        if lo not in self.elements or hi not in self.elements:
            raise ValueError("interval endpoints must be lattice elements")
        if not lo.divides(hi):
            raise ValueError(f"{lo} does not divide {hi}")
        return tuple(
            e
            for e in self.sorted_elements
            if lo.divides(e) and e.divides(hi)
        )


def build_lattice(gens) -> LcmLattice:
    """Lattice of an ideal given by generators (a BorelIdeal is accepted)."""
    from .borel import BorelIdeal
    from .monomials import minimal_under_divisibility

    if isinstance(gens, BorelIdeal):
        n = gens.n
        atoms = tuple(sorted(gens.expanded, key=canonical_key))
    else:
        gens = list(gens)
        if not gens:
            raise ValueError("need at least one generator")
        n = gens[0].n
        if any(g.n != n for g in gens):
            raise ValueError("ambient mismatch")
        if any(g.is_unit for g in gens):
            raise ValueError("unit generator makes the whole ring")
        atoms = minimal_under_divisibility(gens)
    elements = set(atoms)
    frontier = set(atoms)
    while frontier:
        fresh = set()
        for m in frontier:
            for a in atoms:
                j = lcm(m, a)
                if j not in elements:
                    fresh.add(j)
        elements |= fresh
        frontier = fresh
    elements.add(unit(n))
    return LcmLattice(n=n, atoms=atoms, elements=frozenset(elements))


@dataclass(frozen=True)
class RankedReport:
    ranked: bool
    criterion: str  # "degree" (equigenerated atoms) or "chains" (general)
    witness_cover: tuple[Monomial, Monomial] | None = None
    witness_interval: tuple[Monomial, Monomial, tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.ranked


def _chain_length_sets(L: LcmLattice, budget: int):
    """For every comparable pair (m, n): the set of maximal chain lengths.

    Maximal chains of an interval of a lattice are exactly the cover paths,
    so the sets satisfy len(m, n) = union over covers c of m inside [m, n]
    of 1 + len(c, n).
    """
    memo: dict[tuple[Monomial, Monomial], frozenset[int]] = {}
    order = sorted(L.sorted_elements, key=lambda m: -m.degree)
    for m in order:
        for n in L.sorted_elements:
            if not m.divides(n):
                continue
            if m == n:
                memo[(m, n)] = frozenset([0])
                continue
            acc = set()
            for c in L.covers[m]:
                if c.divides(n):
                    acc.update(l + 1 for l in memo[(c, n)])
            memo[(m, n)] = frozenset(acc)
            if len(memo) > budget:
                raise ChainBudgetExceeded(
                    f"chain-length table exceeded budget {budget}"
                )
    return memo


def is_ranked(L: LcmLattice, chain_budget: int = 500_000) -> RankedReport:
    """Decide rankedness; see the module docstring for the two criteria."""
    atom_degrees = {a.degree for a in L.atoms}
    if len(atom_degrees) == 1:
        for m in L.sorted_elements:
            if m == L.bottom:
                continue
            for c in L.covers[m]:
                if c.degree != m.degree + 1:
                    return RankedReport(False, "degree", witness_cover=(m, c))
        return RankedReport(True, "degree")

    memo = _chain_length_sets(L, chain_budget)
    bad = [(m, n) for (m, n), ls in memo.items() if len(ls) > 1]
    if not bad:
        return RankedReport(True, "chains")
    bad.sort(key=lambda p: (canonical_key(p[0]), canonical_key(p[1])))
    m0, n0 = bad[0]
    lengths = tuple(sorted(memo[(m0, n0)]))
    # prefer a jump cover away from the bottom; one with jump >= 2 always
    # exists on any shorter-than-degree chain of an unranked interval
    jumps = [
        (m, c)
        for m in L.sorted_elements
        for c in L.covers[m]
        if c.degree >= m.degree + 2
    ]
    jumps.sort(
        key=lambda p: (p[0] == L.bottom, canonical_key(p[0]), canonical_key(p[1]))
    )
    witness = jumps[0] if jumps else None
    return RankedReport(
        False,
        "chains",
        witness_cover=witness,
        witness_interval=(m0, n0, lengths),
    )


def maximal_chains(
    L: LcmLattice, lo: Monomial, hi: Monomial, budget: int = 100_000
) -> list[tuple[Monomial, ...]]:
    """All maximal chains of [lo, hi], each listed bottom-up."""
    L.interval(lo, hi)  # validates endpoints
    out: list[tuple[Monomial, ...]] = []
    stack: list[Monomial] = [lo]

    def walk(cur: Monomial) -> None:
        if cur == hi:
            out.append(tuple(stack))
            if len(out) > budget:
                raise ChainBudgetExceeded(f"more than {budget} maximal chains")
            return
        for c in L.covers[cur]:
            if c.divides(hi):
                stack.append(c)
                walk(c)
                stack.pop()

    walk(lo)
    return out


@dataclass(frozen=True)
class LabelChainReport:
    """Maximal chains of an interval with their edge labels, bottom-up.

    Each cover step m -> c is labeled by max_index(c / m).  A chain whose
    labels strictly increase bottom-up is the same walk as one whose labels
    strictly decrease read from the top downward.
    """

    lo: Monomial
    hi: Monomial
    chains: tuple[tuple[Monomial, ...], ...]
    labels: tuple[tuple[int, ...], ...]
    increasing: tuple[int, ...] = field(default=())  # indices into chains
    decreasing: tuple[int, ...] = field(default=())

    @property
    def decreasing_from_top(self) -> tuple[int, ...]:
        """Chains whose labels strictly decrease walking from hi down to lo.

        Identical to the bottom-up increasing ones: reversing a walk
        reverses its label sequence.
        """
        return self.increasing


def natural_label_check(
    L: LcmLattice, lo: Monomial, hi: Monomial, budget: int = 100_000
) -> LabelChainReport:
    """Label every cover by the largest variable entering, list the chains."""
    chains = maximal_chains(L, lo, hi, budget)
    labels = tuple(
        tuple(
            b.quotient(a).max_index() for a, b in zip(chain, chain[1:])
        )
        for chain in chains
    )
    increasing = tuple(
        i
        for i, ls in enumerate(labels)
        if all(a < b for a, b in zip(ls, ls[1:]))
    )
    decreasing = tuple(
        i
        for i, ls in enumerate(labels)
        if all(a > b for a, b in zip(ls, ls[1:]))
    )
    return LabelChainReport(
        lo=lo,
        hi=hi,
        chains=tuple(chains),
        labels=labels,
        increasing=increasing,
        decreasing=decreasing,
    )
