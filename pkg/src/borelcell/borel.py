"""Borel fixed ideals generated in one degree.

A Borel fixed (strongly stable) monomial ideal is closed under the exchange
moves x_t -> x_s with s < t.  For a single generator m the degree-d piece of
the smallest such ideal containing m has an exact description by suffix
sums: c belongs to it iff sum_{j>=i} c_j <= sum_{j>=i} m_j for every i.
That description drives expansion, minimalization, and the closed-form
intersection of principal pieces via the componentwise suffix minimum.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from .monomials import (
    Monomial,
    VarRange,
    canonical_key,
    minimal_under_divisibility,
    monomials_of_degree,
    parse_monomial,
    rlex_key,
    suffix_sums,
)

__all__ = [
    "BorelIdeal",
    "PrincipalForm",
    "in_principal",
    "expand_principal",
    "is_borel_fixed",
    "borel_minimalize",
    "min_monomial",
    "intersect_borel",
    "principal_decomposition",
    "eliahou_kervaire_betti",
    "random_borel_minimal",
    "borel_generators",
    "multiply_sets",
    "parse_ideal_spec",
]


def in_principal(c: Monomial, m: Monomial) -> bool:
    """True iff c lies in the Borel ideal generated by m (equal degrees only)."""
    if c.n != m.n:
        raise ValueError("ambient mismatch")
    if c.degree != m.degree:
        raise ValueError("membership test needs equal degrees")
    return all(x <= y for x, y in zip(suffix_sums(c), suffix_sums(m)))


def _expand_principal_set(m: Monomial) -> frozenset[Monomial]:
    return frozenset(
        c for c in monomials_of_degree(m.n, m.degree) if in_principal(c, m)
    )


@dataclass(frozen=True)
class BorelIdeal:
    """A Borel fixed ideal generated in one degree d.

    borel_gens lists the Borel-minimal generators, strictly rlex-descending;
    expanded is the full minimal monomial generating set G(I).
    """

    n: int
    d: int
    borel_gens: tuple[Monomial, ...]
    expanded: frozenset[Monomial]

    @classmethod
    def from_borel_gens(cls, n: int, gens) -> "BorelIdeal":
        gens = list(gens)
        if not gens:
            raise ValueError("need at least one generator")
        if any(g.n != n for g in gens):
            raise ValueError("ambient mismatch")
        d = gens[0].degree
        if d < 1:
            raise ValueError("generators must have degree at least 1")
        if any(g.degree != d for g in gens):
            raise ValueError("generators must all have the same degree")
        mins = borel_minimalize(gens)
        expanded = frozenset().union(*(_expand_principal_set(g) for g in mins))
        return cls(n=n, d=d, borel_gens=tuple(mins), expanded=expanded)

    @classmethod
    def from_expanded(cls, n: int, gens) -> "BorelIdeal":
        """Build from an explicit generating set, which must be exchange-closed."""
        gens = frozenset(gens)
        if not is_borel_fixed(gens):
            raise ValueError("generating set is not closed under exchange moves")
        ideal = cls.from_borel_gens(n, gens)
        assert ideal.expanded == gens
        return ideal

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.expanded)

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.borel_gens) + ">"


def expand_principal(m: Monomial) -> BorelIdeal:
    """The smallest Borel fixed ideal containing m."""
    if m.is_unit:
        raise ValueError("expansion of the unit monomial is undefined")
    return BorelIdeal.from_borel_gens(m.n, [m])


def is_borel_fixed(gens) -> bool:
    """True iff the equal-degree monomial set is closed under exchange moves."""
    pool = frozenset(gens)
    if not pool:
        raise ValueError("need at least one generator")
    degs = {g.degree for g in pool}
    if len(degs) > 1:
        raise ValueError("closure test needs equal degrees")
    for m in pool:
        for t in range(2, m.n + 1):
            if m.exps[t - 1] == 0:
                continue
            for s in range(1, t):
                if m.borel_move(t, s) not in pool:
                    return False
    return True


def borel_minimalize(ms) -> list[Monomial]:
    """Drop generators lying in another generator's Borel expansion.

    Input monomials must share one degree; the result is strictly
    rlex-descending.
    """
    uniq = set(ms)
    if not uniq:
        raise ValueError("need at least one generator")
    if len({m.degree for m in uniq}) > 1:
        raise ValueError("minimalization needs equal degrees")
    keep = [
        m for m in uniq if not any(g != m and in_principal(m, g) for g in uniq)
    ]
    return sorted(keep, key=rlex_key)


def min_monomial(m1: Monomial, m2: Monomial) -> Monomial:
    """Componentwise suffix minimum MIN(m1, m2).

    Built right to left: each exponent takes as much of
    min(suffix(m1), suffix(m2)) as the exponents to its right left over.
    The Borel expansion of the result is exactly the intersection of the
    two principal expansions.
    """
    if m1.n != m2.n:
        raise ValueError("ambient mismatch")
    if m1.degree != m2.degree:
        raise ValueError("suffix minimum needs equal degrees")
    s1, s2 = suffix_sums(m1), suffix_sums(m2)
    n = m1.n
    mu = [0] * n
    tail = 0
    for i in range(n - 1, -1, -1):
        mu[i] = min(s1[i], s2[i]) - tail
        tail += mu[i]
    assert all(e >= 0 for e in mu) and sum(mu) == m1.degree
    return Monomial(tuple(mu))


def intersect_borel(m: Monomial, J: BorelIdeal) -> BorelIdeal:
    """The intersection of the principal Borel ideal of m with J.

    Equals the Borel ideal generated by the suffix minima of m against
    each Borel generator of J, so it has at most as many Borel generators
    as J.
    """
    if m.n != J.n or m.degree != J.d:
        raise ValueError("ambient or degree mismatch")
    return BorelIdeal.from_borel_gens(J.n, [min_monomial(m, g) for g in J.borel_gens])


@dataclass(frozen=True)
class PrincipalForm:
    """A non-unit monomial written as x_{l1}^{d1} * ... * x_{ls}^{ds}.

    The support indices l1 < ... < ls are 1-based; every di is positive.
    """

    lambdas: tuple[int, ...]
    ds: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.lambdas) != len(self.ds) or not self.lambdas:
            raise ValueError("support and exponent lists must match and be nonempty")
        if any(d < 1 for d in self.ds):
            raise ValueError("exponents must be positive")
        if any(a >= b for a, b in zip(self.lambdas, self.lambdas[1:])):
            raise ValueError("support indices must strictly increase")
        if self.lambdas[0] < 1:
            raise ValueError("variable indices are 1-based")

    @property
    def s(self) -> int:
        return len(self.lambdas)

    @property
    def degree(self) -> int:
        return sum(self.ds)

    @classmethod
    def from_monomial(cls, m: Monomial) -> "PrincipalForm":
        if m.is_unit:
            raise ValueError("the unit monomial has no principal form")
        lambdas = tuple(i + 1 for i, e in enumerate(m.exps) if e > 0)
        ds = tuple(e for e in m.exps if e > 0)
        return cls(lambdas=lambdas, ds=ds)

    def monomial(self, n: int) -> Monomial:
        if self.lambdas[-1] > n:
            raise ValueError(f"support index {self.lambdas[-1]} exceeds ambient {n}")
        exps = [0] * n
        for l, d in zip(self.lambdas, self.ds):
            exps[l - 1] = d
        return Monomial(tuple(exps))


def principal_decomposition(pf: PrincipalForm) -> list[tuple[PrincipalForm, VarRange]]:
    """Split a principal Borel ideal into monomial-times-power summands.

    For m = x_{l1}^{d1} ... x_{ls}^{ds} with s > 1 and l_{s-1} > 1, the
    ideal decomposes as the sum over k = 1 .. l_{s-1} of
    N_k * (x_k, ..., x_{ls})^{ds}, where N_k is principal Borel on
    x_{l1}^{d1} ... x_{lj}^{dj} * x_k^{d_{j+1}+...+d_{s-1}} for the j with
    l_j < k <= l_{j+1}.  Degenerate shapes (s = 1, or l_{s-1} = 1) are
    rejected; builders handle those directly.
    """
    s = pf.s
    if s < 2 or pf.lambdas[s - 2] < 2:
        raise ValueError("decomposition needs s > 1 and second-largest support > 1")
    out: list[tuple[PrincipalForm, VarRange]] = []
    for k in range(1, pf.lambdas[s - 2] + 1):
        j = 0
        while j < s - 1 and pf.lambdas[j] < k:
            j += 1
        # now j is minimal with k <= lambdas[j]; the prefix kept is lambdas[:j]
        head_l = pf.lambdas[:j]
        head_d = pf.ds[:j]
        tail_exp = sum(pf.ds[j : s - 1])
        assert tail_exp > 0 and (not head_l or head_l[-1] < k)
        nk = PrincipalForm(lambdas=head_l + (k,), ds=head_d + (tail_exp,))
        out.append((nk, VarRange(k, pf.lambdas[-1])))
    return out


def eliahou_kervaire_betti(I: BorelIdeal) -> tuple[int, ...]:
    """Total Betti numbers of the classical stable-ideal resolution.

    beta_i = sum over generators m of C(max_index(m) - 1, i); used as an
    independent cross-check against cellular and Koszul counts.
    """
    top = max(g.max_index() for g in I.expanded)
    betti = [0] * top
    for g in I.expanded:
        mi = g.max_index()
        for i in range(mi):
            betti[i] += comb(mi - 1, i)
    return tuple(betti)


def random_borel_minimal(n: int, d: int, s: int, seed: int) -> BorelIdeal:
    """Seeded random Borel ideal: s uniform degree-d draws, minimalized."""
    if s < 1:
        raise ValueError("need at least one draw")
    rng = random.Random(seed)
    pool = list(monomials_of_degree(n, d))
    picks = [pool[rng.randrange(len(pool))] for _ in range(s)]
    return BorelIdeal.from_borel_gens(n, picks)


def borel_generators(n: int, ms) -> tuple[Monomial, ...]:
    """Minimal generators of the smallest Borel fixed ideal containing ms.

    The inputs may have mixed degrees: each is expanded at its own degree
    and the union is minimalized under divisibility.
    """
    ms = list(ms)
    if not ms:
        raise ValueError("need at least one generator")
    if any(m.n != n for m in ms):
        raise ValueError("ambient mismatch")
    if any(m.is_unit for m in ms):
        raise ValueError("unit generator makes the whole ring")
    everything: set[Monomial] = set()
    for m in ms:
        everything.update(_expand_principal_set(m))
    return minimal_under_divisibility(everything)


def multiply_sets(A, B) -> frozenset[Monomial]:
    """All pairwise products of two generator sets.

    The cardinality |A|*|B| is asserted: the polytopal product construction
    is only valid when distinct pairs give distinct products.
    """
    A, B = list(A), list(B)
    out = frozenset(a * b for a in A for b in B)
    if len(out) != len(A) * len(B):
        raise ValueError("generator-set product has colliding products")
    return out


def parse_ideal_spec(text: str, default_n: int | None = None):
    """Parse an ideal spec string.

    Segments separated by ';' or newlines: an optional 'vars: n' plus one
    of 'borel: m1, m2, ...' (generators in the Borel sense) or
    'mono: m1, m2, ...' (explicit generating set, checked for closure).
    Returns (n, kind, monomials) with kind in {'borel', 'mono'}.
    """
    n = default_n
    kind = None
    gens_text = None
    for seg in (p.strip() for p in text.replace("\n", ";").split(";")):
        if not seg:
            continue
        head, sep, body = seg.partition(":")
        if not sep:
            raise ValueError(f"bad ideal spec segment {seg!r}")
        head = head.strip().lower()
        if head == "vars":
            n = int(body)
        elif head in ("borel", "mono"):
            if kind is not None:
                raise ValueError("ideal spec has more than one generator list")
            kind, gens_text = head, body
        else:
            raise ValueError(f"unknown ideal spec key {head!r}")
    if kind is None:
        raise ValueError("ideal spec has no generator list")
    if n is None:
        raise ValueError("ideal spec does not fix the number of variables")
    gens = tuple(
        parse_monomial(p, n) for p in gens_text.split(",") if p.strip()
    )
    if not gens:
        raise ValueError("ideal spec has an empty generator list")
    return n, kind, gens
