import itertools

import pytest

from borelcell.borel import borel_generators, expand_principal, random_borel_minimal
from borelcell.lattice import (
    ChainBudgetExceeded,
    LcmLattice,
    build_lattice,
    is_ranked,
    maximal_chains,
    natural_label_check,
)
from borelcell.monomials import lcm_many, parse_monomial, unit


def m(text, n=3):
    return parse_monomial(text, n)


def mixed_lattice():
    gens = [m(t, 4) for t in ("ab", "ac", "a*d^2", "b^2*c*d^2")]
    return build_lattice(list(borel_generators(4, gens)))


class TestBuildLattice:
    def test_two_variables(self):
        L = build_lattice([m("a", 2), m("b", 2)])
        assert L.elements == {unit(2), m("a", 2), m("b", 2), m("a*b", 2)}
        assert L.bottom == unit(2) and L.top == m("a*b", 2)
        assert len(L) == 4
        assert m("a", 2) in L and m("a^2", 2) not in L

    def test_borel_ideal_input(self):
        L = build_lattice(expand_principal(m("bc")))
        assert L.atoms == (m("a^2"), m("a*b"), m("b^2"), m("a*c"), m("b*c"))
        assert L.top == m("a^2*b^2*c")

    def test_elements_match_subset_joins(self):
        # independent description: one join per nonempty atom subset
        L = build_lattice(expand_principal(m("bc")))
        joins = {
            lcm_many(combo)
            for k in range(1, len(L.atoms) + 1)
            for combo in itertools.combinations(L.atoms, k)
        }
        assert L.elements == joins | {L.bottom}

    def test_atoms_are_minimalized(self):
        L = build_lattice([m("a*b", 2), m("a", 2)])
        assert L.atoms == (m("a", 2),)

    def test_cover_properties(self):
        L = build_lattice(expand_principal(m("bc")))
        for e in L.sorted_elements:
            covs = L.covers[e]
            assert len(set(covs)) == len(covs)
            for c in covs:
                assert e != c and e.divides(c)
            for c, d in itertools.permutations(covs, 2):
                assert not c.divides(d)

    def test_interval(self):
        L = build_lattice(expand_principal(m("bc")))
        inside = L.interval(m("a*b"), m("a^2*b^2*c"))
        assert m("a*b") in inside and m("a^2*b^2*c") in inside
        assert all(m("a*b").divides(e) for e in inside)

    def test_interval_validation(self):
        L = build_lattice(expand_principal(m("bc")))
        with pytest.raises(ValueError, match="lattice elements"):
            L.interval(m("a"), L.top)
        with pytest.raises(ValueError, match="does not divide"):
            L.interval(m("b*c"), m("a*b"))

    def test_input_validation(self):
        with pytest.raises(ValueError, match="at least one"):
            build_lattice([])
        with pytest.raises(ValueError, match="ambient"):
            build_lattice([m("a", 2), m("a", 3)])
        with pytest.raises(ValueError, match="unit"):
            build_lattice([unit(2)])

    def test_mixed_ideal_size(self):
        L = mixed_lattice()
        assert len(L.atoms) == 13
        assert len(L) == 130


class TestIsRanked:
    def test_equal_degrees_use_the_degree_criterion(self):
        report = is_ranked(build_lattice(expand_principal(m("bc"))))
        assert report and report.ranked
        assert report.criterion == "degree"
        assert report.witness_cover is None

    def test_degree_gap_flagged(self):
        report = is_ranked(build_lattice([m("a^2", 2), m("b^2", 2)]))
        assert not report
        assert report.criterion == "degree"
        assert report.witness_cover == (m("a^2", 2), m("a^2*b^2", 2))

    def test_random_borel_lattices_are_ranked(self):
        for seed in range(8):
            I = random_borel_minimal(4, 3, 2, seed=seed)
            assert is_ranked(build_lattice(I)).ranked

    def test_mixed_ideal_is_not_ranked(self):
        report = is_ranked(mixed_lattice())
        assert not report.ranked
        assert report.criterion == "chains"
        lo, hi = report.witness_cover
        assert hi.degree >= lo.degree + 2
        lo_i, hi_i, lengths = report.witness_interval
        assert lo_i == unit(4)
        assert len(lengths) >= 2

    def test_budget_guard(self):
        with pytest.raises(ChainBudgetExceeded):
            is_ranked(mixed_lattice(), chain_budget=2)


class TestChains:
    def test_two_variable_square(self):
        L = build_lattice([m("a", 2), m("b", 2)])
        chains = maximal_chains(L, L.bottom, L.top)
        assert set(chains) == {
            (unit(2), m("a", 2), m("a*b", 2)),
            (unit(2), m("b", 2), m("a*b", 2)),
        }

    def test_single_point_interval(self):
        L = build_lattice([m("a", 2), m("b", 2)])
        assert maximal_chains(L, L.top, L.top) == [(L.top,)]

    def test_budget_guard(self):
        L = build_lattice(expand_principal(m("c^2")))
        with pytest.raises(ChainBudgetExceeded):
            maximal_chains(L, L.bottom, L.top, budget=1)

    def test_labels_on_the_square(self):
        L = build_lattice([m("a", 2), m("b", 2)])
        report = natural_label_check(L, L.bottom, L.top)
        assert len(report.chains) == 2
        assert sorted(report.labels) == [(1, 2), (2, 1)]
        assert len(report.increasing) == 1
        assert len(report.decreasing) == 1
        assert report.decreasing_from_top == report.increasing
        inc = report.labels[report.increasing[0]]
        assert inc == (1, 2)

    def test_mixed_ideal_interval_has_no_decreasing_chain_from_top(self):
        L = mixed_lattice()
        report = natural_label_check(L, unit(4), m("a*b^2*c*d^2", 4))
        assert len(report.chains) == 7
        assert report.decreasing_from_top == ()
        assert report.increasing == ()
        assert len(report.decreasing) == 1

    def test_final_membership_pair(self):
        gens = [m("x1*x3^3", 4), m("x2^2*x3*x4", 4)]
        L = build_lattice(list(borel_generators(4, gens)))
        assert m("x2^2*x3^2*x4", 4) in L
        assert m("x2^2*x3^3", 4) not in L


class TestLcmLatticeType:
    def test_sorted_elements_are_sorted_by_degree_first(self):
        L = build_lattice(expand_principal(m("bc")))
        degs = [e.degree for e in L.sorted_elements]
        assert degs == sorted(degs)
        assert L.sorted_elements[0] == L.bottom

    def test_frozen(self):
        L = build_lattice([m("a", 2), m("b", 2)])
        with pytest.raises(AttributeError):
            L.n = 5
        assert isinstance(L, LcmLattice)
