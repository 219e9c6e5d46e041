import pytest

from borelcell.borel import BorelIdeal, expand_principal
from borelcell.builders import borel_complex, power_complex, principal_complex
from borelcell.complexes import LabeledComplex, simplex
from borelcell.exact import Field
from borelcell.monomials import VarRange, parse_monomial
from borelcell.resolution import (
    ChainComplex,
    betti_from_cells,
    betti_totals,
    chain_complex,
    check_boundary_squared_zero,
    check_minimal,
    homology_dims,
    verify_resolution,
)

Q = Field.rationals()


def m(text, n=3):
    return parse_monomial(text, n)


def fs(texts, n=3):
    return frozenset(parse_monomial(t, n) for t in texts)


def hollow_square():
    faces = {fs(["a"], 4): 0, fs(["b"], 4): 0, fs(["c"], 4): 0, fs(["d"], 4): 0}
    for pair in (["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]):
        faces[fs(pair, 4)] = 1
    return LabeledComplex(4, faces)


def taylor_on_squares():
    # full simplex on a^2, a*b, b^2; edge {a^2, b^2} shares its label with the top cell
    return simplex([m("a^2", 2), m("a*b", 2), m("b^2", 2)])


class TestChainComplex:
    def test_structure(self):
        C = chain_complex(power_complex(2, VarRange(1, 2), 2))
        assert [len(b) for b in C.bases] == [3, 2]
        assert len(C.matrices) == 1
        assert len(C.matrices[0]) == 3
        assert all(len(r) == 2 for r in C.matrices[0])
        # each edge hits its endpoints with opposite signs
        for col in range(2):
            assert sorted(C.matrices[0][row][col] for row in range(3)) == [-1, 0, 1]

    def test_void(self):
        C = chain_complex(LabeledComplex(3, {}))
        assert C.bases == () and C.matrices == ()

    def test_boundary_squared_zero(self):
        C = chain_complex(power_complex(3, VarRange(1, 3), 2))
        assert check_boundary_squared_zero(C)

    def test_boundary_squared_nonzero_detected(self):
        bad = ChainComplex(bases=(), matrices=(((1, 1),), ((1,), (1,))))
        assert not check_boundary_squared_zero(bad)


class TestHomology:
    def test_solid_triangle_is_acyclic(self):
        X = simplex([m("a"), m("b"), m("c")])
        assert homology_dims(X, Q) == (0, 0, 0, 0)

    def test_hollow_square_has_a_loop(self):
        assert homology_dims(hollow_square(), Q) == (0, 0, 1)

    def test_void_and_point(self):
        assert homology_dims(LabeledComplex(3, {}), Q) == ()
        assert homology_dims(simplex([m("a")]), Q) == (0, 0)

    def test_two_points(self):
        X = LabeledComplex(3, {fs(["a"]): 0, fs(["b"]): 0})
        assert homology_dims(X, Q) == (0, 1)

    def test_mod_p_matches_rationals(self):
        p = Field.parse("p:32003")
        for X in (hollow_square(), simplex([m("a"), m("b"), m("c")])):
            assert homology_dims(X, p) == homology_dims(X, Q)


class TestVerifyResolution:
    def test_simplex_resolves_the_variables(self):
        I = expand_principal(m("c"))
        X = simplex([m("a"), m("b"), m("c")])
        report = verify_resolution(X, I)
        assert report.ok
        assert report.field == "q"
        # one boundary check plus one acyclicity check per nonunit lattice degree
        assert [c.name for c in report.checks[:1]] == ["boundary_squared_zero"]
        assert len(report.checks) == 1 + 7
        assert all(c.status == "pass" for c in report.checks)

    def test_power_complex_resolves_the_square(self):
        I = expand_principal(m("c^2"))
        X = power_complex(3, VarRange(1, 3), 2)
        report = verify_resolution(X, I)
        assert report.ok and check_minimal(X)

    def test_vertex_mismatch_rejected(self):
        I = expand_principal(m("c^2"))
        with pytest.raises(ValueError, match="vertex labels"):
            verify_resolution(simplex([m("a"), m("b"), m("c")]), I)

    def test_jobs_do_not_change_the_report(self):
        I = expand_principal(m("b*d^2", 4))
        X = principal_complex(4, m("b*d^2", 4))
        serial = verify_resolution(X, I, jobs=1)
        parallel = verify_resolution(X, I, jobs=4)
        assert serial.as_dict() == parallel.as_dict()

    def test_mod_p_agrees_with_rationals(self):
        I = BorelIdeal.from_borel_gens(3, [m("b^2*c"), m("a*c^2")])
        X = borel_complex(I)
        r_q = verify_resolution(X, I)
        r_p = verify_resolution(X, I, fld=Field.parse("p:32003"))
        assert r_q.ok and r_p.ok
        assert r_p.field == "p:32003"
        assert [c.as_dict() for c in r_q.checks] == [c.as_dict() for c in r_p.checks]

    def test_detects_a_missing_cell(self):
        X = power_complex(3, VarRange(1, 3), 2)
        square = next(f for f, d in X.faces.items() if d == 2 and len(f) == 4)
        faces = {f: d for f, d in X.faces.items() if f != square}
        broken = LabeledComplex(3, faces)
        report = verify_resolution(broken, expand_principal(m("c^2")))
        assert not report.ok
        failing = [c for c in report.checks if c.status == "fail"]
        assert failing
        assert failing[0].degree == "x1*x2^2*x3"
        assert failing[0].witness["first_nonzero"] == 1


class TestMinimality:
    def test_power_complex_is_minimal(self):
        assert check_minimal(power_complex(4, VarRange(1, 4), 2))

    def test_label_repeat_is_not_minimal(self):
        X = simplex([m("a", 2), m("a*b", 2)])
        assert not check_minimal(X)

    def test_taylor_complex_resolves_but_is_not_minimal(self):
        X = taylor_on_squares()
        I = expand_principal(m("b^2", 2))
        assert verify_resolution(X, I).ok
        assert not check_minimal(X)


class TestBettiFromCells:
    def test_totals_for_the_square_ideal(self):
        I = expand_principal(m("c^2"))
        X = power_complex(3, VarRange(1, 3), 2)
        table = betti_from_cells(X, verify_resolution(X, I))
        assert betti_totals(table) == (6, 8, 3)
        for (i, b), count in table.items():
            assert count >= 1
            assert b.degree >= 2 + i

    def test_graded_entries_for_bc(self):
        I = expand_principal(m("bc"))
        X = principal_complex(3, m("bc"))
        table = betti_from_cells(X, verify_resolution(X, I))
        assert table[(0, m("bc"))] == 1
        assert table[(2, m("a*b^2*c"))] == 1
        assert betti_totals(table) == (5, 6, 2)

    def test_rejects_foreign_report(self):
        I = expand_principal(m("c^2"))
        X = power_complex(3, VarRange(1, 3), 2)
        report = verify_resolution(X, I)
        other = principal_complex(3, m("bc"))
        with pytest.raises(ValueError, match="different complex"):
            betti_from_cells(other, report)

    def test_rejects_failing_report(self):
        X = power_complex(3, VarRange(1, 3), 2)
        square = next(f for f, d in X.faces.items() if d == 2 and len(f) == 4)
        broken = LabeledComplex(3, {f: d for f, d in X.faces.items() if f != square})
        report = verify_resolution(broken, expand_principal(m("c^2")))
        with pytest.raises(ValueError, match="failed"):
            betti_from_cells(broken, report)

    def test_rejects_non_minimal_complex(self):
        X = taylor_on_squares()
        report = verify_resolution(X, expand_principal(m("b^2", 2)))
        with pytest.raises(ValueError, match="not minimal"):
            betti_from_cells(X, report)

    def test_totals_of_empty_table(self):
        assert betti_totals({}) == ()
