"""Chain complexes of labeled cell complexes, and resolution verification.

The complex of free modules supported on a labeled cell complex has one
basis element per cell, graded by the cell label; the differential entry
between a cell and a facet is the orientation sign (the monomial ratio of
the two labels is carried by the grading).  Such a complex resolves the
ideal generated by the vertex labels exactly when, for every degree b in
the lcm lattice, the subcomplex of cells whose label divides b has zero
reduced homology; it is minimal exactly when no cell shares its label with
one of its facets.  Homology ranks are computed exactly (see exact.py).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .borel import BorelIdeal
from .complexes import Cell, LabeledComplex, restrict
from .exact import Field
from .lattice import build_lattice
from .monomials import Monomial, canonical_key

__all__ = [
    "ChainComplex",
    "chain_complex",
    "check_boundary_squared_zero",
    "homology_dims",
    "CheckResult",
    "ResolutionReport",
    "verify_resolution",
    "check_minimal",
    "betti_from_cells",
    "betti_totals",
]


@dataclass(frozen=True)
class ChainComplex:
    """Sign matrices of the cellular differential, bases ordered by cell id.

    matrices[i] maps dimension-i cells to dimension-(i-1) cells (i >= 1);
    entry [row][col] is the orientation sign.  Multidegrees live on the
    bases; divisibility of facet labels into cell labels is asserted when
    the matrices are assembled.
    """

    bases: tuple[tuple[Cell, ...], ...]
    matrices: tuple[tuple[tuple[int, ...], ...], ...]


def chain_complex(X: LabeledComplex) -> ChainComplex:
    cells = X.cells
    if not cells:
        return ChainComplex(bases=(), matrices=())
    by_dim: list[list[Cell]] = [[] for _ in range(X.dim + 1)]
    for c in cells:
        by_dim[c.dim].append(c)
    pos = {c.id: i for dim_cells in by_dim for i, c in enumerate(dim_cells)}
    matrices = []
    for d in range(1, X.dim + 1):
        rows = len(by_dim[d - 1])
        mat = [[0] * len(by_dim[d]) for _ in range(rows)]
        for j, c in enumerate(by_dim[d]):
            for fid, sign in c.facets:
                f = cells[fid]
                assert f.label.divides(c.label)
                mat[pos[fid]][j] = sign
        matrices.append(tuple(tuple(r) for r in mat))
    return ChainComplex(
        bases=tuple(tuple(dc) for dc in by_dim),
        matrices=tuple(matrices),
    )


def check_boundary_squared_zero(C: ChainComplex) -> bool:
    """True iff consecutive sign matrices compose to zero."""
    for D1, D2 in zip(C.matrices, C.matrices[1:]):
        # D1: C_d -> C_{d-1}, D2: C_{d+1} -> C_d
        for col in range(len(D2[0]) if D2 else 0):
            for row in range(len(D1)):
                if sum(D1[row][k] * D2[k][col] for k in range(len(D2))) != 0:
                    return False
    return True


def homology_dims(X: LabeledComplex, fld: Field) -> tuple[int, ...]:
    """Reduced homology dimensions (H_{-1}, H_0, ..., H_dim).

    The void complex reports the empty tuple; callers decide whether a void
    restriction is acceptable (it is exactly when no generator divides the
    degree being checked).
    """
    if not X.faces:
        return ()
    C = chain_complex(X)
    f = [len(b) for b in C.bases]
    ranks = [1]  # augmentation C_0 -> k has rank 1 on a nonempty complex
    ranks += [fld.rank([list(r) for r in M]) for M in C.matrices]
    ranks.append(0)
    dims = [1 - ranks[0]]
    for i in range(len(f)):
        dims.append(f[i] - ranks[i] - ranks[i + 1])
    return tuple(dims)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" or "fail"
    degree: str | None = None
    witness: dict | None = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.degree is not None:
            out["degree"] = self.degree
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class ResolutionReport:
    ok: bool
    field: str
    checks: tuple[CheckResult, ...]
    subject: LabeledComplex | None = field(default=None, compare=False, repr=False)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "field": self.field,
            "checks": [c.as_dict() for c in self.checks],
        }


def _acyclicity_check(X: LabeledComplex, I: BorelIdeal, fld: Field, b: Monomial):
    sub = restrict(X, b)
    if not sub.faces:
        ok = not any(g.divides(b) for g in I.expanded)
        witness = None if ok else {"reason": "void restriction at a degree in the ideal"}
    else:
        dims = homology_dims(sub, fld)
        ok = all(h == 0 for h in dims)
        witness = None
        if not ok:
            witness = {
                "reduced_homology": list(dims),
                "first_nonzero": next(
                    i - 1 for i, h in enumerate(dims) if h != 0
                ),
            }
    return CheckResult(
        name="acyclic",
        status="pass" if ok else "fail",
        degree=b.canonical(),
        witness=witness,
    )


def verify_resolution(
    X: LabeledComplex,
    I: BorelIdeal,
    fld: Field = Field.rationals(),
    jobs: int = 1,
) -> ResolutionReport:
    """Check that the complex supports a resolution of I.

    Verifies the squared differential and, for every lcm-lattice degree b
    above the bottom (top included), that the label-restricted subcomplex
    has zero reduced homology.  Results are aggregated in a fixed degree
    order so reports are reproducible for any job count.
    """
    if set(X.vertex_labels) != set(I.expanded):
        raise ValueError("vertex labels differ from the minimal generators")
    checks = [
        CheckResult(
            name="boundary_squared_zero",
            status="pass"
            if check_boundary_squared_zero(chain_complex(X))
            else "fail",
        )
    ]
    degrees = [
        b
        for b in sorted(build_lattice(I).elements, key=canonical_key)
        if not b.is_unit
    ]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            checks += list(
                ex.map(lambda b: _acyclicity_check(X, I, fld, b), degrees)
            )
    else:
        checks += [_acyclicity_check(X, I, fld, b) for b in degrees]
    ok = all(c.status == "pass" for c in checks)
    return ResolutionReport(ok=ok, field=str(fld), checks=tuple(checks), subject=X)


def check_minimal(X: LabeledComplex) -> bool:
    """True iff no cell has a facet carrying the same label."""
    cells = X.cells
    for c in cells:
        for fid, _ in c.facets:
            if cells[fid].label == c.label:
                return False
    return True


def betti_from_cells(
    X: LabeledComplex, report: ResolutionReport
) -> dict[tuple[int, Monomial], int]:
    """Graded Betti numbers read off the cells of a verified minimal complex.

    Demands a passing report for this very complex plus minimality; a
    minimal resolution has beta_{i,b} = number of i-cells labeled b.
    """
    if report.subject is not X:
        raise ValueError("report was computed for a different complex")
    if not report.ok:
        raise ValueError("complex failed resolution verification")
    if not check_minimal(X):
        raise ValueError("complex is not minimal")
    table: dict[tuple[int, Monomial], int] = {}
    for c in X.cells:
        key = (c.dim, c.label)
        table[key] = table.get(key, 0) + 1
    return table


def betti_totals(table: dict[tuple[int, Monomial], int]) -> tuple[int, ...]:
    """Collapse a graded Betti table to total numbers (beta_0, beta_1, ...)."""
    if not table:
        return ()
    top = max(i for i, _ in table)
    out = [0] * (top + 1)
    for (i, _), v in table.items():
        out[i] += v
    return tuple(out)
