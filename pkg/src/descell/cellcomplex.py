"""Finite cell complexes with integer incidence degrees.

A complex is a finite set of abstract cells, each with a non-negative
dimension, plus an incidence table mapping (p-cell, (p-1)-cell) pairs to
integer degrees. Attaching maps are not represented; the degree table is
the input data. Degrees are stored as given, but all homology arithmetic
downstream reduces them mod 2, so a net-zero degree carries no
information and is normalized away at construction time. A face with
even multiplicity should therefore be recorded with an even nonzero
degree (e.g. 2) if the contact matters for sub-complex derivation.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

import numpy as np

from .errors import DimensionMismatchError, DuplicateIdError, MissingFaceError

CellId = str


@dataclass(frozen=True)
class Violation:
    """One structural defect found by ``CellComplex.validate``.

    Severity "error" marks a defect that invalidates the complex;
    "warning" marks an integer-level oddity that vanishes mod 2.
    """

    code: str
    severity: str
    cells: tuple[CellId, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.code} [{' '.join(self.cells)}] {self.message}"


class CellComplex:
    """A finite cell complex, immutable after construction.

    ``cells`` maps cell id to dimension; ``incidence`` maps
    (cell, face) pairs to nonzero integer degrees. All query methods are
    pure, so instances are safe to share across threads. ``add_cell``
    returns a new complex rather than mutating.
    """

    def __init__(self,
                 cells: Mapping[CellId, int] | None = None,
                 incidence: Mapping[tuple[CellId, CellId], int] | None = None):
        self._cells: dict[CellId, int] = {str(k): int(v) for k, v in (cells or {}).items()}
        for cid, dim in self._cells.items():
            if dim < 0:
                raise ValueError(f"cell {cid!r} has negative dimension {dim}")
        # Net-zero degrees are indistinguishable from absence mod 2: drop them.
        self._incidence: dict[tuple[CellId, CellId], int] = {
            (str(c), str(f)): int(d)
            for (c, f), d in (incidence or {}).items() if int(d) != 0
        }

        by_dim: dict[int, list[CellId]] = {}
        for cid, dim in self._cells.items():
            by_dim.setdefault(dim, []).append(cid)
        self._by_dim: dict[int, tuple[CellId, ...]] = {
            d: tuple(sorted(ids)) for d, ids in by_dim.items()
        }

        faces: dict[CellId, dict[CellId, int]] = {}
        cofaces: dict[CellId, set[CellId]] = {}
        for (cid, fid), deg in self._incidence.items():
            faces.setdefault(cid, {})[fid] = deg
            cofaces.setdefault(fid, set()).add(cid)
        self._faces = faces
        self._cofaces = {k: tuple(sorted(v)) for k, v in cofaces.items()}

    # -- basic queries -------------------------------------------------

    @property
    def cells(self) -> Mapping[CellId, int]:
        return MappingProxyType(self._cells)

    @property
    def incidence(self) -> Mapping[tuple[CellId, CellId], int]:
        return MappingProxyType(self._incidence)

    @property
    def max_dim(self) -> int:
        """Largest cell dimension, or -1 for the empty complex."""
        return max(self._cells.values(), default=-1)

    def __len__(self) -> int:
        return len(self._cells)

    def __contains__(self, cell_id: CellId) -> bool:
        return cell_id in self._cells

    def __eq__(self, other) -> bool:
        if not isinstance(other, CellComplex):
            return NotImplemented
        return self._cells == other._cells and self._incidence == other._incidence

    def __repr__(self) -> str:
        counts = " ".join(
            f"{d}:{len(self._by_dim[d])}" for d in sorted(self._by_dim)
        )
        return f"<CellComplex {len(self._cells)} cells [{counts}]>"

    def dim_of(self, cell_id: CellId) -> int:
        return self._cells[cell_id]

    def cells_of_dim(self, p: int) -> tuple[CellId, ...]:
        """All p-cells in sorted id order (the canonical basis order)."""
        return self._by_dim.get(p, ())

    def faces(self, cell_id: CellId) -> Mapping[CellId, int]:
        """Recorded faces of a cell with their nonzero degrees."""
        return MappingProxyType(self._faces.get(cell_id, {}))

    def cofaces(self, cell_id: CellId) -> tuple[CellId, ...]:
        """Cells one dimension up whose boundary touches the given cell."""
        return self._cofaces.get(cell_id, ())

    # -- construction ----------------------------------------------------

    def add_cell(self, cell_id: CellId, dim: int,
                 boundary: Iterable[tuple[CellId, int]] = ()) -> "CellComplex":
        """Return a new complex with one extra cell attached.

        Args:
            cell_id: fresh id, unique within the complex.
            dim: dimension of the new cell.
            boundary: (face id, integer degree) pairs. Faces must already
                be present with dimension ``dim - 1``. Repeated faces
                accumulate by integer addition; net zero entries vanish.

        Raises:
            DuplicateIdError, MissingFaceError, DimensionMismatchError.
        """
        cell_id = str(cell_id)
        if cell_id in self._cells:
            raise DuplicateIdError(f"cell id {cell_id!r} already present")
        if dim < 0:
            raise ValueError(f"dimension must be non-negative, got {dim}")
        acc: dict[CellId, int] = {}
        for fid, deg in boundary:
            fid = str(fid)
            if fid not in self._cells:
                raise MissingFaceError(f"boundary of {cell_id!r} references missing cell {fid!r}")
            if self._cells[fid] != dim - 1:
                raise DimensionMismatchError(
                    f"face {fid!r} has dimension {self._cells[fid]}, expected {dim - 1}")
            acc[fid] = acc.get(fid, 0) + int(deg)
        cells = dict(self._cells)
        cells[cell_id] = dim
        incidence = dict(self._incidence)
        for fid, deg in acc.items():
            if deg != 0:
                incidence[(cell_id, fid)] = deg
        return CellComplex(cells, incidence)

    # -- derived structure -----------------------------------------------

    def skeleton(self, n: int) -> "Skeleton":
        """The n-skeleton: every cell of dimension at most n.

        ``n`` past ``max_dim`` returns the whole complex.
        """
        if n < 0:
            raise ValueError(f"skeleton level must be non-negative, got {n}")
        cells = {cid: d for cid, d in self._cells.items() if d <= n}
        incidence = {
            (c, f): deg for (c, f), deg in self._incidence.items()
            if c in cells and f in cells
        }
        return Skeleton(parent=self, level=n, complex=CellComplex(cells, incidence))

    def boundary_matrix(self, p: int) -> np.ndarray:
        """Mod-2 boundary matrix from p-cells to (p-1)-cells.

        Rows are indexed by the sorted (p-1)-cells, columns by the sorted
        p-cells; entry (i, j) is the incidence degree mod 2. Dimensions
        with no cells give the corresponding empty shape.
        """
        if p < 1:
            raise ValueError(f"boundary matrix requires p >= 1, got {p}")
        rows = self.cells_of_dim(p - 1)
        cols = self.cells_of_dim(p)
        mat = np.zeros((len(rows), len(cols)), dtype=np.uint8)
        row_pos = {cid: i for i, cid in enumerate(rows)}
        for j, cid in enumerate(cols):
            for fid, deg in self._faces.get(cid, {}).items():
                if deg % 2 and fid in row_pos:
                    mat[row_pos[fid], j] = 1
        return mat

    # -- validation --------------------------------------------------------

    def validate(self, include_warnings: bool = False) -> list[Violation]:
        """Check structural integrity; empty result means valid.

        Errors reported: incidence entries referencing undeclared cells,
        entries whose dimensions are not (p, p-1), and any pair
        (p-cell, (p-2)-cell) whose composite boundary coefficient is odd.
        With ``include_warnings`` the report also lists composite
        coefficients that are nonzero but even (harmless mod 2).
        """
        issues: list[Violation] = []
        for cid, fid in sorted(self._incidence):
            cd = self._cells.get(cid)
            fd = self._cells.get(fid)
            if cd is None:
                issues.append(Violation(
                    "dangling-face", "error", (cid, fid),
                    f"incidence references undeclared cell {cid!r}"))
            if fd is None:
                issues.append(Violation(
                    "dangling-face", "error", (cid, fid),
                    f"incidence references undeclared face {fid!r}"))
            if cd is not None and fd is not None and cd != fd + 1:
                issues.append(Violation(
                    "dimension-mismatch", "error", (cid, fid),
                    f"incidence relates dimensions ({cd}, {fd}), expected ({fd + 1}, {fd})"))

        # Composite boundary coefficients, restricted to well-formed entries.
        for p in sorted(self._by_dim):
            if p < 2:
                continue
            for cid in self._by_dim[p]:
                composite: dict[CellId, int] = {}
                for rid, d1 in self._faces.get(cid, {}).items():
                    if self._cells.get(rid) != p - 1:
                        continue
                    for tid, d2 in self._faces.get(rid, {}).items():
                        if self._cells.get(tid) != p - 2:
                            continue
                        composite[tid] = composite.get(tid, 0) + d1 * d2
                for tid in sorted(composite):
                    coeff = composite[tid]
                    if coeff % 2:
                        issues.append(Violation(
                            "composite-odd", "error", (cid, tid),
                            f"composite boundary coefficient {coeff} is odd"))
                    elif coeff != 0 and include_warnings:
                        issues.append(Violation(
                            "composite-nonzero", "warning", (cid, tid),
                            f"composite boundary coefficient {coeff} nonzero over the integers"))
        return issues

    def is_valid(self) -> bool:
        return not self.validate()

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(ids) for d, ids in self._by_dim.items())


@dataclass(frozen=True)
class Skeleton:
    """An n-skeleton: the induced sub-complex of cells of dimension <= n."""

    parent: CellComplex
    level: int
    complex: CellComplex


def from_simplices(simplices: Iterable[Iterable]) -> CellComplex:
    """Build a complex from abstract simplices, closing under faces.

    Every simplex is given as an iterable of vertex labels; all faces
    are generated automatically and every codimension-1 incidence gets
    degree 1. Cell ids join the sorted vertex labels with "-", so labels
    must not contain "-" themselves.
    """
    from itertools import combinations

    simps: set[tuple[str, ...]] = set()
    for s in simplices:
        verts = tuple(sorted(str(v) for v in s))
        if len(set(verts)) != len(verts):
            raise ValueError(f"simplex {verts} repeats a vertex")
        for k in range(1, len(verts) + 1):
            simps.update(combinations(verts, k))

    cells = {"-".join(s): len(s) - 1 for s in simps}
    incidence = {}
    for s in simps:
        if len(s) < 2:
            continue
        cid = "-".join(s)
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            incidence[(cid, "-".join(face))] = 1
    return CellComplex(cells, incidence)
