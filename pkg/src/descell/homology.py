"""Mod-2 chain arithmetic and cellular homology.

Chains are supports: a p-chain is the set of p-cells carrying
coefficient 1, and addition is symmetric difference. The engine computes
cycle and boundary ranks by Gaussian elimination over the two-element
field; ``oracle_homology`` recomputes the same numbers by exhaustive
enumeration of every chain, as an independent cross-check on small
complexes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cellcomplex import CellComplex, CellId
from .errors import (
    DimensionMismatchError,
    ForeignCellError,
    InvalidComplexError,
    TooLargeError,
)


@dataclass(frozen=True)
class Chain:
    """A formal sum of cells of one dimension with coefficients in {0, 1}.

    The support holds exactly the cells with coefficient 1. Addition is
    symmetric difference, so every chain is its own inverse and the empty
    chain is the identity.
    """

    dim: int
    support: frozenset[CellId] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        if self.dim < -1:
            raise ValueError(f"chain dimension must be >= -1, got {self.dim}")
        if self.dim < 0 and self.support:
            raise ValueError("a chain below dimension 0 must be empty")

    def __add__(self, other: "Chain") -> "Chain":
        if not isinstance(other, Chain):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionMismatchError(
                f"cannot add chains of dimensions {self.dim} and {other.dim}")
        return Chain(self.dim, self.support ^ other.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def sorted_support(self) -> tuple[CellId, ...]:
        return tuple(sorted(self.support))

    @classmethod
    def empty(cls, dim: int) -> "Chain":
        return cls(dim, frozenset())


@dataclass(frozen=True)
class DimensionHomology:
    """Homology data for a single dimension."""

    dim: int
    n_cells: int
    cycle_rank: int
    boundary_rank: int
    betti: int
    generators: tuple[Chain, ...] = ()


@dataclass(frozen=True)
class HomologyResult:
    """Per-dimension cycle ranks, boundary ranks, Betti numbers and
    generator cycles."""

    records: tuple[DimensionHomology, ...]

    def record(self, p: int) -> DimensionHomology:
        for r in self.records:
            if r.dim == p:
                return r
        raise KeyError(f"no homology record for dimension {p}")

    def betti(self, p: int) -> int:
        return self.record(p).betti

    def betti_vector(self) -> tuple[int, ...]:
        return tuple(r.betti for r in self.records)

    def ranks(self) -> tuple[tuple[int, int, int], ...]:
        """(cycle_rank, boundary_rank, betti) per dimension, for
        comparisons between the engine and the oracle."""
        return tuple((r.cycle_rank, r.boundary_rank, r.betti) for r in self.records)

    def to_text(self, include_generators: bool = False) -> str:
        """Structured text form: one record line per dimension, optional
        generator lines, and a closing Betti vector line."""
        lines = []
        for r in self.records:
            lines.append(
                f"dim {r.dim} cells {r.n_cells} cycle_rank {r.cycle_rank} "
                f"boundary_rank {r.boundary_rank} betti {r.betti}")
            if include_generators:
                for g in r.generators:
                    lines.append(f"gen {r.dim} {' '.join(g.sorted_support())}")
        lines.append("betti " + " ".join(str(r.betti) for r in self.records))
        return "\n".join(lines) + "\n"


# -- chain-level operations ----------------------------------------------


def _check_chain(complex: CellComplex, chain: Chain) -> None:
    for cid in chain.support:
        if cid not in complex:
            raise ForeignCellError(f"chain references unknown cell {cid!r}")
        if complex.dim_of(cid) != chain.dim:
            raise DimensionMismatchError(
                f"cell {cid!r} has dimension {complex.dim_of(cid)}, "
                f"chain claims {chain.dim}")


def boundary_of(complex: CellComplex, chain: Chain) -> Chain:
    """Apply the mod-2 boundary homomorphism to a chain.

    Chains of dimension 0 (or below) map to the empty chain.
    """
    _check_chain(complex, chain)
    if chain.dim <= 0:
        return Chain(max(chain.dim - 1, -1))
    out: set[CellId] = set()
    for cid in chain.support:
        for fid, deg in complex.faces(cid).items():
            if deg % 2:
                out ^= {fid}
    return Chain(chain.dim - 1, frozenset(out))


def chain_add(c1: Chain, c2: Chain) -> Chain:
    """Functional alias for ``c1 + c2``."""
    return c1 + c2


# -- GF(2) linear algebra ---------------------------------------------------


def rank_mod2(matrix) -> int:
    """Rank of a binary matrix over GF(2).

    Accepts anything ``np.asarray`` does; the input is copied, never
    modified. Entries are reduced mod 2 first.
    """
    mat = (np.asarray(matrix, dtype=np.int64) % 2).astype(np.uint8)
    if mat.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={mat.ndim}")
    _, pivots = _rref_mod2(mat)
    return len(pivots)


def _rref_mod2(mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2) with XOR row operations.

    Returns the reduced copy and the pivot column list.
    """
    red = mat.copy()
    m, n = red.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        hit = -1
        for r in range(row, m):
            if red[r, col]:
                hit = r
                break
        if hit < 0:
            continue
        if hit != row:
            red[[row, hit]] = red[[hit, row]]
        for r in range(m):
            if r != row and red[r, col]:
                red[r] ^= red[row]
        pivots.append(col)
        row += 1
    return red, pivots


def _null_space_mod2(mat: np.ndarray) -> list[np.ndarray]:
    """Basis of the kernel of a GF(2) matrix, one indicator per free
    column, in ascending free-column order."""
    m, n = mat.shape
    red, pivots = _rref_mod2(mat)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = np.zeros(n, dtype=np.uint8)
        vec[free] = 1
        for row, pcol in enumerate(pivots):
            if red[row, free]:
                vec[pcol] = 1
        basis.append(vec)
    return basis


class _Gf2Span:
    """Incremental GF(2) span over bitmask-encoded vectors."""

    def __init__(self):
        self._rows: dict[int, int] = {}

    def add(self, vec: int) -> bool:
        """Insert a vector; True if it enlarged the span."""
        while vec:
            lead = vec.bit_length() - 1
            other = self._rows.get(lead)
            if other is None:
                self._rows[lead] = vec
                return True
            vec ^= other
        return False


def _to_bits(vec: np.ndarray) -> int:
    out = 0
    for i, v in enumerate(vec):
        if v:
            out |= 1 << i
    return out


# -- homology: reduction engine ---------------------------------------------


def cycle_basis(complex: CellComplex, p: int) -> list[Chain]:
    """A basis of the p-cycle space (kernel of the boundary map).

    Dimension 0 returns the singleton vertex chains; higher dimensions
    return the deterministic null-space basis of the boundary matrix.
    """
    if p < 0:
        raise ValueError(f"dimension must be non-negative, got {p}")
    cols = complex.cells_of_dim(p)
    if not cols:
        return []
    if p == 0:
        return [Chain(0, frozenset({cid})) for cid in cols]
    basis = _null_space_mod2(complex.boundary_matrix(p))
    return [Chain(p, frozenset(cols[i] for i in np.flatnonzero(vec))) for vec in basis]


def is_boundary(complex: CellComplex, chain: Chain) -> bool:
    """Whether the chain lies in the image of the next boundary map."""
    _check_chain(complex, chain)
    if not chain.support:
        return True
    cols = complex.cells_of_dim(chain.dim)
    pos = {cid: i for i, cid in enumerate(cols)}
    target = np.zeros(len(cols), dtype=np.uint8)
    for cid in chain.support:
        target[pos[cid]] = 1
    mat = complex.boundary_matrix(chain.dim + 1)
    if mat.shape[1] == 0:
        return False
    augmented = np.hstack([mat, target[:, None]])
    return rank_mod2(mat) == rank_mod2(augmented)


def homology(complex: CellComplex, max_p: int | None = None) -> HomologyResult:
    """Cycle ranks, boundary ranks, Betti numbers and generators.

    Generators for dimension p are the kernel basis chains that extend
    the boundary image to a basis of the cycle space, taken in the
    deterministic cell order, so output is reproducible run to run.

    Raises:
        InvalidComplexError: the complex fails ``validate``.
    """
    violations = complex.validate()
    if violations:
        raise InvalidComplexError(violations)
    if max_p is None:
        max_p = complex.max_dim
    records = []
    for p in range(0, max_p + 1):
        cols = complex.cells_of_dim(p)
        kernel = cycle_basis(complex, p)
        z_p = len(kernel)
        image_mat = complex.boundary_matrix(p + 1)
        b_p = rank_mod2(image_mat)
        span = _Gf2Span()
        for j in range(image_mat.shape[1]):
            span.add(_to_bits(image_mat[:, j]))
        generators = []
        pos = {cid: i for i, cid in enumerate(cols)}
        for cyc in kernel:
            bits = 0
            for cid in cyc.support:
                bits |= 1 << pos[cid]
            if span.add(bits):
                generators.append(cyc)
        records.append(DimensionHomology(
            dim=p, n_cells=len(cols), cycle_rank=z_p, boundary_rank=b_p,
            betti=z_p - b_p, generators=tuple(generators)))
    return HomologyResult(tuple(records))


# -- homology: enumeration oracle ---------------------------------------


def _indicator_rows(n: int) -> np.ndarray:
    """All 2**n subset indicators of an n-set, one per row."""
    if n > 26:
        raise TooLargeError(f"cannot enumerate 2**{n} chains")
    idx = np.arange(2 ** n, dtype=np.uint32)
    return ((idx[:, None] >> np.arange(n, dtype=np.uint32)) & 1).astype(np.uint8)


def _dense_boundary(complex: CellComplex, p: int) -> np.ndarray:
    # Built here from the raw incidence table so the oracle does not share
    # the engine's matrix path.
    rows = complex.cells_of_dim(p - 1)
    cols = complex.cells_of_dim(p)
    mat = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    pos = {cid: i for i, cid in enumerate(rows)}
    for j, cid in enumerate(cols):
        for fid, deg in complex.faces(cid).items():
            if deg % 2 and fid in pos:
                mat[pos[fid], j] = 1
    return mat


def _exact_log2(count: int) -> int:
    assert count > 0 and count & (count - 1) == 0, f"{count} is not a power of two"
    return count.bit_length() - 1


def oracle_homology(complex: CellComplex, max_cells: int = 14) -> HomologyResult:
    """Brute-force homology by enumerating every chain.

    For each dimension p, all 2**(number of p-cells) chains are listed;
    the cycle rank is the log of how many have empty boundary and the
    boundary rank is the log of how many distinct boundaries the
    (p+1)-chains produce. No elimination is involved, so this is a fully
    independent check of the reduction engine. Generators are not
    produced.

    Args:
        max_cells: refuse complexes with more cells than this
            (TooLargeError), since the cost is exponential.
    """
    if len(complex) > max_cells:
        raise TooLargeError(
            f"complex has {len(complex)} cells, enumeration bound is {max_cells}")
    records = []
    for p in range(0, complex.max_dim + 1):
        n_p = len(complex.cells_of_dim(p))
        if p == 0:
            z_p = n_p
        else:
            mat = _dense_boundary(complex, p)
            chains = _indicator_rows(n_p)
            boundaries = chains @ mat.T % 2
            kernel_count = int(np.count_nonzero(boundaries.sum(axis=1) == 0))
            z_p = _exact_log2(kernel_count)
        n_up = len(complex.cells_of_dim(p + 1))
        if n_up == 0 or n_p == 0:
            b_p = 0
        else:
            mat_up = _dense_boundary(complex, p + 1)
            chains_up = _indicator_rows(n_up)
            images = chains_up @ mat_up.T % 2
            image_count = int(np.unique(images, axis=0).shape[0])
            b_p = _exact_log2(image_count)
        records.append(DimensionHomology(
            dim=p, n_cells=n_p, cycle_rank=z_p, boundary_rank=b_p,
            betti=z_p - b_p, generators=()))
    return HomologyResult(tuple(records))
