"""Descriptor assignment and descriptor-driven sub-complexes.

A probe attaches a fixed-arity vector of real feature values to every
cell of a complex. Picking a reference value and a radius carves out the
cells whose descriptors fall inside that ball; removing them (or keeping
only them) and cascading the deletion upward through cofaces yields a
sub-complex whose homology reflects the chosen feature region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .cellcomplex import CellComplex, CellId
from .errors import (
    ArityMismatchError,
    DuplicateEntryError,
    ForeignCellError,
    MissingCellError,
)
from .homology import Chain, HomologyResult, homology

Descriptor = tuple[float, ...]


def _as_descriptor(values: Iterable[float]) -> Descriptor:
    out = tuple(float(v) for v in values)
    for v in out:
        if not math.isfinite(v):
            raise ValueError(f"descriptor component {v!r} is not finite")
    return out


@dataclass(frozen=True)
class DescriptorBall:
    """A closed Euclidean ball in descriptor space."""

    center: Descriptor
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", _as_descriptor(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if self.radius < 0:
            raise ValueError(f"radius must be non-negative, got {self.radius}")

    def contains(self, value: Descriptor) -> bool:
        if len(value) != len(self.center):
            raise ArityMismatchError(
                f"ball center has arity {len(self.center)}, value has {len(value)}")
        return math.dist(self.center, value) <= self.radius


class ProbeAssignment:
    """A complex together with one descriptor per cell.

    Immutable; build through ``assign_probe``.
    """

    def __init__(self, complex: CellComplex, values: Mapping[CellId, Descriptor], arity: int):
        self._complex = complex
        self._values = dict(values)
        self._arity = arity

    @property
    def complex(self) -> CellComplex:
        return self._complex

    @property
    def values(self) -> Mapping[CellId, Descriptor]:
        return MappingProxyType(self._values)

    @property
    def arity(self) -> int:
        return self._arity

    def __getitem__(self, cell_id: CellId) -> Descriptor:
        return self._values[cell_id]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProbeAssignment):
            return NotImplemented
        return (self._complex == other._complex
                and self._values == other._values
                and self._arity == other._arity)

    def __repr__(self) -> str:
        return f"<ProbeAssignment arity {self._arity} on {len(self._values)} cells>"


def assign_probe(complex: CellComplex,
                 table: Iterable[tuple[CellId, Iterable[float]]]) -> ProbeAssignment:
    """Attach descriptors to a complex, one per cell, uniform arity.

    Raises:
        DuplicateEntryError: a cell appears twice in the table.
        ForeignCellError: a table row names a cell not in the complex.
        ArityMismatchError: rows have different lengths.
        MissingCellError: some cell of the complex has no row.
    """
    values: dict[CellId, Descriptor] = {}
    arity: int | None = None
    for cid, raw in table:
        cid = str(cid)
        if cid in values:
            raise DuplicateEntryError(f"cell {cid!r} listed twice")
        if cid not in complex:
            raise ForeignCellError(f"cell {cid!r} is not in the complex")
        desc = _as_descriptor(raw)
        if arity is None:
            arity = len(desc)
        elif len(desc) != arity:
            raise ArityMismatchError(
                f"descriptor for {cid!r} has arity {len(desc)}, expected {arity}")
        values[cid] = desc
    missing = sorted(set(complex.cells) - set(values))
    if missing:
        raise MissingCellError(f"cells without descriptors: {', '.join(missing)}")
    return ProbeAssignment(complex, values, arity if arity is not None else 0)


def project(probe: ProbeAssignment) -> CellComplex:
    """Forget the descriptors: the bundle projection onto the base."""
    return probe.complex


def ball_members(probe: ProbeAssignment, ball: DescriptorBall, p: int) -> set[CellId]:
    """The p-cells whose descriptor lies inside the ball."""
    return {cid for cid in probe.complex.cells_of_dim(p) if ball.contains(probe[cid])}


@dataclass(frozen=True)
class DescriptiveSubcomplex:
    """Result of carving a complex along a descriptor ball.

    ``complex`` holds the surviving cells; ``removed`` records what was
    dropped, including cofaces removed by the upward cascade.
    """

    probe: ProbeAssignment
    ball: DescriptorBall
    dim: int
    mode: str
    complex: CellComplex
    removed: frozenset[CellId]


def derive_subcomplex(probe: ProbeAssignment, ball: DescriptorBall,
                      p: int = 2, mode: str = "remove") -> DescriptiveSubcomplex:
    """Delete (or keep only) the p-cells inside a descriptor ball.

    In "remove" mode the p-cells inside the ball are deleted; in
    "retain" mode the p-cells outside the ball are deleted. Cells of
    dimension below p always survive. Every higher cell whose closure
    meets a deleted cell is deleted too, so the result is face-closed
    and passes validation whenever the base does.
    """
    if mode not in ("remove", "retain"):
        raise ValueError(f"mode must be 'remove' or 'retain', got {mode!r}")
    if p < 0:
        raise ValueError(f"dimension must be non-negative, got {p}")
    base = probe.complex
    members = ball_members(probe, ball, p)
    if mode == "remove":
        removed = set(members)
    else:
        removed = set(base.cells_of_dim(p)) - members
    # Upward cascade: one ascending sweep suffices because faces of a
    # q-cell were settled at q-1.
    for q in range(p + 1, base.max_dim + 1):
        for cid in base.cells_of_dim(q):
            if any(fid in removed for fid in base.faces(cid)):
                removed.add(cid)
    cells = {cid: d for cid, d in base.cells.items() if cid not in removed}
    incidence = {
        (c, f): deg for (c, f), deg in base.incidence.items()
        if c in cells and f in cells
    }
    return DescriptiveSubcomplex(
        probe=probe, ball=ball, dim=p, mode=mode,
        complex=CellComplex(cells, incidence), removed=frozenset(removed))


def descriptive_homology(probe: ProbeAssignment, ball: DescriptorBall,
                         p: int = 2, mode: str = "remove",
                         max_p: int | None = None) -> HomologyResult:
    """Homology of the derived sub-complex.

    ``max_p`` defaults to the base complex's top dimension so Betti
    vectors stay comparable across different balls.
    """
    sub = derive_subcomplex(probe, ball, p, mode)
    if max_p is None:
        max_p = probe.complex.max_dim
    return homology(sub.complex, max_p=max_p)


def alpha_spectrum(probe: ProbeAssignment, p: int) -> list[Descriptor]:
    """Distinct descriptor values of the p-cells, lexicographically sorted."""
    return sorted({probe[cid] for cid in probe.complex.cells_of_dim(p)})


def chain_inclusion(sub: DescriptiveSubcomplex, chain: Chain) -> Chain:
    """Reinterpret a sub-complex chain inside the base complex.

    The support is unchanged; inclusion is injective and additive.

    Raises:
        ForeignCellError: the chain uses cells absent from the sub-complex.
    """
    for cid in chain.support:
        if cid not in sub.complex:
            raise ForeignCellError(f"cell {cid!r} is not in the sub-complex")
        if sub.complex.dim_of(cid) != chain.dim:
            raise ForeignCellError(
                f"cell {cid!r} has dimension {sub.complex.dim_of(cid)}, "
                f"chain claims {chain.dim}")
    return Chain(chain.dim, chain.support)
