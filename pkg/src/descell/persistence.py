"""Parameterized descriptor scenarios and Betti signatures.

A scenario fixes one base complex and re-describes it at a strictly
increasing sequence of parameter values (time, typically). Per step, the
descriptor-ball machinery yields Betti numbers; collecting them over the
union of observed descriptor values gives a rectangular signature table
that can be compared between scenarios. Transition traces follow the
translation between two regions' descriptions across the steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .cellcomplex import CellComplex, CellId
from .descriptive import (
    Descriptor,
    DescriptorBall,
    ProbeAssignment,
    alpha_spectrum,
    assign_probe,
    descriptive_homology,
)
from .errors import (
    ArityMismatchError,
    EmptyOverlapError,
    ForeignCellError,
    MetadataMismatchError,
    NonMonotoneThetaError,
    StepCountMismatchError,
)


@dataclass(frozen=True)
class ScenarioStep:
    theta: float
    probe: ProbeAssignment


@dataclass(frozen=True)
class Scenario:
    """A base complex described at successive parameter values."""

    complex: CellComplex
    steps: tuple[ScenarioStep, ...]

    @property
    def thetas(self) -> tuple[float, ...]:
        return tuple(s.theta for s in self.steps)


def build_scenario(complex: CellComplex,
                   steps: Iterable[tuple[float, Iterable[tuple[CellId, Iterable[float]]]]],
                   ) -> Scenario:
    """Assemble a scenario from (theta, descriptor table) pairs.

    Raises:
        NonMonotoneThetaError: thetas not strictly increasing.
        ArityMismatchError: steps disagree on descriptor arity.
        Plus whatever ``assign_probe`` raises for a bad table.
    """
    built: list[ScenarioStep] = []
    last: float | None = None
    arity: int | None = None
    for theta, table in steps:
        theta = float(theta)
        if last is not None and theta <= last:
            raise NonMonotoneThetaError(
                f"theta {theta!r} does not increase past {last!r}")
        last = theta
        probe = assign_probe(complex, table)
        if arity is None:
            arity = probe.arity
        elif probe.arity != arity:
            raise ArityMismatchError(
                f"step at theta {theta!r} has arity {probe.arity}, expected {arity}")
        built.append(ScenarioStep(theta=theta, probe=probe))
    return Scenario(complex=complex, steps=tuple(built))


def betti_curve(scenario: Scenario, ball: DescriptorBall, p: int,
                mode: str = "remove", removal_dim: int = 2) -> list[tuple[float, int]]:
    """The dimension-p Betti number per step for one descriptor ball."""
    out = []
    for step in scenario.steps:
        hom = descriptive_homology(step.probe, ball, removal_dim, mode, max_p=p)
        out.append((step.theta, hom.betti(p)))
    return out


@dataclass(frozen=True)
class PersistenceSignature:
    """Rectangular table (step, descriptor value, dimension) -> Betti.

    ``alphas`` is the union of the descriptor values seen at the removal
    dimension across all steps, so every step has a row for every alpha;
    a value absent from some step simply selects nothing there.
    """

    mode: str
    delta: float
    removal_dim: int
    thetas: tuple[float, ...]
    alphas: tuple[Descriptor, ...]
    dims: tuple[int, ...]
    table: Mapping[tuple[int, Descriptor, int], int]

    def __post_init__(self):
        object.__setattr__(self, "table", dict(self.table))

    def betti(self, step_index: int, alpha: Descriptor, p: int) -> int:
        return self.table[(step_index, tuple(alpha), p)]

    def rows(self):
        """Canonical row order: theta ascending, alpha lexicographic,
        dimension ascending."""
        for ti, theta in enumerate(self.thetas):
            for alpha in self.alphas:
                for p in self.dims:
                    yield theta, alpha, p, self.table[(ti, alpha, p)]

    def curve(self, alpha: Descriptor, p: int) -> list[tuple[float, int]]:
        alpha = tuple(alpha)
        return [(theta, self.table[(ti, alpha, p)])
                for ti, theta in enumerate(self.thetas)]

    def __len__(self) -> int:
        return len(self.table)


def signature(scenario: Scenario, delta: float = 0.0, mode: str = "remove",
              max_p: int | None = None, removal_dim: int = 2) -> PersistenceSignature:
    """Betti signature over every observed descriptor value and step.

    Per-step and per-alpha entries are independent computations, so the
    table is deterministic regardless of evaluation order.
    """
    if max_p is None:
        max_p = scenario.complex.max_dim
    alphas: set[Descriptor] = set()
    for step in scenario.steps:
        alphas.update(alpha_spectrum(step.probe, removal_dim))
    sorted_alphas = tuple(sorted(alphas))
    dims = tuple(range(0, max_p + 1))
    table: dict[tuple[int, Descriptor, int], int] = {}
    for ti, step in enumerate(scenario.steps):
        for alpha in sorted_alphas:
            hom = descriptive_homology(
                step.probe, DescriptorBall(alpha, delta), removal_dim, mode, max_p=max_p)
            for p in dims:
                table[(ti, alpha, p)] = hom.betti(p)
    return PersistenceSignature(
        mode=mode, delta=float(delta), removal_dim=removal_dim,
        thetas=scenario.thetas, alphas=sorted_alphas, dims=dims, table=table)


@dataclass(frozen=True)
class TransitionTrace:
    """Per-step translation between two regions' descriptions."""

    pair: tuple[str, str]
    overlap: tuple[CellId, ...]
    entries: tuple[tuple[float, dict[CellId, Descriptor]], ...]

    def component_series(self, k: int) -> list[tuple[float, float]]:
        """One descriptor component of the (region-constant) translation
        per step."""
        out = []
        first = self.overlap[0]
        for theta, values in self.entries:
            out.append((theta, values[first][k]))
        return out


def _region_representative(complex: CellComplex, cells: frozenset[CellId]) -> CellId:
    top = max(complex.dim_of(c) for c in cells)
    return min(c for c in cells if complex.dim_of(c) == top)


def transition_evolution(scenario: Scenario,
                         cells_i: Iterable[CellId],
                         cells_j: Iterable[CellId],
                         rep_i: CellId | None = None,
                         rep_j: CellId | None = None,
                         ids: tuple[str, str] = ("i", "j")) -> TransitionTrace:
    """Track the translation between two regions across the steps.

    A region's description at a step is the descriptor of its
    representative cell (by default the lexicographically first cell of
    the region's top dimension), matching the reading of a region-valued
    probe: the region's fibre value stands for all of its cells. The
    translation is that of region i relative to region j, constant over
    the overlap.

    Raises:
        ForeignCellError: region cells missing from the base complex.
        EmptyOverlapError: the regions share no cell.
    """
    base = scenario.complex
    set_i = frozenset(str(c) for c in cells_i)
    set_j = frozenset(str(c) for c in cells_j)
    for cid in sorted((set_i | set_j)):
        if cid not in base:
            raise ForeignCellError(f"cell {cid!r} is not in the scenario complex")
    if not set_i or not set_j:
        raise EmptyOverlapError("regions must be nonempty")
    overlap = tuple(sorted(set_i & set_j))
    if not overlap:
        raise EmptyOverlapError("regions share no cells")
    rep_i = str(rep_i) if rep_i is not None else _region_representative(base, set_i)
    rep_j = str(rep_j) if rep_j is not None else _region_representative(base, set_j)
    if rep_i not in set_i or rep_j not in set_j:
        raise ForeignCellError("representatives must belong to their regions")
    entries = []
    for step in scenario.steps:
        vec = tuple(a - b for a, b in zip(step.probe[rep_i], step.probe[rep_j]))
        entries.append((step.theta, {cid: vec for cid in overlap}))
    return TransitionTrace(pair=ids, overlap=overlap, entries=tuple(entries))


def compare_signatures(s1: PersistenceSignature, s2: PersistenceSignature) -> int:
    """L1 distance between two signatures aligned by step index.

    Tables are joined on the union of their (alpha, dimension) keys with
    missing entries counted as 0.

    Raises:
        MetadataMismatchError: settings (mode, delta, removal dimension,
            covered dimensions) differ.
        StepCountMismatchError: different number of steps.
    """
    meta1 = (s1.mode, s1.delta, s1.removal_dim, s1.dims)
    meta2 = (s2.mode, s2.delta, s2.removal_dim, s2.dims)
    if meta1 != meta2:
        raise MetadataMismatchError(f"signature settings differ: {meta1} vs {meta2}")
    if len(s1.thetas) != len(s2.thetas):
        raise StepCountMismatchError(
            f"signatures cover {len(s1.thetas)} vs {len(s2.thetas)} steps")
    keys = set()
    for alpha in set(s1.alphas) | set(s2.alphas):
        for p in s1.dims:
            keys.add((alpha, p))
    total = 0
    for ti in range(len(s1.thetas)):
        for alpha, p in keys:
            v1 = s1.table.get((ti, alpha, p), 0)
            v2 = s2.table.get((ti, alpha, p), 0)
            total += abs(v1 - v2)
    return total
