"""Acceptance suite: one test per shipping criterion.

Each test prints a single PASS line when its criterion holds (visible
with ``pytest -v -s tests/test_acceptance.py``); assertion failures mark
the criterion red. Randomized criteria use fixed seeds so runs are
reproducible.
"""

import random
import time

import support
from test_cli import run_cli
from descell import (
    Chain,
    DescriptorBall,
    TransitionFunction,
    boundary_of,
    chain_inclusion,
    cycle_basis,
    derive_subcomplex,
    descriptive_homology,
    homology,
    make_chart,
    oracle_homology,
    signature,
    transition,
    transition_evolution,
    verify_cocycle,
    with_overrides,
)
from descell.formats import (
    emit_charts,
    emit_complex,
    emit_descriptors,
    emit_scenario,
    emit_signature,
    load_scenario,
    parse_charts,
    parse_complex,
    parse_descriptors,
    parse_scenario,
    parse_signature,
)
from conftest import DATA


def _corpus(seed=20, count=200, max_vertices=10):
    rng = random.Random(seed)
    return [support.random_simplicial_complex(rng, max_vertices) for _ in range(count)]


def test_criterion_01_classical_betti_suite():
    started = time.monotonic()
    cases = [
        ("circle", support.circle(), (1, 1)),
        ("interval", support.interval(), (1, 0)),
        ("two points", support.two_points(), (2,)),
        ("wedge of two circles", support.wedge_of_circles(2), (1, 2)),
        ("2-sphere", support.sphere(), (1, 0, 1)),
        ("torus", support.torus(), (1, 2, 1)),
        ("triangulated disk", support.disk3(), (1, 0, 0)),
    ]
    for name, k, expected in cases:
        engine = homology(k)
        oracle = oracle_homology(k, max_cells=16)
        assert engine.betti_vector() == expected, name
        assert engine.ranks() == oracle.ranks(), name
    elapsed = time.monotonic() - started
    assert elapsed < 1.0, f"suite took {elapsed:.3f}s"
    print(f"PASS criterion 1: classical Betti suite, engine == oracle ({elapsed:.3f}s)")


def test_criterion_02_boundary_squared_zero():
    rng = random.Random(101)
    complexes = _corpus()
    assert len(complexes) == 200
    failures = 0
    for k in complexes:
        if k.validate():
            failures += 1
            continue
        for _ in range(50):
            c = support.random_chain(rng, k)
            if boundary_of(k, boundary_of(k, c)):
                failures += 1
    assert failures == 0
    print("PASS criterion 2: 200 complexes x 50 chains, boundary of boundary empty")


def test_criterion_03_exactness_on_subcomplexes():
    rng = random.Random(103)
    failures = 0
    checked = 0
    for k in _corpus():
        probe = support.random_probe(rng, k, arity=1)
        center = (support.grid_value(rng),)
        delta = support.grid_value(rng)
        mode = rng.choice(("remove", "retain"))
        p = rng.randint(0, max(k.max_dim, 0))
        sub = derive_subcomplex(probe, DescriptorBall(center, delta), p, mode)
        inner = sub.complex
        for q in range(1, inner.max_dim + 1):
            for cid in inner.cells_of_dim(q):
                image = boundary_of(inner, Chain(q, {cid}))
                checked += 1
                if boundary_of(inner, image):
                    failures += 1
            for _ in range(5):
                image = boundary_of(inner, support.random_chain(rng, inner, q))
                checked += 1
                if boundary_of(inner, image):
                    failures += 1
    assert failures == 0
    print(f"PASS criterion 3: exactness on derived sub-complexes ({checked} boundary chains)")


def test_criterion_04_full_retention_recovers_classical():
    rng = random.Random(107)
    for _ in range(50):
        k = support.random_simplicial_complex(rng, max_vertices=7)
        probe = support.random_probe(rng, k, arity=2)
        values = list(probe.values.values())
        diameter = max(
            (sum((a - b) ** 2 for a, b in zip(u, v)) ** 0.5
             for u in values for v in values), default=0.0)
        ball = DescriptorBall(values[0], diameter + 1.0)
        p = rng.randint(0, max(k.max_dim, 0))
        recovered = descriptive_homology(probe, ball, p, "retain")
        assert recovered.betti_vector() == homology(k).betti_vector()
    print("PASS criterion 4: retain mode with covering ball equals classical homology (50 complexes)")


def test_criterion_05_hole_punching():
    probe = support.disk3_probe()
    base = homology(probe.complex)
    assert base.betti(1) == 0
    sub = derive_subcomplex(probe, DescriptorBall((0.9,), 0.0), 2, "remove")
    punched = homology(sub.complex, max_p=2)
    assert punched.betti(1) == 1
    assert oracle_homology(sub.complex, max_cells=14).betti(1) == 1
    print("PASS criterion 5: removing the red face turns beta_1 from 0 to 1")


def test_criterion_06_chain_inclusion_subgroup():
    rng = random.Random(109)
    failures = 0
    for _ in range(100):
        k = support.random_simplicial_complex(rng, max_vertices=8)
        probe = support.random_probe(rng, k, arity=1)
        center = (support.grid_value(rng),)
        delta = support.grid_value(rng)
        sub = derive_subcomplex(probe, DescriptorBall(center, delta),
                                rng.randint(0, max(k.max_dim, 0)),
                                rng.choice(("remove", "retain")))
        inner = sub.complex
        # identity element is included
        if chain_inclusion(sub, Chain.empty(1)) != Chain.empty(1):
            failures += 1
        for p in range(0, inner.max_dim + 1):
            c1 = support.random_chain(rng, inner, p)
            c2 = support.random_chain(rng, inner, p)
            # closure under addition, inside the included chain set
            total = chain_inclusion(sub, c1) + chain_inclusion(sub, c2)
            if total != chain_inclusion(sub, c1 + c2):
                failures += 1
            if not total.support <= set(inner.cells):
                failures += 1
            # included cycles stay cycles in the base complex
            for cyc in cycle_basis(inner, p):
                if boundary_of(k, chain_inclusion(sub, cyc)):
                    failures += 1
    assert failures == 0
    print("PASS criterion 6: included chains form a subgroup, cycles stay cycles (100 triples)")


def _random_cover(rng, k, probe, n_charts):
    cells = sorted(k.cells)
    anchor = rng.choice(cells)
    charts = []
    for i in range(n_charts):
        members = {anchor} | {c for c in cells if rng.random() < 0.5}
        charts.append(make_chart(probe, members, f"u{i}"))
    return charts


def test_criterion_07_gauge_cocycle_suite():
    rng = random.Random(113)
    for _ in range(100):
        k = support.random_cw_complex(rng)
        probe = support.random_probe(rng, k, arity=2)
        charts = _random_cover(rng, k, probe, rng.randint(2, 6))
        report = verify_cocycle(charts, tolerance=0.0, probe=probe)
        assert report.clean

    detected = 0
    for i in range(20):
        k = support.random_cw_complex(rng)
        probe = support.random_probe(rng, k, arity=2)
        charts = _random_cover(rng, k, probe, rng.randint(2, 6))
        if i % 2 == 0:
            # tampered transition table: the identities themselves break
            honest = transition(charts[0], charts[1])
            values = dict(honest.values)
            cell = sorted(values)[0]
            values[cell] = (values[cell][0] + 0.25, values[cell][1])
            tampered = {honest.pair: TransitionFunction(honest.pair, values)}
            report = verify_cocycle(charts, tolerance=0.0, transitions=tampered)
        else:
            # section no longer restricts the common probe
            cell = sorted(charts[0].cells)[0]
            bad = with_overrides(charts[0], {cell: (2.0, 2.0)})
            report = verify_cocycle([bad] + charts[1:], tolerance=0.0, probe=probe)
        if not report.clean:
            detected += 1
    assert detected == 20
    print("PASS criterion 7: 100 honest covers clean, 20 perturbed covers all flagged")


def test_criterion_08_oracle_equivalence_at_scale():
    started = time.monotonic()
    rng = random.Random(127)
    for _ in range(500):
        k = support.random_cw_complex(rng, max_cells=12)
        assert len(k) <= 12
        assert homology(k).ranks() == oracle_homology(k).ranks()
    elapsed = time.monotonic() - started
    assert elapsed < 10.0, f"took {elapsed:.2f}s"
    print(f"PASS criterion 8: engine == oracle on 500 complexes ({elapsed:.2f}s)")


def test_criterion_09_persistence_curve_and_golden_table():
    scenario, diags = load_scenario(str(DATA / "cooling.scenario"))
    assert scenario is not None and not diags

    red = (0.75, 0.75)
    curve = []
    for step in scenario.steps:
        sub = derive_subcomplex(step.probe, DescriptorBall(red, 0.0), 2, "remove")
        curve.append(oracle_homology(sub.complex, max_cells=12).betti(1))
    assert curve == [1, 0, 0]

    sig = signature(scenario, delta=0.0, mode="remove", max_p=2)
    assert sig.curve(red, 1) == [(0.0, 1), (1.0, 0), (2.0, 0)]
    golden = (DATA / "golden_cooling_signature.csv").read_text()
    assert emit_signature(sig) == golden
    # every golden row is reproduced by the enumeration oracle
    for ti, step in enumerate(scenario.steps):
        for alpha in sig.alphas:
            sub = derive_subcomplex(step.probe, DescriptorBall(alpha, 0.0), 2, "remove")
            reference = oracle_homology(sub.complex, max_cells=12)
            for p in sig.dims:
                assert sig.betti(ti, alpha, p) == reference.betti(p)

    trace = transition_evolution(scenario, support.REGION_I, support.REGION_J)
    temps = [v for _, v in trace.component_series(0)]
    assert temps == sorted(temps) and len(set(temps)) == len(temps)
    print("PASS criterion 9: [1, 0, 0] red curve, golden table exact, monotone trace")


def test_criterion_10_roundtrips_and_determinism():
    # format round-trips over the shipped fixtures
    for name in ("circle.cw", "interval.cw", "two_points.cw", "wedge.cw",
                 "sphere.cw", "torus.cw", "disk3.cw", "square.cw"):
        k, _ = parse_complex((DATA / name).read_text(), name)
        again, diags = parse_complex(emit_complex(k), name)
        assert not diags and again == k

    disk = support.disk3()
    table, _ = parse_descriptors((DATA / "disk3_probe.csv").read_text(), disk)
    table2, diags = parse_descriptors(emit_descriptors(table), disk)
    assert not diags and table2 == table

    probe = support.disk3_probe()
    for name in ("charts_ok.chart", "charts_override.chart"):
        charts, _ = parse_charts((DATA / name).read_text(), probe)
        charts2, diags = parse_charts(emit_charts(charts, probe), probe)
        assert not diags and charts2 == charts

    sf, _ = parse_scenario((DATA / "cooling.scenario").read_text())
    sf2, diags = parse_scenario(emit_scenario(sf))
    assert not diags and sf2 == sf

    sig, _ = parse_signature((DATA / "golden_cooling_signature.csv").read_text())
    sig2, diags = parse_signature(emit_signature(sig))
    assert not diags and sig2 == sig

    # repeated CLI runs produce identical bytes
    commands = [
        ("validate", "torus.cw"),
        ("homology", "disk3.cw", "--generators", "--oracle", "--oracle-bound", "16"),
        ("descriptive", "disk3.cw", "--probe", "disk3_probe.csv", "--spectrum"),
        ("gauge", "disk3.cw", "--probe", "disk3_probe.csv", "--charts", "charts_ok.chart"),
        ("persist", "cooling.scenario"),
    ]
    for args in commands:
        first = run_cli(*args)
        second = run_cli(*args)
        assert first == second, args
        assert first[0] == 0, args
    print("PASS criterion 10: five-format round-trips and byte-identical CLI runs")
