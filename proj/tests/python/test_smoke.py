import math

import pytest

import qhopf


def test_space_layout():
    space = qhopf.make_space([("1", 4), ("2", 4)])
    assert space.total_dim == 25
    assert space.flat_index([1, 2]) == 7
    assert space.occupations(7) == [1, 2]
    assert space.labels() == ["1", "2"]


def test_ladder_and_commutator():
    space = qhopf.make_space([("k", 10)])
    a = qhopf.annihilator(space, "k")
    n = qhopf.number_op(space, "k")
    comm = qhopf.commutator(n, a)
    assert abs((comm.matrix + a.matrix).max()) < 1e-12


def test_bogoliubov_pair():
    cutoff = 12
    space = qhopf.two_mode_space(cutoff)
    pair = qhopf.make_pair(0.5, space)
    ident = qhopf.identity_op(space)
    dev = qhopf.commutator(pair.A_theta, qhopf.adjoint(pair.A_theta)).matrix - ident.matrix
    # truncation corrupts the top occupations; check the low sub-block
    low = [space.flat_index([i, j]) for i in range(cutoff - 1) for j in range(cutoff - 1)]
    assert max(abs(dev[r, c]) for r in low for c in low) < 1e-10


def test_vacuum_and_entropy():
    vac = qhopf.vacuum_closed_pair(0.5, 20)
    s = qhopf.entropy_expectation(vac, qhopf.Sector.A)
    assert s == pytest.approx(qhopf.entropy_closed_form(0.5), abs=1e-10)

    rho = qhopf.partial_trace(vac.mode_states[0], [0])
    assert qhopf.von_neumann_entropy(rho) == pytest.approx(s, abs=1e-8)


def test_overlap_closed_form():
    assert qhopf.per_mode_overlap(0.3, 0.8, 30) == pytest.approx(
        1.0 / math.cosh(0.5), abs=1e-10
    )


def test_thermodynamics():
    theta_star = qhopf.stationary_theta(1.0, 1.0)
    assert math.sinh(theta_star) ** 2 == pytest.approx(
        qhopf.bose_occupancy(1.0, 1.0), abs=1e-10
    )


def test_weights_geometric():
    dist = qhopf.weights([0.5], 40)
    t2 = math.tanh(0.5) ** 2
    assert dist.weight(0) == pytest.approx(1.0 / math.cosh(0.5) ** 2, abs=1e-13)
    assert dist.weight(5) / dist.weight(4) == pytest.approx(t2, abs=1e-13)


def test_evolution_trace():
    sched = qhopf.ThetaSchedule.linear(0.1, 0.05, 0.0, 0.01, 50)
    trace = qhopf.evolve(sched, [qhopf.ModeSpec("k", 1.0, 0.0)], 1.0)
    assert len(trace.records) == 51
    assert all(abs(r.S_A_minus_S_B) < 1e-12 for r in trace.records)


def test_entanglement_report():
    vac = qhopf.vacuum_four_mode(0.5, 8)
    report = qhopf.entanglement_report(vac, 4)
    assert [s.schmidt_rank for s in report.sectors] == [1, 2, 3, 4, 5]
    for s in report.sectors:
        assert s.sector_weight == pytest.approx(s.expected_weight, rel=1e-5)
