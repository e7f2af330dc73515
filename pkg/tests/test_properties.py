import random

import pytest

from harrisgraphs import (
    CeilingError,
    JungResult,
    build_graph,
    components_after_removal,
    find_hamiltonian_cycle,
    is_eulerian,
    is_harris,
    is_tough,
    jung_shortcut,
    sigma2,
    validate_cycle,
)
from harrisgraphs.properties import (
    HAMILTONICITY_MAX_N,
    TOUGHNESS_MAX_N,
    _backtracking_cycle,
    _dp_cycle,
)

from oracles import (
    oracle_is_eulerian,
    oracle_is_hamiltonian,
    oracle_is_tough,
)


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_connected(rng, n, p=0.35):
    while True:
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = build_graph(n, edges)
        if components_after_removal(g, ())[0] == 1:
            return g


class TestEulerian:
    def test_cycle_is_eulerian(self):
        ok, witness = is_eulerian(cycle(5))
        assert ok and witness is None

    def test_odd_degree_witness(self):
        ok, witness = is_eulerian(build_graph(3, [(0, 1)]))
        assert not ok
        kind, v = witness
        assert kind == "odd_degree" and build_graph(3, [(0, 1)]).degree(v) % 2 == 1

    def test_disconnected_witness(self):
        g = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        ok, witness = is_eulerian(g)
        assert not ok
        assert witness[0] == "disconnected"
        _, u, v = witness
        parts = components_after_removal(g, ())[1]
        assert not any(u in p and v in p for p in parts)

    @pytest.mark.parametrize("seed", range(25))
    def test_matches_oracle(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 8)
        edges = {
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45
        }
        g = build_graph(n, edges)
        assert is_eulerian(g)[0] == oracle_is_eulerian(n, set(g.edges))


class TestToughness:
    def test_known_graphs(self):
        assert is_tough(cycle(7)).tough
        assert is_tough(build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])).tough
        # a star disconnects badly on its center
        star = build_graph(5, [(0, i) for i in range(1, 5)])
        verdict = is_tough(star)
        assert not verdict.tough and verdict.violating_set == frozenset({0})

    def test_disconnected_has_empty_violating_set(self):
        verdict = is_tough(build_graph(4, [(0, 1), (2, 3)]))
        assert not verdict.tough and verdict.violating_set == frozenset()

    def test_violating_set_replays(self):
        # two triangles joined through a cut vertex
        bowtie = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        verdict = is_tough(bowtie)
        assert not verdict.tough
        s = verdict.violating_set
        count, _ = components_after_removal(bowtie, s)
        assert count > max(1, len(s))

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_subset_oracle(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 9)
        g = random_connected(rng, n, p=rng.choice([0.3, 0.5, 0.7]))
        assert is_tough(g).tough == oracle_is_tough(n, set(g.edges))

    def test_ceiling(self):
        with pytest.raises(CeilingError):
            is_tough(cycle(TOUGHNESS_MAX_N + 1))


class TestHamiltonicity:
    def test_cycle_and_witness(self):
        verdict = find_hamiltonian_cycle(cycle(8))
        assert verdict.hamiltonian and validate_cycle(cycle(8), verdict.cycle)

    def test_petersen_is_not_hamiltonian(self, petersen):
        assert not find_hamiltonian_cycle(petersen).hamiltonian

    def test_small_and_degenerate(self):
        assert not find_hamiltonian_cycle(build_graph(2, [(0, 1)])).hamiltonian
        assert not find_hamiltonian_cycle(build_graph(4, [(0, 1), (2, 3)])).hamiltonian

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_permutation_oracle(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 8)
        g = random_connected(rng, n, p=rng.choice([0.3, 0.5, 0.7]))
        verdict = find_hamiltonian_cycle(g)
        assert verdict.hamiltonian == oracle_is_hamiltonian(n, set(g.edges))
        if verdict.hamiltonian:
            assert validate_cycle(g, verdict.cycle)

    @pytest.mark.parametrize("seed", range(15))
    def test_dp_and_backtracking_agree(self, seed):
        rng = random.Random(500 + seed)
        g = random_connected(rng, rng.randint(8, 14), p=0.3)
        if min(g.degrees()) < 2:
            return
        assert (_dp_cycle(g) is None) == (_backtracking_cycle(g) is None)

    def test_backtracking_handles_large_sparse_graph(self):
        assert find_hamiltonian_cycle(cycle(38)).hamiltonian

    def test_ceiling(self):
        with pytest.raises(CeilingError):
            find_hamiltonian_cycle(cycle(HAMILTONICITY_MAX_N + 1))

    def test_validate_cycle_rejects_bad_input(self):
        g = cycle(5)
        assert not validate_cycle(g, (0, 1, 2, 3))
        assert not validate_cycle(g, (0, 1, 2, 3, 3))
        assert not validate_cycle(g, (0, 2, 4, 1, 3))


class TestSigma2AndJung:
    def test_sigma2(self):
        assert sigma2(cycle(5)) == 4
        complete = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        assert sigma2(complete) is None

    def test_jung_positive(self):
        n = 12
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not (u == 0 and v == 1)
        ]
        g = build_graph(n, edges)
        assert jung_shortcut(g) is JungResult.HAMILTONIAN_BY_LEMMA
        assert find_hamiltonian_cycle(g).hamiltonian

    def test_jung_never_fires_below_order_11(self):
        assert jung_shortcut(cycle(10)) is JungResult.UNKNOWN

    def test_jung_needs_degree_sum(self):
        assert jung_shortcut(cycle(12)) is JungResult.UNKNOWN


class TestHarrisVerdict:
    def test_positive(self, h7):
        verdict = is_harris(h7)
        assert verdict.is_harris
        assert verdict.eulerian and verdict.toughness.tough
        assert not verdict.hamiltonicity.hamiltonian

    def test_negative_cases(self, petersen):
        assert not is_harris(cycle(8)).is_harris  # Hamiltonian
        assert not is_harris(petersen).is_harris  # odd degrees
        assert not is_harris(cycle(3)).is_harris  # Hamiltonian triangle

    def test_short_circuit_skips_later_checks(self):
        verdict = is_harris(build_graph(3, [(0, 1)]), full_report=False)
        assert not verdict.is_harris
        assert verdict.toughness is None and verdict.hamiltonicity is None

    def test_tiny_graphs_are_never_harris(self):
        assert not is_harris(build_graph(1, [])).is_harris
        assert not is_harris(build_graph(2, [(0, 1)])).is_harris
