from __future__ import annotations

import itertools
import random

import pytest

from burnkit.burning import (
    BurningSchedule,
    assert_agreement,
    clusters,
    greedy_burn,
    read_schedule,
    simulate,
    verify_schedule,
    write_schedule,
)
from burnkit.errors import InputError, ScheduleError
from burnkit.graph import (
    Graph,
    build_comb,
    build_grid,
    build_path,
    build_path_forest,
)
from conftest import optimal_schedules, random_graph


class TestSimulate:
    def test_path_of_nine_in_three_steps(self):
        # sources v3, v7, v9 in 1-based vertex naming
        g = build_path(9)
        out = simulate(g, [2, 6, 8])
        assert out.complete and out.rounds_used == 3
        assert out.burned_by_round(1) == {2}
        assert out.burned_by_round(2) == {1, 2, 3, 6}
        assert out.burned_by_round(3) == set(range(9))

    def test_burn_round_records_first_fire(self):
        out = simulate(build_path(9), [2, 6, 8])
        assert out.burn_round == (3, 2, 1, 2, 3, 3, 2, 3, 3)

    def test_repeated_source_rejected(self):
        with pytest.raises(ScheduleError, match="repeats"):
            simulate(build_path(5), [1, 1])

    def test_source_already_burnt_rejected(self):
        g = build_path(5)
        with pytest.raises(
            ScheduleError, match="source 2 of round 3 already burnt in round 2"
        ):
            simulate(g, [1, 3, 2])

    def test_source_caught_by_same_round_spread_is_fine(self):
        # 2 is unburnt when round 2 starts; the round's own spread may
        # reach it without invalidating the schedule
        out = simulate(build_path(5), [1, 2])
        assert out.burn_round[2] == 2 and not out.complete

    def test_source_out_of_range_rejected(self):
        with pytest.raises(ScheduleError):
            simulate(build_path(3), [5])

    def test_incomplete_schedule(self):
        out = simulate(build_path(9), [0])
        assert not out.complete and out.rounds_used == 1

    def test_to_completion_keeps_spreading(self):
        out = simulate(build_path(9), [4], to_completion=True)
        assert out.complete and out.rounds_used == 5

    def test_to_completion_stops_on_stranded_component(self):
        g = build_path_forest([3, 2])
        out = simulate(g, [1], to_completion=True)
        assert not out.complete and out.burn_round[3] is None

    def test_empty_schedule_rejected(self):
        with pytest.raises(ScheduleError):
            simulate(build_path(3), [])


class TestClusters:
    def test_fig_style_clusters_tile_the_path(self):
        g = build_path(9)
        parts = clusters(g, [2, 6, 8])
        assert [len(c) for c in parts] == [5, 3, 1]
        assert set().union(*parts) == set(range(9))

    def test_grid_clusters(self):
        g = build_grid(3, 3)
        parts = clusters(g, [4, 0, 1])
        assert [len(c) for c in parts] == [9, 3, 1]


class TestVerify:
    def test_accepts_complete(self):
        assert verify_schedule(build_path(9), [2, 6, 8]) is True

    def test_flags_incomplete(self):
        assert verify_schedule(build_path(9), [2, 6]) is False

    def test_rejects_with_round_indices(self):
        with pytest.raises(ScheduleError, match="source 3 of round 3"):
            verify_schedule(build_path(9), [4, 8, 3])

    def test_cross_characterization_random(self):
        rng = random.Random(424242)
        for _ in range(400):
            n = rng.randint(1, 18)
            g = random_graph(rng, n, rng.uniform(0.05, 0.5))
            length = rng.randint(1, min(n, 6))
            sched = [rng.randrange(n) for _ in range(length)]
            try:
                assert_agreement(g, sched)
            except ScheduleError:
                pass  # both deciders rejected; agreement already checked

    def test_relabeling_invariance(self):
        rng = random.Random(99)
        for _ in range(60):
            n = rng.randint(2, 12)
            g = random_graph(rng, n, 0.3)
            perm = list(range(n))
            rng.shuffle(perm)
            h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
            sched = [rng.randrange(n) for _ in range(rng.randint(1, 5))]
            mapped = [perm[v] for v in sched]
            try:
                a = simulate(g, sched).complete
            except ScheduleError:
                a = None
            try:
                b = simulate(h, mapped).complete
            except ScheduleError:
                b = None
            assert a == b


class TestObservations:
    @pytest.mark.parametrize("n,k", [(4, 2), (9, 3)])
    def test_optimal_path_clusters_pairwise_disjoint(self, n, k):
        g = build_path(n)
        found = 0
        for sched in optimal_schedules(g, k):
            parts = clusters(g, sched)
            found += 1
            for a, b in itertools.combinations(parts, 2):
                assert not (a & b), (sched, parts)
        assert found > 0

    def test_two_spine_sources_on_comb_overlap(self):
        # comb over a 7-vertex spine: whenever two spine-placed clusters
        # of distinct radii cover the whole comb, they share a spine vertex
        from burnkit.graph import ball

        g = build_comb(7)
        spine = set(range(7))
        everything = set(range(g.n))
        covering_pairs = 0
        for x1, x2 in itertools.permutations(sorted(spine), 2):
            for r1 in range(1, 8):
                for r2 in range(r1):
                    c1 = ball(g, (x1,), r1)
                    c2 = ball(g, (x2,), r2)
                    if c1 | c2 == everything:
                        covering_pairs += 1
                        assert c1 & c2 & spine, (x1, x2, r1, r2)
        assert covering_pairs > 50

    @pytest.mark.parametrize("spine", [3, 4, 5, 6, 7, 8, 9, 10])
    def test_comb_burns_like_its_spine_from_one_source(self, spine):
        bare = build_path(spine)
        comb = build_comb(spine)
        for v in range(spine):
            a = simulate(bare, [v], to_completion=True)
            b = simulate(comb, [v], to_completion=True)
            assert a.complete and b.complete
            assert a.rounds_used == b.rounds_used


class TestGreedy:
    def test_completes_on_assorted_graphs(self):
        rng = random.Random(5)
        graphs = [
            build_path(1),
            build_path(17),
            build_grid(4, 6),
            build_path_forest([9, 1, 4]),
            build_comb(9),
        ]
        graphs += [random_graph(rng, rng.randint(1, 25), 0.2)
                   for _ in range(20)]
        for g in graphs:
            sched = greedy_burn(g)
            out = simulate(g, sched)
            assert out.complete and out.rounds_used == len(sched)

    def test_reasonable_on_paths(self):
        # within the factor guaranteed by restarting at the center
        for n in (1, 4, 9, 25, 64, 100):
            sched = greedy_burn(build_path(n))
            assert len(sched) <= 2 * int(n**0.5) + 2


class TestScheduleIO:
    def test_round_trip(self):
        sched = BurningSchedule.of([4, 0, 2])
        assert tuple(read_schedule(write_schedule(sched))) == (4, 0, 2)

    def test_parse_errors(self):
        with pytest.raises(InputError):
            read_schedule("1 two 3")
        with pytest.raises(InputError):
            read_schedule("  \n")
