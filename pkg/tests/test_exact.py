from __future__ import annotations

import math
import random

import pytest

from burnkit.burning import simulate
from burnkit.errors import BudgetExceededError
from burnkit.exact import can_burn_in, exact_burning_number
from burnkit.graph import Graph, build_grid, build_path, build_path_forest
from conftest import naive_burning_number, random_graph


class TestPaths:
    @pytest.mark.parametrize("n", list(range(1, 37)))
    def test_closed_form(self, n):
        # a path of n vertices burns in ceil(sqrt(n)) rounds
        res = exact_burning_number(build_path(n))
        assert res.k == math.isqrt(n - 1) + 1

    def test_witness_is_replayable(self):
        g = build_path(25)
        res = exact_burning_number(g)
        out = simulate(g, res.witness)
        assert out.complete and out.rounds_used == res.k == 5


class TestAgainstBruteForce:
    def test_small_random_graphs(self):
        rng = random.Random(20260815)
        for _ in range(60):
            n = rng.randint(1, 9)
            g = random_graph(rng, n, rng.uniform(0.1, 0.6))
            res = exact_burning_number(g)
            assert res.k == naive_burning_number(g), g.edges

    def test_small_structured_graphs(self):
        cases = [
            (build_grid(2, 3), 3),
            (build_grid(3, 3), 3),
            (build_path_forest([9, 1]), 4),
            (Graph(5, []), 5),
            (Graph(1, []), 1),
        ]
        for g, expected in cases:
            assert exact_burning_number(g).k == expected

    def test_complete_graphs_burn_in_two(self):
        for n in (2, 3, 7, 12):
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
            assert exact_burning_number(Graph(n, edges)).k == 2


class TestCanBurnIn:
    def test_below_lower_bound_is_none(self):
        assert can_burn_in(build_path(26), 5) is None
        assert can_burn_in(build_path(9), 0) is None

    def test_at_answer_gives_witness(self):
        g = build_path(9)
        witness = can_burn_in(g, 3)
        assert witness is not None and len(witness) <= 3
        assert simulate(g, witness).complete

    def test_generous_k_still_returns_short_witness(self):
        g = build_path(9)
        witness = can_burn_in(g, 8)
        assert witness is not None and len(witness) <= 8
        assert simulate(g, witness).complete


class TestBudget:
    def test_budget_error_carries_node_count(self):
        # 16 odd paths admit a 16-round burn only through a full tiling,
        # far beyond a 3-node allowance
        g = build_path_forest([2 * i + 1 for i in range(16)])
        with pytest.raises(BudgetExceededError) as exc:
            can_burn_in(g, 16, node_budget=3)
        assert exc.value.nodes_explored >= 3

    def test_result_reports_nodes(self):
        res = exact_burning_number(build_path(16))
        assert res.nodes_explored >= 0


class TestLargerInstances:
    def test_spread_out_forest(self):
        # 16 paths of the odd lengths 1, 3, ..., 31 burn in exactly 16:
        # total order 256 means 16 rounds can just barely cover it
        lengths = [2 * i + 1 for i in range(16)]
        g = build_path_forest(lengths)
        res = exact_burning_number(g)
        assert res.k == 16
        out = simulate(g, res.witness)
        assert out.complete and out.rounds_used == 16

    def test_disjoint_cliques(self):
        # three K_4s need one source each plus a spare round
        edges = []
        for base in (0, 4, 8):
            edges += [
                (base + u, base + v) for u in range(4) for v in range(u + 1, 4)
            ]
        assert exact_burning_number(Graph(12, edges)).k == 4
