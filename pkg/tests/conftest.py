"""Shared oracles and generators for the test suite."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

import pytest

from burnkit.burning import BurningSchedule, simulate
from burnkit.errors import ScheduleError
from burnkit.graph import Graph
from burnkit.partition import (
    Partition3,
    ThreePartitionInstance,
    validate_instance,
)


def naive_burning_number(g: Graph) -> int:
    """Brute-force oracle: try every source sequence by length."""
    for k in range(1, g.n + 1):
        for perm in itertools.permutations(range(g.n), k):
            try:
                outcome = simulate(g, BurningSchedule.of(perm))
            except ScheduleError:
                continue
            if outcome.complete:
                return k
    raise AssertionError("every graph burns in at most n rounds")


def optimal_schedules(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Every valid complete schedule of exactly k rounds."""
    for perm in itertools.permutations(range(g.n), k):
        try:
            outcome = simulate(g, BurningSchedule.of(perm))
        except ScheduleError:
            continue
        if outcome.complete:
            yield perm


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_solvable_instance(
    rng: random.Random, n: int, slack: int = 1
) -> tuple[ThreePartitionInstance, Partition3]:
    """A solvable instance with n triples, built from a known solution.

    Triple i is (A+i, B+i, C-2i): one value from each of three disjoint
    runs, so every sum equals A+B+C.  The run starts keep each value
    strictly between a quarter and half of that sum.  slack widens the
    gaps between runs; the largest element is at most 9n - 2 + 5*slack.
    """
    g1 = rng.randint(0, slack)
    g2 = rng.randint(0, slack)
    first = 5 * n + 2 * g1 + g2
    second = first + n + g1
    third = second + 3 * n - 2 + g2
    triples = [(first + i, second + i, third - 2 * i) for i in range(n)]
    total = first + second + third
    elements = sorted(v for t in triples for v in t)
    assert all(4 * v > total and 2 * v < total for v in elements)
    instance = ThreePartitionInstance.of(elements)
    validate_instance(instance)
    return instance, Partition3.of(triples)


@pytest.fixture
def worked_instance() -> ThreePartitionInstance:
    return ThreePartitionInstance.of([10, 11, 12, 14, 15, 16])


@pytest.fixture
def tiny_instance() -> ThreePartitionInstance:
    return ThreePartitionInstance.of([4, 5, 6])


@pytest.fixture
def unsolvable_instance() -> ThreePartitionInstance:
    # any triple holding 21 needs a pair summing 22, but the smallest
    # available pair is 11 + 12
    return ThreePartitionInstance.of([11, 12, 13, 14, 15, 21])
