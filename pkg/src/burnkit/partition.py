"""Distinct 3-partition instances and an exact backtracking solver.

An instance is a set of 3n distinct positive integers summing to n * B
whose every element lies strictly between B / 4 and B / 2; a solution
splits it into n triples that each sum to B.  The window makes every
group have exactly three members, which is what the graph reductions
elsewhere in the package lean on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BudgetExceededError, InstanceError

DEFAULT_NODE_BUDGET = 1_000_000

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class ThreePartitionInstance:
    elements: tuple[int, ...]

    @classmethod
    def of(cls, elements: Iterable[int]) -> ThreePartitionInstance:
        return cls(tuple(elements))

    @property
    def n(self) -> int:
        """Number of triples a solution must have."""
        return len(self.elements) // 3

    @property
    def target(self) -> int:
        """The common triple sum B, with sum(elements) = n * B."""
        if not self.elements or len(self.elements) % 3:
            raise InstanceError(
                f"element count {len(self.elements)} is not a multiple of 3"
            )
        total = sum(self.elements)
        if total % self.n:
            raise InstanceError(
                f"sum {total} is not divisible by triple count {self.n}"
            )
        return total // self.n


@dataclass(frozen=True)
class Partition3:
    """A solution: triples sorted within and between, so comparable."""

    triples: tuple[Triple, ...]

    @classmethod
    def of(cls, triples: Iterable[Iterable[int]]) -> Partition3:
        canon = sorted(tuple(sorted(t)) for t in triples)
        for t in canon:
            if len(t) != 3:
                raise InstanceError(f"group {t} does not have 3 members")
        return cls(tuple(canon))  # type: ignore[arg-type]


def validate_instance(instance: ThreePartitionInstance) -> None:
    """Raise InstanceError naming the first violated shape rule."""
    els = instance.elements
    if not els:
        raise InstanceError("instance has no elements")
    if len(els) % 3:
        raise InstanceError(
            f"element count {len(els)} is not a multiple of 3"
        )
    for a in els:
        if a < 1:
            raise InstanceError(f"elements must be positive, got {a}")
    seen: set[int] = set()
    for a in els:
        if a in seen:
            raise InstanceError(f"elements must be distinct, {a} repeats")
        seen.add(a)
    b = instance.target
    for a in els:
        if not 4 * a > b:
            raise InstanceError(
                f"element {a} is not strictly above a quarter of target {b}"
            )
        if not 2 * a < b:
            raise InstanceError(
                f"element {a} is not strictly below half of target {b}"
            )


def verify_partition(
    instance: ThreePartitionInstance, partition: Partition3
) -> bool:
    """True iff the triples use each element once and all sum to target."""
    flat = [a for t in partition.triples for a in t]
    if sorted(flat) != sorted(instance.elements):
        return False
    b = instance.target
    return all(sum(t) == b for t in partition.triples)


def solve_3partition(
    instance: ThreePartitionInstance,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Partition3 | None:
    """Find a distinct 3-partition, or prove there is none.

    Backtracks on the largest unplaced element: its two partners are
    scanned in decreasing order, with the third member looked up by
    value.  Raises BudgetExceededError if node_budget recursion steps
    are not enough to settle the instance.
    """
    validate_instance(instance)
    b = instance.target
    order = sorted(instance.elements, reverse=True)
    index_of = {a: i for i, a in enumerate(order)}
    m = len(order)
    used = [False] * m
    chosen: list[Triple] = []
    spent = 0

    def extend(lo: int) -> bool:
        nonlocal spent
        spent += 1
        if spent > node_budget:
            raise BudgetExceededError(
                f"solver budget of {node_budget} nodes exhausted",
                nodes_explored=spent,
            )
        i = lo
        while i < m and used[i]:
            i += 1
        if i == m:
            return True
        a = order[i]
        used[i] = True
        need = b - a
        for j in range(i + 1, m):
            if used[j]:
                continue
            second = order[j]
            if 2 * second <= need:
                break  # partners only get smaller from here
            k = index_of.get(need - second)
            if k is not None and k > j and not used[k]:
                used[j] = used[k] = True
                chosen.append((need - second, second, a))
                if extend(i + 1):
                    return True
                chosen.pop()
                used[j] = used[k] = False
        used[i] = False
        return False

    if extend(0):
        solution = Partition3.of(chosen)
        assert verify_partition(instance, solution)
        return solution
    return None


def write_instance(instance: ThreePartitionInstance) -> str:
    return " ".join(str(a) for a in instance.elements) + "\n"


def read_instance(text: str) -> ThreePartitionInstance:
    elements = []
    for token in text.split():
        try:
            elements.append(int(token))
        except ValueError:
            raise InstanceError(f"bad element {token!r}") from None
    return ThreePartitionInstance.of(elements)
