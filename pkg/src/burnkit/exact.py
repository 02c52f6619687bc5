"""Exact burning number search.

The search works on the staggered-cover form of the problem: a graph
admits a complete k-round schedule iff centers can be assigned to the
distinct radii k - 1, ..., 0 so that the radius-r balls cover every
vertex.  Covers are easier to branch on than raw schedules because the
already-burnt rule disappears; any cover is turned back into a valid
schedule afterwards by walking the rounds and substituting the smallest
unburnt vertex wherever no live center is planned (a planned center the
fire already reached is covered by the front anyway, so nothing is
lost).

Branching follows the exact-cover pattern: take the smallest uncovered
vertex, and try every way of covering it, meaning every still-unused
radius r paired with every center whose radius-r ball reaches the
vertex.  Coverage state is a bitmask, so candidate gains are popcounts.
Three devices keep the tree small: a counting prune (the unused radii
can cover at most the sum of their largest balls, so a node whose
uncovered set is bigger is dead; on an n-vertex path this refutes
k**2 < n at the root), a dominance rule (a larger radius offering the
same restricted gain as a smaller one at the same center is never
tried: swapping the two radii between centers can only grow coverage),
and memoization of refuted (uncovered, unused-radii) states, which
collapses placements that merely permute each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .burning import BurningSchedule, greedy_burn, simulate
from .errors import BudgetExceededError
from .graph import Graph, UNREACHED, bfs_distances, connected_components
from .intmath import ceil_sqrt

DEFAULT_NODE_BUDGET = 2_000_000
_MEMO_CAP = 500_000


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exact search: the burning number and a witness."""

    k: int
    witness: BurningSchedule
    nodes_explored: int


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceededError(
                f"search budget of {self.limit} nodes exhausted",
                nodes_explored=self.used,
            )


class _Profile:
    """Per-graph distance data shared by every attempted k.

    masks[v][r] is the radius-r ball around v as a bitmask, stored up to
    radius_cap (or v's eccentricity, whichever is smaller); balls only
    plateau beyond the eccentricity, so the last entry stands in for any
    larger radius.  Mask bit positions are not vertex ids but ranks in a
    degree-then-id order, so that the search's pick-the-lowest-set-bit
    step lands on the most constrained uncovered vertex first.
    """

    __slots__ = (
        "graph", "order", "masks", "maxball", "components", "diameters"
    )

    def __init__(self, g: Graph, radius_cap: int) -> None:
        n = g.n
        self.graph = g
        self.order = sorted(range(n), key=lambda v: (g.degree(v), v))
        rank = [0] * n
        for i, v in enumerate(self.order):
            rank[v] = i
        self.components = connected_components(g)
        comp_of = [0] * n
        for ci, comp in enumerate(self.components):
            for v in comp:
                comp_of[v] = ci
        self.diameters = [0] * len(self.components)
        ball_sizes: list[int] = []
        self.masks = []
        for v in range(n):
            row = bfs_distances(g, (v,))
            ecc = max(d for d in row if d != UNREACHED)
            ci = comp_of[v]
            if ecc > self.diameters[ci]:
                self.diameters[ci] = ecc
            upto = min(ecc, max(radius_cap, 0))
            buckets: list[list[int]] = [[] for _ in range(upto + 1)]
            counts = [0] * (ecc + 1)
            for u, d in enumerate(row):
                if d == UNREACHED:
                    continue
                counts[d] += 1
                if d <= upto:
                    buckets[d].append(u)
            acc = 0
            vmasks = []
            for r in range(upto + 1):
                for u in buckets[r]:
                    acc |= 1 << rank[u]
                vmasks.append(acc)
            self.masks.append(vmasks)
            total = 0
            for r, c in enumerate(counts):
                total += c
                if r == len(ball_sizes):
                    ball_sizes.append(total)
                elif total > ball_sizes[r]:
                    ball_sizes[r] = total
        self.maxball = ball_sizes

    def ball_mask(self, v: int, radius: int) -> int:
        vmasks = self.masks[v]
        return vmasks[radius] if radius < len(vmasks) else vmasks[-1]

    def maxball_at(self, radius: int) -> int:
        if radius < len(self.maxball):
            return self.maxball[radius]
        return max(len(comp) for comp in self.components)

    def coverage_caps(self, k: int) -> list[int]:
        """caps[j] = most vertices coverable by balls of radii 0..j."""
        caps = []
        total = 0
        for r in range(k):
            total += self.maxball_at(r)
            caps.append(total)
        return caps

    def lower_bound(self) -> int:
        """Largest of the coverage, diameter, and component-count bounds."""
        n = self.graph.n
        lb = len(self.components)
        for diam in self.diameters:
            # staggered balls laid along a diametral path cover at most
            # (2k - 1) + (2k - 3) + ... + 1 = k**2 of its diam + 1 vertices
            lb = max(lb, ceil_sqrt(diam + 1))
        k = 1
        while self.coverage_caps(k)[-1] < n:
            k += 1
        return max(lb, k)


def _realize(g: Graph, planned: list[int | None], k: int) -> list[int]:
    """Turn a staggered-ball cover into a valid schedule of length <= k.

    Walks the process round by round placing each planned center; a
    round with no center, or whose center is already burnt, ignites the
    smallest unburnt vertex instead (the skipped ball burns regardless,
    the stand-in only adds).  Stops early if the fire completes sooner.
    """
    adj = g.adjacency
    burnt = [False] * g.n
    nburnt = 0
    frontier: list[int] = []
    schedule: list[int] = []
    for t in range(1, k + 1):
        if nburnt == g.n:
            break
        spread = [w for u in frontier for w in adj[u] if not burnt[w]]
        src = planned[t - 1] if t - 1 < len(planned) else None
        if src is None or burnt[src]:
            src = burnt.index(False)
        new = []
        for w in spread:
            if not burnt[w]:
                burnt[w] = True
                new.append(w)
        if not burnt[src]:
            burnt[src] = True
            new.append(src)
        nburnt += len(new)
        frontier = new
        schedule.append(src)
    assert nburnt == g.n, "cover failed to burn out during realization"
    return schedule


def _search(
    profile: _Profile, k: int, budget: _Budget
) -> list[int | None] | None:
    n = profile.graph.n
    order = profile.order
    rows = profile.masks
    mb = [profile.maxball_at(r) for r in range(k)]
    comp_mask = [0] * n
    for comp in profile.components:
        acc = 0
        for v in comp:
            acc |= rows[v][0]
        for v in comp:
            comp_mask[v] = acc
    by_radius: list[int | None] = [None] * k
    failed: set[tuple[int, int]] = set()
    full_cap = profile.coverage_caps(k)[-1]
    spend = budget.spend

    def dfs(uncovered: int, radii: int, cap: int, active: int) -> bool:
        spend()
        if not uncovered:
            return True
        count = uncovered.bit_count()
        if count > cap:
            return False
        key = (uncovered, radii)
        if key in failed:
            return False
        # stay inside the component just worked on while any of it is
        # uncovered; any target keeps the branching complete, and the
        # memo is target-independent, so this only steers the order
        pool = uncovered & active or uncovered
        tbit = pool & -pool
        target = order[tbit.bit_length() - 1]
        tcomp = comp_mask[target]
        available = []
        rest = radii
        while rest:
            low = rest & -rest
            available.append(low.bit_length() - 1)
            rest ^= low
        trow = rows[target]
        rmax = available[-1]
        reach = trow[rmax] if rmax < len(trow) else trow[-1]
        scored: list[tuple[int, int, int, int]] = []
        candidates = reach
        while candidates:
            low = candidates & -candidates
            v = order[low.bit_length() - 1]
            candidates ^= low
            vrow = rows[v]
            stored = len(vrow)
            last_gain = 0
            for r in available:
                mask = vrow[r] if r < stored else vrow[-1]
                if not mask & tbit:
                    continue
                gain = (mask & uncovered).bit_count()
                if gain > last_gain:
                    # a bigger radius with no extra gain is dominated:
                    # swapping the radii with its eventual user only helps
                    if gain + cap - mb[r] >= count:
                        scored.append((-gain, r, v, mask))
                    last_gain = gain
        scored.sort()
        for neg_gain, r, v, mask in scored:
            by_radius[r] = v
            if dfs(uncovered & ~mask, radii ^ (1 << r), cap - mb[r], tcomp):
                return True
            by_radius[r] = None
        if len(failed) < _MEMO_CAP:
            failed.add(key)
        return False

    if dfs((1 << n) - 1, (1 << k) - 1, full_cap, 0):
        # radius r acts in round k - r
        return [by_radius[k - t] for t in range(1, k + 1)]
    return None


def _attempt(
    profile: _Profile, k: int, budget: _Budget
) -> BurningSchedule | None:
    planned = _search(profile, k, budget)
    if planned is None:
        return None
    witness = BurningSchedule.of(_realize(profile.graph, planned, k))
    outcome = simulate(profile.graph, witness)
    assert outcome.complete, "realized schedule failed to burn the graph"
    return witness


def can_burn_in(
    g: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> BurningSchedule | None:
    """Return a complete schedule of length <= k, or None if impossible.

    Raises BudgetExceededError when the search exhausts node_budget
    before settling the question either way.
    """
    if k < 1:
        return None
    heuristic = greedy_burn(g)
    if len(heuristic) <= k:
        return heuristic
    profile = _Profile(g, radius_cap=k - 1)
    if k < profile.lower_bound():
        return None
    return _attempt(profile, k, _Budget(node_budget))


def exact_burning_number(
    g: Graph, node_budget: int = DEFAULT_NODE_BUDGET
) -> ExactResult:
    """Smallest k admitting a complete schedule, with a verified witness.

    A greedy run pins an upper bound; the search then climbs
    k = lower bound, lower bound + 1, ... under one shared node budget
    until a witness appears or the ladder meets the greedy bound.
    """
    heuristic = greedy_burn(g)
    ub = len(heuristic)
    profile = _Profile(g, radius_cap=ub - 2)
    budget = _Budget(node_budget)
    k = profile.lower_bound()
    while k < ub:
        witness = _attempt(profile, k, budget)
        if witness is not None:
            return ExactResult(
                k=len(witness), witness=witness, nodes_explored=budget.used
            )
        k += 1
    assert simulate(g, heuristic).complete
    return ExactResult(k=ub, witness=heuristic, nodes_explored=budget.used)
