"""Distinct 3-partition encoded as burning on a permutation graph.

The subject permutation is a concatenation of segments over consecutive
value ranges, each crafted so that its values induce a simple path;
values from different segments never invert (earlier segments hold
smaller values and appear earlier), so the whole permutation induces a
path forest.  For an instance with largest element m the forest has n
components of order 2B - 3 and one per filler size, m * m vertices in
all.  A schedule of m rounds burns at most 1 + 3 + ... + (2m - 1) =
m * m path vertices, so an m-round schedule exists exactly when the
fire clusters are disjoint odd runs tiling every component: fillers
carve away the odd sizes that are not shifted instance elements, and
each order-(2B - 3) component splits into three runs that read off a
solution triple.

partition_to_schedule_pg and schedule_to_partition_pg make both
directions of that equivalence executable, the latter refusing with
NotOptimalShapedError when a schedule's clusters do not respect the
component structure.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .burning import BurningSchedule, simulate, verify_schedule
from .errors import (
    ExtractionError,
    GraphError,
    InstanceError,
    NotOptimalShapedError,
    ScheduleError,
)
from .graph import Graph, build_permutation_graph, connected_components
from .interval_reduction import (
    DerivedSets,
    derive_sets,
    settle_block_triples,
)
from .partition import Partition3, ThreePartitionInstance, verify_partition


@dataclass(frozen=True)
class ValueSegment:
    """One path component's consecutive value range in the permutation."""

    first: int
    size: int

    @property
    def last(self) -> int:
        return self.first + self.size - 1


@dataclass(frozen=True)
class PermutationArtifact:
    """P(X) gadget: permutation, induced path forest, component map.

    The first derived.n segments are the blocks of order 2B - 3, the
    rest are the fillers in decreasing size order.  paths[j] lists the
    vertices of segment j in path order, the coordinate system used
    when clusters are checked against the component structure.
    """

    derived: DerivedSets
    permutation: tuple[int, ...]
    segments: tuple[ValueSegment, ...]
    graph: Graph
    paths: tuple[tuple[int, ...], ...]

    @property
    def target_rounds(self) -> int:
        return self.derived.m

    def segment_kind(self, index: int) -> str:
        return "block" if index < self.derived.n else "filler"


def _induced_segment_graph(seq: Sequence[int], first: int) -> Graph:
    relabeled = [v - first + 1 for v in seq]
    return build_permutation_graph(len(seq), relabeled)


def _assert_path(g: Graph) -> None:
    assert g.m == g.n - 1, "segment graph has the wrong edge count"
    assert max((g.degree(v) for v in range(g.n)), default=0) <= 2
    assert len(connected_components(g)) == 1


def path_permutation(first: int, length: int) -> tuple[int, ...]:
    """Arrange first..first+length-1 so that they induce a simple path.

    Values u < v are adjacent exactly when v appears before u, so the
    segment interleaves values to chain the whole range: lengths up to
    four are spelled out, longer segments zigzag with small fixups in
    the last two slots depending on parity.  The result is gated by an
    induced-path assertion, which turns any formula slip into a loud
    failure instead of a silently broken gadget.
    """
    if length < 1:
        raise GraphError(
            f"permutation segment needs a positive length, got {length}"
        )
    x, t = first, length
    y = x + t - 1
    if t == 1:
        seq = (x,)
    elif t == 2:
        seq = (y, x)
    elif t == 3:
        seq = (y, x, x + 1)
    elif t == 4:
        seq = (x + 1, y, x, x + 2)
    else:
        values = []
        for h in range(1, t + 1):
            if h % 2:
                if h == t:
                    values.append(y - 1)
                elif h == t - 1:
                    values.append(y)
                else:
                    values.append(x + h + 1)
            else:
                values.append(x if h == 2 else x + h - 3)
        seq = tuple(values)
    assert sorted(seq) == list(range(x, y + 1))
    _assert_path(_induced_segment_graph(seq, x))
    return seq


def forest_permutation(
    lengths: Sequence[int],
) -> tuple[tuple[int, ...], tuple[ValueSegment, ...]]:
    """Concatenate path segments over consecutive value ranges.

    Segment j takes the next lengths[j] values; all of an earlier
    segment's values are smaller and appear earlier, so segments never
    invert against each other and the induced graph is the disjoint
    union of the segment paths, one component per length.
    """
    if not lengths:
        raise GraphError("forest permutation needs at least one length")
    values: list[int] = []
    segments: list[ValueSegment] = []
    first = 1
    for t in lengths:
        values.extend(path_permutation(first, t))
        segments.append(ValueSegment(first=first, size=t))
        first += t
    return tuple(values), tuple(segments)


def _component_paths(
    g: Graph, segments: Sequence[ValueSegment]
) -> tuple[tuple[int, ...], ...]:
    components = {min(comp): sorted(comp) for comp in connected_components(g)}
    paths: list[tuple[int, ...]] = []
    for seg in segments:
        lo = seg.first - 1
        comp = components.get(lo)
        assert comp == list(range(lo, lo + seg.size)), (
            "segment does not form its own component"
        )
        if seg.size == 1:
            paths.append((lo,))
            continue
        ends = [v for v in comp if g.degree(v) == 1]
        assert len(ends) == 2, "component is not a simple path"
        prev, cur = -1, min(ends)
        walk = [cur]
        for _ in range(seg.size - 1):
            nxt = [w for w in g.neighbors(cur) if w != prev]
            assert len(nxt) == 1
            prev, cur = cur, nxt[0]
            walk.append(cur)
        paths.append(tuple(walk))
    return tuple(paths)


def construct_px(instance: ThreePartitionInstance) -> PermutationArtifact:
    """Build the path-forest gadget whose burning number answers X.

    Components: n of order 2B - 3, then the fillers in decreasing
    order, m * m vertices in total.  Vertex v stands for value v + 1,
    so each segment's vertices are a consecutive id range.
    """
    derived = derive_sets(instance)
    lengths = [derived.shifted_target] * derived.n + list(derived.fillers)
    permutation, segments = forest_permutation(lengths)
    graph = build_permutation_graph(len(permutation), permutation)
    assert graph.n == derived.m**2
    paths = _component_paths(graph, segments)
    return PermutationArtifact(
        derived=derived,
        permutation=permutation,
        segments=segments,
        graph=graph,
        paths=paths,
    )


def partition_to_schedule_pg(
    artifact: PermutationArtifact, partition: Partition3
) -> BurningSchedule:
    """Turn a solution into a complete schedule of exactly m rounds.

    Each filler component becomes one cluster centered mid-path; triple
    i tiles block i in ascending order along its path.  A cluster of
    size s spreads for (s - 1) / 2 rounds, which fixes its round, and
    all m sizes are distinct, so the rounds are a permutation: the i-th
    largest run ignites in round i.
    """
    derived = artifact.derived
    if not verify_partition(derived.instance, partition):
        raise InstanceError("partition does not solve the gadget's instance")
    k = artifact.target_rounds
    placed: list[tuple[int, int]] = []  # (round, center)

    def place(path: tuple[int, ...], offset: int, size: int) -> None:
        placed.append((k - (size - 1) // 2, path[offset + (size - 1) // 2]))

    triples = iter(partition.triples)
    for si, seg in enumerate(artifact.segments):
        path = artifact.paths[si]
        if si < derived.n:
            offset = 0
            for a in next(triples):
                size = 2 * a - 1
                place(path, offset, size)
                offset += size
            assert offset == seg.size
        else:
            place(path, 0, seg.size)

    placed.sort()
    assert [t for t, _ in placed] == list(range(1, k + 1))
    schedule = BurningSchedule.of(center for _, center in placed)
    outcome = simulate(artifact.graph, schedule)
    assert outcome.complete and outcome.rounds_used == k
    return schedule


def schedule_to_partition_pg(
    artifact: PermutationArtifact, schedule: BurningSchedule | Sequence[int]
) -> Partition3:
    """Recover a solution from any complete m-round schedule.

    Every cluster must be a run inside one component, and the runs must
    tile each component exactly; anything else raises
    NotOptimalShapedError.  Blocks and fillers then share the sizes
    1, 3, ..., 2m - 1, and the same exchange normalization as the
    interval gadget settles each filler on its own size, leaving one
    solution triple per block.
    """
    sched = BurningSchedule.of(schedule)
    k = artifact.target_rounds
    if len(sched) != k:
        raise ExtractionError(
            f"schedule has {len(sched)} rounds, the gadget decides at {k}"
        )
    try:
        complete = verify_schedule(artifact.graph, sched)
    except ScheduleError as exc:
        raise ExtractionError(f"schedule rejected: {exc}") from exc
    if not complete:
        raise ExtractionError("schedule does not burn the whole gadget")

    offset_of = {}
    for si, path in enumerate(artifact.paths):
        for off, v in enumerate(path):
            offset_of[v] = (si, off)

    spans_by_segment: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for t, src in enumerate(sched, start=1):
        radius = k - t
        si, off = offset_of[src]
        seg = artifact.segments[si]
        lo, hi = off - radius, off + radius
        if lo < 0 or hi >= seg.size:
            raise NotOptimalShapedError(
                f"round-{t} cluster [{lo}, {hi}] spills out of the "
                f"{artifact.segment_kind(si)} component of order {seg.size}"
            )
        spans_by_segment[si].append((lo, hi))

    sizes_by_segment: dict[int, list[int]] = {}
    for si, seg in enumerate(artifact.segments):
        kind = artifact.segment_kind(si)
        spans = sorted(spans_by_segment.get(si, ()))
        cursor = 0
        for lo, hi in spans:
            if lo != cursor:
                raise NotOptimalShapedError(
                    f"{kind} component of order {seg.size} is not tiled "
                    f"exactly (gap or overlap at offset {min(lo, cursor)})"
                )
            cursor = hi + 1
        if cursor != seg.size:
            raise NotOptimalShapedError(
                f"{kind} component of order {seg.size} is not tiled "
                f"exactly (uncovered tail from offset {cursor})"
            )
        sizes_by_segment[si] = [hi - lo + 1 for lo, hi in spans]

    block_ids = list(range(artifact.derived.n))
    fillers_desc = sorted(
        ((si, seg.size) for si, seg in enumerate(artifact.segments)
         if si >= artifact.derived.n),
        key=lambda pair: -pair[1],
    )
    partition = settle_block_triples(
        sizes_by_segment, block_ids, fillers_desc
    )
    assert verify_partition(artifact.derived.instance, partition)
    return partition


def write_permutation(permutation: Sequence[int]) -> str:
    return " ".join(str(v) for v in permutation) + "\n"


def read_permutation(text: str) -> tuple[int, ...]:
    values = []
    for token in text.split():
        try:
            values.append(int(token))
        except ValueError:
            raise InstanceError(f"bad permutation value {token!r}") from None
    if sorted(values) != list(range(1, len(values) + 1)):
        raise InstanceError("text is not a permutation of 1..n")
    return tuple(values)
