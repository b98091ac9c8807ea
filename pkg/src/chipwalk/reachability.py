"""Exact reachable-set computation for the chip-collecting walk.

A position is reachable when some walk from (0, 0) lands on it without
previously landing on a winning position.  ``reachable_set`` computes the
full set by breadth-first search: interior landings are expanded with both
moves, winning landings are recorded but absorb.  The report keeps one BFS
parent per position so explicit witness move words can be recovered, plus
the fewest-moves landing depth.

Two proof-style parametrizations are exposed as checkable helpers:
``q_param`` (the square-game coordinates q_{i,j}) and ``round_diagonal``
(all positions after exactly r moves, ignoring termination).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Mapping

from .core import (
    MOVES,
    START,
    DomainError,
    GameParams,
    MoveKind,
    Position,
    PositionClass,
    classify,
    step,
)

# m * n must stay below this unless the caller raises the budget explicitly.
DEFAULT_STATE_BUDGET = 4_000_000


class ResourceLimitError(RuntimeError):
    """The state space exceeds the configured memory budget."""


class UnreachableTargetError(LookupError):
    """A witness was requested for a position outside the reachable set."""


@dataclass(frozen=True)
class ReachabilityReport:
    """Result of one BFS: the reachable set with parent links and depths.

    ``reachable`` holds every position landed on by some valid walk.  The
    start (0, 0) appears only if some walk re-lands on it (an Alice win).
    ``parent`` maps a position to one BFS predecessor and the move taken;
    positions first reached directly from the start have no entry.  ``depth``
    is the fewest number of moves needed to land on a position (>= 1).

    Treat instances as read-only; they are safe to share across threads.
    """

    params: GameParams
    reachable: frozenset[Position]
    parent: Mapping[Position, tuple[Position, MoveKind]]
    depth: Mapping[Position, int]


@dataclass(frozen=True)
class WitnessPath:
    """An explicit move word certifying reachability of ``landing``."""

    moves: tuple[MoveKind, ...]
    landing: Position


def reachable_set(params: GameParams, max_states: int | None = None) -> ReachabilityReport:
    """Compute the exact reachable set of the terminating walk by BFS.

    Expansion is deterministic: ALICE_LOW before ALICE_HIGH, FIFO order, so
    parents and depths are reproducible and recovered witnesses are the
    lexicographically least shortest move words (ALICE_LOW < ALICE_HIGH).

    Raises ResourceLimitError when m * n exceeds ``max_states`` (default
    DEFAULT_STATE_BUDGET).
    """
    budget = DEFAULT_STATE_BUDGET if max_states is None else max_states
    if params.state_count > budget:
        raise ResourceLimitError(
            f"state count m*n = {params.state_count} exceeds budget {budget}"
        )
    m, n = params.m, params.n
    depth: dict[Position, int] = {}
    parent: dict[Position, tuple[Position, MoveKind]] = {}
    seen = bytearray(m * n)  # flat visited marks, indexed x*n + y
    queue: deque[Position] = deque()

    # The start expands unconditionally but gets no reachable entry of its
    # own; it re-enters the maps only if some walk lands on (0, 0) again.
    for move in MOVES:
        child = step(params, START, move)
        seen[child.x * n + child.y] = 1
        depth[child] = 1
        if classify(params, child) is PositionClass.INTERIOR:
            queue.append(child)

    while queue:
        pos = queue.popleft()
        child_depth = depth[pos] + 1
        for move in MOVES:
            child = step(params, pos, move)
            idx = child.x * n + child.y
            if seen[idx]:
                continue
            seen[idx] = 1
            depth[child] = child_depth
            parent[child] = (pos, move)
            if classify(params, child) is PositionClass.INTERIOR:
                queue.append(child)

    return ReachabilityReport(
        params=params,
        reachable=frozenset(depth),
        parent=parent,
        depth=depth,
    )


def witness_path(report: ReachabilityReport, target: Position) -> WitnessPath:
    """Recover a shortest move word landing on ``target``.

    Follows parent links back to a depth-1 position, whose own first move is
    recovered directly from the start.  Raises UnreachableTargetError when
    the target is not in the reachable set.
    """
    target = Position(*target)
    if target not in report.reachable:
        raise UnreachableTargetError(f"position {tuple(target)} is not reachable")
    moves: list[MoveKind] = []
    pos = target
    while pos in report.parent:
        pos, move = report.parent[pos]
        moves.append(move)
    for first in MOVES:
        if step(report.params, START, first) == pos:
            moves.append(first)
            break
    moves.reverse()
    return WitnessPath(moves=tuple(moves), landing=target)


def replay_moves(params: GameParams, moves: tuple[MoveKind, ...]) -> list[Position]:
    """Landing positions visited when playing ``moves`` from the start."""
    pos = START
    landings = []
    for move in moves:
        pos = step(params, pos, move)
        landings.append(pos)
    return landings


def all_wins_alice(report: ReachabilityReport) -> bool:
    """True iff no reachable position is a Bob win (theorem 2's empirical side)."""
    params = report.params
    return not any(
        classify(params, pos) is PositionClass.BOB_WIN for pos in report.reachable
    )


def full_reachability_square(report: ReachabilityReport) -> bool:
    """True iff the square game reaches everything except (a, a) and (b, b).

    This is theorem 1's empirical side.  Only defined for m == n.
    """
    params = report.params
    if not params.is_square:
        raise DomainError(f"square game required, got m={params.m}, n={params.n}")
    n = params.n
    return (
        len(report.reachable) == n * n - 2
        and Position(params.a, params.a) not in report.reachable
        and Position(params.b, params.b) not in report.reachable
    )


def round_diagonal(params: GameParams, r: int) -> frozenset[Position]:
    """All positions after exactly r moves, ignoring termination.

    With i of the r moves being ALICE_HIGH the landing is
    ((a(r-i) + bi) mod m, (ai + b(r-i)) mod n); the result collects these for
    0 <= i <= r, deduplicated since only membership queries matter.
    """
    if r < 0:
        raise DomainError(f"r must be non-negative, got {r}")
    a, b, m, n = params.a, params.b, params.m, params.n
    return frozenset(
        Position((a * (r - i) + b * i) % m, (a * i + b * (r - i)) % n)
        for i in range(r + 1)
    )


def q_param(params: GameParams, i: int, j: int) -> Position:
    """The square-game lattice coordinates (ia + j(a+b), ib + j(a+b)) mod n.

    When gcd(a+b, n) = gcd(b-a, n) = 1 this map is a bijection from
    {0..n-1}^2 onto Z_n x Z_n.  Only defined for m == n.
    """
    if not params.is_square:
        raise DomainError(f"square game required, got m={params.m}, n={params.n}")
    a, b, n = params.a, params.b, params.n
    return Position((i * a + j * (a + b)) % n, (i * b + j * (a + b)) % n)


# Grid alphabet: '.' unreachable, 'I' interior, 'A' Alice win, 'B' Bob win,
# 'S' start cell never re-landed.
_GRID_CHARS = {
    PositionClass.INTERIOR: "I",
    PositionClass.ALICE_WIN: "A",
    PositionClass.BOB_WIN: "B",
}


def render_grid(report: ReachabilityReport) -> str:
    """Text matrix of the reachable set: one row per x in Z_m, column per y."""
    params = report.params
    rows = []
    for x in range(params.m):
        chars = []
        for y in range(params.n):
            pos = Position(x, y)
            if pos in report.reachable:
                chars.append(_GRID_CHARS[classify(params, pos)])
            elif pos == START:
                chars.append("S")
            else:
                chars.append(".")
        rows.append("".join(chars))
    return "\n".join(rows)


def iter_positions(params: GameParams) -> Iterator[Position]:
    """All m*n positions in row-major order."""
    for x in range(params.m):
        for y in range(params.n):
            yield Position(x, y)
