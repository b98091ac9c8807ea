"""Game state primitives for the modulo dependent chip-collecting game.

Each round a coin decides whether Alice collects the low amount ``a`` while
Bob collects the high amount ``b``, or the other way around.  Alice wins on
holding a multiple of ``m`` chips, Bob on a multiple of ``n``; Alice collects
first, so she wins simultaneous hits.  Only the counts modulo the targets
matter, which turns the game into a random walk on Z_m x Z_n starting at
(0, 0) and absorbing on the axes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple


class DomainError(ValueError):
    """Inputs fall outside the valid parameter regime."""


@dataclass(frozen=True)
class GameParams:
    """The parameter tuple (a, b, m, n), validated to 0 < a < b < min(m, n).

    ``a``/``b`` are the two chip amounts, ``m`` is Alice's winning modulus,
    ``n`` is Bob's.  The square game is the special case m == n.  Instances
    are immutable; every analysis in this package is a pure function of one
    of these tuples.
    """

    a: int
    b: int
    m: int
    n: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "m", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            if value <= 0:
                raise DomainError(f"{name} must be positive, got {value}")
        if not self.a < self.b:
            raise DomainError(f"need a < b, got a={self.a}, b={self.b}")
        if not self.b < min(self.m, self.n):
            raise DomainError(
                f"need b < min(m, n), got b={self.b}, m={self.m}, n={self.n}"
            )

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    @property
    def state_count(self) -> int:
        return self.m * self.n


class Position(NamedTuple):
    """A point (x, y) in Z_m x Z_n: both players' counts mod their targets."""

    x: int
    y: int


START = Position(0, 0)


class MoveKind(Enum):
    """One simultaneous collection event.

    ALICE_LOW means Alice collects a and Bob collects b, the step (+a, +b);
    ALICE_HIGH is the step (+b, +a).  Every trajectory is a word over these
    two symbols.
    """

    ALICE_LOW = "+a+b"
    ALICE_HIGH = "+b+a"


# fixed expansion/tie-break order: ALICE_LOW before ALICE_HIGH
MOVES = (MoveKind.ALICE_LOW, MoveKind.ALICE_HIGH)


class PositionClass(Enum):
    """Classification of a landing; START applies only to the untouched origin."""

    START = "start"
    ALICE_WIN = "alice-win"
    BOB_WIN = "bob-win"
    INTERIOR = "interior"


def step(params: GameParams, pos: Position, move: MoveKind) -> Position:
    """Apply one move to a position, reducing modulo (m, n)."""
    if move is MoveKind.ALICE_LOW:
        return Position((pos.x + params.a) % params.m, (pos.y + params.b) % params.n)
    return Position((pos.x + params.b) % params.m, (pos.y + params.a) % params.n)


def classify(params: GameParams, pos: Position) -> PositionClass:
    """Classify a landing position.

    x == 0 is checked before y == 0 because Alice collects first: a move that
    lands on (0, 0) is her win.  The untouched start is not a landing and is
    classified by callers as START before any move is made.
    """
    if pos.x == 0:
        return PositionClass.ALICE_WIN
    if pos.y == 0:
        return PositionClass.BOB_WIN
    return PositionClass.INTERIOR
