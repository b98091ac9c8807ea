"""Exact winning probabilities via the absorbing-chain linear system.

The terminating walk is an absorbing Markov chain: transient states are the
pre-move start plus the reachable interior positions, absorbing states are
the reachable winning positions.  For a coin bias p (probability of the
ALICE_LOW move) the absorption masses satisfy, at every transient state s,

    h(s) = p * h(step(s, ALICE_LOW)) + (1 - p) * h(step(s, ALICE_HIGH))

with boundary value 1 on the relevant player's winning landings and 0 on the
other player's.  The system is solved exactly over the rationals by Gaussian
elimination, so "Bob's winning probability is zero" is a certified identity,
not a float comparison.  Arithmetic uses gmpy2.mpq internally for speed;
all reported values are fractions.Fraction.

A seeded Monte Carlo simulator (splitmix64 streams, one per trial) provides
an independent empirical cross-check with reproducible counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from gmpy2 import mpq

from .core import (
    MOVES,
    START,
    DomainError,
    GameParams,
    Position,
    PositionClass,
    classify,
    step,
)
from .reachability import ReachabilityReport, reachable_set

Rational = Fraction


@dataclass(frozen=True)
class ProbabilityReport:
    """Exact outcome masses for one parameter tuple and coin bias.

    The three masses are exact rationals summing to exactly 1;
    ``p_nonterminating`` is computed by complement.
    """

    params: GameParams
    coin_bias: Fraction
    p_alice: Fraction
    p_bob: Fraction
    p_nonterminating: Fraction


@dataclass(frozen=True)
class AbsorptionSystem:
    """The transient linear system (I - Q) h = c in exact rational form.

    ``states[0]`` is the pre-move start; the remaining states are the
    reachable interior positions in sorted order.  ``matrix`` holds I - Q
    row per state, ``rhs_alice``/``rhs_bob`` the one-step absorption masses.
    Entries are gmpy2.mpq values (exact rationals).
    """

    params: GameParams
    coin_bias: Fraction
    states: tuple[Position, ...]
    matrix: tuple[tuple[mpq, ...], ...]
    rhs_alice: tuple[mpq, ...]
    rhs_bob: tuple[mpq, ...]

    def residuals(self, solution: Sequence, rhs: Sequence) -> list:
        """A @ solution - rhs, exact; all zeros for a correct solution."""
        k = len(self.states)
        return [
            sum(self.matrix[i][j] * solution[j] for j in range(k)) - rhs[i]
            for i in range(k)
        ]


def _check_bias(coin_bias: Fraction) -> None:
    if not isinstance(coin_bias, Fraction):
        raise DomainError(
            f"coin bias must be an exact Fraction, got {type(coin_bias).__name__}"
        )
    if not Fraction(0) < coin_bias < Fraction(1):
        raise DomainError(f"coin bias must lie strictly in (0, 1), got {coin_bias}")


def build_absorption_system(
    params: GameParams,
    coin_bias: Fraction,
    report: ReachabilityReport | None = None,
    max_states: int | None = None,
) -> AbsorptionSystem:
    """Assemble the transient system from a reachability report."""
    _check_bias(coin_bias)
    if report is None:
        report = reachable_set(params, max_states=max_states)
    interior = sorted(
        pos for pos in report.reachable
        if classify(params, pos) is PositionClass.INTERIOR
    )
    index = {pos: i + 1 for i, pos in enumerate(interior)}
    states = (START, *interior)
    k = len(states)
    zero = mpq(0)
    weights = (
        mpq(coin_bias.numerator, coin_bias.denominator),
        mpq(coin_bias.denominator - coin_bias.numerator, coin_bias.denominator),
    )
    matrix = []
    rhs_alice = []
    rhs_bob = []
    for i, pos in enumerate(states):
        row = [zero] * k
        row[i] = mpq(1)
        ra = zero
        rb = zero
        for move, weight in zip(MOVES, weights):
            child = step(params, pos, move)
            cls = classify(params, child)
            if cls is PositionClass.ALICE_WIN:
                ra += weight
            elif cls is PositionClass.BOB_WIN:
                rb += weight
            else:
                row[index[child]] -= weight
        matrix.append(tuple(row))
        rhs_alice.append(ra)
        rhs_bob.append(rb)
    return AbsorptionSystem(
        params=params,
        coin_bias=coin_bias,
        states=states,
        matrix=tuple(matrix),
        rhs_alice=tuple(rhs_alice),
        rhs_bob=tuple(rhs_bob),
    )


def solve_linear(matrix: Sequence[Sequence], rhs_columns: Sequence[Sequence]) -> list[list]:
    """Exactly solve A x = b for each right-hand side column.

    Gaussian elimination with partial pivoting on rational magnitude, then
    back substitution.  Inputs are not modified; entries may be any exact
    field type (mpq, Fraction).  Raises ZeroDivisionError on a singular
    matrix, which cannot happen for the game's absorption systems.
    """
    k = len(matrix)
    width = k + len(rhs_columns)
    rows = [list(matrix[i]) + [col[i] for col in rhs_columns] for i in range(k)]
    for col in range(k):
        pivot_row = max(range(col, k), key=lambda r: abs(rows[r][col]))
        if rows[pivot_row][col] == 0:
            raise ZeroDivisionError(f"singular system (pivot column {col})")
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        prow = rows[col]
        pval = prow[col]
        for r in range(col + 1, k):
            factor = rows[r][col]
            if factor == 0:
                continue
            factor = factor / pval
            row = rows[r]
            for c in range(col, width):
                row[c] -= factor * prow[c]
    solutions = []
    for j in range(len(rhs_columns)):
        x = [None] * k
        for i in reversed(range(k)):
            acc = rows[i][k + j]
            row = rows[i]
            for c in range(i + 1, k):
                acc -= row[c] * x[c]
            x[i] = acc / row[i]
        solutions.append(x)
    return solutions


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def solve_probabilities(
    params: GameParams,
    coin_bias: Fraction,
    report: ReachabilityReport | None = None,
    max_states: int | None = None,
) -> ProbabilityReport:
    """Exact Alice/Bob/never-terminates masses for one parameter tuple.

    ``report`` may carry a precomputed reachability result so scans can share
    one BFS across several biases.
    """
    system = build_absorption_system(params, coin_bias, report=report, max_states=max_states)
    h_alice, h_bob = solve_linear(system.matrix, (system.rhs_alice, system.rhs_bob))
    p_alice = _to_fraction(h_alice[0])
    p_bob = _to_fraction(h_bob[0])
    return ProbabilityReport(
        params=params,
        coin_bias=coin_bias,
        p_alice=p_alice,
        p_bob=p_bob,
        p_nonterminating=Fraction(1) - p_alice - p_bob,
    )


def format_rational(value: Fraction) -> str:
    """Render exactly as num/den with a clearly-labeled decimal approximation."""
    return f"{value.numerator}/{value.denominator} (approx {float(value):.12g})"


_MASK64 = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """The standard splitmix64 generator: 64-bit add-increment plus shift-mix.

    Chosen because the algorithm is tiny, fully specified by its constants,
    and therefore reproducible in any language.  First outputs for seed 0:
    0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _SPLITMIX_GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


class SimCounts(NamedTuple):
    """Empirical trial outcomes; truncated trials are reported, never folded
    into either win count."""

    alice_wins: int
    bob_wins: int
    truncated: int


def simulate(
    params: GameParams,
    coin_bias: Fraction,
    trials: int,
    seed: int,
    move_cap: int | None = None,
) -> SimCounts:
    """Run seeded random trajectories from the start and count outcomes.

    Trial i draws from its own splitmix64 stream seeded with
    (seed + i) mod 2^64, so counts are independent of any sharding of the
    trial range and identical across reruns.  Each move consumes one 64-bit
    draw u; the move is ALICE_LOW iff u / 2^64 < coin_bias, decided in exact
    integer arithmetic.  Trajectories that survive ``move_cap`` moves
    (default 10 * m * n) count as truncated.
    """
    _check_bias(coin_bias)
    if not isinstance(trials, int) or trials < 1:
        raise DomainError(f"trials must be a positive integer, got {trials!r}")
    a, b, m, n = params.a, params.b, params.m, params.n
    cap = 10 * m * n if move_cap is None else move_cap
    if cap < 1:
        raise DomainError(f"move cap must be positive, got {cap}")
    num, den = coin_bias.numerator, coin_bias.denominator
    cut = num << 64
    alice = bob = truncated = 0
    for trial in range(trials):
        rng = SplitMix64(seed + trial)
        x = y = 0
        for _ in range(cap):
            if rng.next_u64() * den < cut:
                x = (x + a) % m
                y = (y + b) % n
            else:
                x = (x + b) % m
                y = (y + a) % n
            if x == 0:
                alice += 1
                break
            if y == 0:
                bob += 1
                break
        else:
            truncated += 1
    return SimCounts(alice_wins=alice, bob_wins=bob, truncated=truncated)
