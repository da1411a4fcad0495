"""Exact solving of cumulative subtraction games.

Two players, Positive and Negative, alternately remove pebbles from a
shared heap; every move removes s pebbles for some s in a fixed action
set S.  Pebbles taken by Positive add to a running score, pebbles taken
by Negative subtract from it, and the game ends once the heap is smaller
than the least action.  Positive moves first and maximizes the final
score, Negative minimizes it.

This module holds the ground truth for everything else in the package:
the outcome/optimal-action table computed by dynamic programming, an
independently implemented minimax oracle used to cross-check that table,
and canonical optimal-play traces.
"""

from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

# Heaps above this are rejected outright: results are meant to live
# comfortably inside 64-bit signed arithmetic, and a larger request is
# almost certainly a caller bug.
HEAP_LIMIT = 1 << 40


class Mover(Enum):
    """The player about to move.  Positive maximizes, Negative minimizes."""

    POSITIVE = "positive"
    NEGATIVE = "negative"

    @property
    def sign(self) -> int:
        return 1 if self is Mover.POSITIVE else -1

    @property
    def opponent(self) -> "Mover":
        return Mover.NEGATIVE if self is Mover.POSITIVE else Mover.POSITIVE


@dataclass(frozen=True)
class Ruleset:
    """A finite action set: at least two strictly increasing positive moves."""

    actions: tuple[int, ...]

    def __post_init__(self) -> None:
        acts = tuple(int(a) for a in self.actions)
        object.__setattr__(self, "actions", acts)
        if len(acts) < 2:
            raise ValueError(f"need at least two actions, got {acts!r}")
        if acts[0] < 1:
            raise ValueError(f"actions must be positive, got {acts!r}")
        if any(b <= a for a, b in zip(acts, acts[1:])):
            raise ValueError(f"actions must be strictly increasing, got {acts!r}")

    @property
    def min_action(self) -> int:
        return self.actions[0]

    @property
    def max_action(self) -> int:
        return self.actions[-1]

    @property
    def is_two_action(self) -> bool:
        return len(self.actions) == 2

    @property
    def is_contiguous(self) -> bool:
        return self.max_action - self.min_action == len(self.actions) - 1

    @property
    def is_full_support(self) -> bool:
        """True for S = {1, 2, ..., max}."""
        return self.min_action == 1 and self.is_contiguous

    def is_terminal(self, heap: int) -> bool:
        return heap < self.min_action

    def playable(self, heap: int) -> tuple[int, ...]:
        return tuple(s for s in self.actions if s <= heap)

    def greedy_action(self, heap: int) -> int:
        """Largest playable action; playing anything smaller is a sacrifice."""
        i = bisect.bisect_right(self.actions, heap)
        if i == 0:
            raise ValueError(f"no playable action from heap {heap} in {self}")
        return self.actions[i - 1]

    def __str__(self) -> str:
        return "{" + ",".join(str(a) for a in self.actions) + "}"


@dataclass(frozen=True)
class Position:
    """A heap together with the running score accumulated so far."""

    heap: int
    score: int = 0

    def __post_init__(self) -> None:
        if self.heap < 0:
            raise ValueError(f"heap must be nonnegative, got {self.heap}")
        if self.heap > HEAP_LIMIT:
            raise ValueError(f"heap {self.heap} exceeds supported limit {HEAP_LIMIT}")

    def is_terminal(self, ruleset: Ruleset) -> bool:
        return ruleset.is_terminal(self.heap)

    def after(self, ruleset: Ruleset, mover: Mover, action: int) -> "Position":
        """The position reached when `mover` removes `action` pebbles."""
        if action not in ruleset.actions:
            raise ValueError(f"{action} is not an action of {ruleset}")
        if action > self.heap:
            raise ValueError(f"cannot remove {action} from heap {self.heap}")
        return Position(self.heap - action, self.score + mover.sign * action)


@dataclass(frozen=True)
class OutcomeTable:
    """Outcomes o(x) and optimal actions opt(x) for all heaps 0..x_max.

    o(x) is the final score under optimal play from heap x with Positive
    to move; opt(x) is the largest action attaining it (None at terminal
    heaps).  Because the game is symmetric up to sign, the same table
    prescribes optimal play for Negative as well.
    """

    ruleset: Ruleset
    x_max: int
    outcomes: tuple[int, ...]
    opts: tuple[int | None, ...]

    def outcome(self, x: int) -> int:
        if not 0 <= x <= self.x_max:
            raise ValueError(f"heap {x} outside table range 0..{self.x_max}")
        return self.outcomes[x]


class Move(NamedTuple):
    mover: Mover
    action: int
    score_after: int


@dataclass(frozen=True)
class PlayTrace:
    """A completed play, recorded move by move."""

    start_heap: int
    moves: tuple[Move, ...]
    final_score: int
    start_score: int = 0

    @property
    def actions(self) -> tuple[int, ...]:
        return tuple(m.action for m in self.moves)

    def actions_by(self, mover: Mover) -> tuple[int, ...]:
        return tuple(m.action for m in self.moves if m.mover is mover)

    def as_dict(self) -> dict:
        return {
            "start_heap": self.start_heap,
            "start_score": self.start_score,
            "moves": [
                {"mover": m.mover.value, "action": m.action, "score_after": m.score_after}
                for m in self.moves
            ],
            "final_score": self.final_score,
        }


def _check_x_max(x_max: int) -> None:
    if x_max < 0:
        raise ValueError(f"x_max must be nonnegative, got {x_max}")
    if x_max > HEAP_LIMIT:
        raise ValueError(f"x_max {x_max} exceeds supported limit {HEAP_LIMIT}")


def _table_generic(ruleset: Ruleset, x_max: int) -> tuple[list[int], list[int | None]]:
    acts = ruleset.actions
    o: list[int] = [0] * (x_max + 1)
    opts: list[int | None] = [None] * (x_max + 1)
    for x in range(ruleset.min_action, x_max + 1):
        best = None
        best_s = None
        for s in acts:
            if s > x:
                break
            v = s - o[x - s]
            # >= so that the largest action wins ties.
            if best is None or v >= best:
                best, best_s = v, s
        o[x] = best
        opts[x] = best_s
    return o, opts


def _table_contiguous(ruleset: Ruleset, x_max: int) -> tuple[list[int], list[int | None]]:
    """Sliding-window variant for contiguous action sets {lo, ..., hi}.

    With g(y) = y + o(y), the recursion becomes o(x) = x - min g(y) over
    the window x-hi <= y <= x-lo, so a monotone deque gives each entry in
    amortized O(1).  The deque keeps the smallest y among equal g values
    in front, which reproduces the largest-action tie-break exactly.
    """
    lo, hi = ruleset.min_action, ruleset.max_action
    o: list[int] = [0] * (x_max + 1)
    opts: list[int | None] = [None] * (x_max + 1)
    g: list[int] = [0] * (x_max + 1)
    for y in range(min(lo, x_max + 1)):
        g[y] = y
    window: deque[int] = deque()
    for x in range(lo, x_max + 1):
        y_new = x - lo
        while window and g[window[-1]] > g[y_new]:
            window.pop()
        window.append(y_new)
        cut = x - hi
        while window[0] < cut:
            window.popleft()
        y = window[0]
        o[x] = x - g[y]
        opts[x] = x - y
        g[x] = x + o[x]
    return o, opts


def build_outcome_table(ruleset: Ruleset, x_max: int) -> OutcomeTable:
    """Solve the game exactly for every heap 0..x_max.

    Terminal heaps get outcome 0 and no action.  Elsewhere
    o(x) = max(s - o(x-s)) over playable s, and opt(x) is the largest
    maximizing action, so traces driven by opt are deterministic.
    """
    _check_x_max(x_max)
    if ruleset.is_contiguous:
        o, opts = _table_contiguous(ruleset, x_max)
    else:
        o, opts = _table_generic(ruleset, x_max)
    return OutcomeTable(ruleset=ruleset, x_max=x_max, outcomes=tuple(o), opts=tuple(opts))


def opt_action(table: OutcomeTable, x: int) -> int:
    """The canonical optimal action at heap x (largest maximizer)."""
    if not 0 <= x <= table.x_max:
        raise ValueError(f"heap {x} outside table range 0..{table.x_max}")
    if table.ruleset.is_terminal(x):
        raise ValueError(f"heap {x} is terminal for {table.ruleset}; no action exists")
    return table.opts[x]


def minimax_values(ruleset: Ruleset, x_max: int) -> tuple[int, ...]:
    """Game values for heaps 0..x_max from an explicit two-player search.

    Deliberately not the single-table recursion: the minimizing player is
    carried explicitly, with one value table per player to move, so this
    serves as an independent oracle for build_outcome_table.
    """
    _check_x_max(x_max)
    vp: list[int] = [0] * (x_max + 1)  # Positive to move
    vn: list[int] = [0] * (x_max + 1)  # Negative to move
    for h in range(ruleset.min_action, x_max + 1):
        best = None
        worst = None
        for s in ruleset.actions:
            if s > h:
                break
            up = s + vn[h - s]
            down = -s + vp[h - s]
            if best is None or up > best:
                best = up
            if worst is None or down < worst:
                worst = down
        vp[h] = best
        vn[h] = worst
    return tuple(vp)


def minimax_oracle(ruleset: Ruleset, x: int) -> int:
    """Game value at heap x with Positive to move, via the explicit search."""
    if x < 0:
        raise ValueError(f"heap must be nonnegative, got {x}")
    return minimax_values(ruleset, x)[x]


def canonical_trace(
    ruleset: Ruleset,
    x: int,
    start_score: int = 0,
    table: OutcomeTable | None = None,
) -> PlayTrace:
    """Play both sides with opt() from heap x and record every move.

    The starting score only shifts the recorded scores; it never changes
    which actions are played.
    """
    if x < 0 or x > HEAP_LIMIT:
        raise ValueError(f"start heap {x} out of supported range")
    if table is None:
        table = build_outcome_table(ruleset, x)
    elif table.ruleset != ruleset or table.x_max < x:
        raise ValueError("supplied table does not cover this game")
    heap = x
    score = start_score
    mover = Mover.POSITIVE
    moves: list[Move] = []
    while not ruleset.is_terminal(heap):
        action = table.opts[heap]
        score += mover.sign * action
        moves.append(Move(mover, action, score))
        heap -= action
        mover = mover.opponent
    return PlayTrace(start_heap=x, moves=tuple(moves), final_score=score, start_score=start_score)


def is_sacrifice(ruleset: Ruleset, heap: int, action: int) -> bool:
    """True when `action` is legal at `heap` but not the greedy choice."""
    if action not in ruleset.actions:
        raise ValueError(f"{action} is not an action of {ruleset}")
    if action > heap:
        raise ValueError(f"cannot remove {action} from heap {heap}")
    return action != ruleset.greedy_action(heap)


def rulesets_with_max_at_most(max_s: int, sizes: Iterable[int]) -> list[Ruleset]:
    """All rulesets over {1..max_s} of the given sizes, in lexicographic order."""
    from itertools import combinations

    out: list[Ruleset] = []
    for size in sizes:
        if size < 2 or size > max_s:
            continue
        for combo in combinations(range(1, max_s + 1), size):
            out.append(Ruleset(combo))
    return out
