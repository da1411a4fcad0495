"""Convergence, periodicity, and regularity scanners for optimal play.

Every game with at least two actions eventually settles: from some heap
size onward the optimal action is constantly the largest action, and
that happens no later than 2*(max S)^2.  Past that point the outcome
sequence is periodic with period dividing 2*max S.  This module locates
the convergence point, certifies the eventual period, and provides
falsification sweeps for observed regularities of optimal play
(who sacrifices, who moves last, how large sacrifices are).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import (
    Mover,
    OutcomeTable,
    PlayTrace,
    Ruleset,
    build_outcome_table,
    canonical_trace,
)


class TheoremViolationError(RuntimeError):
    """A computation contradicted a proven statement; the solver is buggy."""


def convergence_bound(ruleset: Ruleset) -> int:
    """Proven upper bound for the convergence point: 2*(max S)^2."""
    return 2 * ruleset.max_action ** 2


def default_x_max(ruleset: Ruleset) -> int:
    """Table size used by the analysis entry points: bound plus a guard window."""
    return convergence_bound(ruleset) + 4 * ruleset.max_action


@dataclass(frozen=True)
class ConvergenceReport:
    ruleset: Ruleset
    xi: int
    converged_action: int
    verified_up_to: int
    bound_satisfied: bool

    def as_dict(self) -> dict:
        return {
            "ruleset": list(self.ruleset.actions),
            "xi": self.xi,
            "converged_action": self.converged_action,
            "verified_up_to": self.verified_up_to,
            "bound_satisfied": self.bound_satisfied,
        }


@dataclass(frozen=True)
class PeriodReport:
    period: int
    tail_start: int
    verified_up_to: int

    def as_dict(self) -> dict:
        return {
            "period": self.period,
            "tail_start": self.tail_start,
            "verified_up_to": self.verified_up_to,
        }


@dataclass(frozen=True)
class ObservationReport:
    observation: str
    ruleset: Ruleset
    holds: bool
    counterexample_x: int | None = None
    witness: PlayTrace | None = None

    def as_dict(self) -> dict:
        return {
            "observation": self.observation,
            "ruleset": list(self.ruleset.actions),
            "holds": self.holds,
            "counterexample_x": self.counterexample_x,
            "witness": self.witness.as_dict() if self.witness is not None else None,
        }


@dataclass(frozen=True)
class SacrificeFinding:
    """A start heap whose canonical trace contains sacrifices by both players.

    Sacrifice size is greedy-at-that-heap minus the action played; when a
    player sacrifices more than once, the largest size is recorded.
    `consistent` is the conjectured relation: Negative's sacrifice strictly
    smaller than Positive's.
    """

    ruleset: Ruleset
    x: int
    positive_sacrifice: int
    negative_sacrifice: int
    consistent: bool

    def as_dict(self) -> dict:
        return {
            "ruleset": list(self.ruleset.actions),
            "x": self.x,
            "positive_sacrifice": self.positive_sacrifice,
            "negative_sacrifice": self.negative_sacrifice,
            "consistent": self.consistent,
        }


def convergence_point(ruleset: Ruleset, table: OutcomeTable | None = None) -> ConvergenceReport:
    """Smallest heap from which the optimal action is constant onward.

    The constant action is always max S.  opt is checked all the way to
    2*(max S)^2 + 4*max S; any non-greedy optimal action beyond the
    proven bound is reported as a theorem violation rather than ignored.
    """
    m = ruleset.max_action
    bound = convergence_bound(ruleset)
    if table is None or table.ruleset != ruleset or table.x_max < default_x_max(ruleset):
        table = build_outcome_table(ruleset, default_x_max(ruleset))
    opts = table.opts
    for x in range(bound + 1, table.x_max + 1):
        if opts[x] != m:
            raise TheoremViolationError(
                f"opt({x}) = {opts[x]} != {m} beyond the convergence bound {bound} for {ruleset}"
            )
    for x in range(bound, ruleset.min_action - 1, -1):
        if opts[x] != m:
            return ConvergenceReport(
                ruleset=ruleset,
                xi=x + 1,
                converged_action=m,
                verified_up_to=table.x_max,
                bound_satisfied=x + 1 <= bound,
            )
    # Unreachable: heaps below max S cannot play max S, so a divergent
    # position always exists in the searched prefix.
    raise TheoremViolationError(f"no divergent position found for {ruleset}")


def eventual_period(table: OutcomeTable, tail_start: int) -> PeriodReport:
    """Minimal p <= 2*max S with o(x) = o(x+p) on the verified tail.

    Requires at least 4*max S of table beyond tail_start so a reported
    period rests on a couple of full cycles of evidence.
    """
    m = table.ruleset.max_action
    if tail_start < 0 or tail_start > table.x_max:
        raise ValueError(f"tail_start {tail_start} outside table range 0..{table.x_max}")
    if tail_start + 4 * m > table.x_max:
        raise ValueError(
            f"window too small: need tail_start + {4 * m} <= x_max, "
            f"got tail_start={tail_start}, x_max={table.x_max}"
        )
    o = table.outcomes
    top = table.x_max
    for p in range(1, 2 * m + 1):
        if all(o[x] == o[x + p] for x in range(tail_start, top - p + 1)):
            return PeriodReport(period=p, tail_start=tail_start, verified_up_to=top)
    raise TheoremViolationError(
        f"no period up to {2 * m} on tail [{tail_start}, {top}] for {table.ruleset}"
    )


def _sacrificing_movers(ruleset: Ruleset, trace: PlayTrace) -> set[Mover]:
    heap = trace.start_heap
    sackers: set[Mover] = set()
    for mv in trace.moves:
        if mv.action != ruleset.greedy_action(heap):
            sackers.add(mv.mover)
        heap -= mv.action
    return sackers


def check_observation_last_move(ruleset: Ruleset, xs: Iterable[int]) -> ObservationReport:
    """Two-action games: whoever sacrifices plays the last move.

    Checked against the canonical trace from every heap in xs; vacuously
    true for traces without sacrifices.
    """
    if not ruleset.is_two_action:
        raise ValueError(f"observation is stated for two-action games, got {ruleset}")
    xs = list(xs)
    table = build_outcome_table(ruleset, max(xs, default=0))
    for x in xs:
        trace = canonical_trace(ruleset, x, table=table)
        sackers = _sacrificing_movers(ruleset, trace)
        if sackers and sackers != {trace.moves[-1].mover}:
            return ObservationReport(
                observation="sacrificer-plays-last",
                ruleset=ruleset,
                holds=False,
                counterexample_x=x,
                witness=trace,
            )
    return ObservationReport(observation="sacrificer-plays-last", ruleset=ruleset, holds=True)


def check_observation_one_greedy(ruleset: Ruleset, xs: Iterable[int]) -> ObservationReport:
    """Two-action games: at least one player plays greedily throughout."""
    if not ruleset.is_two_action:
        raise ValueError(f"observation is stated for two-action games, got {ruleset}")
    xs = list(xs)
    table = build_outcome_table(ruleset, max(xs, default=0))
    for x in xs:
        trace = canonical_trace(ruleset, x, table=table)
        if len(_sacrificing_movers(ruleset, trace)) > 1:
            return ObservationReport(
                observation="one-player-all-greedy",
                ruleset=ruleset,
                holds=False,
                counterexample_x=x,
                witness=trace,
            )
    return ObservationReport(observation="one-player-all-greedy", ruleset=ruleset, holds=True)


def check_nonincreasing_actions(ruleset: Ruleset, x: int) -> ObservationReport:
    """Is each player's action sequence non-increasing along the canonical trace?

    Exploratory: reported, not assumed, by anything else in the package.
    """
    trace = canonical_trace(ruleset, x)
    for mover in (Mover.POSITIVE, Mover.NEGATIVE):
        seq = trace.actions_by(mover)
        if any(later > earlier for later, earlier in zip(seq[1:], seq)):
            return ObservationReport(
                observation="per-player-nonincreasing",
                ruleset=ruleset,
                holds=False,
                counterexample_x=x,
                witness=trace,
            )
    return ObservationReport(observation="per-player-nonincreasing", ruleset=ruleset, holds=True)


def _both_sacrifice_findings(ruleset: Ruleset, x_cap: int) -> list[SacrificeFinding]:
    """Findings for every start heap <= x_cap whose trace has both players sacrificing.

    Canonical traces from all starts form a functional graph on
    (heap, player-to-move), so per-player maximal sacrifice sizes for all
    starts come out of one linear pass instead of replaying each trace.
    """
    table = build_outcome_table(ruleset, x_cap)
    lo = ruleset.min_action
    greedy = [0] * (x_cap + 1)
    for h in range(lo, x_cap + 1):
        greedy[h] = ruleset.greedy_action(h)
    pos_p = [0] * (x_cap + 1)  # max sacrifice by Positive, Positive to move
    neg_p = [0] * (x_cap + 1)
    pos_n = [0] * (x_cap + 1)  # same, Negative to move
    neg_n = [0] * (x_cap + 1)
    for h in range(lo, x_cap + 1):
        a = table.opts[h]
        sac = greedy[h] - a
        c = h - a
        pos_p[h] = sac if sac > pos_n[c] else pos_n[c]
        neg_p[h] = neg_n[c]
        neg_n[h] = sac if sac > neg_p[c] else neg_p[c]
        pos_n[h] = pos_p[c]
    out: list[SacrificeFinding] = []
    for x in range(lo, x_cap + 1):
        p, n = pos_p[x], neg_p[x]
        if p > 0 and n > 0:
            out.append(SacrificeFinding(ruleset, x, p, n, consistent=n < p))
    return out


def scan_sacrifice_conjecture(max_s: int, x_cap: int) -> list[SacrificeFinding]:
    """Sweep 4- and 5-action rulesets over {1..max_s} for double-sacrifice traces.

    Conjectured relation under test: when both players sacrifice in one
    optimal play, Negative's sacrifice is strictly smaller than Positive's.
    """
    if max_s < 4:
        raise ValueError(f"need max_s >= 4 for multi-action sacrifice games, got {max_s}")
    if x_cap < 0:
        raise ValueError(f"x_cap must be nonnegative, got {x_cap}")
    findings: list[SacrificeFinding] = []
    for size in (4, 5):
        if size > max_s:
            continue
        for combo in combinations(range(1, max_s + 1), size):
            findings.extend(_both_sacrifice_findings(Ruleset(combo), x_cap))
    return findings


def conjecture_report(
    conjecture: str,
    parameters: dict,
    swept_space: dict,
    counterexamples: list[dict],
    decisive: bool = True,
) -> dict:
    """Uniform JSON shape for every conjecture/observation sweep.

    decisive=False marks sweeps whose failures are window-limited
    observations (e.g. a period not yet visible on a finite grid line)
    rather than outright refutations.
    """
    if not counterexamples:
        verdict = "holds"
    else:
        verdict = "falsified" if decisive else "candidate-counterexamples"
    return {
        "conjecture": conjecture,
        "parameters": parameters,
        "swept_space": swept_space,
        "counterexamples": counterexamples,
        "verdict": verdict,
    }


def sacrifice_conjecture_report(max_s: int, x_cap: int) -> dict:
    findings = scan_sacrifice_conjecture(max_s, x_cap)
    return conjecture_report(
        conjecture="negative-sacrifice-smaller",
        parameters={"max_s": max_s, "x_cap": x_cap},
        swept_space={
            "ruleset_sizes": [4, 5],
            "positions_with_both_sacrificing": len(findings),
        },
        counterexamples=[f.as_dict() for f in findings if not f.consistent],
    )


def observation_sweep_report(name: str, max_s: int, x_cap: int) -> dict:
    """Check one of the two-action observations on every pair with max <= max_s."""
    checkers = {
        "last-move": check_observation_last_move,
        "one-greedy": check_observation_one_greedy,
    }
    titles = {
        "last-move": "two-action-sacrificer-plays-last",
        "one-greedy": "two-action-one-player-all-greedy",
    }
    if name not in checkers:
        raise ValueError(f"unknown observation {name!r}; expected one of {sorted(checkers)}")
    if max_s < 2:
        raise ValueError(f"need max_s >= 2, got {max_s}")
    counterexamples: list[dict] = []
    count = 0
    for s2 in range(1, max_s):
        for s1 in range(s2 + 1, max_s + 1):
            count += 1
            report = checkers[name](Ruleset((s2, s1)), range(0, x_cap + 1))
            if not report.holds:
                counterexamples.append(report.as_dict())
    return conjecture_report(
        conjecture=titles[name],
        parameters={"max_s": max_s, "x_cap": x_cap},
        swept_space={"rulesets": count},
        counterexamples=counterexamples,
    )
