"""Brute-force stability checking of arbitrary sets of seedings.

Nothing here relies on how a schedule was constructed: every pair of players
is counted in every tournament.
"""
from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field

import numpy as np

from .bracket import Seeding
from .schedule import Schedule

__all__ = [
    "Violation",
    "StabilityReport",
    "check_stability",
    "meeting_round_matrix",
    "random_schedule",
    "compare_schedules",
]


@dataclass(frozen=True)
class Violation:
    round: int
    pair: tuple[int, int]
    observed: int
    expected: int


@dataclass
class StabilityReport:
    k: int
    n: int
    num_tournaments: int
    counts: np.ndarray = field(repr=False)
    """``counts[i-1, x, y]`` tournaments in which x and y can meet in round i (symmetric, zero diagonal)."""
    stable_rounds: frozenset
    c_values: dict
    expected: dict
    violations: list
    num_violations: int

    @property
    def stable(self) -> bool:
        return len(self.stable_rounds) == self.k

    @property
    def skc_sized(self) -> bool:
        return self.num_tournaments == self.n - 1

    @property
    def canonical_counts(self) -> bool:
        """Stable with c_i = 2**(i-1) in every round."""
        return self.stable and all(self.c_values[i] == 1 << (i - 1) for i in range(1, self.k + 1))

    def pair_counts(self, x: int, y: int) -> list[int]:
        return [int(c) for c in self.counts[:, x, y]]

    def summary(self, max_witnesses: int = 10) -> str:
        lines = []
        if self.stable:
            c = ",".join(str(self.c_values[i]) for i in range(1, self.k + 1))
            lines.append(f"stable, c = {c}")
        else:
            lines.append(f"unstable ({self.num_violations} violating pair-rounds)")
            for i in range(1, self.k + 1):
                if i in self.stable_rounds:
                    lines.append(f"  round {i}: stable, c = {self.c_values[i]}")
                else:
                    lines.append(f"  round {i}: unstable, expected {self.expected[i]}")
            for v in self.violations[:max_witnesses]:
                lines.append(
                    f"  witness: round {v.round}, pair ({v.pair[0]},{v.pair[1]}): "
                    f"count {v.observed}, expected {v.expected}"
                )
            if self.num_violations > min(max_witnesses, len(self.violations)):
                lines.append(f"  ... {self.num_violations - min(max_witnesses, len(self.violations))} more")
        if not self.skc_sized:
            lines.append(f"note: {self.num_tournaments} tournaments, an SKC on {self.n} players has {self.n - 1}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "num_tournaments": self.num_tournaments,
            "stable": self.stable,
            "skc_sized": self.skc_sized,
            "stable_rounds": sorted(self.stable_rounds),
            "c_values": {str(i): c for i, c in sorted(self.c_values.items())},
            "expected": {str(i): c for i, c in sorted(self.expected.items())},
            "num_violations": self.num_violations,
            "violations": [
                {"round": v.round, "pair": list(v.pair), "observed": v.observed, "expected": v.expected}
                for v in self.violations
            ],
            "counts": self.counts.tolist(),
        }


def meeting_round_matrix(s: Seeding) -> np.ndarray:
    """n x n matrix of meeting rounds, 0 on the diagonal."""
    pos = np.asarray(s.positions, dtype=np.int64)
    xor = pos[:, None] ^ pos[None, :]
    # bit_length of 0..n-1
    bit_length = np.zeros(s.n, dtype=np.int64)
    for b in range(1, s.n):
        bit_length[b] = b.bit_length()
    return bit_length[xor]


def _expected_count(round_counts: np.ndarray, i: int, skc_sized: bool) -> int:
    if skc_sized:
        return 1 << (i - 1)
    values, freq = np.unique(round_counts, return_counts=True)
    return int(values[np.argmax(freq)])


def check_stability(schedule: Schedule, max_witnesses: int | None = None) -> StabilityReport:
    """Count, for each round and each pair, the tournaments where the pair can meet.

    ``max_witnesses`` caps the stored violation list; ``num_violations`` is always exact.
    """
    seedings = list(schedule.seedings)
    if not seedings:
        raise ValueError("cannot check an empty schedule")
    n = seedings[0].n
    for s in seedings:
        if s.n != n:
            raise ValueError(f"seedings on different player sets: {n} vs {s.n} players")
    k = n.bit_length() - 1
    rows, cols = np.triu_indices(n, 1)
    counts = np.zeros((k, n, n), dtype=np.int64)
    for s in seedings:
        rounds = meeting_round_matrix(s)[rows, cols]
        # each (round, x, y) triple occurs once per tournament
        counts[rounds - 1, rows, cols] += 1
    counts = counts + counts.transpose(0, 2, 1)

    skc_sized = len(seedings) == n - 1
    stable_rounds = set()
    c_values = {}
    expected = {}
    violations = []
    num_violations = 0
    for i in range(1, k + 1):
        upper = counts[i - 1, rows, cols]
        exp = _expected_count(upper, i, skc_sized)
        expected[i] = exp
        if np.all(upper == upper[0]):
            stable_rounds.add(i)
            c_values[i] = int(upper[0])
        bad = np.nonzero(upper != exp)[0]
        num_violations += len(bad)
        for j in bad:
            if max_witnesses is not None and len(violations) >= max_witnesses:
                break
            violations.append(Violation(i, (int(rows[j]), int(cols[j])), int(upper[j]), exp))
    return StabilityReport(
        k=k,
        n=n,
        num_tournaments=len(seedings),
        counts=counts,
        stable_rounds=frozenset(stable_rounds),
        c_values=c_values,
        expected=expected,
        violations=violations,
        num_violations=num_violations,
    )


def random_schedule(k: int, seed: int) -> Schedule:
    """n-1 uniformly random seedings, reproducible from ``seed``."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    rng = random.Random(seed)
    n = 1 << k
    seedings = []
    for _ in range(n - 1):
        order = list(range(n))
        rng.shuffle(order)
        seedings.append(Seeding(tuple(order)))
    return Schedule(tuple(seedings), {"k": str(k), "method": "random", "seed": str(seed)})


def compare_schedules(a: Schedule, b: Schedule) -> list[tuple[int, int]] | None:
    """Pair each seeding of ``a`` with an equivalent seeding of ``b``.

    Returns index pairs ``(i, j)`` such that ``a[i]`` and ``b[j]`` give every
    pair of players the same meeting round, or None when no bijection exists.
    Equivalent seedings share a meeting-round profile, so the matching is found
    by grouping profiles; ties are resolved in index order.
    """
    if a.n != b.n:
        raise ValueError(f"schedules on different player sets: {a.n} vs {b.n} players")
    if len(a) != len(b):
        raise ValueError(f"schedules of different sizes: {len(a)} vs {len(b)} tournaments")
    profiles_a = [s.profile() for s in a]
    profiles_b = [s.profile() for s in b]
    if Counter(profiles_a) != Counter(profiles_b):
        return None
    # prefer the identity when a[i] and b[i] already agree
    pool = defaultdict(list)
    for j, p in enumerate(profiles_b):
        pool[p].append(j)
    matching = []
    for i, p in enumerate(profiles_a):
        candidates = pool[p]
        j = i if i in candidates else candidates[0]
        candidates.remove(j)
        matching.append((i, j))
    return matching
