"""Balanced knockout tournaments represented by their seedings.

A seeding lists the players at the leaves of a balanced knockout tree from
left to right.  Two players at leaf positions p and p' first share a subtree
at round ``(p ^ p').bit_length()``, which is the round in which they can meet.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

__all__ = [
    "Seeding",
    "SeedingFormatError",
    "PLAYER_CHARS",
    "parse_seeding",
    "format_seeding",
]

PLAYER_CHARS = "0123456789abcdefghijklmnopqrstuv"
_CHAR_VALUE = {c: i for i, c in enumerate(PLAYER_CHARS)}


class SeedingFormatError(ValueError):
    """A seeding string could not be parsed.  ``column`` is 1-based when known."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.message = message
        self.column = column

    def __str__(self):
        if self.column is None:
            return self.message
        return f"column {self.column}: {self.message}"


@dataclass(frozen=True)
class Seeding:
    order: tuple[int, ...]
    _positions: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        order = tuple(int(p) for p in self.order)
        n = len(order)
        if n < 2 or n & (n - 1):
            raise ValueError(f"a balanced knockout needs a power-of-two number of players >= 2, got {n}")
        if sorted(order) != list(range(n)):
            raise ValueError(f"seeding is not a permutation of 0..{n - 1}: {order}")
        positions = [0] * n
        for p, player in enumerate(order):
            positions[player] = p
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_positions", tuple(positions))

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def k(self) -> int:
        return self.n.bit_length() - 1

    @property
    def positions(self) -> tuple[int, ...]:
        """``positions[x]`` is the leaf index of player ``x``."""
        return self._positions

    def _check_player(self, x):
        if not isinstance(x, int) or not 0 <= x < self.n:
            raise ValueError(f"unknown player {x!r} for a {self.n}-player seeding")

    def meeting_round(self, x: int, y: int) -> int:
        """Round (1..k) in which players ``x`` and ``y`` can meet."""
        self._check_player(x)
        self._check_player(y)
        if x == y:
            raise ValueError(f"a player cannot meet itself (player {x})")
        return (self._positions[x] ^ self._positions[y]).bit_length()

    def round_opponents(self, x: int, i: int) -> set[int]:
        """Players that ``x`` can meet in round ``i``; always 2**(i-1) of them."""
        self._check_player(x)
        if not 1 <= i <= self.k:
            raise ValueError(f"round {i} out of range 1..{self.k}")
        p = self._positions[x]
        # leaves in the sibling subtree joined at round i
        base = (p ^ (1 << (i - 1))) >> (i - 1) << (i - 1)
        return set(self.order[base:base + (1 << (i - 1))])

    def relabel(self, perm) -> Seeding:
        """Apply a player bijection, given as a sequence or mapping, to every leaf."""
        images = [perm[player] for player in range(self.n)]
        if sorted(images) != list(range(self.n)):
            raise ValueError("relabelling map is not a bijection on the players")
        return Seeding(tuple(images[player] for player in self.order))

    def profile(self) -> tuple[int, ...]:
        """Meeting rounds of all pairs (x < y) in lexicographic pair order."""
        return tuple(self.meeting_round(x, y) for x, y in combinations(range(self.n), 2))

    def same_tournament(self, other: Seeding) -> bool:
        """True iff both seedings give every pair the same meeting round."""
        if other.n != self.n:
            raise ValueError(f"seedings of different sizes: {self.n} vs {other.n}")
        return all(
            self.meeting_round(x, y) == other.meeting_round(x, y)
            for x, y in combinations(range(self.n), 2)
        )

    def __str__(self):
        return format_seeding(self)


def format_seeding(s: Seeding, style: str | None = None) -> str:
    """Render as ``0145-2367`` (n <= 32) or as comma-separated decimals.

    ``style`` is ``"chars"``, ``"decimal"`` or None for automatic choice.
    """
    if style is None:
        style = "chars" if s.n <= len(PLAYER_CHARS) else "decimal"
    if style == "decimal":
        return ",".join(str(p) for p in s.order)
    if style != "chars":
        raise ValueError(f"unknown seeding style {style!r}")
    if s.n > len(PLAYER_CHARS):
        raise ValueError(f"character format supports at most {len(PLAYER_CHARS)} players")
    chars = "".join(PLAYER_CHARS[p] for p in s.order)
    return "-".join(chars[i:i + 4] for i in range(0, len(chars), 4))


def parse_seeding(text: str) -> Seeding:
    """Parse either seeding string format; hyphens and surrounding spaces are ignored."""
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if not stripped:
        raise SeedingFormatError("empty seeding")
    order = []
    if "," in stripped:
        col = offset + 1
        for token in stripped.split(","):
            t = token.strip()
            if not t.isdigit():
                raise SeedingFormatError(f"bad player token {token!r}", col)
            order.append((int(t), col))
            col += len(token) + 1
    else:
        for i, c in enumerate(stripped):
            if c == "-":
                continue
            if c not in _CHAR_VALUE:
                raise SeedingFormatError(f"bad player character {c!r}", offset + i + 1)
            order.append((_CHAR_VALUE[c], offset + i + 1))
    n = len(order)
    if n < 2 or n & (n - 1):
        raise SeedingFormatError(f"seeding has {n} players, which is not a power of two >= 2")
    seen = {}
    for player, col in order:
        if player >= n:
            raise SeedingFormatError(f"player {player} out of range for {n} players", col)
        if player in seen:
            raise SeedingFormatError(f"duplicate player {player} (first at column {seen[player]})", col)
        seen[player] = col
    return Seeding(tuple(p for p, _ in order))
