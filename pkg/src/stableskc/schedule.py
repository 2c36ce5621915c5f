"""Schedules (ordered sets of seedings) and their plain-text file format.

One seeding per line.  Lines starting with ``#`` are comments; comments of the
form ``# key: value`` at the top of the file are kept as metadata.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .bracket import Seeding, SeedingFormatError, format_seeding, parse_seeding

__all__ = [
    "Schedule",
    "ScheduleFormatError",
    "parse_schedule",
    "render_schedule",
    "read_schedule",
    "write_schedule",
    "golden_schedule",
    "GOLDEN_TABLES",
]

GOLDEN_TABLES = ("table1", "table4", "table5", "table6")

_META = re.compile(r"^#\s*([A-Za-z][\w-]*)\s*:\s*(.*?)\s*$")


class ScheduleFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str = "<schedule>"):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column
        self.source = source

    def __str__(self):
        loc = self.source
        if self.line is not None:
            loc += f":{self.line}"
            if self.column is not None:
                loc += f":{self.column}"
        return f"{loc}: {self.message}"


@dataclass(frozen=True)
class Schedule:
    """An ordered collection of seedings on a common player set."""

    seedings: tuple[Seeding, ...]
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        seedings = tuple(self.seedings)
        object.__setattr__(self, "seedings", seedings)
        if seedings:
            n = seedings[0].n
            for s in seedings[1:]:
                if s.n != n:
                    raise ValueError(f"seedings on different player sets: {n} vs {s.n} players")

    @property
    def n(self) -> int:
        if not self.seedings:
            raise ValueError("empty schedule has no player count")
        return self.seedings[0].n

    @property
    def k(self) -> int:
        return self.n.bit_length() - 1

    def is_skc_sized(self) -> bool:
        """True when the schedule has exactly n-1 tournaments."""
        return bool(self.seedings) and len(self.seedings) == self.n - 1

    def __len__(self):
        return len(self.seedings)

    def __iter__(self):
        return iter(self.seedings)

    def __getitem__(self, i):
        return self.seedings[i]

    def relabel(self, perm) -> Schedule:
        return Schedule(tuple(s.relabel(perm) for s in self.seedings), dict(self.metadata))


def parse_schedule(text: str, source: str = "<schedule>") -> Schedule:
    seedings = []
    metadata = {}
    n = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.strip()
        if not content:
            continue
        if content.startswith("#"):
            m = _META.match(content)
            if m and not seedings:
                metadata[m.group(1).lower()] = m.group(2)
            continue
        try:
            s = parse_seeding(line)
        except SeedingFormatError as exc:
            raise ScheduleFormatError(exc.message, lineno, exc.column, source) from None
        if n is not None and s.n != n:
            raise ScheduleFormatError(f"seeding has {s.n} players, earlier seedings have {n}", lineno, None, source)
        n = s.n
        seedings.append(s)
    return Schedule(tuple(seedings), metadata)


def render_schedule(schedule: Schedule, style: str | None = None) -> str:
    lines = [f"# {key}: {value}" for key, value in schedule.metadata.items()]
    lines.extend(format_seeding(s, style) for s in schedule.seedings)
    return "\n".join(lines) + "\n"


def read_schedule(path) -> Schedule:
    path = Path(path)
    return parse_schedule(path.read_text(), source=str(path))


def write_schedule(schedule: Schedule, path, style: str | None = None) -> None:
    Path(path).write_text(render_schedule(schedule, style))


def golden_schedule(name: str) -> Schedule:
    """Reference schedules shipped as package data (see ``GOLDEN_TABLES``)."""
    if name not in GOLDEN_TABLES:
        raise KeyError(f"unknown golden table {name!r}; choose from {', '.join(GOLDEN_TABLES)}")
    text = resources.files("stableskc.data").joinpath(f"{name}.txt").read_text()
    return parse_schedule(text, source=f"{name}.txt")
