"""Stable schedules for 2^k players from multiplication in GF(2^k).

Players are field elements.  The base tournament places element ``b`` at leaf
``b``, so two players meet in round 1 + d(x - y).  Multiplying every leaf by a
nonzero z gives the tournament T(z); the 2^k - 1 tournaments T(z) together
give every pair of players exactly 2^(i-1) chances to meet in round i.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bracket import Seeding
from .gf2k import FieldCtx, FieldElem, all_elements
from .schedule import Schedule

__all__ = ["TeamMap", "base_tournament", "tournament_z", "build_galois_skc"]


@dataclass(frozen=True)
class TeamMap:
    """Bijection from field elements (by bits) to player labels."""

    labels: tuple[int, ...]
    name: str = "custom"

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if sorted(labels) != list(range(len(labels))):
            raise ValueError(f"team map is not a bijection: {labels}")

    @classmethod
    def identity(cls, k: int) -> TeamMap:
        return cls(tuple(range(1 << k)), "identity")

    @classmethod
    def paper8(cls) -> TeamMap:
        # 0, 1, α, α+1, α², α²+1, α²+α, α²+α+1 -> teams
        return cls((0, 1, 4, 5, 2, 3, 6, 7), "paper8")

    @classmethod
    def named(cls, name: str, k: int) -> TeamMap:
        if name == "identity":
            return cls.identity(k)
        if name == "paper8":
            if k != 3:
                raise ValueError("the paper8 team map only exists for 8 players")
            return cls.paper8()
        raise ValueError(f"unknown team map {name!r}")

    def __call__(self, x: FieldElem | int) -> int:
        return self.labels[int(x)]


def _team_map(ctx: FieldCtx, team_map: TeamMap | None) -> TeamMap:
    if team_map is None:
        return TeamMap.identity(ctx.k)
    if len(team_map.labels) != ctx.order:
        raise ValueError(f"team map covers {len(team_map.labels)} players, field has {ctx.order}")
    return team_map


def base_tournament(ctx: FieldCtx) -> Seeding:
    """Element with bits ``p`` at leaf ``p``."""
    return Seeding(tuple(x.bits for x in all_elements(ctx)))


def tournament_z(ctx: FieldCtx, z: FieldElem, team_map: TeamMap | None = None) -> Seeding:
    if z.ctx != ctx:
        raise ValueError("z belongs to a different field")
    if z.bits == 0:
        raise ValueError("T(z) requires a nonzero z")
    tm = _team_map(ctx, team_map)
    return Seeding(tuple(tm.labels[ctx.mul_bits(z.bits, b)] for b in range(ctx.order)))


def build_galois_skc(ctx: FieldCtx, team_map: TeamMap | None = None) -> Schedule:
    tm = _team_map(ctx, team_map)
    seedings = tuple(tournament_z(ctx, ctx(z), tm) for z in range(1, ctx.order))
    metadata = {
        "k": str(ctx.k),
        "modulus": ctx.modulus.hex(),
        "team-map": tm.name if tm.name != "custom" else ",".join(map(str, tm.labels)),
        "z": "1.." + str(ctx.order - 1),
    }
    return Schedule(seedings, metadata)
