"""Stable serial knockout competitions on 2^k players."""
from .binpoly import BinPoly, default_modulus, is_irreducible, parse_poly
from .bracket import Seeding, format_seeding, parse_seeding
from .fano import build_fano_skc, canonical_plane, enumerate_assignments, seeding_from_pair
from .galois_skc import TeamMap, base_tournament, build_galois_skc, tournament_z
from .gf2k import FieldCtx, FieldElem, all_elements
from .schedule import Schedule, golden_schedule, parse_schedule, render_schedule
from .verifier import check_stability, compare_schedules, random_schedule

__version__ = "0.1.0"
