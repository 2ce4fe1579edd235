"""Brute-force oracle over planar maps given as rotation systems."""

from maps.canonical import CanonicalCode, canonical_code, canonical_form, map_from_code
from maps.combmap import CombMap, SliceFrame, genus
from maps.generate import (
    canonical_codes,
    count_angulations,
    count_irreducible_slices,
    count_tight_irreducible,
    enumerate_maps,
)
from maps.predicates import Cycle, girth, is_irreducible, is_tight, separating_girth, simple_cycles
from maps.serialization import map_from_text, map_to_text
from maps.twoface import enumerate_two_face_marked

__all__ = [
    "CanonicalCode",
    "CombMap",
    "Cycle",
    "SliceFrame",
    "canonical_code",
    "canonical_codes",
    "canonical_form",
    "count_angulations",
    "count_irreducible_slices",
    "count_tight_irreducible",
    "enumerate_maps",
    "enumerate_two_face_marked",
    "genus",
    "girth",
    "is_irreducible",
    "is_tight",
    "map_from_code",
    "map_from_text",
    "map_to_text",
    "separating_girth",
    "simple_cycles",
]
