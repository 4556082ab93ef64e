"""Kazhdan-Lusztig cells of extended affine Weyl groups and weight-cell labels for GL."""

from .laurent import LaurentPoly
from .rootdata import Config, DatumError, RootDatum, build_gl, build_simple, parse_datum_selector
from .weyl import AffineWeylGroup, WeylElt, weyl_group
from .hecke import CanonicalTable, HeckeElt, canonical_basis
from .asph import AsphElt, canonical_asph, canonical_asph_recursive
from .cells import CellPartition, compute_cells
from .glcells import CellLabel, Multipartition, Partition, enumerate_cell_labels, orbit_count

__all__ = [
    "LaurentPoly",
    "Config",
    "DatumError",
    "RootDatum",
    "build_gl",
    "build_simple",
    "parse_datum_selector",
    "AffineWeylGroup",
    "WeylElt",
    "weyl_group",
    "CanonicalTable",
    "HeckeElt",
    "canonical_basis",
    "AsphElt",
    "canonical_asph",
    "canonical_asph_recursive",
    "CellPartition",
    "compute_cells",
    "CellLabel",
    "Multipartition",
    "Partition",
    "enumerate_cell_labels",
    "orbit_count",
]
