"""Homology of finite semigroups satisfying self-distributivity,
idempotency, or the a*b*b*c = a*b*c axiom; five comparison homology
theories over the same chain modules; an exact integer Smith normal form
engine; and the Jones monoid of Temperley-Lieb diagrams."""

from .chains import Chain, Theory, boundary, boundary_matrix
from .errors import LboError
from .jones import Diagram, compose, enumerate_diagrams, jsmp, to_mul_table
from .magma import ClassReport, MulTable, classify, enumerate_tables, parse_table
from .realization import export_skeleton, h0_commutator, h0_general
from .snf import HomologyGroup, homology, homology_range, smith_normal_form

__all__ = [
    "Chain", "ClassReport", "Diagram", "HomologyGroup", "LboError",
    "MulTable", "Theory", "boundary", "boundary_matrix", "classify",
    "compose", "enumerate_diagrams", "enumerate_tables", "export_skeleton",
    "h0_commutator", "h0_general", "homology", "homology_range", "jsmp",
    "parse_table", "smith_normal_form", "to_mul_table",
]

__version__ = "0.1.0"
