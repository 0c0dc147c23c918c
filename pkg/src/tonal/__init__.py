"""Exact computations on 2-coloured complete graphs and coloured copies of small patterns."""

from .canonical import CanonicalSize, canonical_colouring, canonical_sizes, verify_obstructions
from .embed import (CoverageReport, Embedding, class_coverage, find_embedding,
                    greedy_star_forest_embed, tone_coverage)
from .errors import DomainError, SizeLimitError, TheoremViolation
from .extremal import ExtremalResult, ot_exact, ot_star_formula, tot_exact, tot_star_forest_bound
from .graph import ColouredHost, Colour, Graph, PatternColouring, star_forest
from .io import ParseError, parse_coloured, parse_graph
from .patterns import (PatternClass, automorphisms, enumerate_pattern_classes, is_star_forest,
                       patterns_equivalent, witness_pattern)

__version__ = "0.1.0"
