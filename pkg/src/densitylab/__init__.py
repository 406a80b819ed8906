"""Exact counting, extremal constructions and step-graphon functionals for
ordered and colored subgraph density problems."""
from ._accel import backend_name
from .constructions import (
    build_banded,
    build_clique_plus_isolated,
    build_cocliqued,
    build_colored_case1,
    build_colored_case2,
    build_Kst_pattern,
    build_SL,
    build_SR,
    build_spider,
    quasi_star_params,
)
from .counting import (
    M,
    OrderedPattern,
    ColoredPattern,
    colored_density,
    count_colored_copies,
    count_induced,
    count_left_stars,
    count_M,
    count_ordered_pattern,
    count_stars,
    left_star,
    ordered_density,
    star_density,
)
from .graph_core import ColoredCompleteGraph, LabeledGraph, OrderedGraph
from .graphon import StepGraphon

__version__ = "0.1.0"
