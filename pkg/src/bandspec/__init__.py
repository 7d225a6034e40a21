"""Band spectra of adjacency operators of sums and products of (Cayley) graphs."""

from .eigen import EigenSpectrum, eigenvalues, spectral_radius
from .expr import derived_spectrum, eval_meta, eval_spectrum, parse_expr
from .graphs import (
    CayleyMeta,
    FiniteGraph,
    cayley_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    graph_product,
    graph_strong_product,
    graph_sum,
    path_graph,
)
from .spectra import SpectrumSet, minkowski_sum, pointwise_product, strong_combine
from .verify import materialize, verify_containment, verify_coverage

__version__ = "0.1.0"
