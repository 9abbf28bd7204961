from berge_coloring.hypergraph import Hypergraph  # noqa: F401
from berge_coloring.patterns import PatternGraph  # noqa: F401
from berge_coloring.coloring import Coloring  # noqa: F401
from berge_coloring.version import __version__, __version_info__  # noqa: F401
from berge_coloring.colorers import (  # noqa: F401
    BergePathColorer,
    ExactColorer,
    PeelColorer,
    color_bpk_free,
    peel_color_strong,
)
