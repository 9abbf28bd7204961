from berge_coloring.colorers.base import ColorerBase
from berge_coloring.colorers.exact import ExactColorer
from berge_coloring.colorers.path import BergePathColorer, color_bpk_free
from berge_coloring.colorers.peel import PeelColorer, peel_color_strong

__all__ = [
    "ColorerBase",
    "ExactColorer",
    "BergePathColorer",
    "PeelColorer",
    "color_bpk_free",
    "peel_color_strong",
]
