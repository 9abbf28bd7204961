from typing import Optional

from berge_coloring.coloring import STRONG, Coloring
from berge_coloring.colorers.base import ColorerBase
from berge_coloring.detect import BergeWitness
from berge_coloring.exact import exact_strong_chromatic, exact_weak_chromatic
from berge_coloring.exceptions import CertificateException
from berge_coloring.hypergraph import Hypergraph


class ExactColorer(ColorerBase):
    """Optimal colorings by exhaustive search. Desk-scale inputs only."""

    NAME = "exact"

    def __init__(self, mode: str = STRONG, budget_options: dict = None):
        super().__init__(mode, budget_options)

    def _color(self, h: Hypergraph) -> Coloring:
        if self.mode == STRONG:
            return exact_strong_chromatic(h, self.budget).coloring
        return exact_weak_chromatic(h, self.budget).coloring

    def certify(
        self, h: Hypergraph, cause: CertificateException
    ) -> Optional[BergeWitness]:
        # exact searches only fail by running out of budget
        raise cause
