import abc
import logging
from typing import Optional, Type

from berge_coloring.budget import Budget
from berge_coloring.coloring import MODES, STRONG, Coloring
from berge_coloring.detect import BergeWitness
from berge_coloring.exceptions import (
    BergePatternFound,
    CertificateException,
    UncertifiedFailureError,
    UsageException,
)
from berge_coloring.hypergraph import Hypergraph

logger = logging.getLogger("berge_coloring")


class ColorerBase(abc.ABC):
    NAME = None
    CERTIFICATE: Type[BergePatternFound] = BergePatternFound

    @abc.abstractmethod
    def __init__(self, mode: str = STRONG, budget_options: dict = None):
        if mode not in MODES:
            raise UsageException(f"Unknown coloring mode {mode!r}")
        self.mode = mode
        self.budget = Budget(options=budget_options)
        self.pattern_spec: Optional[str] = None
        self.failures = 0
        self.last_coloring: Optional[Coloring] = None

    def __repr__(self) -> str:
        return f"<{type(self).__name__} mode={self.mode}>"

    def color(self, h: Hypergraph) -> Coloring:
        """
        Colors h. When the algorithm's contract breaks (palette exceeded,
        invalid result, nonempty core) the colorer looks for a Berge copy of
        the pattern it assumed absent and raises it as a certificate.

        :param h: The hypergraph to color
        :return: A validated Coloring
        :raises berge_coloring.exceptions.BergePatternFound: The input
            contains the pattern; carries the witness
        :raises berge_coloring.exceptions.UncertifiedFailureError: The
            algorithm failed and no witness was found
        :raises berge_coloring.exceptions.BudgetExceededError: A search ran
            out of nodes
        """
        self.budget.reset()
        logger.info(f"Coloring {h} with {self!r}")

        try:
            coloring = self._color(h)
        except BergePatternFound:
            raise
        except CertificateException as e:
            logger.warning(f"{self!r} failed on {h}: {e}. Looking for a certificate")
            self._in_case_of_failure(h, e)
        else:
            self.on_color_success(coloring)
            return coloring
        finally:
            self.on_color(h)

    @abc.abstractmethod
    def _color(self, h: Hypergraph) -> Coloring:  # pragma: no cover
        pass

    @abc.abstractmethod
    def certify(
        self, h: Hypergraph, cause: CertificateException
    ) -> Optional[BergeWitness]:
        """
        Searches h for the pattern whose absence the algorithm relies on.

        :param h: The input that could not be colored
        :param cause: The exception the algorithm raised
        :return: A witness in h's vertex and edge ids, or None
        """
        pass

    def _in_case_of_failure(self, h: Hypergraph, cause: CertificateException):
        """
        Turns a failed run into a certificate. Always raises.
        """
        self.failures += 1
        witness = self.certify(h, cause)
        if witness is not None:
            logger.warning(
                f"Found a Berge copy of {self.pattern_spec} certifying the failure"
            )
            raise self.CERTIFICATE(self.pattern_spec, witness) from cause

        logger.error(f"{self!r} failed on {h} and no certificate was found: {cause}")
        raise UncertifiedFailureError(cause) from cause

    def on_color(self, h: Hypergraph):
        """Callback after every coloring attempt, successful or not."""
        logger.debug(f"{self!r} spent {self.budget.used} search nodes on {h}")

    def on_color_success(self, coloring: Coloring):
        """Callback after a successful coloring. Remembers the result."""
        self.last_coloring = coloring
        logger.info(f"{self!r} used {coloring.palette_size} colors")
