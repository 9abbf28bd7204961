class BergeColoringFatalException(Exception):
    """
    Superclass for Exceptions that can't realistically be recovered from
    during runtime.
    """


class BergeColoringNonFatalException(Exception):
    """
    Superclass for Exceptions that callers are expected to handle (e.g. a
    colorer failing and handing back a Berge witness instead of a coloring).
    """


class UsageException(BergeColoringFatalException):
    """
    Superclass for exceptions that are raised when berge_coloring is used in
    an unintended way. These exceptions are considered fatal.
    """

    pass


class InvalidHypergraphError(UsageException):
    """
    Raised by the Hypergraph constructor when an edge is too small, too
    large, repeats a vertex, names a vertex outside 0..n-1 or duplicates
    another edge.
    """

    pass


class InvalidVertexError(UsageException):
    """Raised when an operation receives a vertex id outside 0..n-1."""

    def __init__(self, v: int, n: int):
        msg = f"Vertex {v} is not a vertex of a hypergraph on {n} vertices."
        super().__init__(msg)


class InvalidPatternError(UsageException):
    """
    Raised when a pattern graph is malformed (loops, ids out of range) or
    when a pattern spec string can't be understood.
    """

    pass


class NotAForestError(InvalidPatternError):
    """
    Raised by greedy_embed_tree() and named_tree() when the pattern graph
    contains a cycle (parallel edges count as a cycle of length two).
    """

    def __init__(self):
        msg = "The pattern graph is not a forest."
        super().__init__(msg)


class NotUniformError(UsageException):
    """
    Raised when an operation needs edges of one particular size (or of size
    at most some bound) and the hypergraph has others.
    """

    pass


class UnsupportedParameterError(UsageException):
    """
    Raised by the generators for parameters outside the supported range,
    e.g. a projective plane over a non-prime order or a Steiner triple system
    on n vertices with n not congruent to 3 mod 6.
    """

    pass


class PartialColoringError(UsageException):
    """
    Raised by validate() when the coloring does not assign a color to every
    vertex of the hypergraph.
    """

    def __init__(self, colored: int, n: int):
        msg = f"Coloring covers {colored} vertices but the hypergraph has {n}."
        super().__init__(msg)


class OracleSizeError(UsageException):
    """
    Raised by the enumeration oracles when an instance is larger than the
    caps they are written for.
    """

    pass


class ParseError(UsageException):
    """
    Raised by the file readers when a hypergraph, coloring or witness file is
    malformed. Carries the 1-based line number of the offending line.
    """

    def __init__(self, line_no: int, msg: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {msg}")


class ConstructionError(BergeColoringFatalException):
    """
    Raised by a generator when the object it built fails one of its defining
    invariants (e.g. a pair of points covered twice). This always indicates
    a bug.
    """

    pass


class UncertifiedFailureError(BergeColoringFatalException):
    """
    Raised by a colorer when its algorithm failed and the detector could not
    produce a Berge witness explaining the failure. Either the input violates
    a precondition the detector can't see (e.g. weak coloring with size-2
    edges) or there's an error in the colorer.
    """

    def __init__(self, cause: Exception):
        self.cause = cause
        msg = f"Coloring failed without a certificate: {cause}"
        super().__init__(msg)


class BudgetExceededError(BergeColoringNonFatalException):
    """
    Raised by Budget.spend() when a search has used up its node budget. The
    search was aborted and its answer is unknown.
    """

    def __init__(self, max_nodes: int):
        self.max_nodes = max_nodes
        msg = f"Search aborted after exceeding the budget of {max_nodes} nodes."
        super().__init__(msg)


class CertificateException(BergeColoringNonFatalException):
    """
    Superclass for exceptions that carry a certificate explaining why a
    coloring could not be produced.
    """

    pass


class NonemptyCoreError(CertificateException):
    """
    Raised by peel_color_strong() when peeling stops before the hypergraph is
    empty. The remaining core has minimum neighborhood degree at least the
    threshold, so a Berge copy of the corresponding tree can be found in it.

    :param core: the core Hypergraph (compacted ids)
    :param vertices: core id -> input id
    :param threshold: the peeling threshold
    :param edge_origin: core edge index -> input edge index
    """

    def __init__(self, core, vertices, threshold: int, edge_origin=()):
        self.core = core
        self.vertices = vertices
        self.threshold = threshold
        self.edge_origin = edge_origin
        msg = (
            f"Peeling at threshold {threshold} left a core of "
            f"{core.n} vertices and {core.m} edges."
        )
        super().__init__(msg)


class PaletteExceededError(CertificateException):
    """
    Raised by the DFS colorer when a subtree needs more colors than the
    palette holds. Only happens when the Berge-path-free precondition fails.
    """

    def __init__(self, vertex: int, palette: int):
        self.vertex = vertex
        self.palette = palette
        msg = f"Ran out of colors at vertex {vertex} with a palette of {palette}."
        super().__init__(msg)


class InvalidColoringError(CertificateException):
    """
    Raised when a coloring fails validation. Carries the index and vertex set
    of the first violating hyperedge.
    """

    def __init__(self, mode: str, edge_index: int, edge):
        self.mode = mode
        self.edge_index = edge_index
        self.edge = edge
        msg = f"{mode} coloring violated by hyperedge {edge_index} {list(edge)}"
        super().__init__(msg)


class BergePatternFound(CertificateException):
    """
    Raised by a colorer that failed because the input contains a Berge copy
    of the pattern it assumed to be absent. Carries the witness.
    """

    def __init__(self, pattern, witness):
        self.pattern = pattern
        self.witness = witness
        msg = f"Input contains a Berge copy of {pattern}."
        super().__init__(msg)


class BergePkFound(BergePatternFound):
    """Raised by color_bpk_free() with a Berge path witness."""

    pass
