from berge_coloring.exceptions import BudgetExceededError


class Budget:
    def __init__(self, options: dict = None):
        self._nodes = 0
        self._options = {"max_nodes": 10 ** 7}

        if options:
            self._options.update(options)

    def spend(self, nodes: int = 1):
        """
        Counts search nodes against the budget.

        >>> b = Budget(options={"max_nodes": 2})
        >>> b.spend(); b.spend(); b.used
        2
        >>> b.spend()
        Traceback (most recent call last):
        ...
        berge_coloring.exceptions.BudgetExceededError: Search aborted after exceeding the budget of 2 nodes.

        :param nodes: Number of nodes to count
        :raises berge_coloring.exceptions.BudgetExceededError: If the total
            exceeds the configured maximum
        """
        self._nodes += nodes
        if self._nodes > self._options["max_nodes"]:
            raise BudgetExceededError(self._options["max_nodes"])

    def reset(self):
        """Sets the node count back to zero."""
        self._nodes = 0

    @property
    def used(self) -> int:
        return self._nodes

    @property
    def remaining(self) -> int:
        """Nodes left before spend() raises. Never negative."""
        return max(self._options["max_nodes"] - self._nodes, 0)

    @property
    def is_exhausted(self) -> bool:
        return self.remaining == 0


def ensure_budget(budget: "Budget" = None) -> Budget:
    """Returns the given budget or a fresh default one for a single call."""
    return budget if budget is not None else Budget()
