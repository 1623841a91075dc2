from __future__ import annotations


class BudgetExhausted(RuntimeError):
    """A search hit its node budget before deciding the question."""

    def __init__(self, nodes: int, message: str = "search node budget exhausted") -> None:
        super().__init__(f"{message} after {nodes} nodes")
        self.nodes = nodes
