"""Exceptions raised by the graph algebra package."""


class GraphAlgError(Exception):
    """Base class for graph algebra errors."""


class NotAnIntertwiner(GraphAlgError):
    """Raised when a coupon matrix does not commute with the module action."""

    def __init__(self, coloring, generator: str):
        self.coloring = tuple(coloring)
        self.generator = generator
        super().__init__(
            f"Coupon does not commute with the action of {generator} on the module "
            f"colored {self.coloring}"
        )
