"""Shared error types with stable, report-friendly codes."""


class HorizonExceeded(Exception):
    """A computation would depend on Loewy length at or beyond the finite
    horizon; aborting is preferred to returning a truncation artifact."""

    code = "HORIZON_EXCEEDED"

    def __str__(self):
        base = super().__str__()
        return f"{self.code}: {base}" if base else self.code


class SquareFailed(Exception):
    """A defining square of a realized tube failed verification."""

    def __init__(self, square_id: str, detail: str = ""):
        super().__init__(square_id)
        self.square_id = square_id
        self.detail = detail

    def __str__(self):
        s = f"SQUARE_FAILED({self.square_id})"
        return f"{s}: {self.detail}" if self.detail else s


class UnclassifiedSummand(Exception):
    """An indecomposable summand matched no label; a bug or a genuine
    grammar redundancy."""

    def __init__(self, module, detail: str = ""):
        super().__init__(detail or "unclassified summand")
        self.module = module
        self.detail = detail
