"""Failure types the toolkit distinguishes (and the CLI maps to exit codes)."""

from __future__ import annotations

from typing import Any

VIOLATION_FORMAT = "immlab-violation-v1"


class PreconditionError(ValueError):
    """The input does not satisfy a documented precondition of the routine."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search hit its node budget before reaching a decision.

    Distinct from a negative answer: the search neither found the object nor
    proved its absence.
    """


class ClaimViolation(RuntimeError):
    """A structural fact the construction relies on failed on this input.

    Every such fact is a theorem for the advertised input class, so a raise
    means the input was mis-classified or the claim is genuinely false; either
    way the instance is evidence worth keeping.  The exception therefore
    carries the offending graph and a context dict naming the vertices that
    break the claim.
    """

    def __init__(self, message: str, *, graph: Any = None,
                 context: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.graph = graph
        self.context = dict(context or {})

    def to_json_doc(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"format": VIOLATION_FORMAT, "message": str(self)}
        if self.graph is not None:
            doc["graph_sha256"] = self.graph.sha256()
            doc["n"] = self.graph.n
            doc["edges"] = [[u, v] for u, v in self.graph.edges()]
        if self.context:
            doc["context"] = {k: _jsonable(v) for k, v in self.context.items()}
        return doc


def _jsonable(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value
