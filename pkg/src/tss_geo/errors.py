"""Error hierarchy shared by every subpackage."""

from typing import Any


class TSSGeoError(Exception):
    """Base error carrying a stable code and structured details."""

    code = "tss_geo_error"

    def __init__(
        self,
        message: str,
        *,
        code: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        if code is not None:
            self.code = code
        self.details: dict[str, Any] = details or {}

    def to_dict(self) -> dict[str, Any]:
        """Payload for reports and CLI error output."""
        return {"code": self.code, "message": str(self), "details": self.details}


class InputError(TSSGeoError):
    """Malformed or out-of-range input (vertex ids, certificates, edges)."""

    code = "input_error"


class ParseError(InputError):
    """Text input (DIMACS, JSON) could not be parsed."""

    code = "parse_error"


class ContractViolation(TSSGeoError):
    """A documented precondition of an operation does not hold."""

    code = "contract_violation"


class EmbeddingError(TSSGeoError):
    """No rectilinear embedding could be produced within the attempt budget."""

    code = "embedding_failed"


class OracleTimeout(TSSGeoError):
    """An exact oracle ran out of its time budget."""

    code = "oracle_timeout"
