from typing import TYPE_CHECKING, Any, cast

import structlog

if TYPE_CHECKING:
    from ..terms.models import EqVerdict


class LoggerMixin:
    """Mixin class to add logging capabilities to any class"""

    @property
    def logger(self) -> structlog.stdlib.BoundLogger:
        """Get logger instance for this class"""
        return cast(
            "structlog.stdlib.BoundLogger",
            structlog.get_logger(self.__class__.__name__),
        )


class CertifyingMixin(LoggerMixin):
    """Turns equality verdicts of membership-style checks into admit/reject

    Only a definitive Distinct rejects; Unknown admits the value with a warning.
    """

    def certify(
        self,
        verdict: "EqVerdict",
        error: type[Exception],
        message: str,
        **context: Any,
    ) -> "EqVerdict":
        if verdict.is_distinct:
            self.logger.info("Certification refuted", reason=message, **context)
            raise error(message)
        if verdict.is_unknown:
            self.logger.warning(
                "Certification inconclusive, admitting value",
                reason=message,
                steps=verdict.steps,
                **context,
            )
        return verdict
