"""
JSON schema validation for emitted records.

Schemas come from the pydantic models and are closed (no extra keys), so a
record line can be checked by any JSON Schema implementation without the tool.
"""

from typing import Any, Dict, Optional, Tuple

import jsonschema
from pydantic import BaseModel

from utils.logger import get_logger
from utils.exceptions import VerificationError
from .records import RECORD_MODELS

logger = get_logger(__name__)

# Module-level singleton instance for convenience functions
_shared_validator = None


def _get_shared_validator() -> "RecordValidator":
    """Get or create shared RecordValidator instance."""
    global _shared_validator
    if _shared_validator is None:
        _shared_validator = RecordValidator()
    return _shared_validator


class RecordValidator:
    """Validate record dictionaries against the per-kind JSON schemas."""

    def __init__(self):
        self.schemas = {kind: self._build_json_schema(model) for kind, model in RECORD_MODELS.items()}

    @staticmethod
    def _build_json_schema(model) -> Dict[str, Any]:
        schema = model.model_json_schema()
        schema["additionalProperties"] = False
        schema["properties"]["kind"]["const"] = schema["properties"]["kind"]["default"]
        if "kind" not in schema.setdefault("required", []):
            schema["required"].append("kind")
        return schema

    def validate(self, data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        """
        Validate a record dictionary.

        Returns:
            Tuple of (is_valid, error_message)
        """
        kind = data.get("kind")
        schema = self.schemas.get(kind)
        if schema is None:
            return False, f"Unknown record kind: {kind!r}"
        try:
            jsonschema.validate(instance=data, schema=schema)
            return True, None
        except jsonschema.ValidationError as e:
            return False, e.message


def validate_record(record: BaseModel) -> Dict[str, Any]:
    """
    Dump a record to a plain dictionary and validate it.

    Raises:
        VerificationError: If the dumped record does not satisfy its schema
    """
    data = record.model_dump(mode="json")
    is_valid, error = _get_shared_validator().validate(data)
    if not is_valid:
        logger.warning("Record failed schema validation: %s", error)
        raise VerificationError("Record failed schema validation", details={"error": error, "kind": data.get("kind")})
    return data
