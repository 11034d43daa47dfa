from typing import Any, Callable, Type

import pydantic


class ValidationError(Exception):
    def __init__(self, value: Any, expected_type: Type):
        self.value = value
        self.expected_type = expected_type


def make_validator(val_type: Any) -> Callable[[Any], Any]:
    if val_type is Any:
        return _empty_validator

    adapter = pydantic.TypeAdapter(
        val_type, config=pydantic.ConfigDict(arbitrary_types_allowed=True),
    )

    def validate(value: Any) -> Any:
        try:
            return adapter.validate_python(value)
        except pydantic.ValidationError as e:
            raise ValidationError(value, val_type) from e

    return validate


def _empty_validator(value: Any) -> Any:
    return value
