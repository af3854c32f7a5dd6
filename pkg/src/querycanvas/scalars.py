"""Scalar property value model shared by stores, queries and wire payloads.

Property values are restricted to four scalar types; anything else is
rejected at load time so matching semantics stay bounded.
"""

from __future__ import annotations

Scalar = bool | int | float | str

TYPE_NAMES = {bool: "boolean", int: "integer", float: "float", str: "text"}


def is_scalar(value: object) -> bool:
    # bool first: bool is a subclass of int
    return isinstance(value, (bool, int, float, str))


def type_name(value: Scalar) -> str:
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, int):
        return "integer"
    if isinstance(value, float):
        return "float"
    return "text"


def check_properties(props: dict, where: str) -> dict[str, Scalar]:
    """Validate a property map, returning it unchanged.

    `where` names the owning element for error messages.
    """
    from .errors import GraphFormatError

    if not isinstance(props, dict):
        raise GraphFormatError(f"properties of {where} must be a map")
    for key, value in props.items():
        if not isinstance(key, str) or not key:
            raise GraphFormatError(f"property key {key!r} of {where} must be a non-empty string")
        if not is_scalar(value):
            raise GraphFormatError(
                f"property {key!r} of {where} has non-scalar value of type "
                f"{type(value).__name__}; only boolean/integer/float/text are allowed"
            )
    return props


def scalar_equal(a: Scalar, b: Scalar) -> bool:
    """Equality that keeps booleans apart from numbers (1 is not true)."""
    if isinstance(a, bool) != isinstance(b, bool):
        return False
    return a == b
