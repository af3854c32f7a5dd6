"""Emission-grammar Cypher subset: parsing and embedded execution."""

from .executor import execute_parsed, execute_text
from .parser import ParsedQuery, ReturnItem, parse

__all__ = ["ParsedQuery", "ReturnItem", "execute_parsed", "execute_text", "parse"]
