"""
Subset text syntax: `{a,a^2,a^4}` or `{1,2,4}`; braces optional.

Tokens resolve to element names first and raw indices second.
"""
import re

from factorlab.exceptions import SubsetParseError
from groups.tables import GroupTable

from .bitsets import Subset

_EXPONENT_ONE_RE = re.compile(r"\^1(?!\d)")
_EXPONENT_ZERO_RE = re.compile(r"[a-df-z]\^0(?!\d)")


def resolve_element(g: GroupTable, token: str) -> int:
    token = "".join(token.split())
    if not token:
        raise SubsetParseError("empty element name")
    index = g.index_of(token)
    if index is not None:
        return index
    normalized = _EXPONENT_ZERO_RE.sub("", _EXPONENT_ONE_RE.sub("", token.replace("*", ""))) or "e"
    index = g.index_of(normalized)
    if index is not None:
        return index
    if token.isdigit():
        value = int(token)
        if value < g.order:
            return value
        raise SubsetParseError(f"element index {value} outside 0..{g.order - 1}")
    if normalized == "e":
        return 0
    raise SubsetParseError(f"unknown element {token!r} in {g.label}")


def parse_subset(g: GroupTable, text: str) -> Subset:
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    elif "{" in body or "}" in body:
        raise SubsetParseError(f"unbalanced braces in {text!r}")
    tokens = [token for token in body.split(",") if token.strip()]
    if not tokens:
        raise SubsetParseError("subset is empty")
    return Subset.from_indices(g.order, (resolve_element(g, token) for token in tokens))