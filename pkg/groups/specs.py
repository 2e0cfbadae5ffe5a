"""
Group-spec mini-language.

    spec   := factor (("x" | "×") factor)*
    factor := "C" n ["^" k] | "D" n | "Dic" n | "Q8" | "A4" | "S3"

Case-insensitive, whitespace ignored, products associate left.
"""
from dataclasses import dataclass

from factorlab.exceptions import SpecParseError

from .tables import (
    GroupTable,
    _is_prime,
    build_alternating4,
    build_cyclic,
    build_dicyclic,
    build_dihedral,
    build_elementary_abelian,
    build_quaternion,
    direct_product,
)


@dataclass(frozen=True)
class GroupSpec:
    expression: str
    order: int

    def __str__(self) -> str:
        return self.expression


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_blank(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_blank()
        return self.pos >= len(self.text)

    def peek(self, length: int = 1) -> str:
        self.skip_blank()
        return self.text[self.pos:self.pos + length].lower()

    def take(self, literal: str) -> bool:
        if self.peek(len(literal)) == literal:
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str):
        if not self.take(literal):
            self.fail(f"expected {literal!r}")

    def number(self) -> int:
        self.skip_blank()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a number")
        return int(self.text[start:self.pos])

    def fail(self, message: str):
        raise SpecParseError(self.text, self.pos, message)


def _parse_factor(scanner: _Scanner):
    if scanner.take("dic"):
        n = scanner.number()
        return build_dicyclic(n), f"Dic{n}"
    if scanner.take("c"):
        n = scanner.number()
        if scanner.take("^"):
            k = scanner.number()
            if k < 1:
                scanner.fail("exponent must be positive")
            if _is_prime(n):
                return build_elementary_abelian(n, k), f"C{n}^{k}"
            group = build_cyclic(n)
            for _ in range(k - 1):
                group = direct_product(group, build_cyclic(n))
            return group, f"C{n}^{k}"
        return build_cyclic(n), f"C{n}"
    if scanner.take("d"):
        n = scanner.number()
        return build_dihedral(n), f"D{n}"
    if scanner.take("q"):
        scanner.expect("8")
        return build_quaternion(), "Q8"
    if scanner.take("a"):
        scanner.expect("4")
        return build_alternating4(), "A4"
    if scanner.take("s"):
        scanner.expect("3")
        return build_dihedral(3), "S3"
    scanner.fail("expected one of C, D, Dic, Q8, A4, S3")


def parse_group_spec(text: str) -> GroupTable:
    scanner = _Scanner(text)
    if scanner.at_end():
        scanner.fail("empty group spec")
    group, expression = _parse_factor(scanner)
    while not scanner.at_end():
        if not (scanner.take("x") or scanner.take("×")):
            scanner.fail("expected 'x' between factors")
        right, right_expression = _parse_factor(scanner)
        group = direct_product(group, right)
        expression = f"{expression}x{right_expression}"
    return group.with_spec(GroupSpec(expression, group.order))
