"""Integer-indexed formal variables.

A variable is a (family, index) pair such as x[-1], p[3] or q[0].  Families
are short names; the index may be any integer.  Variables are ordered
lexicographically by family then index, which fixes every monomial order used
in this package.
"""

from __future__ import annotations

from typing import NamedTuple


class Variable(NamedTuple):
    family: str
    index: int

    def __str__(self):
        if self.index == 0:
            return self.family
        return f"{self.family}[{self.index}]"

    def __repr__(self):
        return f"Variable({self.family!r}, {self.index})"


def var(family: str, index: int = 0) -> Variable:
    return Variable(family, index)
