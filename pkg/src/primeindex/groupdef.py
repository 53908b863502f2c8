"""Group-definition language.

One definition per file::

    cyclic N | abelian N1 N2 ... | sym N | alt N | dihedral N
    quaternion8 | psl2 P | product { <def> ; <def> }
    perm N : (..)(..), (..), ...

``#`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .numbers import is_prime
from .perm import Permutation

KINDS = ("cyclic", "abelian", "sym", "alt", "dihedral", "quaternion8", "psl2", "product", "perm")


class GroupDefinitionError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class GroupSpec:
    """What to construct.

    ``params`` holds the integer arguments (for ``perm``, the degree),
    ``factors`` the two operands of ``product`` and ``generators`` the
    permutations of ``perm``.
    """

    kind: str
    params: tuple[int, ...] = ()
    factors: tuple[GroupSpec, ...] = ()
    generators: tuple[Permutation, ...] = field(default=())

    def __post_init__(self):
        k, p = self.kind, self.params
        if k not in KINDS:
            raise ValueError(f"unknown group kind {k!r}")
        if k in ("cyclic", "sym", "alt", "dihedral", "psl2", "perm") and len(p) != 1:
            raise ValueError(f"{k} takes exactly one parameter")
        if k == "abelian" and not p:
            raise ValueError("abelian needs at least one factor")
        if k == "quaternion8" and p:
            raise ValueError("quaternion8 takes no parameters")
        if any(n < 1 for n in p):
            raise ValueError(f"{k} parameters must be >= 1")
        if k == "psl2" and not is_prime(p[0]):
            raise ValueError(f"psl2 argument {p[0]} is not prime")
        if (k == "product") != (len(self.factors) == 2):
            raise ValueError("product takes exactly two factors")
        if k == "perm":
            if any(g.degree != p[0] for g in self.generators):
                raise ValueError("generator degree does not match perm degree")
        elif self.generators:
            raise ValueError(f"{k} takes no generators")

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        return cls("cyclic", (n,))

    @classmethod
    def product(cls, a: GroupSpec, b: GroupSpec) -> GroupSpec:
        return cls("product", factors=(a, b))

    def __str__(self) -> str:
        if self.kind == "product":
            return f"product {{ {self.factors[0]} ; {self.factors[1]} }}"
        if self.kind == "perm":
            gens = ", ".join(str(g) for g in self.generators) or "()"
            return f"perm {self.params[0]} : {gens}"
        return " ".join([self.kind, *map(str, self.params)])


_TOKEN = re.compile(r"(?P<ws>[ \t\r]+|#[^\n]*)|(?P<nl>\n)|(?P<word>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<int>\d+)|(?P<punct>[{};:,()])")


def _tokenize(text: str) -> list[tuple[str, str, int, int]]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise GroupDefinitionError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind != "ws":
            tokens.append((kind, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    tokens.append(("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        return GroupDefinitionError(message, tok[2], tok[3])

    def take(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value else kind
            got = repr(tok[1]) if tok[0] != "eof" else "end of input"
            raise self.error(f"expected {want}, got {got}")
        self.i += 1
        return tok

    def positive(self) -> int:
        tok = self.take("int")
        n = int(tok[1])
        if n < 1:
            raise self.error("parameters must be >= 1", tok)
        return n

    def definition(self) -> GroupSpec:
        tok = self.take("word")
        kind = tok[1]
        if kind in ("cyclic", "sym", "alt", "dihedral"):
            return GroupSpec(kind, (self.positive(),))
        if kind == "psl2":
            ptok = self.peek()
            p = self.positive()
            if not is_prime(p):
                raise self.error(f"psl2 argument {p} is not prime", ptok)
            return GroupSpec(kind, (p,))
        if kind == "abelian":
            factors = [self.positive()]
            while self.peek()[0] == "int":
                factors.append(self.positive())
            return GroupSpec(kind, tuple(factors))
        if kind == "quaternion8":
            return GroupSpec(kind)
        if kind == "product":
            self.take("punct", "{")
            a = self.definition()
            self.take("punct", ";")
            b = self.definition()
            self.take("punct", "}")
            return GroupSpec.product(a, b)
        if kind == "perm":
            degree = self.positive()
            self.take("punct", ":")
            gens = [self.generator(degree)]
            while self.peek()[1] == ",":
                self.i += 1
                gens.append(self.generator(degree))
            return GroupSpec(kind, (degree,), generators=tuple(gens))
        raise self.error(f"unknown group kind {kind!r}", tok)

    def generator(self, degree: int) -> Permutation:
        cycles = []
        used: set[int] = set()
        self.take("punct", "(")
        while True:
            cycle = []
            while self.peek()[0] == "int":
                tok = self.take("int")
                point = int(tok[1])
                if not 1 <= point <= degree:
                    raise self.error(f"point {point} outside 1..{degree}", tok)
                if point in used:
                    raise self.error(f"point {point} repeated", tok)
                used.add(point)
                cycle.append(point - 1)
            self.take("punct", ")")
            cycles.append(cycle)
            if self.peek()[1] != "(":
                return Permutation.from_cycles(cycles, degree)
            self.i += 1


def parse_group_definition(text: str) -> GroupSpec:
    """Parse the contents of a definition file.

    >>> str(parse_group_definition("product { cyclic 2 ; cyclic 2 }"))
    'product { cyclic 2 ; cyclic 2 }'
    """
    parser = _Parser(text)
    spec = parser.definition()
    if parser.peek()[0] != "eof":
        raise parser.error(f"trailing input {parser.peek()[1]!r}; one definition per file")
    return spec


def load_group_definition(path: str | Path) -> GroupSpec:
    return parse_group_definition(Path(path).read_text(encoding="utf-8"))
