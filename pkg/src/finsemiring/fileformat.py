"""Plain-text algebra files.

::

    semiring            # or: semigroup, semilattice
    order 2
    add
    0 1
    1 1
    mul
    0 0
    0 1

Semigroups carry one ``op`` block, semilattices one ``join`` block followed
by ``top <i>``.  ``#`` comments run to end of line; blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .constructions import FiniteSemigroup, FiniteSemilattice
from .core import FiniteSemiring

BLOCKS = {"semiring": ("add", "mul"), "semigroup": ("op",), "semilattice": ("join",)}


class ParseError(ValueError):
    def __init__(self, line: int, column: int, expected: str, found: str = ""):
        msg = f"line {line}, column {column}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)
        self.line = line
        self.column = column
        self.expected = expected


class SemanticError(ValueError):
    """Well-formed file whose contents are out of range."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class AlgebraFile:
    kind: str
    order: int
    tables: tuple[tuple[tuple[int, ...], ...], ...]
    top: Optional[int] = None

    def build(self) -> Union[FiniteSemiring, FiniteSemigroup, FiniteSemilattice]:
        """Instantiate the algebra; axiom failures of semigroups/semilattices raise ValueError.

        Semirings are built without axiom checks (see ``core.verify_semiring``).
        """
        if self.kind == "semiring":
            return FiniteSemiring(*self.tables)
        if self.kind == "semigroup":
            return FiniteSemigroup(self.tables[0])
        return FiniteSemilattice(self.tables[0], self.top)


def _tokens(text: str):
    """Significant lines as (line number, [(column, token), ...])."""
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = []
        col = 0
        for part in line.split():
            col = line.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        if toks:
            out.append((ln, toks))
    return out


def _int(ln, col, tok, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(ln, col, what, tok) from None


def parse_algebra(text: str) -> AlgebraFile:
    lines = _tokens(text)
    pos = 0
    last_line = len(text.splitlines()) + 1

    def next_line(expected):
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(last_line, 1, expected, "end of file")
        pos += 1
        return lines[pos - 1]

    ln, toks = next_line("kind keyword")
    kind = toks[0][1]
    if kind not in BLOCKS or len(toks) != 1:
        raise ParseError(ln, toks[0][0], "one of " + ", ".join(BLOCKS), " ".join(t for _, t in toks))

    ln, toks = next_line("'order <n>'")
    if toks[0][1] != "order":
        raise ParseError(ln, toks[0][0], "'order'", toks[0][1])
    if len(toks) != 2:
        raise ParseError(ln, toks[-1][0], "a single integer after 'order'")
    n = _int(ln, toks[1][0], toks[1][1], "integer order")
    if n < 1:
        raise SemanticError(ln, toks[1][0], f"order must be positive, got {n}")

    tables = []
    for name in BLOCKS[kind]:
        ln, toks = next_line(f"'{name}'")
        if toks[0][1] != name or len(toks) != 1:
            raise ParseError(ln, toks[0][0], f"'{name}'", " ".join(t for _, t in toks))
        rows = []
        for _ in range(n):
            ln, toks = next_line(f"a row of {n} integers")
            if len(toks) != n:
                col = toks[n][0] if len(toks) > n else toks[-1][0] + len(toks[-1][1])
                raise ParseError(ln, col, f"{n} entries", f"{len(toks)} entries")
            row = []
            for col, tok in toks:
                v = _int(ln, col, tok, "integer entry")
                if not 0 <= v < n:
                    raise SemanticError(ln, col, f"entry {v} out of range 0..{n - 1}")
                row.append(v)
            rows.append(tuple(row))
        tables.append(tuple(rows))

    top = None
    if kind == "semilattice":
        ln, toks = next_line("'top <i>'")
        if toks[0][1] != "top" or len(toks) != 2:
            raise ParseError(ln, toks[0][0], "'top <i>'", " ".join(t for _, t in toks))
        top = _int(ln, toks[1][0], toks[1][1], "integer top element")
        if not 0 <= top < n:
            raise SemanticError(ln, toks[1][0], f"top {top} out of range 0..{n - 1}")

    if pos < len(lines):
        ln, toks = lines[pos]
        raise ParseError(ln, toks[0][0], "end of file", toks[0][1])
    return AlgebraFile(kind, n, tuple(tables), top)


def _block(name, table):
    return [name] + [" ".join(str(v) for v in row) for row in table]


def dump_algebra(obj: Union[FiniteSemiring, FiniteSemigroup, FiniteSemilattice], comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines()]
    if isinstance(obj, FiniteSemiring):
        lines += ["semiring", f"order {obj.order}"] + _block("add", obj.add) + _block("mul", obj.mul)
    elif isinstance(obj, FiniteSemigroup):
        lines += ["semigroup", f"order {obj.order}"] + _block("op", obj.op)
    elif isinstance(obj, FiniteSemilattice):
        lines += ["semilattice", f"order {obj.order}"] + _block("join", obj.join) + [f"top {obj.top}"]
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def load_algebra(path: str):
    with open(path) as fh:
        return parse_algebra(fh.read()).build()
