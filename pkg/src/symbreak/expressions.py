"""A tiny expression language for naming graph families on the command line.

Grammar (whitespace is ignored)::

    expr   := INT '*' expr            m disjoint copies
            | atom
    atom   := 'K' INT                 complete graph
            | 'E' INT                 empty graph
            | 'P' INT                 path
            | 'C' INT [ \'' ]         cycle; C5' is the 5-cycle plus a chord
            | 'T' INT                 broom tree (pendant paths of lengths 1..k)
            | 'K' '(' INT, ... ')'    complete multipartite
            | 'U' '(' expr, ... ')'   disjoint union
            | 'J' '(' expr, ... ')'   join
            | 'B' '(' expr, piece, ... ')'   blow-up; piece is K<int> or E<int>
            | '~' atom                complement
            | '(' expr ')'

Examples: ``K(3,3)``, ``J(K1,U(K1,2*K2))``, ``B(P4,K1,E3,K1,K1)``, ``~C5``.
"""

from __future__ import annotations

from .graphs import FamilySpec


class ExpressionError(ValueError):
    """The input is not a well-formed family expression."""


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ExpressionError:
        return ExpressionError(f"{message} at position {self.pos} in {self.text!r}")

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, expected: str) -> None:
        if self.peek() != expected:
            raise self.error(f"expected {expected!r}")
        self.pos += 1

    def integer(self) -> int:
        ch = self.peek()
        if not ch.isdigit():
            raise self.error("expected an integer")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start : self.pos])

    def expr(self) -> FamilySpec:
        if self.peek().isdigit():
            count = self.integer()
            self.take("*")
            sub = self.expr()
            if count < 1:
                raise self.error("copy counts must be at least 1")
            return sub if count == 1 else FamilySpec.union_of(*([sub] * count))
        return self.atom()

    def atom(self) -> FamilySpec:
        ch = self.peek()
        if ch == "~":
            self.take("~")
            return FamilySpec.complement_of(self.atom())
        if ch == "(":
            self.take("(")
            sub = self.expr()
            self.take(")")
            return sub
        if ch == "K":
            self.take("K")
            if self.peek() == "(":
                sizes = self.int_args()
                if len(sizes) < 2:
                    raise self.error("K(...) needs at least two part sizes")
                if len(sizes) == 2:
                    return FamilySpec.bipartite(*sizes)
                return FamilySpec.multipartite(*sizes)
            return FamilySpec.complete(self.integer())
        if ch == "E":
            self.take("E")
            return FamilySpec.empty(self.integer())
        if ch == "P":
            self.take("P")
            return FamilySpec.path(self.integer())
        if ch == "C":
            self.take("C")
            size = self.integer()
            if self.peek() == "'":
                self.take("'")
                if size != 5:
                    raise self.error("the chorded cycle C<n>' is only defined for n=5")
                return FamilySpec.house()
            return FamilySpec.cycle(size)
        if ch == "T":
            self.take("T")
            return FamilySpec.broom(self.integer())
        if ch == "U":
            self.take("U")
            return FamilySpec.union_of(*self.expr_args())
        if ch == "J":
            self.take("J")
            return FamilySpec.join_of(*self.expr_args())
        if ch == "B":
            self.take("B")
            self.take("(")
            base = self.expr()
            pieces = []
            while self.peek() == ",":
                self.take(",")
                pieces.append(self.piece())
            self.take(")")
            if not pieces:
                raise self.error("B(...) needs blow-up pieces after the base")
            return FamilySpec.blow(base, *pieces)
        raise self.error("expected a family expression")

    def piece(self) -> tuple[int, str]:
        ch = self.peek()
        if ch == "K":
            self.take("K")
            return (self.integer(), "complete")
        if ch == "E":
            self.take("E")
            return (self.integer(), "empty")
        raise self.error("blow-up pieces must be K<int> or E<int>")

    def int_args(self) -> list[int]:
        self.take("(")
        values = [self.integer()]
        while self.peek() == ",":
            self.take(",")
            values.append(self.integer())
        self.take(")")
        return values

    def expr_args(self) -> list[FamilySpec]:
        self.take("(")
        values = [self.expr()]
        while self.peek() == ",":
            self.take(",")
            values.append(self.expr())
        self.take(")")
        return values


def parse_expression(text: str) -> FamilySpec:
    """Parse a family expression; raises :class:`ExpressionError` otherwise."""
    parser = _Parser(text)
    spec = parser.expr()
    if parser.peek():
        raise parser.error("trailing input")
    return spec


def format_spec(spec: FamilySpec) -> str:
    """Render a spec back into the expression language.

    Repeated operands of unions and joins collapse to the ``m*`` shorthand,
    so ``U(K2,K2)`` prints as ``2*K2`` inside a union.
    """
    kind = spec.kind
    if kind == "complete":
        return f"K{spec.params[0]}"
    if kind == "empty":
        return f"E{spec.params[0]}"
    if kind == "path":
        return f"P{spec.params[0]}"
    if kind == "cycle":
        return f"C{spec.params[0]}"
    if kind == "house":
        return "C5'"
    if kind == "broom_tree":
        return f"T{spec.params[0]}"
    if kind in ("complete_bipartite", "complete_multipartite"):
        return "K(" + ",".join(str(s) for s in spec.params) + ")"
    if kind == "complement":
        return "~" + _atomic(spec.parts[0])
    if kind in ("union", "join"):
        groups: list[str] = []
        at = 0
        while at < len(spec.parts):
            part = spec.parts[at]
            count = 1
            # The m* shorthand means m disjoint copies, so runs may only be
            # collapsed inside unions.
            if kind == "union":
                while at + count < len(spec.parts) and spec.parts[at + count] == part:
                    count += 1
            rendered = format_spec(part)
            groups.append(rendered if count == 1 else f"{count}*{rendered}")
            at += count
        letter = "U" if kind == "union" else "J"
        if len(groups) == 1:
            return groups[0]
        return f"{letter}(" + ",".join(groups) + ")"
    if kind == "blow_up":
        pieces = ",".join(
            ("K" if piece_kind == "complete" else "E") + str(size)
            for size, piece_kind in spec.pieces
        )
        return f"B({format_spec(spec.parts[0])},{pieces})"
    raise ExpressionError(f"cannot format family kind {kind!r}")


def _atomic(spec: FamilySpec) -> str:
    rendered = format_spec(spec)
    if spec.kind in ("union", "join", "blow_up") or "*" in rendered:
        return "(" + rendered + ")"
    return rendered
