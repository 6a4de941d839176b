"""The group-expression mini-language used by the CLI and the built-in corpus.

Grammar:

    expr := term ('x' term)*          direct product, left-associative
    term := atom | '(' expr ')'
    atom := NAME '(' arg (',' arg)* ')'
    arg  := INT | '"' path '"' | c2 | c4 | expr

Atoms: C(n), D(n), Q(n), SD(n), Sym(n), Alt(n), SL2(p), EA(p,t), Hol(n),
FrobInv(p,t,c2|c4), FrobF(p,t,q), Aff(n,a), CP(expr,expr), file("path").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import constructors
from .cayley_io import ingest
from .errors import BadParameter, ExprSyntaxError
from .group import FiniteGroup


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Product:
    left: "GroupExpr"
    right: "GroupExpr"

    def __str__(self) -> str:
        return render(self)


GroupExpr = Union[Atom, Product]


def render(expr: GroupExpr) -> str:
    """Canonical text for an expression; parsing it back yields an equal AST."""
    if isinstance(expr, Product):
        right = render(expr.right)
        if isinstance(expr.right, Product):
            right = f"({right})"
        return f"{render(expr.left)} x {right}"
    parts = []
    for arg in expr.args:
        if isinstance(arg, (Atom, Product)):
            parts.append(render(arg))
        elif isinstance(arg, str) and expr.name == "file":
            parts.append(f'"{arg}"')
        else:
            parts.append(str(arg))
    return f"{expr.name}({','.join(parts)})"


# --- tokenizer ---------------------------------------------------------------

_PUNCT = {"(": "lparen", ")": "rparen", ",": "comma"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _PUNCT:
            tokens.append((_PUNCT[ch], ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            end = pos
            while end < len(text) and text[end].isdigit():
                end += 1
            tokens.append(("int", text[pos:end], pos))
            pos = end
            continue
        if ch.isalpha() or ch == "_":
            end = pos
            while end < len(text) and (text[end].isalnum() or text[end] == "_"):
                end += 1
            tokens.append(("name", text[pos:end], pos))
            pos = end
            continue
        if ch == '"':
            end = text.find('"', pos + 1)
            if end < 0:
                raise ExprSyntaxError("unterminated string", pos)
            tokens.append(("string", text[pos + 1 : end], pos))
            pos = end + 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", pos)
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def next(self) -> tuple[str, str, int]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        token = self.next()
        if token[0] != kind:
            raise ExprSyntaxError(f"expected {what}, found {token[1] or 'end of input'!r}", token[2])
        return token

    def parse_expr(self) -> GroupExpr:
        node = self.parse_term()
        while self.peek()[:2] == ("name", "x"):
            self.next()
            node = Product(node, self.parse_term())
        return node

    def parse_term(self) -> GroupExpr:
        kind, value, at = self.peek()
        if kind == "lparen":
            self.next()
            inner = self.parse_expr()
            self.expect("rparen", "')'")
            return inner
        if kind != "name" or value == "x":
            raise ExprSyntaxError(f"expected a group atom, found {value or 'end of input'!r}", at)
        self.next()
        self.expect("lparen", "'(' after atom name")
        args = [self.parse_arg()]
        while self.peek()[0] == "comma":
            self.next()
            args.append(self.parse_arg())
        self.expect("rparen", "')' closing the argument list")
        return Atom(value, tuple(args))

    def parse_arg(self):
        kind, value, at = self.peek()
        if kind == "int":
            self.next()
            return int(value)
        if kind == "string":
            self.next()
            return value
        if kind == "name" and self.tokens[self.pos + 1][0] != "lparen":
            self.next()
            return value
        if kind in ("name", "lparen"):
            return self.parse_expr()
        raise ExprSyntaxError(f"expected an argument, found {value or 'end of input'!r}", at)


def parse_group_expr(text: str) -> GroupExpr:
    """Parse the mini-language, or raise ExprSyntaxError with a position."""
    parser = _Parser(text)
    expr = parser.parse_expr()
    kind, value, at = parser.peek()
    if kind != "eof":
        raise ExprSyntaxError(f"unexpected trailing input {value!r}", at)
    return expr


# --- evaluation ---------------------------------------------------------------

_SIMPLE_ATOMS = {
    "C": (constructors.cyclic, 1),
    "D": (constructors.dihedral, 1),
    "Q": (constructors.generalized_quaternion, 1),
    "SD": (constructors.semidihedral, 1),
    "Sym": (constructors.symmetric, 1),
    "Alt": (constructors.alternating, 1),
    "SL2": (constructors.sl2, 1),
    "EA": (constructors.elementary_abelian, 2),
    "Hol": (constructors.holomorph_cyclic, 1),
    "FrobF": (constructors.frobenius_field, 3),
    "Aff": (constructors.affine_cyclic, 2),
}

ATOM_NAMES = tuple(sorted([*_SIMPLE_ATOMS, "FrobInv", "CP", "file"]))


def _eval(expr: GroupExpr) -> FiniteGroup:
    if isinstance(expr, Product):
        return constructors.direct_product(_eval(expr.left), _eval(expr.right))
    name, args = expr.name, expr.args
    if name in _SIMPLE_ATOMS:
        fn, arity = _SIMPLE_ATOMS[name]
        if len(args) != arity or not all(isinstance(a, int) for a in args):
            raise BadParameter(f"{name} expects {arity} integer argument(s)")
        return fn(*args)
    if name == "FrobInv":
        if (
            len(args) != 3
            or not isinstance(args[0], int)
            or not isinstance(args[1], int)
            or args[2] not in ("c2", "c4")
        ):
            raise BadParameter("FrobInv expects (p, t, c2|c4)")
        return constructors.frobenius_inversion(args[0], args[1], args[2])
    if name == "CP":
        if len(args) != 2 or not all(isinstance(a, (Atom, Product)) for a in args):
            raise BadParameter("CP expects two group expressions")
        return constructors.central_product(_eval(args[0]), _eval(args[1]))
    if name == "file":
        if len(args) != 1 or not isinstance(args[0], str):
            raise BadParameter('file expects one quoted path, as in file("table.txt")')
        return ingest(args[0])
    raise BadParameter(f"unknown atom {name!r}; known atoms: {', '.join(ATOM_NAMES)}")


def eval_expr(expr: GroupExpr) -> FiniteGroup:
    """Build the group an expression denotes, labelled with its canonical text."""
    return _eval(expr).with_label(render(expr))
