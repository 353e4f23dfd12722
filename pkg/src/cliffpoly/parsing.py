"""Multivector expression parsing and canonical formatting.

Grammar: decimal literals (no exponent form -- ``2e1`` means 2*e1), blade
tokens (``e``, ``e1``, ``e13`` with single-digit indices, or ``e{1,10,12}``
for indices above 9), the operators + - *, unary minus, and parentheses.  A
number immediately followed by a blade multiplies it.  Blade indices may
repeat or appear out of order; they are normalised through the generator
product, so ``e2*e1`` and ``e21`` both come out as -e12.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Multivector,
    Signature,
    basis_blade,
    blade_mul,
    geometric_product,
    scalar,
)
from .errors import ExprSyntaxError, GradeRangeError

_NUM, _BLADE, _OP, _LPAREN, _RPAREN, _END = range(6)


@dataclass
class _Token:
    kind: int
    pos: int
    value: object = None


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*":
            toks.append(_Token(_OP, i, ch))
            i += 1
        elif ch == "(":
            toks.append(_Token(_LPAREN, i))
            i += 1
        elif ch == ")":
            toks.append(_Token(_RPAREN, i))
            i += 1
        elif ch.isdigit() or ch == ".":
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            lit = text[i:j]
            if lit == ".":
                raise ExprSyntaxError("malformed number", i)
            toks.append(_Token(_NUM, i, float(lit)))
            i = j
        elif ch == "e":
            j = i + 1
            indices: list[int] = []
            if j < n and text[j] == "{":
                j += 1
                start = j
                depth_digits = ""
                while j < n and text[j] != "}":
                    depth_digits += text[j]
                    j += 1
                if j == n:
                    raise ExprSyntaxError("unterminated blade index list", i)
                j += 1
                for part in depth_digits.split(","):
                    part = part.strip()
                    if not part.isdigit():
                        raise ExprSyntaxError(
                            f"bad blade index {part!r}", start
                        )
                    indices.append(int(part))
            else:
                while j < n and text[j].isdigit():
                    indices.append(int(text[j]))
                    j += 1
            toks.append(_Token(_BLADE, i, indices))
            i = j
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    toks.append(_Token(_END, n))
    return toks


class _Parser:
    def __init__(self, text: str, sig: Signature):
        self.sig = sig
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def next(self) -> _Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Multivector:
        value = self.expr()
        tok = self.peek()
        if tok.kind != _END:
            raise ExprSyntaxError("trailing input", tok.pos)
        return value

    def expr(self) -> Multivector:
        value = self.term()
        while self.peek().kind == _OP and self.peek().value in "+-":
            op = self.next().value
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Multivector:
        value = self.factor()
        while self.peek().kind == _OP and self.peek().value == "*":
            self.next()
            value = geometric_product(value, self.factor())
        return value

    def factor(self) -> Multivector:
        tok = self.peek()
        if tok.kind == _OP and tok.value == "-":
            self.next()
            return -self.factor()
        if tok.kind == _OP and tok.value == "+":
            self.next()
            return self.factor()
        return self.atom()

    def atom(self) -> Multivector:
        tok = self.next()
        if tok.kind == _NUM:
            value = scalar(self.sig, tok.value)
            if self.peek().kind == _BLADE:
                value = geometric_product(value, self.blade(self.next()))
            return value
        if tok.kind == _BLADE:
            return self.blade(tok)
        if tok.kind == _LPAREN:
            value = self.expr()
            closing = self.next()
            if closing.kind != _RPAREN:
                raise ExprSyntaxError("expected ')'", closing.pos)
            return value
        raise ExprSyntaxError("expected a number, blade, or '('", tok.pos)

    def blade(self, tok: _Token) -> Multivector:
        mask, sgn = 0, 1.0
        for a in tok.value:
            if not 1 <= a <= self.sig.n:
                raise GradeRangeError(
                    f"blade index {a} out of range for {self.sig} "
                    f"(at position {tok.pos})"
                )
            mask, s = blade_mul(mask, 1 << (a - 1), self.sig)
            sgn *= s
        return basis_blade(self.sig, mask, sgn)


def parse(text: str, sig: Signature) -> Multivector:
    """Parse an expression into a canonical multivector."""
    return _Parser(text, sig).parse()


def _fmt_num(x: float) -> str:
    # repr round-trips, but its exponent form would re-lex as a blade token;
    # fall back to the exact decimal expansion of the binary float.
    r = repr(x)
    if "e" not in r and "E" not in r:
        return r
    from decimal import Decimal

    return format(Decimal(x), "f")


def blade_name(mask: int, n: int) -> str:
    if mask == 0:
        return "e"
    indices = [a + 1 for a in range(n) if mask >> a & 1]
    if n <= 9:
        return "e" + "".join(str(a) for a in indices)
    return "e{" + ",".join(str(a) for a in indices) + "}"


def format_multivector(u: Multivector) -> str:
    """Canonical text form: blades in mask order, zero coefficients dropped,
    '0' for the zero element; round-trips exactly through parse()."""
    n = u.sig.n
    parts: list[str] = []
    for mask in range(u.sig.dim):
        c = float(u.coeffs[mask])
        if c == 0.0:
            continue
        mag = abs(c)
        if mask == 0:
            body = _fmt_num(mag)
        elif mag == 1.0:
            body = blade_name(mask, n)
        else:
            body = f"{_fmt_num(mag)}*{blade_name(mask, n)}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"
