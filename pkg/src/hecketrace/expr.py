"""Expression grammar shared by the CLI: parsing, evaluation, printing.

Grammar (EBNF):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' nonneg)?
    atom   := 't'INT | 'x'INT | 'p'INT | 'w[' INT ',' INT ']'
            | 's[' INT (',' INT)* ']' | 'q' | 's' | RATIONAL | '(' expr ')'

with two conservative extensions over the published core: a leading unary
minus on terms, and '/' as a binary operator (both needed so printed
normal forms with rational-function coefficients parse back).  RATIONAL
is digits or digits'/'digits; INT inside brackets may carry a sign.

Parse errors carry a source span (start, end).  Evaluation happens in a
Context naming the target algebra and its rank or truncation; printers
emit strings that parse back to equal normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import affine, fock, hall, hecke, symfunc
from .scalars import ONE, Scalar


class ExprError(ValueError):
    """Parse or evaluation error with a source span."""

    def __init__(self, message, span):
        self.message = message
        self.span = span
        super().__init__(f"{message} (at {span[0]}..{span[1]})")


@dataclass
class Token:
    kind: str
    value: object
    span: tuple


def tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^()[],":
            tokens.append(Token("op", ch, (i, i + 1)))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/" and j + 1 < n and text[j + 1].isdigit():
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                # only a RATIONAL literal if the slash is not a binary op:
                # 'a/b' with both bare integers is read as a literal
                tokens.append(
                    Token(
                        "rational",
                        (int(text[i:j]), int(text[j + 1:k])),
                        (i, k),
                    )
                )
                i = k
                continue
            tokens.append(Token("int", int(text[i:j]), (i, j)))
            i = j
            continue
        if ch in "txp" and i + 1 < n and text[i + 1].isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("gen", (ch, int(text[i + 1:j])), (i, j)))
            i = j
            continue
        if ch in "qsw":
            tokens.append(Token("name", ch, (i, i + 1)))
            i += 1
            continue
        raise ExprError(f"unexpected character {ch!r}", (i, i + 1))
    tokens.append(Token("end", None, (n, n)))
    return tokens


# AST nodes are tuples: ("add"/"sub"/"mul"/"div", lhs, rhs, span),
# ("neg", node, span), ("pow", node, int, span),
# ("gen", letter, int, span), ("w", a, b, span), ("schur", parts, span),
# ("q", span), ("s", span), ("rat", p, q, span), ("int", v, span)


class Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, ch):
        tok = self.next()
        if tok.kind != "op" or tok.value != ch:
            raise ExprError(f"expected {ch!r}", tok.span)
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprError("trailing input", tok.span)
        return node

    def expr(self):
        tok = self.peek()
        negate = False
        if tok.kind == "op" and tok.value == "-":
            self.next()
            negate = True
        node = self.term()
        if negate:
            node = ("neg", node, tok.span)
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in "+-":
                self.next()
                rhs = self.term()
                node = (
                    "add" if tok.value == "+" else "sub",
                    node,
                    rhs,
                    tok.span,
                )
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in "*/":
                self.next()
                rhs = self.factor()
                node = (
                    "mul" if tok.value == "*" else "div",
                    node,
                    rhs,
                    tok.span,
                )
            else:
                return node

    def factor(self):
        node = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.value == "^":
            self.next()
            exp = self.next()
            if exp.kind != "int":
                raise ExprError(
                    "exponent must be a nonnegative integer", exp.span
                )
            node = ("pow", node, exp.value, tok.span)
        return node

    def _bracket_int(self):
        tok = self.next()
        sign = 1
        if tok.kind == "op" and tok.value == "-":
            sign = -1
            tok = self.next()
        if tok.kind != "int":
            raise ExprError("expected an integer", tok.span)
        return sign * tok.value, tok.span

    def atom(self):
        tok = self.next()
        if tok.kind == "gen":
            letter, idx = tok.value
            return ("gen", letter, idx, tok.span)
        if tok.kind == "name":
            if tok.value == "q":
                return ("q", tok.span)
            if tok.value == "s":
                nxt = self.peek()
                if nxt.kind == "op" and nxt.value == "[":
                    self.next()
                    parts = [self._bracket_int()[0]]
                    while True:
                        sep = self.next()
                        if sep.kind == "op" and sep.value == ",":
                            parts.append(self._bracket_int()[0])
                        elif sep.kind == "op" and sep.value == "]":
                            break
                        else:
                            raise ExprError("expected ',' or ']'", sep.span)
                    return ("schur", tuple(parts), tok.span)
                return ("s", tok.span)
            if tok.value == "w":
                self.expect_op("[")
                a, _ = self._bracket_int()
                self.expect_op(",")
                b, _ = self._bracket_int()
                close = self.expect_op("]")
                return ("w", a, b, (tok.span[0], close.span[1]))
        if tok.kind == "int":
            return ("int", tok.value, tok.span)
        if tok.kind == "rational":
            return ("rat", tok.value[0], tok.value[1], tok.span)
        if tok.kind == "op" and tok.value == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExprError("expected an atom", tok.span)


def parse(text):
    """Parse to an AST; raises ExprError with a span on bad input."""
    return Parser(text).parse()


# -- evaluation ----------------------------------------------------------------

@dataclass
class Context:
    """Names the algebra an expression is evaluated in.

    algebra is one of 'hecke', 'affine', 'hall', 'sym', 'fock'; rank is
    required for hecke/affine, truncation for sym/fock.
    """

    algebra: str
    rank: int | None = None
    truncation: int | None = None

    def __post_init__(self):
        if self.algebra in ("hecke", "affine") and not self.rank:
            raise ValueError(f"{self.algebra} context needs a rank")
        if self.algebra in ("sym", "fock") and not self.truncation:
            raise ValueError(f"{self.algebra} context needs a truncation")
        if self.algebra not in ("hecke", "affine", "hall", "sym", "fock"):
            raise ValueError(f"unknown algebra {self.algebra!r}")


def _context_one(ctx):
    if ctx.algebra == "hecke":
        return hecke.HeckeElement.one(ctx.rank)
    if ctx.algebra == "affine":
        return affine.AffineElement.one(ctx.rank)
    if ctx.algebra == "hall":
        return hall.HallElement.one()
    if ctx.algebra == "sym":
        return symfunc.SymElement.unit(ctx.truncation)
    domain = range(ctx.truncation + 1)
    return fock.identity_operator(ctx.truncation, domain)


def _is_scalar(v):
    return isinstance(v, Scalar)


def _coerce_pair(a, b, ctx):
    if _is_scalar(a) and not _is_scalar(b):
        a = _context_one(ctx).scale(a)
    elif _is_scalar(b) and not _is_scalar(a):
        b = _context_one(ctx).scale(b)
    return a, b


def _elem_mul(a, b, ctx, span):
    if ctx.algebra == "hecke":
        return hecke.mul(a, b)
    if ctx.algebra == "affine":
        return affine.mul(a, b)
    if ctx.algebra == "hall":
        return hall.mul(a, b)
    if ctx.algebra == "sym":
        return symfunc.sym_mul(a, b)
    return fock.compose(a, b)


def evaluate(node, ctx):
    """Evaluate an AST in a context; returns a Scalar or an element."""
    kind = node[0]
    if kind in ("add", "sub"):
        a = evaluate(node[1], ctx)
        b = evaluate(node[2], ctx)
        if _is_scalar(a) and _is_scalar(b):
            return a + b if kind == "add" else a - b
        a, b = _coerce_pair(a, b, ctx)
        return a + b if kind == "add" else a - b
    if kind == "neg":
        v = evaluate(node[1], ctx)
        return -v if _is_scalar(v) else v.scale(-ONE)
    if kind == "mul":
        a = evaluate(node[1], ctx)
        b = evaluate(node[2], ctx)
        if _is_scalar(a) and _is_scalar(b):
            return a * b
        if _is_scalar(a):
            return b.scale(a)
        if _is_scalar(b):
            return a.scale(b)
        return _elem_mul(a, b, ctx, node[3])
    if kind == "div":
        a = evaluate(node[1], ctx)
        b = evaluate(node[2], ctx)
        if not _is_scalar(b):
            raise ExprError("division is only by scalars", node[3])
        if _is_scalar(a):
            return a / b
        return a.scale(b.inverse())
    if kind == "pow":
        v = evaluate(node[1], ctx)
        k = node[2]
        if _is_scalar(v):
            return v ** k
        out = _context_one(ctx)
        for _ in range(k):
            out = _elem_mul(out, v, ctx, node[3])
        return out
    if kind == "int":
        return Scalar.from_int(node[1])
    if kind == "rat":
        return Scalar.from_fraction(node[1], node[2])
    if kind == "q":
        return Scalar.q_power(1)
    if kind == "s":
        return Scalar.s_power(1)
    if kind == "gen":
        letter, idx, span = node[1], node[2], node[3]
        if letter == "t":
            if ctx.algebra == "hecke":
                if not 1 <= idx <= ctx.rank - 1:
                    raise ExprError(
                        f"t{idx} out of range for rank {ctx.rank}", span
                    )
                return hecke.HeckeElement.generator(ctx.rank, idx)
            if ctx.algebra == "affine":
                if not 1 <= idx <= ctx.rank - 1:
                    raise ExprError(
                        f"t{idx} out of range for rank {ctx.rank}", span
                    )
                return affine.AffineElement.gen_t(ctx.rank, idx)
            raise ExprError("t generators need a Hecke context", span)
        if letter == "x":
            if ctx.algebra != "affine":
                raise ExprError("x generators need the affine context", span)
            if not 1 <= idx <= ctx.rank:
                raise ExprError(
                    f"x{idx} out of range for rank {ctx.rank}", span
                )
            return affine.AffineElement.gen_x(ctx.rank, idx)
        if letter == "p":
            if ctx.algebra != "sym":
                raise ExprError(
                    "power sums need the symmetric-function context", span
                )
            if idx < 1:
                raise ExprError("power sum index must be >= 1", span)
            return symfunc.mul_powersum(idx, symfunc.SymElement.unit(ctx.truncation))
        raise AssertionError("unreachable")
    if kind == "w":
        a, b, span = node[1], node[2], node[3]
        if ctx.algebra == "hall":
            try:
                return hall.HallElement.generator((a, b))
            except ValueError as exc:
                raise ExprError(str(exc), span) from None
        if ctx.algebra == "fock":
            try:
                return fock.rho((a, b), ctx.truncation)
            except ValueError as exc:
                raise ExprError(str(exc), span) from None
        raise ExprError("w generators need the hall or fock context", span)
    if kind == "schur":
        parts, span = node[1], node[2]
        if ctx.algebra != "sym":
            raise ExprError(
                "Schur atoms need the symmetric-function context", span
            )
        try:
            lam = symfunc.check_partition(parts)
        except ValueError as exc:
            raise ExprError(str(exc), span) from None
        if sum(lam) > ctx.truncation:
            raise ExprError("partition exceeds the truncation degree", span)
        return symfunc.SymElement.schur(ctx.truncation, lam)
    raise AssertionError(f"unknown node {kind!r}")


def parse_and_evaluate(text, ctx):
    return evaluate(parse(text), ctx)


# -- printing ------------------------------------------------------------------

def _coeff_prefix(c):
    if c == ONE:
        return ""
    return f"({c.expr_string()})*"


def print_hecke(e):
    if e.is_zero():
        return "0"
    bits = []
    for w, c in sorted(e.terms.items(), key=lambda kv: (hecke.perm_length(kv[0]), kv[0])):
        word = "*".join(f"t{i + 1}" for i in hecke.reduced_word(w))
        if word:
            bits.append(f"{_coeff_prefix(c)}{word}")
        else:
            bits.append(f"({c.expr_string()})")
    return " + ".join(bits)


def print_affine(e):
    if e.is_zero():
        return "0"
    bits = []
    for (exps, w), c in sorted(e.terms.items()):
        factors = []
        for j, p in enumerate(exps):
            if p == 1:
                factors.append(f"x{j + 1}")
            elif p > 1:
                factors.append(f"x{j + 1}^{p}")
        factors.extend(f"t{i + 1}" for i in hecke.reduced_word(w))
        word = "*".join(factors)
        if word:
            bits.append(f"{_coeff_prefix(c)}{word}")
        else:
            bits.append(f"({c.expr_string()})")
    return " + ".join(bits)


def print_hall(e):
    if e.is_zero():
        return "0"
    bits = []
    for mono, c in sorted(e.terms.items()):
        word = "*".join(f"w[{a},{b}]" for a, b in mono)
        if word:
            bits.append(f"{_coeff_prefix(c)}{word}")
        else:
            bits.append(f"({c.expr_string()})")
    return " + ".join(bits)


def print_sym(e):
    if e.is_zero():
        return "0"
    bits = []
    for lam, c in sorted(e.terms.items()):
        if e.basis == symfunc.SCHUR:
            word = "s[" + ",".join(map(str, lam)) + "]" if lam else ""
        else:
            word = "*".join(f"p{part}" for part in lam)
        if word:
            bits.append(f"{_coeff_prefix(c)}{word}")
        else:
            bits.append(f"({c.expr_string()})")
    return " + ".join(bits)


def print_element(value, ctx):
    if _is_scalar(value):
        return value.expr_string()
    if ctx.algebra == "hecke":
        return print_hecke(value)
    if ctx.algebra == "affine":
        return print_affine(value)
    if ctx.algebra == "hall":
        return print_hall(value)
    if ctx.algebra == "sym":
        return print_sym(value)
    raise ValueError("operators have no expression form; export as JSON")
