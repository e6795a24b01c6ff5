"""Run-length pattern expressions for period structures.

Text form: a pattern is a sequence of terms, a term is an atom with an
optional exponent, an atom is ``0``, ``1`` or a parenthesized pattern.
The exponent ``inf`` marks the repeating tail and may only appear on the
final top-level term.  Whitespace is ignored.  Examples:

    0^2 1^2 (1^2 0)^inf       the {2,4,7} sequence
    (01)^3                    010101

Expressions are immutable ASTs (Bit, Concat, Power, InfiniteTail).
``parse`` and ``render`` round-trip: parse(render(e)) == e for every AST
parse can produce, and render(parse(t)) canonicalizes the text t.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

MAX_EXPONENT = 10**12

PatternExpr = Union["Bit", "Concat", "Power", "InfiniteTail"]


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class PatternRangeError(ValueError):
    """Asked for more bits than a finite pattern contains."""


@dataclass(frozen=True)
class Bit:
    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError("bit must be 0 or 1")


@dataclass(frozen=True)
class Concat:
    parts: tuple


@dataclass(frozen=True)
class Power:
    base: PatternExpr
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("exponent must be nonnegative")


@dataclass(frozen=True)
class InfiniteTail:
    base: PatternExpr


# ---------------------------------------------------------------------------
# structure helpers

def _check_no_tail(expr: PatternExpr, where: str) -> None:
    if isinstance(expr, InfiniteTail):
        raise ValueError(f"infinite tail not allowed {where}")
    if isinstance(expr, Concat):
        for p in expr.parts:
            _check_no_tail(p, where)
    elif isinstance(expr, Power):
        _check_no_tail(expr.base, where)


def validate(expr: PatternExpr) -> None:
    """Reject misplaced infinite tails (anywhere but last at top level)."""
    if isinstance(expr, InfiniteTail):
        _check_no_tail(expr.base, "inside a repeated group")
        return
    if isinstance(expr, Concat):
        for p in expr.parts[:-1]:
            _check_no_tail(p, "before the end of the pattern")
        if expr.parts:
            last = expr.parts[-1]
            if isinstance(last, InfiniteTail):
                _check_no_tail(last.base, "inside a repeated group")
            else:
                _check_no_tail(last, "")
        return
    _check_no_tail(expr, "")


def has_infinite_tail(expr: PatternExpr) -> bool:
    if isinstance(expr, InfiniteTail):
        return True
    return isinstance(expr, Concat) and bool(expr.parts) and isinstance(
        expr.parts[-1], InfiniteTail
    )


def finite_length(expr: PatternExpr) -> int:
    """Bit length of a finite pattern; raises on an infinite tail."""
    if isinstance(expr, Bit):
        return 1
    if isinstance(expr, Concat):
        return sum(finite_length(p) for p in expr.parts)
    if isinstance(expr, Power):
        return expr.exponent * finite_length(expr.base)
    raise ValueError("pattern has an infinite tail; pass an explicit length")


# ---------------------------------------------------------------------------
# parsing

def parse(text: str) -> PatternExpr:
    """Parse pattern text into an AST; raise PatternSyntaxError on bad input."""
    parser = _Parser(text)
    expr = parser.pattern(top=True)
    if parser.pos != len(parser.text):
        parser.fail("unexpected character")
    validate(expr)
    return expr


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise PatternSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def pattern(self, top: bool = False) -> PatternExpr:
        terms = []
        while True:
            c = self.peek()
            if c is None or c == ")":
                break
            terms.append(self.term(top=top))
        if not terms:
            self.fail("empty pattern")
        for i, t in enumerate(terms[:-1]):
            if isinstance(t, InfiniteTail):
                self.fail("'inf' exponent is only allowed on the final term")
        return terms[0] if len(terms) == 1 else Concat(tuple(terms))

    def term(self, top: bool) -> PatternExpr:
        atom = self.atom()
        c = self.peek()
        if c != "^":
            return atom
        self.pos += 1
        self.skip_ws()
        if self.text.startswith("inf", self.pos):
            if not top:
                self.fail("'inf' exponent must be at the top level")
            self.pos += 3
            return InfiniteTail(atom)
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected an exponent after '^'")
        k = int(self.text[start:self.pos])
        if k > MAX_EXPONENT:
            self.fail(f"exponent overflows the supported maximum {MAX_EXPONENT}")
        return Power(atom, k)

    def atom(self) -> PatternExpr:
        c = self.peek()
        if c == "0" or c == "1":
            self.pos += 1
            return Bit(int(c))
        if c == "(":
            self.pos += 1
            inner = self.pattern(top=False)
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            return inner
        self.fail("expected '0', '1' or '('")


# ---------------------------------------------------------------------------
# rendering

def render(expr: PatternExpr) -> str:
    """Canonical text for an AST; inverse of parse on parseable structures."""
    validate(expr)
    return _render(expr)


def _render(expr: PatternExpr) -> str:
    if isinstance(expr, Concat):
        # adjacent bare bits fuse ("01"); anything else is space separated
        out = []
        for i, p in enumerate(expr.parts):
            if i and not (isinstance(p, Bit) and isinstance(expr.parts[i - 1], Bit)):
                out.append(" ")
            out.append(_render_term(p))
        return "".join(out)
    return _render_term(expr)


def _render_term(expr: PatternExpr) -> str:
    if isinstance(expr, Bit):
        return str(expr.value)
    if isinstance(expr, Power):
        return f"{_render_atom(expr.base)}^{expr.exponent}"
    if isinstance(expr, InfiniteTail):
        return f"{_render_atom(expr.base)}^inf"
    if isinstance(expr, Concat):
        return f"({_render(expr)})"
    raise TypeError(f"not a pattern expression: {expr!r}")


def _render_atom(expr: PatternExpr) -> str:
    if isinstance(expr, Bit):
        return str(expr.value)
    return f"({_render(expr)})"


# ---------------------------------------------------------------------------
# expansion

def expand(expr: PatternExpr, n: int | None = None) -> str:
    """First n bits of the pattern (all of it if finite and n is None)."""
    validate(expr)
    if n is None:
        n = finite_length(expr)
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = _emit(expr, n)
    if len(out) < n:
        raise PatternRangeError(
            f"pattern has only {len(out)} bits but {n} were requested"
        )
    return out


def _emit(expr: PatternExpr, budget: int) -> str:
    if budget <= 0:
        return ""
    if isinstance(expr, Bit):
        return str(expr.value)
    if isinstance(expr, Concat):
        chunks = []
        for p in expr.parts:
            chunk = _emit(p, budget)
            chunks.append(chunk)
            budget -= len(chunk)
            if budget <= 0:
                break
        return "".join(chunks)
    if isinstance(expr, Power):
        body_len = finite_length(expr.base)
        if body_len == 0 or expr.exponent == 0:
            return ""
        body = _emit(expr.base, min(body_len, budget))
        if len(body) < body_len:  # budget cut inside one copy
            return body
        reps = min(expr.exponent, -(-budget // body_len))
        return (body * reps)[:budget]
    if isinstance(expr, InfiniteTail):
        body_len = finite_length(expr.base)
        if body_len == 0:
            return ""
        body = _emit(expr.base, min(body_len, budget))
        if len(body) < body_len:
            return body
        reps = -(-budget // body_len)
        return (body * reps)[:budget]
    raise TypeError(f"not a pattern expression: {expr!r}")


def split_tail(expr: PatternExpr) -> tuple[str, str]:
    """(prefix bits, one cycle of the tail) of a pattern with an infinite tail."""
    validate(expr)
    if isinstance(expr, InfiniteTail):
        return "", expand(expr.base)
    if isinstance(expr, Concat) and expr.parts and isinstance(expr.parts[-1], InfiniteTail):
        head = expr.parts[:-1]
        prefix = "".join(expand(p) for p in head)
        return prefix, expand(expr.parts[-1].base)
    raise ValueError("pattern has no infinite tail")


# ---------------------------------------------------------------------------
# construction helpers

def from_bits(bits: str) -> PatternExpr:
    """Run-length compressed pattern for a literal bit string."""
    if not bits or any(c not in "01" for c in bits):
        raise ValueError("bits must be a nonempty 0/1 string")
    runs = []
    i = 0
    while i < len(bits):
        j = i
        while j < len(bits) and bits[j] == bits[i]:
            j += 1
        b = Bit(int(bits[i]))
        runs.append(b if j - i == 1 else Power(b, j - i))
        i = j
    return runs[0] if len(runs) == 1 else Concat(tuple(runs))


def from_periodicity(prefix: str, cycle: str) -> PatternExpr:
    """Pattern prefix + cycle^inf from explicit bit strings."""
    if not cycle:
        raise ValueError("cycle must be nonempty")
    tail = InfiniteTail(from_bits(cycle))
    if not prefix:
        return tail
    head = from_bits(prefix)
    parts = head.parts if isinstance(head, Concat) else (head,)
    return Concat(parts + (tail,))
