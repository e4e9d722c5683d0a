"""Text grammar for vectors, trees, twists, and basic tensors.

    HVec   := [sign] term (('+'|'-') term)*
    term   := [coeff '*']? label
    label  := ('a'|'b') digits
    coeff  := int ['/' int]
    Tree   := 'T(' HVec ',' HVec ';' HVec ',' HVec ')'
    Twist  := 'twist(' HVec ';' HVec ')'
    Tensor := [sign] factors (('+'|'-') factors)*,  factors := factor ('*' factor)*

Parse failures raise ``ParseError`` carrying the byte offset of the first
offending character.  ``format_hvec`` prints the canonical form that
``parse_hvec`` maps back to the same vector.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import FreeVec
from .symplectic import BasisLabel
from .trees import HTree


class ParseError(ValueError):
    """Syntax error with the byte offset where parsing failed."""

    def __init__(self, message: str, offset: int):
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset = offset


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise ParseError("expected %r" % token, self.pos)
        self.pos += len(token)

    def try_take(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing input", self.pos)


def _label(cur: _Cursor) -> BasisLabel:
    cur.skip_ws()
    ch = cur.peek()
    if ch not in ("a", "b"):
        raise ParseError("expected a basis label like a1 or b2", cur.pos)
    cur.pos += 1
    index = cur.integer()
    if index < 1:
        raise ParseError("basis index must be at least 1", cur.pos)
    return BasisLabel(index, ch)


def _coefficient(cur: _Cursor) -> Fraction:
    num = cur.integer()
    if cur.try_take("/"):
        return Fraction(num, cur.integer())
    return Fraction(num)


def _signed_terms(cur: _Cursor, term_parser):
    # Yields (sign, term) across a +/- separated list.
    sign = -1 if cur.try_take("-") else 1
    if sign == 1:
        cur.try_take("+")
    yield sign, term_parser(cur)
    while True:
        if cur.try_take("+"):
            yield 1, term_parser(cur)
        elif cur.try_take("-"):
            yield -1, term_parser(cur)
        else:
            return


def _hvec_term(cur: _Cursor):
    if cur.peek().isdigit():
        coeff = _coefficient(cur)
        if cur.try_take("*"):
            return coeff, _label(cur)
        if coeff == 0:
            return coeff, None          # a bare 0: the zero vector
        raise ParseError("expected '*'", cur.pos)
    return Fraction(1), _label(cur)


def _hvec_body(cur: _Cursor) -> FreeVec:
    terms = []
    for sign, (coeff, label) in _signed_terms(cur, _hvec_term):
        if label is not None:
            terms.append((label, sign * coeff))
    return FreeVec(terms)


def parse_hvec(text: str) -> FreeVec:
    """Parse a vector of H like ``"a2 - b1 + b2"`` or ``"3*a1 - 1/2*b4"``."""
    cur = _Cursor(text)
    vec = _hvec_body(cur)
    cur.end()
    return vec


def parse_tree(text: str) -> HTree:
    """Parse ``T(x1, x2; x3, x4)`` with HVec entries."""
    cur = _Cursor(text)
    cur.take("T")
    cur.take("(")
    x1 = _hvec_body(cur)
    cur.take(",")
    x2 = _hvec_body(cur)
    cur.take(";")
    x3 = _hvec_body(cur)
    cur.take(",")
    x4 = _hvec_body(cur)
    cur.take(")")
    cur.end()
    return HTree(x1, x2, x3, x4)


def parse_twist(text: str):
    """Parse ``twist(x; y)``: the subsurface basis of a genus-1 bounding curve."""
    cur = _Cursor(text)
    cur.take("twist")
    cur.take("(")
    x = _hvec_body(cur)
    cur.take(";")
    y = _hvec_body(cur)
    cur.take(")")
    cur.end()
    return x, y


def _tensor_term(cur: _Cursor):
    coeff = Fraction(1)
    slots = []
    seen_number = False
    while True:
        if cur.peek().isdigit():
            coeff *= _coefficient(cur)
            seen_number = True
        else:
            slots.append(_label(cur))
        if not cur.try_take("*"):
            break
    if not slots:
        if seen_number and coeff == 0:
            return coeff, None          # a bare 0: the zero tensor
        raise ParseError("tensor term has no basis labels", cur.pos)
    return coeff, tuple(slots)


def parse_tensor(text: str) -> FreeVec:
    """Parse a tensor combination like ``"a1*b1*a2*b2"`` or ``"2*a1*a1*b1*b1"``."""
    cur = _Cursor(text)
    terms = []
    for sign, (coeff, slots) in _signed_terms(cur, _tensor_term):
        if slots is not None:
            terms.append((slots, sign * coeff))
    cur.end()
    return FreeVec(terms)


def _coeff_prefix(coeff: Fraction, body: str) -> str:
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return "%s*%s" % (coeff, body)


def _join_terms(parts) -> str:
    # parts: list of (coeff, body string); renders "x - y + z".
    out = []
    for i, (coeff, body) in enumerate(parts):
        if i == 0:
            out.append(_coeff_prefix(coeff, body))
        elif coeff < 0:
            out.append(" - " + _coeff_prefix(-coeff, body))
        else:
            out.append(" + " + _coeff_prefix(coeff, body))
    return "".join(out)


def format_hvec(vec: FreeVec) -> str:
    """Canonical text form; ``parse_hvec`` is a left inverse of this."""
    if vec.is_zero():
        return "0"
    return _join_terms([(c, str(k)) for k, c in vec.sorted_items()])


def format_tree(t: HTree) -> str:
    return "T(%s, %s; %s, %s)" % tuple(format_hvec(x) for x in t)


def format_s2h(vec: FreeVec) -> str:
    """Print an S^2(H) vector, e.g. ``"b1*b2 - b2*b2"``."""
    if vec.is_zero():
        return "0"
    return _join_terms(
        [(c, "%s*%s" % (k[0], k[1])) for k, c in vec.sorted_items()])


def format_s2l2(vec: FreeVec) -> str:
    """Print an S^2(Lambda^2 H) vector, e.g. ``"2*(b1^b2)(b1^b2)"``."""
    if vec.is_zero():
        return "0"
    parts = []
    for key, coeff in vec.sorted_items():
        (u, v), (w, z) = key
        parts.append((coeff, "(%s^%s)(%s^%s)" % (u, v, w, z)))
    return _join_terms(parts)


def format_tensor(vec: FreeVec) -> str:
    """Print a tensor combination, e.g. ``"a1*b1*a2*b2 + a1*b2*a2*b1"``."""
    if vec.is_zero():
        return "0"
    return _join_terms(
        [(c, "*".join(str(lbl) for lbl in key)) for key, c in vec.sorted_items()])
