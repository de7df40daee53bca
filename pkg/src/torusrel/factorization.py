"""Curve expressions, factorizations, parsing and exact evaluation.

A curve is named as a twist-conjugate of a base curve: the expression
``[a b](c)`` denotes the image of the base curve c under the twist about a
followed-by... precisely, the twist along t_a(t_b(c)) evaluates to the
conjugate  T_a T_b T_c T_b^-1 T_a^-1,  with the conjugator atoms listed
outermost first.  ``~`` marks a left-handed twist or an inverse conjugator.

Factorizations store factors in written order; evaluation applies the
rightmost factor first (functional composition convention).

Text grammar::

    file      := header factor ("*" factor)* ;
    header    := "surface" "genus" "1" "holes" INT ";" ;
    factor    := ["~"] curve ;
    curve     := LABEL | "[" atom+ "]" "(" curve ")" ;
    atom      := ["~"] curve ;
    LABEL     := ("al"|"si"|"de") INT | "be" ;

Whitespace-insensitive between tokens; "#" starts a comment to end of line.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freegroup import MarkedClass, compose_marked, inverse_marked, identity_marked
from . import invariants
from .invariants import IntMatrix, transvection

MAX_DEPTH = 16


class ParseError(ValueError):
    def __init__(self, message, line, col):
        super().__init__("%d:%d: %s" % (line, col, message))
        self.line = line
        self.col = col


class UnknownLabel(KeyError):
    pass


class DepthLimitExceeded(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class CurveExpr:
    """base curve label plus a reduced tuple of signed conjugator atoms."""

    base: str
    conj: tuple = ()  # tuple[(sign, CurveExpr), ...], outermost first

    def depth(self) -> int:
        if not self.conj:
            return 0
        return 1 + max(e.depth() for _, e in self.conj)

    def __str__(self):
        return format_expr(self)


def make_expr(base: str, conj=()) -> CurveExpr:
    """Build a CurveExpr with adjacent inverse conjugator atoms cancelled."""
    out = []
    for sign, e in conj:
        if sign not in (1, -1):
            raise ValueError("atom sign must be +-1")
        if out and out[-1][0] == -sign and out[-1][1] == e:
            out.pop()
        else:
            out.append((sign, e))
    expr = CurveExpr(base, tuple(out))
    if expr.depth() > MAX_DEPTH:
        raise DepthLimitExceeded("curve expression deeper than %d" % MAX_DEPTH)
    return expr


def conjugated(sign: int, conjugator: CurveExpr, expr: CurveExpr) -> CurveExpr:
    """Prepend one conjugator atom (outermost position), with cancellation."""
    return make_expr(expr.base, ((sign, conjugator),) + expr.conj)


@dataclass(frozen=True, slots=True)
class TwistFactor:
    sign: int  # +1 right-handed, -1 left-handed
    curve: CurveExpr

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("factor sign must be +-1")

    def inverse(self) -> "TwistFactor":
        return TwistFactor(-self.sign, self.curve)


@dataclass(frozen=True, slots=True)
class Factorization:
    k: int
    factors: tuple  # tuple[TwistFactor, ...] in written order, leftmost applied last


# ---------------------------------------------------------------------------
# parsing / formatting

_KEYWORDS = ("surface", "genus", "holes")


class _Tokens:
    def __init__(self, text):
        self.toks = []
        line, col = 1, 1
        i = 0
        while i < len(text):
            ch = text[i]
            if ch == "#":
                while i < len(text) and text[i] != "\n":
                    i += 1
                continue
            if ch == "\n":
                line += 1
                col = 1
                i += 1
                continue
            if ch.isspace():
                col += 1
                i += 1
                continue
            if ch in "[]()*;~":
                self.toks.append((ch, line, col))
                i += 1
                col += 1
                continue
            if ch.isalnum() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append((text[i:j], line, col))
                col += j - i
                i = j
                continue
            raise ParseError("unexpected character %r" % ch, line, col)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def loc(self):
        if self.pos < len(self.toks):
            return self.toks[self.pos][1], self.toks[self.pos][2]
        if self.toks:
            return self.toks[-1][1], self.toks[-1][2]
        return 1, 1

    def next(self, expect=None):
        if self.pos >= len(self.toks):
            raise ParseError("unexpected end of input", *self.loc())
        tok, line, col = self.toks[self.pos]
        if expect is not None and tok != expect:
            raise ParseError("expected %r, found %r" % (expect, tok), line, col)
        self.pos += 1
        return tok

    def done(self):
        return self.pos >= len(self.toks)


def _is_label(tok) -> bool:
    if tok == "be":
        return True
    for prefix in ("al", "si", "de"):
        if tok.startswith(prefix) and tok[len(prefix):].isdigit():
            return True
    return False


def _parse_curve(ts: _Tokens) -> CurveExpr:
    tok = ts.peek()
    if tok == "[":
        ts.next("[")
        atoms = []
        while ts.peek() != "]":
            sign = 1
            if ts.peek() == "~":
                ts.next("~")
                sign = -1
            atoms.append((sign, _parse_curve(ts)))
        ts.next("]")
        if not atoms:
            raise ParseError("empty conjugator block", *ts.loc())
        ts.next("(")
        inner = _parse_curve(ts)
        ts.next(")")
        return make_expr(inner.base, tuple(atoms) + inner.conj)
    line, col = ts.loc()
    tok = ts.next()
    if not _is_label(tok):
        raise ParseError("not a curve label: %r" % tok, line, col)
    return CurveExpr(tok, ())


def _parse_factor(ts: _Tokens) -> TwistFactor:
    sign = 1
    if ts.peek() == "~":
        ts.next("~")
        sign = -1
    return TwistFactor(sign, _parse_curve(ts))


def parse(text: str) -> Factorization:
    """Parse factorization text; raises ParseError with line/column."""
    ts = _Tokens(text)
    ts.next("surface")
    ts.next("genus")
    ts.next("1")
    ts.next("holes")
    line, col = ts.loc()
    ktok = ts.next()
    if not ktok.isdigit():
        raise ParseError("hole count must be an integer", line, col)
    k = int(ktok)
    if not 1 <= k <= 9:
        raise ParseError("hole count %d out of range 1..9" % k, line, col)
    ts.next(";")
    factors = [_parse_factor(ts)]
    while not ts.done():
        ts.next("*")
        factors.append(_parse_factor(ts))
    fz = Factorization(k, tuple(factors))
    _check_labels(fz)
    return fz


def _check_labels(fz: Factorization):
    def walk(e: CurveExpr):
        if e.base != "be":
            idx = int(e.base[2:])
            if e.base.startswith("de"):
                top = fz.k
            elif e.base.startswith("al"):
                top = fz.k - 1 if fz.k > 1 else 1  # one-holed model still carries al1
            else:
                top = fz.k - 1
            if not 1 <= idx <= top:
                raise UnknownLabel("%s undefined for %d holes" % (e.base, fz.k))
        for _, sub in e.conj:
            walk(sub)

    for f in fz.factors:
        walk(f.curve)


def format_expr(e: CurveExpr) -> str:
    if not e.conj:
        return e.base
    atoms = " ".join(("~" if s < 0 else "") + format_expr(a) for s, a in e.conj)
    return "[%s](%s)" % (atoms, e.base)


def format_factor(f: TwistFactor) -> str:
    return ("~" if f.sign < 0 else "") + format_expr(f.curve)


def format(fz: Factorization) -> str:
    head = "surface genus 1 holes %d ;" % fz.k
    return head + " " + " * ".join(format_factor(f) for f in fz.factors)


# ---------------------------------------------------------------------------
# evaluation

def _default_table(k):
    from . import surface

    return surface.standard_table(k)


def eval_curve(expr: CurveExpr, table=None, k=None) -> MarkedClass:
    """MarkedClass of the right-handed twist along the named curve.

    The conjugate  [w](c)  evaluates to  W T_c W^-1  where W is the evaluated
    conjugator product; a bare label returns the table entry.
    """
    if table is None:
        table = _default_table(k)
    if expr.depth() > MAX_DEPTH:
        raise DepthLimitExceeded("curve expression deeper than %d" % MAX_DEPTH)
    cache = table.eval_cache
    hit = cache.get(expr)
    if hit is not None:
        return hit
    base = table.curve(expr.base).twist
    out = base
    for sign, atom in reversed(expr.conj):
        w = eval_curve(atom, table)
        if sign < 0:
            w = inverse_marked(w)
        out = compose_marked(w, compose_marked(out, inverse_marked(w)))
    cache[expr] = out
    return out


def eval_factor(f: TwistFactor, table=None, k=None) -> MarkedClass:
    m = eval_curve(f.curve, table, k)
    return inverse_marked(m) if f.sign < 0 else m


def eval_product(fz: Factorization, table=None) -> MarkedClass:
    """Composite of the factor classes, rightmost factor applied first."""
    if not fz.factors:
        return identity_marked(fz.k)
    if table is None:
        table = _default_table(fz.k)
    if table.k != fz.k:
        raise ValueError("factorization over %d holes, table for %d" % (fz.k, table.k))
    out = eval_factor(fz.factors[-1], table)
    for f in reversed(fz.factors[:-1]):
        out = compose_marked(eval_factor(f, table), out)
    return out


def verify_relation(fz: Factorization, table=None) -> bool:
    """True iff the factorization evaluates exactly to the boundary multi-twist."""
    from . import surface

    if table is None:
        table = _default_table(fz.k)
    return eval_product(fz, table) == surface.multi_twist_target(table)


# ---------------------------------------------------------------------------
# homology shadows

def pushed_class(expr: CurveExpr, table=None, k=None):
    """Homology class of the named curve: the base class pushed through the
    conjugator transvections."""
    if table is None:
        table = _default_table(k)
    c = table.curve(expr.base).hclass
    for sign, atom in reversed(expr.conj):
        a = pushed_class(atom, table)
        c = invariants.transvect_vector(c, a, sign)
    return tuple(c)


def homology_shadow(fz: Factorization, table=None) -> IntMatrix:
    """Product of the factor transvections on H_1; identity is a necessary
    condition for the factorization to be a relation."""
    if table is None:
        table = _default_table(fz.k)
    out = IntMatrix.identity(fz.k + 1)
    for f in fz.factors:
        t = transvection(pushed_class(f.curve, table), fz.k)
        if f.sign < 0:
            t = _transvection_inverse(t, pushed_class(f.curve, table), fz.k)
        out = out * t
    return out


def _transvection_inverse(t: IntMatrix, c, k: int) -> IntMatrix:
    # inverse of v -> v + <v,c>c is v -> v - <v,c>c
    n = k + 1
    jc = [0] * n
    jc[0] = c[1]
    jc[1] = -c[0]
    rows = tuple(
        tuple((1 if i == j else 0) - c[i] * jc[j] for j in range(n)) for i in range(n)
    )
    return IntMatrix(n, n, rows)
