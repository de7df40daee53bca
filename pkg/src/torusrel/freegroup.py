"""Exact free-group arithmetic and marked automorphisms.

Words are freely reduced sequences of signed letters, following the usual
list-of-nonzero-integers encoding: letter +g stands for the generator with
0-based index g-1, letter -g for its inverse.  Generator 0 is x, generator 1
is y, generators 2.. are the hole loops z1, z2, ...

A mapping class of a k-holed torus that fixes the boundary pointwise is
represented by a :class:`MarkedClass`: a certified automorphism of the free
group pi_1 (basepoint on boundary 1) together with, for every other boundary
component, the loop by which a reference arc to that boundary is displaced.
The automorphism alone is blind to twists about boundaries 2..k; the arc
words restore faithfulness.

Everything here is immutable and pure; values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass


class RankMismatch(ValueError):
    """Operands live over free groups of different ranks."""


class CertificateError(ValueError):
    """Forward/backward tables of an automorphism fail to invert each other."""


def _reduce_tuple(letters) -> tuple:
    out = []
    for ltr in letters:
        if out and out[-1] == -ltr:
            out.pop()
        else:
            out.append(ltr)
    return tuple(out)


def _letter_name(ltr: int) -> str:
    g = abs(ltr) - 1
    name = "x" if g == 0 else "y" if g == 1 else "z%d" % (g - 1)
    return name.upper() if ltr < 0 else name


@dataclass(frozen=True, slots=True)
class Word:
    """A freely reduced word; ``letters`` uses the signed encoding above."""

    letters: tuple
    rank: int

    def __post_init__(self):
        prev = 0
        for ltr in self.letters:
            if ltr == 0 or abs(ltr) > self.rank:
                raise ValueError("letter %r out of range for rank %d" % (ltr, self.rank))
            if ltr == -prev:
                raise ValueError("word is not freely reduced")
            prev = ltr

    def __len__(self):
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def inverse(self) -> "Word":
        return Word(tuple(-l for l in reversed(self.letters)), self.rank)

    def __repr__(self):
        return "Word(%s, rank=%d)" % (self.to_str() or "1", self.rank)

    def to_str(self) -> str:
        return " ".join(_letter_name(l) for l in self.letters)

    @staticmethod
    def from_str(text: str, rank: int) -> "Word":
        """Parse tokens like ``x Y z2 Z3``; uppercase means inverse."""
        letters = []
        for tok in text.split():
            neg = tok[0].isupper()
            t = tok.lower()
            if t == "x":
                g = 0
            elif t == "y":
                g = 1
            elif t.startswith("z"):
                g = int(t[1:]) + 1
            else:
                raise ValueError("bad letter token %r" % tok)
            letters.append(-(g + 1) if neg else (g + 1))
        return reduce(letters, rank)


def identity_word(rank: int) -> Word:
    return Word((), rank)


def generator(g: int, rank: int, sign: int = 1) -> Word:
    """The length-one word for 0-based generator index ``g``."""
    if not 0 <= g < rank:
        raise ValueError("generator index %d out of range" % g)
    return Word((sign * (g + 1),), rank)


def reduce(letters, rank: int) -> Word:
    """Freely reduce a raw signed-letter sequence.  Idempotent."""
    for ltr in letters:
        if ltr == 0 or abs(ltr) > rank:
            raise ValueError("letter %r out of range for rank %d" % (ltr, rank))
    return Word(_reduce_tuple(letters), rank)


def multiply(w1: Word, w2: Word) -> Word:
    if w1.rank != w2.rank:
        raise RankMismatch("rank %d vs %d" % (w1.rank, w2.rank))
    out = list(w1.letters)
    for ltr in w2.letters:
        if out and out[-1] == -ltr:
            out.pop()
        else:
            out.append(ltr)
    return Word(tuple(out), w1.rank)


def conjugate_word(g: Word, w: Word) -> Word:
    """g w g^-1, reduced."""
    if g.rank != w.rank:
        raise RankMismatch("rank %d vs %d" % (g.rank, w.rank))
    return multiply(multiply(g, w), g.inverse())


def _apply_table(table, letters) -> tuple:
    """Homomorphic image of a raw letter tuple under a tuple of image words."""
    out = []
    for ltr in letters:
        img = table[abs(ltr) - 1]
        if ltr < 0:
            img = tuple(-l for l in reversed(img))
        for m in img:
            if out and out[-1] == -m:
                out.pop()
            else:
                out.append(m)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class CertifiedAut:
    """Automorphism of a free group with a verified inverse table.

    Inverting a general endomorphism is hard; every automorphism used here
    arises from a Dehn twist whose inverse is known, so both directions are
    stored and certified at construction.
    """

    forward: tuple  # tuple[Word, ...] image of each generator
    backward: tuple
    rank: int

    def __post_init__(self):
        if len(self.forward) != self.rank or len(self.backward) != self.rank:
            raise CertificateError("image table has wrong length")
        for w in self.forward + self.backward:
            if w.rank != self.rank:
                raise RankMismatch("image word of rank %d in rank-%d automorphism" % (w.rank, self.rank))
        fwd = tuple(w.letters for w in self.forward)
        bwd = tuple(w.letters for w in self.backward)
        for g in range(self.rank):
            if _apply_table(bwd, fwd[g]) != (g + 1,):
                raise CertificateError("backward o forward does not fix generator %d" % g)
            if _apply_table(fwd, bwd[g]) != (g + 1,):
                raise CertificateError("forward o backward does not fix generator %d" % g)

    def inverse(self) -> "CertifiedAut":
        return CertifiedAut(self.backward, self.forward, self.rank)


def identity_aut(rank: int) -> CertifiedAut:
    gens = tuple(generator(g, rank) for g in range(rank))
    return CertifiedAut(gens, gens, rank)


def apply(a: CertifiedAut, w: Word) -> Word:
    if a.rank != w.rank:
        raise RankMismatch("rank %d vs %d" % (a.rank, w.rank))
    table = tuple(v.letters for v in a.forward)
    return Word(_apply_table(table, w.letters), a.rank)


def apply_inverse(a: CertifiedAut, w: Word) -> Word:
    if a.rank != w.rank:
        raise RankMismatch("rank %d vs %d" % (a.rank, w.rank))
    table = tuple(v.letters for v in a.backward)
    return Word(_apply_table(table, w.letters), a.rank)


def compose(a2: CertifiedAut, a1: CertifiedAut) -> CertifiedAut:
    """Composite applying ``a1`` first, then ``a2`` (functional order)."""
    if a1.rank != a2.rank:
        raise RankMismatch("rank %d vs %d" % (a1.rank, a2.rank))
    rank = a1.rank
    f2 = tuple(w.letters for w in a2.forward)
    b1 = tuple(w.letters for w in a1.backward)
    forward = tuple(Word(_apply_table(f2, w.letters), rank) for w in a1.forward)
    backward = tuple(Word(_apply_table(b1, w.letters), rank) for w in a2.backward)
    return CertifiedAut(forward, backward, rank)  # constructor re-verifies


def inverse_aut(a: CertifiedAut) -> CertifiedAut:
    return a.inverse()


@dataclass(frozen=True, slots=True)
class MarkedClass:
    """Boundary-fixing mapping class of the k-holed torus.

    ``theta`` acts on pi_1 (rank k+1, basepoint on boundary 1); ``arcs[i]``
    is the displacement loop of the reference arc to boundary i+2, so
    ``arcs`` has length k-1.  Composition obeys
    u_i(phi2 o phi1) = theta2(u_i(phi1)) * u_i(phi2).
    """

    theta: CertifiedAut
    arcs: tuple  # tuple[Word, ...], length k-1, boundaries 2..k
    k: int

    def __post_init__(self):
        if self.theta.rank != self.k + 1:
            raise RankMismatch("theta rank %d for k=%d" % (self.theta.rank, self.k))
        if len(self.arcs) != self.k - 1:
            raise ValueError("expected %d arc words, got %d" % (self.k - 1, len(self.arcs)))
        for w in self.arcs:
            if w.rank != self.k + 1:
                raise RankMismatch("arc word of rank %d" % w.rank)

    def is_identity(self) -> bool:
        ident = identity_marked(self.k)
        return self == ident


def identity_marked(k: int) -> MarkedClass:
    rank = k + 1
    return MarkedClass(identity_aut(rank), tuple(identity_word(rank) for _ in range(k - 1)), k)


def compose_marked(m2: MarkedClass, m1: MarkedClass) -> MarkedClass:
    """Composite applying ``m1`` first, then ``m2``."""
    if m1.k != m2.k:
        raise RankMismatch("k=%d vs k=%d" % (m1.k, m2.k))
    theta = compose(m2.theta, m1.theta)
    arcs = tuple(
        multiply(apply(m2.theta, u1), u2) for u1, u2 in zip(m1.arcs, m2.arcs)
    )
    return MarkedClass(theta, arcs, m1.k)


def inverse_marked(m: MarkedClass) -> MarkedClass:
    theta_inv = m.theta.inverse()
    arcs = tuple(apply(theta_inv, u).inverse() for u in m.arcs)
    return MarkedClass(theta_inv, arcs, m.k)
