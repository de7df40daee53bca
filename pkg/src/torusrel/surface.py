"""The concrete model of the k-holed torus and its certified twist tables.

The fundamental group of Sigma_1^k (basepoint on boundary 1) is free of rank
k+1 on x, y, z1..z_{k-1}: x and y are the torus loops, z_i the loop around
hole i.  Boundary words: b_i = z_i for i < k, and b_k expresses the last
boundary through the commutator of x and y; capping holes 1..k-1 sends it to
x y x^-1 y^-1.

Twist tables for the base curves (al*, be, si*, de*) are shipped as data
files generated by scripts/derive_tables.py from an explicit planar model
and frozen; validate_base_relations() certifies every table against braid,
commutation and centrality identities plus the one-holed chain identity.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources

from .freegroup import (
    Word,
    CertifiedAut,
    MarkedClass,
    identity_word,
    identity_marked,
    compose_marked,
    multiply,
    reduce,
)


@dataclass(frozen=True)
class SurfaceModel:
    k: int
    basis: tuple  # generator labels
    boundary_words: tuple  # k based boundary words

    @property
    def rank(self) -> int:
        return self.k + 1


def build_model(k: int) -> SurfaceModel:
    """Deterministic model for 1 <= k <= 9."""
    if not 1 <= k <= 9:
        raise ValueError("hole count %d out of range 1..9" % k)
    rank = k + 1
    basis = ("x", "y") + tuple("z%d" % i for i in range(1, k))
    commutator = (1, 2, -1, -2)  # x y x^-1 y^-1
    boundaries = [Word((i + 2,), rank) for i in range(1, k)]  # z_i, holes 1..k-1
    last = reduce(commutator + tuple(-(i + 2) for i in range(1, k)), rank)
    boundaries.append(last)
    if k == 1:
        boundaries = [Word(commutator, rank)]
    return SurfaceModel(k, basis, tuple(boundaries))


@dataclass(frozen=True)
class BaseCurve:
    label: str
    twist: MarkedClass
    hclass: tuple
    disjoint_with: frozenset
    intersects_once: frozenset
    geometry: str = ""  # descriptive note from the generator


@dataclass
class TwistTable:
    model: SurfaceModel
    curves: dict
    version: int = 1
    eval_cache: dict = field(default_factory=dict)

    @property
    def k(self) -> int:
        return self.model.k

    def curve(self, label: str) -> BaseCurve:
        try:
            return self.curves[label]
        except KeyError:
            from .factorization import UnknownLabel

            raise UnknownLabel("no curve %r in the %d-holed table" % (label, self.k))

    def labels(self):
        return sorted(self.curves)


# ---------------------------------------------------------------------------
# table data files

_TABLE_CACHE = {}
_ENV_OVERRIDE = "TORUSREL_TABLES"


def _data_text(name: str) -> str:
    override = os.environ.get(_ENV_OVERRIDE)
    if override:
        path = os.path.join(override, name)
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    return resources.files("torusrel").joinpath("data").joinpath(name).read_text("utf-8")


def standard_table(k: int) -> TwistTable:
    """The shipped table for k holes, parsed and certified once per process."""
    if k not in _TABLE_CACHE:
        _TABLE_CACHE[k] = parse_table(_data_text("tables_k%d.txt" % k))
    return _TABLE_CACHE[k]


def parse_table(text: str) -> TwistTable:
    """Parse the versioned table format; verifies every automorphism
    certificate while loading."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    it = iter(lines)

    def expect(prefix):
        ln = next(it)
        if not ln.startswith(prefix):
            raise ValueError("table format: expected %r, got %r" % (prefix, ln))
        return ln[len(prefix):].strip()

    version = int(expect("format"))
    k = int(expect("k"))
    rank = int(expect("rank"))
    model = build_model(k)
    if rank != model.rank:
        raise ValueError("rank %d inconsistent with k=%d" % (rank, k))
    expect("gens")
    for i in range(k):
        expect("boundary")  # informational; model owns the boundary words

    curves = {}
    pending = {}
    for ln in it:
        if ln.startswith("curve "):
            if pending:
                curves[pending["label"]] = _finish_curve(pending, k)
            pending = {"label": ln.split()[1], "fwd": {}, "bwd": {}, "arcs": {},
                       "disjoint": set(), "once": set(), "geometry": ""}
        elif ln.startswith("geometry"):
            pending["geometry"] = ln.split(None, 1)[1] if len(ln.split(None, 1)) > 1 else ""
        elif ln.startswith("hclass"):
            pending["hclass"] = tuple(int(v) for v in ln.split()[1:])
        elif ln.startswith("fwd ") or ln.startswith("bwd "):
            kind, gen, eq, *words = ln.split()
            if eq != "=":
                raise ValueError("bad image line %r" % ln)
            pending[kind][gen] = Word.from_str(" ".join(words), rank)
        elif ln.startswith("arc "):
            _, hole, eq, *words = ln.split()
            pending["arcs"][int(hole)] = Word.from_str(" ".join(words), rank)
        elif ln.startswith("disjoint"):
            pending["disjoint"].update(ln.split()[1:])
        elif ln.startswith("once"):
            pending["once"].update(ln.split()[1:])
        else:
            raise ValueError("table format: unexpected line %r" % ln)
    if pending:
        curves[pending["label"]] = _finish_curve(pending, k)
    return TwistTable(model, curves, version)


def _finish_curve(p, k: int) -> BaseCurve:
    rank = k + 1
    names = ["x", "y"] + ["z%d" % i for i in range(1, k)]
    forward = tuple(p["fwd"][g] for g in names)
    backward = tuple(p["bwd"][g] for g in names)
    aut = CertifiedAut(forward, backward, rank)
    arcs = tuple(p["arcs"].get(h, identity_word(rank)) for h in range(2, k + 1))
    twist = MarkedClass(aut, arcs, k)
    hclass = p["hclass"]
    if len(hclass) != rank:
        raise ValueError("hclass length %d for rank %d" % (len(hclass), rank))
    return BaseCurve(
        label=p["label"],
        twist=twist,
        hclass=hclass,
        disjoint_with=frozenset(p["disjoint"]),
        intersects_once=frozenset(p["once"]),
        geometry=p["geometry"],
    )


def format_table(table: TwistTable) -> str:
    """Serialize a table in the shipped text format (used by the generator)."""
    k = table.k
    model = table.model
    out = ["format %d" % table.version, "k %d" % k, "rank %d" % model.rank,
           "gens " + " ".join(model.basis)]
    for i, b in enumerate(model.boundary_words, start=1):
        out.append("boundary %d = %s" % (i, b.to_str()))
    names = ["x", "y"] + ["z%d" % i for i in range(1, k)]
    for label in sorted(table.curves):
        c = table.curves[label]
        out.append("curve %s" % label)
        if c.geometry:
            out.append("geometry %s" % c.geometry)
        out.append("hclass " + " ".join(str(v) for v in c.hclass))
        for g, w in zip(names, c.twist.theta.forward):
            out.append("fwd %s = %s" % (g, w.to_str()))
        for g, w in zip(names, c.twist.theta.backward):
            out.append("bwd %s = %s" % (g, w.to_str()))
        for hole, w in enumerate(c.twist.arcs, start=2):
            out.append("arc %d = %s" % (hole, w.to_str()))
        if c.disjoint_with:
            out.append("disjoint " + " ".join(sorted(c.disjoint_with)))
        if c.intersects_once:
            out.append("once " + " ".join(sorted(c.intersects_once)))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# derived classes and validation

def multi_twist_target(table: TwistTable) -> MarkedClass:
    """Product of the k boundary twists (they commute, so order is moot)."""
    out = identity_marked(table.k)
    for i in range(1, table.k + 1):
        out = compose_marked(table.curve("de%d" % i).twist, out)
    return out


@dataclass(frozen=True)
class ValidationEntry:
    check: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    k: int
    entries: tuple

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.passed]


def _abelianized(aut: CertifiedAut):
    rank = aut.rank
    cols = []
    for w in aut.forward:
        v = [0] * rank
        for ltr in w.letters:
            v[abs(ltr) - 1] += 1 if ltr > 0 else -1
        cols.append(v)
    return tuple(tuple(cols[j][i] for j in range(rank)) for i in range(rank))


def validate_base_relations(table: TwistTable) -> ValidationReport:
    """Certify the table: braid identities for declared once-intersecting
    pairs, commutation for declared disjoint pairs, centrality of every
    boundary twist, transvection consistency, and for k=1 the chain identity
    (T_al1 T_be)^6 = T_de1.  Failures are report entries, not exceptions."""
    from .invariants import transvection

    entries = []
    k = table.k
    labels = table.labels()
    seen = set()
    for label in labels:
        c = table.curve(label)
        for other in sorted(c.disjoint_with):
            if other not in table.curves or (other, label) in seen:
                continue
            seen.add((label, other))
            a, b = c.twist, table.curve(other).twist
            ok = compose_marked(a, b) == compose_marked(b, a)
            entries.append(ValidationEntry("commute %s %s" % (label, other), ok))
        for other in sorted(c.intersects_once):
            if other not in table.curves or (other, label) in seen:
                continue
            seen.add((label, other))
            a, b = c.twist, table.curve(other).twist
            lhs = compose_marked(a, compose_marked(b, a))
            rhs = compose_marked(b, compose_marked(a, b))
            entries.append(ValidationEntry("braid %s %s" % (label, other), lhs == rhs))
    target = multi_twist_target(table)
    for label in labels:
        tw = table.curve(label).twist
        ok = compose_marked(target, tw) == compose_marked(tw, target)
        entries.append(ValidationEntry("central multi-twist vs %s" % label, ok))
    for i in range(1, k + 1):
        dtw = table.curve("de%d" % i).twist
        ok = all(
            compose_marked(dtw, table.curve(lb).twist) == compose_marked(table.curve(lb).twist, dtw)
            for lb in labels
        )
        entries.append(ValidationEntry("central de%d" % i, ok))
    for label in labels:
        c = table.curve(label)
        expected = transvection(c.hclass, k).entries
        entries.append(
            ValidationEntry(
                "transvection %s" % label,
                _abelianized(c.twist.theta) == expected,
                "abelianized action vs hclass",
            )
        )
    if k == 1:
        chain = identity_marked(1)
        pair = compose_marked(table.curve("al1").twist, table.curve("be").twist)
        for _ in range(6):
            chain = compose_marked(chain, pair)
        entries.append(
            ValidationEntry("chain (al1 be)^6 = de1", chain == table.curve("de1").twist)
        )
    return ValidationReport(k, tuple(entries))
