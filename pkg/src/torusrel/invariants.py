"""Integer linear algebra invariants: transvections, Smith normal form,
first homology of the filling associated with a positive factorization.

All arithmetic is over exact Python integers; Smith-form intermediates can
overflow fixed-width types, so no float/numpy shortcuts are taken.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples, exact ints

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("inconsistent dimensions")

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        return IntMatrix(len(rows), len(rows[0]) if rows else 0, rows)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = tuple(zip(*other.entries))
        rows = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ot) for row in self.entries
        )
        return IntMatrix(self.rows, other.cols, rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.rows) if self.rows == self.cols else False

    def apply(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of non-square matrix")
    n = m.rows
    a = [list(r) for r in m.entries]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


def pairing_matrix(size: int) -> IntMatrix:
    """Intersection pairing on H_1 in the basis (x, y, z1, ...): <x,y> = 1."""
    rows = [[0] * size for _ in range(size)]
    rows[0][1] = 1
    rows[1][0] = -1
    return IntMatrix.from_rows(rows)


def transvection(c, k: int) -> IntMatrix:
    """Matrix of v |-> v + <v,c> c on H_1(Sigma_1^k) = Z^(k+1).

    The pairing is <x,y> = 1 = -<y,x>, boundary classes pair to zero, so the
    result is unimodular and preserves the pairing.
    """
    c = tuple(int(v) for v in c)
    if len(c) != k + 1:
        raise ValueError("class vector has length %d, expected %d" % (len(c), k + 1))
    jc = [0] * (k + 1)
    jc[0] = c[1]
    jc[1] = -c[0]
    n = k + 1
    rows = tuple(
        tuple((1 if i == j else 0) + c[i] * jc[j] for j in range(n)) for i in range(n)
    )
    return IntMatrix(n, n, rows)


def transvect_vector(v, c, sign: int = 1):
    """Image of vector v under the (signed) transvection by class c."""
    phi = v[0] * c[1] - v[1] * c[0]
    return tuple(a + sign * phi * b for a, b in zip(v, c))


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple  # d1 | d2 | ... | dr, all >= 1
    rank: int
    U: IntMatrix
    V: IntMatrix

    def diagonal(self, rows: int, cols: int) -> IntMatrix:
        d = [[0] * cols for _ in range(rows)]
        for i, f in enumerate(self.invariant_factors):
            d[i][i] = f
        return IntMatrix.from_rows(d) if rows else IntMatrix(0, cols, ())


def _pivot_smallest(a, t, nr, nc):
    """Position of the smallest nonzero |entry| in the trailing block,
    ties broken row-major.  Deterministic."""
    best = None
    for i in range(t, nr):
        for j in range(t, nc):
            v = a[i][j]
            if v != 0 and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def snf(m: IntMatrix) -> SmithForm:
    """Smith normal form with recorded unimodular transforms: U m V = diag.

    Pivot rule: smallest nonzero absolute value in the remaining block,
    row-major tie break; fixed so results are deterministic.
    """
    nr, nc = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in a:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    t = 0
    while True:
        piv = _pivot_smallest(a, t, nr, nc)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        # clear row and column t, re-pivoting while remainders appear
        while True:
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # divisibility: pivot must divide everything below-right
        fixed = True
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % a[t][t] != 0:
                    row_op(t, i, -1)  # add row i to row t, then restart block
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
        if t == min(nr, nc):
            break

    factors = tuple(a[i][i] for i in range(min(nr, nc)) if a[i][i] != 0)
    form = SmithForm(
        invariant_factors=factors,
        rank=len(factors),
        U=IntMatrix.from_rows(u) if nr else IntMatrix(0, 0, ()),
        V=IntMatrix.from_rows(v) if nc else IntMatrix(0, 0, ()),
    )
    return form


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group as free rank plus torsion factors."""

    free_rank: int
    torsion: tuple  # invariant factors > 1, each dividing the next

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = ["Z"] * self.free_rank + ["Z/%d" % d for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def cokernel(m: IntMatrix) -> AbelianGroup:
    """Z^rows / column span of m."""
    form = snf(m)
    torsion = tuple(d for d in form.invariant_factors if d != 1)
    return AbelianGroup(free_rank=m.rows - form.rank, torsion=torsion)


@dataclass(frozen=True)
class InvariantReport:
    k: int
    n: int
    euler: int
    h1_free_rank: int
    h1_torsion: tuple
    shadow_ok: bool
    verified: bool

    def to_dict(self):
        return {
            "k": self.k,
            "n": self.n,
            "euler": self.euler,
            "h1_free_rank": self.h1_free_rank,
            "h1_torsion": list(self.h1_torsion),
            "shadow_ok": self.shadow_ok,
            "verified": self.verified,
        }


def euler_char(factorization) -> int:
    """chi of the fibration total space over the disc: chi(Sigma) + n = -k + n."""
    return -factorization.k + len(factorization.factors)


def filling_h1(factorization, table=None) -> AbelianGroup:
    """H_1 of the total space: H_1(Sigma) modulo the factor curve classes."""
    from . import factorization as fz  # local import; fz imports this module

    classes = [fz.pushed_class(f.curve, table, factorization.k) for f in factorization.factors]
    cols = tuple(zip(*classes)) if classes else tuple(() for _ in range(factorization.k + 1))
    m = IntMatrix(factorization.k + 1, len(classes), tuple(tuple(c) for c in cols))
    return cokernel(m)


def sl2_factors(factorization, table=None):
    """The 2x2 shadow of each factor: transvection by the (x, y) part of its
    class, with sign; capping every hole at the homology level."""
    from . import factorization as fz

    out = []
    for f in factorization.factors:
        c = fz.pushed_class(f.curve, table, factorization.k)
        t = transvection((c[0], c[1]), 1)
        if f.sign < 0:
            t = _sl2_inverse(t)
        out.append(t)
    return out


def _sl2_inverse(t: IntMatrix) -> IntMatrix:
    ((a, b), (c, d)) = t.entries
    dt = a * d - b * c
    if dt not in (1, -1):
        raise ValueError("matrix not unimodular")
    return IntMatrix.from_rows([[d * dt, -b * dt], [-c * dt, a * dt]])


def sl2_shadow(factorization, table=None) -> IntMatrix:
    """Product of the 2x2 transvection shadows, written order, rightmost first."""
    out = IntMatrix.identity(2)
    for t in sl2_factors(factorization, table):
        out = out * t
    return out


def invariant_report(factorization, table=None, verified=None) -> InvariantReport:
    from . import factorization as fz

    shadow = fz.homology_shadow(factorization, table)
    sl2 = sl2_shadow(factorization, table)
    h1 = filling_h1(factorization, table)
    if verified is None:
        verified = fz.verify_relation(factorization, table)
    return InvariantReport(
        k=factorization.k,
        n=len(factorization.factors),
        euler=euler_char(factorization),
        h1_free_rank=h1.free_rank,
        h1_torsion=h1.torsion,
        shadow_ok=shadow.is_identity() and sl2.is_identity(),
        verified=verified,
    )
