"""Sparse matrices and vectors with exact (or any field-valued) entries.

A vector is a dict ``index -> scalar`` with no stored zeros.  Matrices are
dict-of-dicts by row.  The scalar type only needs ring operations; elimination
routines also need division and a zero test.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

Vec = dict


def vec_add(u: Vec, v: Vec, c=1) -> Vec:
    """u + c v."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y == 0:
            out.pop(k, None)
        else:
            out[k] = y
    return out


def vec_scale(c, v: Vec) -> Vec:
    if c == 0:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_is_zero(v: Vec, tol=None) -> bool:
    if tol is None:
        return all(x == 0 for x in v.values())
    return all(abs(x) <= tol for x in v.values())


def vec_kron(u: Vec, v: Vec, dim_v: int) -> Vec:
    return {a * dim_v + b: x * y for a, x in u.items() for b, y in v.items()}


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int | None = None, rows: dict | None = None):
        self.nrows = nrows
        self.ncols = nrows if ncols is None else ncols
        self.rows = rows if rows is not None else {}

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable) -> "SparseMatrix":
        m = cls(nrows, ncols)
        for i, j, x in entries:
            m.add_entry(i, j, x)
        return m

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: Fraction(1)} for i in range(n)})

    def add_entry(self, i: int, j: int, x) -> None:
        if x == 0:
            return
        row = self.rows.setdefault(i, {})
        y = row.get(j, 0) + x
        if y == 0:
            del row[j]
            if not row:
                del self.rows[i]
        else:
            row[j] = y

    def __getitem__(self, ij):
        i, j = ij
        return self.rows.get(i, {}).get(j, 0)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def entries(self):
        for i, row in self.rows.items():
            for j, x in row.items():
                yield i, j, x

    def map(self, f: Callable) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols,
                            {i: {j: f(x) for j, x in row.items()} for i, row in self.rows.items()})

    def transpose(self) -> "SparseMatrix":
        out = SparseMatrix(self.ncols, self.nrows)
        for i, j, x in self.entries():
            out.rows.setdefault(j, {})[i] = x
        return out

    T = property(transpose)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        out = self.copy()
        for i, j, x in other.entries():
            out.add_entry(i, j, x)
        return out

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        out = self.copy()
        for i, j, x in other.entries():
            out.add_entry(i, j, -x)
        return out

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "SparseMatrix":
        if c == 0:
            return SparseMatrix(self.nrows, self.ncols)
        return self.map(lambda x: c * x)

    def __rmul__(self, c):
        return self.scale(c)

    def copy(self) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols, {i: dict(r) for i, r in self.rows.items()})

    def __matmul__(self, other):
        if isinstance(other, dict):
            return self.apply(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = {}
        orows = other.rows
        for i, row in self.rows.items():
            acc = {}
            for k, x in row.items():
                ok = orows.get(k)
                if ok:
                    for j, y in ok.items():
                        acc[j] = acc.get(j, 0) + x * y
            acc = {j: v for j, v in acc.items() if v != 0}
            if acc:
                out[i] = acc
        return SparseMatrix(self.nrows, other.ncols, out)

    def apply(self, v: Vec) -> Vec:
        """Matrix times sparse vector (any scalar type for v)."""
        cols: dict = {}
        for i, row in self.rows.items():
            acc = 0
            hit = False
            for j, x in row.items():
                y = v.get(j)
                if y is not None:
                    acc = acc + y * x
                    hit = True
            if hit and acc != 0:
                cols[i] = acc
        return cols

    def is_zero(self) -> bool:
        return not any(x != 0 for _, _, x in self.entries())

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMatrix) and (self.nrows, self.ncols) == (other.nrows, other.ncols)
                and (self - other).is_zero())

    __hash__ = None

    def diagonal(self) -> list:
        return [self[i, i] for i in range(min(self.nrows, self.ncols))]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseMatrix":
        cpos = {c: k for k, c in enumerate(cols)}
        out = SparseMatrix(len(rows), len(cols))
        for a, i in enumerate(rows):
            for j, x in self.rows.get(i, {}).items():
                b = cpos.get(j)
                if b is not None:
                    out.rows.setdefault(a, {})[b] = x
        return out

    def to_dense(self) -> list:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, j, x in self.entries():
            out[i][j] = x
        return out


def commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b - b @ a


def kron(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    out = SparseMatrix(a.nrows * b.nrows, a.ncols * b.ncols)
    for i, ra in a.rows.items():
        for k, rb in b.rows.items():
            row = {}
            for j, x in ra.items():
                base = j * b.ncols
                for l, y in rb.items():
                    row[base + l] = x * y
            out.rows[i * b.nrows + k] = row
    return out


def kron_all(mats: Sequence[SparseMatrix]) -> SparseMatrix:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


# -- elimination -----------------------------------------------------------------

class EchelonBasis:
    """Incrementally built basis of a subspace, with coordinates of members.

    Rows are kept in insertion order; each row has a pivot that is zero in all
    later rows.  ``zero`` decides when a reduced entry counts as zero.
    """

    def __init__(self, zero: Callable | None = None):
        self.rows: list = []      # (pivot, reduced vector, combination of basis members)
        self.members: list = []
        self._zero = zero or (lambda x: x == 0)

    def __len__(self):
        return len(self.members)

    def _reduce(self, v: Vec):
        v = dict(v)
        combo: dict = {}
        for piv, row, rc in self.rows:
            c = v.get(piv)
            if c is None or self._zero(c):
                v.pop(piv, None)
                continue
            c = c / row[piv]
            for k, x in row.items():
                y = v.get(k, 0) - c * x
                if self._zero(y):
                    v.pop(k, None)
                else:
                    v[k] = y
            for k, x in rc.items():
                combo[k] = combo.get(k, 0) + c * x
        v = {k: x for k, x in v.items() if not self._zero(x)}
        return v, combo

    def add(self, v: Vec) -> bool:
        """Add ``v`` if independent of the current members; report whether it was added."""
        red, combo = self._reduce(v)
        if not red:
            return False
        piv = min(red)
        idx = len(self.members)
        rc = {k: -x for k, x in combo.items()}
        rc[idx] = 1
        self.rows.append((piv, red, rc))
        self.members.append(v)
        return True

    def contains(self, v: Vec) -> bool:
        return not self._reduce(v)[0]

    def coords(self, v: Vec) -> dict:
        """Coefficients of v in terms of the members; raises if v is outside the span."""
        red, combo = self._reduce(v)
        if red:
            raise ValueError("vector not in span")
        return {k: x for k, x in combo.items() if not self._zero(x)}


def rank(vectors: Iterable[Vec], zero: Callable | None = None) -> int:
    eb = EchelonBasis(zero)
    for v in vectors:
        eb.add(v)
    return len(eb)


def kernel(rows: Sequence[Vec], columns: Sequence[int]) -> list:
    """Basis of {x supported on ``columns`` : row . x = 0 for all rows}, exact."""
    cols = list(columns)
    pos = {c: k for k, c in enumerate(cols)}
    mat = []
    for r in rows:
        rr = {pos[c]: x for c, x in r.items() if c in pos and x != 0}
        if rr:
            mat.append(rr)
    # Gauss-Jordan on sparse rows
    pivots: dict = {}  # column -> row
    for r in mat:
        for c, row in pivots.items():
            x = r.get(c)
            if x:
                r = vec_add(r, row, -x)
        if not r:
            continue
        c0 = min(r)
        inv = 1 / Fraction(r[c0])
        r = {k: x * inv for k, x in r.items()}
        for c, row in list(pivots.items()):
            x = row.get(c0)
            if x:
                pivots[c] = vec_add(row, r, -x)
        pivots[c0] = r
    free = [k for k in range(len(cols)) if k not in pivots]
    out = []
    for f in free:
        v = {cols[f]: Fraction(1)}
        for c, row in pivots.items():
            x = row.get(f)
            if x:
                v[cols[c]] = -x
        out.append(v)
    return out
