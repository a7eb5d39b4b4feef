"""Exact linear algebra over the rationals.

Vectors are tuples of ``Fraction``, matrices are tuples of row vectors.
Everything is pure, exact and deterministic: the pivot is always the
first nonzero entry in column order, never chosen by magnitude.

``RowSpan`` keeps a growing set of sparse rows in reduced row-echelon
form; it is the workhorse behind ideal closures, where most coordinates
of any single row are zero.
"""

from __future__ import annotations

from fractions import Fraction

Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value) -> Fraction:
    """Accept ints, Fractions and "p/q" / "p" strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def scalar_json(value: Fraction):
    """JSON form: plain int when the denominator is 1, else "p/q"."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def vector(entries) -> tuple:
    return tuple(to_scalar(x) for x in entries)


def matrix(rows) -> tuple:
    out = tuple(vector(row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> tuple:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def mat_vec(m, v) -> tuple:
    if m and len(m[0]) != len(v):
        raise ValueError(f"dimension mismatch: {len(m[0])} columns vs {len(v)}")
    return tuple(sum((row[j] * v[j] for j in range(len(v))), ZERO) for row in m)


def mat_mul(a, b) -> tuple:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"dimension mismatch: {len(a[0])} vs {len(b)}")
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum((row[k] * b[k][j] for k in range(len(b))), ZERO) for j in range(cols))
        for row in a
    )


def rref(m) -> tuple:
    """Reduced row-echelon form over Q.

    Returns (reduced matrix of the same shape, pivot column indices).
    Zero rows sink to the bottom; pivot columns are strictly increasing
    and carry a 1 with zeros elsewhere in their column.
    """
    rows = [list(row) for row in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(m) -> int:
    return len(rref(m)[1])


def _pivot_of(row):
    for c, x in enumerate(row):
        if x != 0:
            return c
    return None


def in_span(reduced, v):
    """Coordinates c with c . reduced = v, or None.

    ``reduced`` must already be in reduced row-echelon form.  Zero rows
    get coordinate 0; an empty matrix spans only the zero vector.
    """
    if reduced and len(reduced[0]) != len(v):
        raise ValueError(f"dimension mismatch: {len(reduced[0])} vs {len(v)}")
    coords = [ZERO] * len(reduced)
    residual = list(to_scalar(x) for x in v)
    for i, row in enumerate(reduced):
        p = _pivot_of(row)
        if p is None:
            continue
        c = residual[p] / row[p]
        if c != 0:
            coords[i] = c
            residual = [x - c * y for x, y in zip(residual, row)]
    if any(x != 0 for x in residual):
        return None
    return tuple(coords)


def quotient_basis(ambient_dim: int, reduced) -> list:
    """Non-pivot column indices of an RREF matrix: coset representatives."""
    if reduced and len(reduced[0]) != ambient_dim:
        raise ValueError(f"dimension mismatch: {len(reduced[0])} vs {ambient_dim}")
    taken = set()
    for row in reduced:
        p = _pivot_of(row)
        if p is not None:
            taken.add(p)
    return [c for c in range(ambient_dim) if c not in taken]


class RowSpan:
    """A subspace maintained incrementally in reduced row-echelon form.

    Rows are sparse dicts (column index -> nonzero Fraction).  Invariant:
    every stored row has leading coefficient 1 at its pivot column, and
    no stored row has support at another row's pivot.
    """

    def __init__(self):
        self._rows: dict = {}  # pivot column -> sparse row

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> list:
        return sorted(self._rows)

    def rows(self) -> list:
        """Rows as fresh sparse dicts, sorted by pivot column."""
        return [dict(self._rows[p]) for p in sorted(self._rows)]

    def reduce(self, vec: dict) -> dict:
        """Residual of ``vec`` after eliminating all known pivots."""
        out = {c: x for c, x in vec.items() if x != 0}
        for p in sorted(self._rows):
            coeff = out.get(p)
            if not coeff:
                continue
            for c, x in self._rows[p].items():
                acc = out.get(c, ZERO) - coeff * x
                if acc:
                    out[c] = acc
                else:
                    out.pop(c, None)
        return out

    def insert(self, vec: dict):
        """Add a vector; returns the new normalized row, or None if dependent."""
        res = self.reduce(vec)
        if not res:
            return None
        p = min(res)
        inv = ONE / res[p]
        row = {c: x * inv for c, x in res.items()}
        for other in self._rows.values():
            coeff = other.get(p)
            if not coeff:
                continue
            for c, x in row.items():
                acc = other.get(c, ZERO) - coeff * x
                if acc:
                    other[c] = acc
                else:
                    other.pop(c, None)
        self._rows[p] = row
        return dict(row)

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)
