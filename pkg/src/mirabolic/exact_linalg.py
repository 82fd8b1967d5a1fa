"""Exact dense linear algebra over Q and the Gaussian rationals Q(i).

Everything is computed with unbounded exact arithmetic: no tolerances, no
floating point.  Matrices are immutable; all operations are pure functions,
so values can be shared freely between threads.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .partitions import Partition

__all__ = [
    "Scalar",
    "ExactMatrix",
    "SingularSylvester",
    "SpectrumMismatch",
    "block_diag",
    "rank",
    "kernel_dim",
    "solve_linear",
    "inverse",
    "sylvester_solve",
    "jordan_structure",
]


class SingularSylvester(Exception):
    """The map M -> M*B - C*M is singular and the system has no unique solution."""


class SpectrumMismatch(Exception):
    """The supplied eigenvalues do not exhaust the spectrum of the matrix."""


_ZERO = Fraction(0)
_ONE = Fraction(1)


class Scalar:
    """An element of Q or Q(i): a pair of reduced fractions (re, im).

    Fraction keeps numerators and denominators gcd-reduced with positive
    denominator, which gives canonical representatives for free.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse a rational string like '3', '-1/2'."""
        return cls(Fraction(text.strip()))

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return _coerce(other) - self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        if not self.im and not other.im:
            return Scalar(self.re * other.re)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar(self.re / other.re, self.im / other.re)
        norm = other.re * other.re + other.im * other.im
        return Scalar(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        # hash(Fraction(n)) == hash(n), so real scalars hash like numbers
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "%si" % self.im
        sign = "+" if self.im > 0 else "-"
        return "%s%s%si" % (self.re, sign, abs(self.im))

    def __repr__(self):
        return "Scalar(%s)" % self


def _coerce(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar(value)
    raise TypeError("cannot coerce %r to Scalar" % (value,))


SCALAR_ZERO = Scalar(0)
SCALAR_ONE = Scalar(1)


class ExactMatrix:
    """Immutable dense matrix with Scalar entries, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(_coerce(v) for v in row) for row in data)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != self.cols:
                raise ValueError("ragged rows in matrix data")
        self.data = rows

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(
            [[SCALAR_ONE if i == j else SCALAR_ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[SCALAR_ZERO] * cols for _ in range(rows)])

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row(self, i: int):
        return self.data[i]

    def column(self, j: int):
        return tuple(row[j] for row in self.data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.data for v in row)

    def is_real(self) -> bool:
        return all(v.is_real() for row in self.data for v in row)

    def __add__(self, other):
        self._same_shape(other)
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other):
        self._same_shape(other)
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __neg__(self):
        return ExactMatrix([[-v for v in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError(
                    "shape mismatch: %dx%d * %dx%d"
                    % (self.rows, self.cols, other.rows, other.cols)
                )
            cols = other.cols
            out = []
            for row in self.data:
                new = []
                for j in range(cols):
                    acc = SCALAR_ZERO
                    for k, a in enumerate(row):
                        if a.re or a.im:
                            acc = acc + a * other.data[k][j]
                    new.append(acc)
                out.append(new)
            return ExactMatrix(out)
        c = _coerce(other)
        return ExactMatrix([[c * v for v in row] for row in self.data])

    def __rmul__(self, other):
        c = _coerce(other)
        return ExactMatrix([[c * v for v in row] for row in self.data])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        """Rows r0:r1 and columns c0:c1, half-open."""
        return ExactMatrix([row[c0:c1] for row in self.data[r0:r1]])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.data)
        return "ExactMatrix[%dx%d](%s)" % (self.rows, self.cols, body)

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def block_diag(*blocks: ExactMatrix) -> ExactMatrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = [[SCALAR_ZERO] * m for _ in range(n)]
    r = c = 0
    for b in blocks:
        for i in range(b.rows):
            out[r + i][c : c + b.cols] = list(b.data[i])
        r += b.rows
        c += b.cols
    return ExactMatrix(out)


def _eliminate(rows: list, ncols: int, reduce_up: bool = False) -> list:
    """In-place exact Gaussian elimination.

    Deterministic pivoting: first nonzero entry in column order.  Each pivot
    row is rescaled to a unit pivot, which keeps every entry gcd-reduced.
    Returns the list of pivot columns.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = SCALAR_ONE / rows[r][c]
        rows[r] = [inv * v for v in rows[r]]
        targets = range(nrows) if reduce_up else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            f = rows[i][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _bareiss_rank(rows: list) -> int:
    """Fraction-free rank of an integer matrix (one-step Bareiss)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    r = 0
    prev = 1
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        top = rows[r]
        for i in range(r + 1, nrows):
            cur = rows[i]
            f = cur[c]
            for j in range(c, ncols):
                cur[j] = (piv * cur[j] - f * top[j]) // prev
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def rank(m: ExactMatrix) -> int:
    """Exact row rank over the entry field."""
    if m.is_real():
        # clear denominators row by row and run integer Bareiss elimination
        int_rows = []
        for row in m.data:
            scale = 1
            for v in row:
                d = v.re.denominator
                if d != 1:
                    scale = scale * d // gcd(scale, d)
            int_rows.append([int(v.re * scale) for v in row])
        return _bareiss_rank(int_rows)
    rows = [list(row) for row in m.data]
    return len(_eliminate(rows, m.cols))


def kernel_dim(m: ExactMatrix) -> int:
    return m.cols - rank(m)


def solve_linear(a: ExactMatrix, b) -> Optional[list]:
    """Solve a x = b exactly.

    b may be an n x 1 ExactMatrix or a sequence of scalars.  Returns one
    solution (free variables set to zero) or None when the system is
    inconsistent.
    """
    if isinstance(b, ExactMatrix):
        if b.cols != 1:
            raise ValueError("right-hand side must be a column")
        rhs = [row[0] for row in b.data]
    else:
        rhs = [_coerce(v) for v in b]
    if len(rhs) != a.rows:
        raise ValueError("dimension mismatch: %d rows vs %d entries" % (a.rows, len(rhs)))
    rows = [list(row) + [rhs[i]] for i, row in enumerate(a.data)]
    pivots = _eliminate(rows, a.cols, reduce_up=True)
    for i in range(len(pivots), len(rows)):
        if rows[i][a.cols]:
            return None
    solution = [SCALAR_ZERO] * a.cols
    for r, c in enumerate(pivots):
        solution[c] = rows[r][a.cols]
    return solution


def inverse(m: ExactMatrix) -> ExactMatrix:
    if not m.is_square():
        raise ValueError("only square matrices have inverses")
    n = m.rows
    rows = [list(row) + [SCALAR_ONE if i == j else SCALAR_ZERO for j in range(n)]
            for i, row in enumerate(m.data)]
    pivots = _eliminate(rows, n, reduce_up=True)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return ExactMatrix([row[n:] for row in rows])


def sylvester_solve(b: ExactMatrix, c: ExactMatrix, r: ExactMatrix) -> ExactMatrix:
    """Solve M*B - C*M = R for M exactly.

    B is t x t, C is s x s, R and the unknown M are s x t.  The associated
    linear operator is invertible exactly when B and C share no eigenvalue;
    otherwise SingularSylvester is raised.  The result is re-substituted
    into the equation before being returned.
    """
    if not b.is_square() or not c.is_square():
        raise ValueError("B and C must be square")
    t, s = b.rows, c.rows
    if r.rows != s or r.cols != t:
        raise ValueError("R must be %dx%d" % (s, t))
    nvars = s * t
    rows = []
    for p in range(s):
        for q in range(t):
            coeff = [SCALAR_ZERO] * nvars
            for k in range(t):
                coeff[p * t + k] = coeff[p * t + k] + b.data[k][q]
            for k in range(s):
                coeff[k * t + q] = coeff[k * t + q] - c.data[p][k]
            rows.append(coeff + [r.data[p][q]])
    pivots = _eliminate(rows, nvars, reduce_up=True)
    if len(pivots) != nvars:
        raise SingularSylvester(
            "B and C share an eigenvalue; the Sylvester system is not uniquely solvable"
        )
    flat = [SCALAR_ZERO] * nvars
    for row_idx, col in enumerate(pivots):
        flat[col] = rows[row_idx][nvars]
    m = ExactMatrix([flat[i * t : (i + 1) * t] for i in range(s)])
    if m * b - c * m != r:
        raise AssertionError("sylvester substitution check failed")
    return m


def jordan_structure(m: ExactMatrix, eigenvalues: Sequence) -> dict:
    """Identify the Jordan block sizes of m at each supplied eigenvalue.

    The multiplicity of blocks of size >= k at an eigenvalue v equals
    rank((m - v)^(k-1)) - rank((m - v)^k), so the whole structure is read
    off a rank filtration.  Returns {eigenvalue: Partition of block sizes},
    omitting eigenvalues of multiplicity zero.  Raises
    SpectrumMismatch when the supplied eigenvalues fail to account for the
    full dimension, e.g. when part of the spectrum lies outside Q(i).
    """
    if not m.is_square():
        raise ValueError("jordan_structure needs a square matrix")
    n = m.rows
    seen = set()
    result = {}
    total = 0
    identity = ExactMatrix.identity(n)
    for raw in eigenvalues:
        lam = _coerce(raw)
        if lam in seen:
            continue
        seen.add(lam)
        shifted = m - lam * identity
        ranks = [n]
        power = identity
        while True:
            power = power * shifted
            rk = rank(power)
            ranks.append(rk)
            if rk == ranks[-2]:
                break
        multiplicity = n - ranks[-1]
        if multiplicity == 0:
            continue
        at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
        at_least.append(0)
        parts = []
        for size in range(len(at_least) - 1, 0, -1):
            parts.extend([size] * (at_least[size - 1] - at_least[size]))
        result[lam] = Partition(parts)
        total += multiplicity
    if total != n:
        raise SpectrumMismatch(
            "eigenvalues account for dimension %d of %d" % (total, n)
        )
    return result
