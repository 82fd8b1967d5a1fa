"""Classification of mirabolic coadjoint functionals into normal forms.

classify() implements the depth recursion: read off the restriction of the
functional to the unipotent radical (the last row of the matrix
representative short of its corner).  If it vanishes the functional lives on
the Levi block and the head matrix is identified by its Jordan structure.
Otherwise a Levi conjugation moves the row to (0,...,0,1), the abelian
unipotent action absorbs one column, and the recursion continues one size
down with the depth counter incremented.

Every conjugation step is deterministic, so classify is a pure function of
its input, and the conjugators can be accumulated into an exact certificate.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

from .exact_linalg import (
    ExactMatrix,
    Scalar,
    SpectrumMismatch,
    inverse,
    rank,
)
from .orbit_model import (
    REAL,
    MirabolicOrbitDatum,
    OrbitDatum,
    orbit_from_matrix,
)

__all__ = [
    "MalformedRepresentative",
    "classify",
    "classify_certified",
    "certificate_holds",
    "stabilizer_dim",
    "point_stabilizer_dim",
    "gl_centralizer_dim",
]

_ZERO = Scalar(0)
_ONE = Scalar(1)


class MalformedRepresentative(Exception):
    """The input matrix is not a valid last-column-zero representative."""


def _validate_representative(x: ExactMatrix, field: str) -> None:
    if not x.is_square():
        raise MalformedRepresentative("representative must be square")
    n = x.rows
    if n == 0:
        raise MalformedRepresentative("empty matrix has no mirabolic functional")
    if any(x.data[i][n - 1] for i in range(n)):
        raise MalformedRepresentative("representative must have zero last column")
    if field == REAL and not x.is_real():
        raise MalformedRepresentative("real-field representative has non-real entries")


def _completion(beta: Sequence[Scalar]) -> ExactMatrix:
    """Deterministic invertible matrix whose last row is beta.

    The first nonzero coordinate of beta is the pivot; the remaining rows
    are the standard basis vectors in order.  Conjugating by diag(M, 1)
    with this M moves the unipotent-restriction row vector to (0,...,0,1).
    """
    s = len(beta)
    pivot = next(i for i, v in enumerate(beta) if v)
    rows = []
    for q in range(s):
        if q == pivot:
            continue
        rows.append([_ONE if c == q else _ZERO for c in range(s)])
    rows.append(list(beta))
    return ExactMatrix(rows)


def _embed_levi(m: ExactMatrix, n: int) -> ExactMatrix:
    """diag(m, I) at ambient size n."""
    s = m.rows
    rows = [[_ZERO] * n for _ in range(n)]
    for i in range(s):
        for j in range(s):
            rows[i][j] = m.data[i][j]
    for i in range(s, n):
        rows[i][i] = _ONE
    return ExactMatrix(rows)


def _embed_column_shift(alpha: Sequence[Scalar], col: int, n: int) -> ExactMatrix:
    """Identity plus the vector alpha placed in one column (rows above col)."""
    rows = [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
    for i, v in enumerate(alpha):
        rows[i][col] = v
    return ExactMatrix(rows)


def classify(
    x: ExactMatrix,
    field: str,
    eigenvalues: Sequence[Scalar] = (),
) -> MirabolicOrbitDatum:
    """Normal form (depth, head orbit datum) of a mirabolic functional.

    eigenvalues must exhaust the spectrum of the eventual head block;
    SpectrumMismatch propagates from the Jordan identification when it does
    not (for instance when an eigenvalue is irrational).
    """
    datum, _ = _classify(x, field, eigenvalues, want_certificate=False)
    return datum


def classify_certified(
    x: ExactMatrix,
    field: str,
    eigenvalues: Sequence[Scalar] = (),
) -> Tuple[MirabolicOrbitDatum, ExactMatrix]:
    """classify together with the product of all conjugation steps.

    The second component g is a mirabolic group element; certificate_holds
    re-checks exactly that g x g^-1 is in staircase normal form with the
    recorded depth and head structure.
    """
    datum, cert = _classify(x, field, eigenvalues, want_certificate=True)
    return datum, cert


def _classify(x, field, eigenvalues, want_certificate):
    _validate_representative(x, field)
    n = x.rows
    cert = ExactMatrix.identity(n) if want_certificate else None
    cur = x
    steps = 0
    while True:
        s = cur.rows
        beta = [cur.data[s - 1][c] for c in range(s - 1)]
        if not any(beta):
            head = cur.submatrix(0, s - 1, 0, s - 1)
            a_part = orbit_from_matrix(head, field, eigenvalues) if s > 1 else OrbitDatum(field)
            return MirabolicOrbitDatum(steps + 1, a_part), cert
        m = _completion(beta)
        head = m * cur.submatrix(0, s - 1, 0, s - 1) * inverse(m)
        if want_certificate:
            cert = _embed_levi(m, n) * cert
        # absorb the column the unipotent radical can reach, then recurse
        alpha = [-head.data[i][s - 2] for i in range(s - 1)]
        if want_certificate:
            cert = _embed_column_shift(alpha, s - 1, n) * cert
        zero = _ZERO
        cur = ExactMatrix(
            [list(row[: s - 2]) + [zero] for row in head.data]
        )
        steps += 1


def certificate_holds(
    x: ExactMatrix,
    conjugator: ExactMatrix,
    datum: MirabolicOrbitDatum,
    field: str,
    eigenvalues: Sequence[Scalar] = (),
) -> bool:
    """Exact re-verification of a classification certificate.

    Checks that the conjugator is mirabolic and that g x g^-1 carries the
    staircase shape of the recorded depth: unit subdiagonal entries with
    zeros to their left on the tail rows, a vanishing restriction row at the
    termination level, and a head block with exactly the recorded Jordan
    data.
    """
    n = x.rows
    if conjugator.rows != n or conjugator.cols != n:
        return False
    last = conjugator.data[n - 1]
    if any(last[c] for c in range(n - 1)) or last[n - 1] != _ONE:
        return False
    m = conjugator * x * inverse(conjugator)
    j = datum.depth
    for k in range(j - 1):
        row = m.data[n - 1 - k]
        if any(row[c] for c in range(n - k - 2)):
            return False
        if row[n - k - 2] != _ONE:
            return False
    term = m.data[n - j]
    if any(term[c] for c in range(n - j)):
        return False
    head = m.submatrix(0, n - j, 0, n - j)
    if n - j == 0:
        return not datum.a_part.classes
    try:
        recognized = orbit_from_matrix(head, field, eigenvalues)
    except SpectrumMismatch:
        return False
    return recognized == datum.a_part


def _mirabolic_basis(n: int):
    """Index pairs (i, j) spanning the mirabolic algebra: all rows but the last."""
    return [(i, j) for i in range(n - 1) for j in range(n)]


def _bracket_columns(x: ExactMatrix, coords) -> List[List[Scalar]]:
    """Columns of Y -> [x, Y] over the mirabolic basis, read at the given coords."""
    n = x.rows
    cols = []
    for (i, j) in _mirabolic_basis(n):
        # [x, E_ij] puts column i of x into column j and minus row j of x into row i
        entries = {}
        for r in range(n):
            v = x.data[r][i]
            if v:
                entries[(r, j)] = entries.get((r, j), _ZERO) + v
        for c in range(n):
            v = x.data[j][c]
            if v:
                entries[(i, c)] = entries.get((i, c), _ZERO) - v
        cols.append([entries.get(rc, _ZERO) for rc in coords])
    return cols


def stabilizer_dim(x: ExactMatrix) -> int:
    """Dimension of the mirabolic stabilizer of the functional pr'(x).

    Y in the mirabolic algebra stabilizes pr'(x) exactly when [x, Y] pairs
    trivially with the whole algebra, i.e. when [x, Y] vanishes outside the
    last column.  Counted over the entry field (real dimension over R,
    complex over C).
    """
    n = x.rows
    if n == 0:
        return 0
    coords = [(r, c) for r in range(n) for c in range(n - 1)]
    cols = _bracket_columns(x, coords)
    matrix = ExactMatrix(list(map(list, zip(*cols)))) if cols else ExactMatrix.zeros(0, 0)
    return n * (n - 1) - rank(matrix)


def point_stabilizer_dim(z: ExactMatrix) -> int:
    """Dimension of the mirabolic stabilizer of the full coadjoint point pr(z).

    Here the vanishing is required against the whole matrix algebra, so the
    condition is [z, Y] = 0.
    """
    n = z.rows
    if n == 0:
        return 0
    coords = [(r, c) for r in range(n) for c in range(n)]
    cols = _bracket_columns(z, coords)
    matrix = ExactMatrix(list(map(list, zip(*cols)))) if cols else ExactMatrix.zeros(0, 0)
    return n * (n - 1) - rank(matrix)


def gl_centralizer_dim(orbit: OrbitDatum) -> int:
    """Dimension of the GL centralizer of the orbit representative.

    Per class the commutant of a nilpotent-plus-eigenvalue block family has
    dimension sum over block size pairs of min(k, k') * l * l'; a conjugate
    pair class doubles this (its commutant is a complex-linear space counted
    in real dimensions).
    """
    total = 0
    for cls in orbit.classes:
        runs = cls.partition.runs_ascending()
        acc = 0
        for (k1, l1) in runs:
            for (k2, l2) in runs:
                acc += min(k1, k2) * l1 * l2
        total += (2 if cls.is_pair else 1) * acc
    return total
