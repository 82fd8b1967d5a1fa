"""Data model for GL_n and mirabolic coadjoint orbits.

An OrbitDatum records a GL_n(k) coadjoint orbit (k = R or C) by its
eigenvalue classes, each carrying a partition of Jordan block sizes.  Over R
an eigenvalue class is either real or a conjugate pair a +- ib (b > 0); over
C the model only admits real rational eigenvalues, which is all the
representation dictionary ever produces.

A MirabolicOrbitDatum is a mirabolic normal form: a depth j >= 1 together
with the GL_(n-j) orbit datum of the block that precedes the regular
nilpotent tail.

Functionals on the mirabolic Lie algebra are always carried as matrices with
last column zero (the complement of the pairing kernel), so structural
equality of matrices is equality of functionals.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence

from .exact_linalg import (
    ExactMatrix,
    Scalar,
    SpectrumMismatch,
    block_diag,
    jordan_structure,
)
from .partitions import Partition

__all__ = [
    "REAL",
    "COMPLEX",
    "OrbitSpecError",
    "EigenvalueClass",
    "OrbitDatum",
    "MirabolicOrbitDatum",
    "jordan_block",
    "pair_block",
    "realize_orbit",
    "realize_normal_form",
    "project_to_p_star",
    "jordan_decompose",
    "orbit_from_matrix",
    "orbit_from_json",
]

REAL = "R"
COMPLEX = "C"


class OrbitSpecError(ValueError):
    """Invalid orbit specification (bad field, duplicate classes, bad JSON)."""


def _as_fraction(value, where: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise OrbitSpecError("%s: not a rational number: %r" % (where, value)) from exc


class EigenvalueClass:
    """One eigenvalue class of an orbit: eigenvalue data plus a partition.

    im is None for a real eigenvalue; a positive rational im means the
    conjugate pair re +- i*im (real field only).
    """

    __slots__ = ("re", "im", "partition")

    def __init__(self, re, partition: Partition, im=None):
        self.re = Fraction(re)
        if im is not None:
            im = Fraction(im)
            if im == 0:
                im = None
            elif im < 0:
                raise OrbitSpecError("pair class requires im > 0, got %s" % im)
        self.im = im
        if not isinstance(partition, Partition):
            partition = Partition(partition)
        if not partition:
            raise OrbitSpecError("eigenvalue class needs a nonempty partition")
        self.partition = partition

    @property
    def is_pair(self) -> bool:
        return self.im is not None

    @property
    def contribution(self) -> int:
        """Ambient size used up by this class."""
        mult = 2 if self.is_pair else 1
        return mult * self.partition.weight

    def key(self) -> tuple:
        return (self.re, self.im)

    def sort_key(self) -> tuple:
        # real classes first (re descending), then pairs by (re, im) descending
        return (1 if self.is_pair else 0, -self.re, -(self.im or 0))

    def eigenvalues(self) -> List[Scalar]:
        if self.is_pair:
            return [Scalar(self.re, self.im), Scalar(self.re, -self.im)]
        return [Scalar(self.re)]

    def to_json(self) -> dict:
        obj = {"re": str(self.re)}
        if self.is_pair:
            obj["im"] = str(self.im)
        obj["partition"] = self.partition.to_json()
        return obj

    def __eq__(self, other):
        if isinstance(other, EigenvalueClass):
            return self.key() == other.key() and self.partition == other.partition
        return NotImplemented

    def __hash__(self):
        return hash((self.key(), self.partition))

    def __repr__(self):
        ev = str(self.re) if not self.is_pair else "%s+-%si" % (self.re, self.im)
        return "EigenvalueClass(%s, %r)" % (ev, list(self.partition))


class OrbitDatum:
    """A GL_n(k) coadjoint orbit: field tag plus canonically sorted classes."""

    __slots__ = ("field", "classes")

    def __init__(self, field: str, classes: Iterable[EigenvalueClass] = ()):
        if field not in (REAL, COMPLEX):
            raise OrbitSpecError("field must be %r or %r" % (REAL, COMPLEX))
        self.field = field
        ordered = tuple(sorted(classes, key=EigenvalueClass.sort_key))
        keys = [c.key() for c in ordered]
        if len(set(keys)) != len(keys):
            raise OrbitSpecError("duplicate eigenvalue classes: %r" % (keys,))
        if field == COMPLEX and any(c.is_pair for c in ordered):
            raise OrbitSpecError("pair classes are only allowed over the real field")
        self.classes = ordered

    @property
    def size(self) -> int:
        return sum(c.contribution for c in self.classes)

    def spectrum(self) -> List[Scalar]:
        """All eigenvalues, conjugate pairs both included."""
        out = []
        for c in self.classes:
            out.extend(c.eigenvalues())
        return out

    def real_classes(self) -> List[EigenvalueClass]:
        return [c for c in self.classes if not c.is_pair]

    def pair_classes(self) -> List[EigenvalueClass]:
        return [c for c in self.classes if c.is_pair]

    def to_json(self) -> dict:
        return {"field": self.field, "classes": [c.to_json() for c in self.classes]}

    def __eq__(self, other):
        if isinstance(other, OrbitDatum):
            return self.field == other.field and self.classes == other.classes
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.classes))

    def __repr__(self):
        return "OrbitDatum(%s, %r)" % (self.field, list(self.classes))


class MirabolicOrbitDatum:
    """Mirabolic orbit normal form: depth plus the orbit datum of the head block."""

    __slots__ = ("depth", "a_part")

    def __init__(self, depth: int, a_part: OrbitDatum):
        depth = int(depth)
        if depth < 1:
            raise OrbitSpecError("depth must be >= 1")
        self.depth = depth
        self.a_part = a_part

    @property
    def size(self) -> int:
        return self.depth + self.a_part.size

    def to_json(self) -> dict:
        return {"depth": self.depth, "a_part": [c.to_json() for c in self.a_part.classes]}

    def __eq__(self, other):
        if isinstance(other, MirabolicOrbitDatum):
            return self.depth == other.depth and self.a_part == other.a_part
        return NotImplemented

    def __hash__(self):
        return hash((self.depth, self.a_part))

    def __repr__(self):
        return "MirabolicOrbitDatum(depth=%d, a_part=%r)" % (self.depth, self.a_part)


def jordan_block(size: int, eigenvalue=0) -> ExactMatrix:
    """Jordan block with the eigenvalue on the diagonal and 1 below it."""
    lam = eigenvalue if isinstance(eigenvalue, Scalar) else Scalar(eigenvalue)
    rows = [[Scalar(0)] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = lam
        if i:
            rows[i][i - 1] = Scalar(1)
    return ExactMatrix(rows)


def pair_block(size: int, re, im) -> ExactMatrix:
    """The 2k x 2k real block [[J_k(a), b*I], [-b*I, J_k(a)]]."""
    a = Scalar(re)
    b = Scalar(im)
    j = jordan_block(size, a)
    rows = [[Scalar(0)] * (2 * size) for _ in range(2 * size)]
    for i in range(size):
        for k in range(size):
            rows[i][k] = j.data[i][k]
            rows[size + i][size + k] = j.data[i][k]
        rows[i][size + i] = b
        rows[size + i][i] = -b
    return ExactMatrix(rows)


def _class_blocks(cls: EigenvalueClass) -> List[ExactMatrix]:
    """Blocks of one class in ascending size order, one per Jordan block."""
    blocks = []
    for k, l in cls.partition.runs_ascending():
        for _ in range(l):
            if cls.is_pair:
                blocks.append(pair_block(k, cls.re, cls.im))
            else:
                blocks.append(jordan_block(k, Scalar(cls.re)))
    return blocks


def realize_orbit(orbit: OrbitDatum) -> ExactMatrix:
    """Block-diagonal matrix representative of the orbit.

    Classes follow the canonical class order; inside a class the blocks are
    laid out with sizes ascending, which the selection position formulas
    rely on.
    """
    blocks = []
    for cls in orbit.classes:
        blocks.extend(_class_blocks(cls))
    if not blocks:
        return ExactMatrix.zeros(0, 0)
    return block_diag(*blocks)


def realize_normal_form(datum: MirabolicOrbitDatum) -> ExactMatrix:
    """Canonical matrix representative of a mirabolic normal form."""
    head = realize_orbit(datum.a_part)
    tail = jordan_block(datum.depth, 0)
    return project_to_p_star(block_diag(head, tail))


def project_to_p_star(x: ExactMatrix) -> ExactMatrix:
    """Canonical representative of the functional x induces on the mirabolic algebra.

    The pairing kernel is exactly the last column, so zeroing it picks the
    unique representative with last column zero.  Idempotent and linear.
    """
    if not x.is_square():
        raise ValueError("expected a square matrix")
    n = x.rows
    if n == 0:
        return x
    zero = Scalar(0)
    return ExactMatrix(
        [list(row[: n - 1]) + [zero] for row in x.data]
    )


def jordan_decompose(orbit: OrbitDatum):
    """Split the orbit datum into hyperbolic, elliptic and nilpotent content.

    Returns (hyperbolic, elliptic, nilpotent): real parts with total
    multiplicities, imaginary parts with multiplicities (conjugates listed
    separately), and the per-class partitions.
    """
    hyper: Dict[Fraction, int] = {}
    elliptic: Dict[Fraction, int] = {}
    nilpotent = {}
    for cls in orbit.classes:
        hyper[cls.re] = hyper.get(cls.re, 0) + cls.contribution
        if cls.is_pair:
            w = cls.partition.weight
            elliptic[cls.im] = elliptic.get(cls.im, 0) + w
            elliptic[-cls.im] = elliptic.get(-cls.im, 0) + w
        nilpotent[cls] = cls.partition
    hyper_list = sorted(hyper.items(), key=lambda t: -t[0])
    elliptic_list = sorted(elliptic.items(), key=lambda t: -t[0])
    return hyper_list, elliptic_list, nilpotent


def orbit_from_matrix(a: ExactMatrix, field: str, eigenvalues: Sequence[Scalar]) -> OrbitDatum:
    """Recognize the orbit datum of a concrete matrix from its Jordan structure.

    Over the real field, non-real eigenvalues must occur in conjugate pairs
    with equal partitions; the pairs are folded back into pair classes.
    """
    structure = jordan_structure(a, eigenvalues)
    classes = []
    handled = set()
    for lam, partition in structure.items():
        if lam in handled:
            continue
        if lam.is_real():
            classes.append(EigenvalueClass(lam.re, partition))
            handled.add(lam)
            continue
        if field != REAL:
            raise SpectrumMismatch(
                "non-real eigenvalue %s in a complex-field orbit datum" % lam
            )
        conj = lam.conjugate()
        partner = structure.get(conj)
        if partner is None or partner != partition:
            raise SpectrumMismatch(
                "conjugate eigenvalues %s, %s carry different Jordan structure" % (lam, conj)
            )
        classes.append(
            EigenvalueClass(lam.re, partition, im=abs(lam.im))
        )
        handled.add(lam)
        handled.add(conj)
    return OrbitDatum(field, classes)


def _parse_partition(raw, where: str) -> Partition:
    if not isinstance(raw, (list, tuple)):
        raise OrbitSpecError("%s: partition must be a list of integers" % where)
    try:
        return Partition(raw)
    except (TypeError, ValueError) as exc:
        raise OrbitSpecError("%s: %s" % (where, exc)) from exc


def orbit_from_json(obj) -> OrbitDatum:
    """Parse the JSON orbit spec {"field": "C"|"R", "classes": [...]}."""
    if not isinstance(obj, dict):
        raise OrbitSpecError("orbit spec must be a JSON object")
    field = obj.get("field")
    if field not in (REAL, COMPLEX):
        raise OrbitSpecError('field: expected "R" or "C", got %r' % (field,))
    raw_classes = obj.get("classes")
    if not isinstance(raw_classes, list):
        raise OrbitSpecError("classes: expected a list")
    classes = []
    for idx, raw in enumerate(raw_classes):
        where = "classes[%d]" % idx
        if not isinstance(raw, dict):
            raise OrbitSpecError("%s: expected an object" % where)
        re = _as_fraction(raw.get("re", "0"), where + ".re")
        im_raw = raw.get("im")
        im = None
        if im_raw is not None:
            im = _as_fraction(im_raw, where + ".im")
            if im == 0:
                im = None
        if im is not None and field != REAL:
            raise OrbitSpecError("%s: pair classes require the real field" % where)
        partition = _parse_partition(raw.get("partition"), where + ".partition")
        try:
            classes.append(EigenvalueClass(re, partition, im=im))
        except OrbitSpecError as exc:
            raise OrbitSpecError("%s: %s" % (where, exc)) from exc
    return OrbitDatum(field, classes)
