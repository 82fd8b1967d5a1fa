"""Symbolic unitary representation labels and the restriction calculus.

Labels are formal products of the building blocks of the unitary dual of
GL_n over R and C: twisted characters, Speh blocks delta(t, m), Stein
blocks sigma(t, s) and Speh complementary blocks Delta(t, m, s).  A
mirabolic label is a pair (depth, GL label), standing for the
induce-extend tower I^(depth-1) E(label).

Restriction to the mirabolic subgroup acts factorwise: a character drops
one from its size at depth cost 1, Speh and Stein blocks at cost 2, Speh
complementary blocks at cost 4, and costs add over products.  The orbit
dictionaries attach labels through dual partitions: a class with partition
P contributes one factor per part of the dual of P.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, List, Optional, Tuple

from .moment import dense_selection, symbolic_image
from .orbit_model import COMPLEX, REAL, MirabolicOrbitDatum, OrbitDatum

__all__ = [
    "CHARACTER",
    "SPEH",
    "STEIN",
    "SPEH_CS",
    "UnsupportedOrbitShape",
    "Factor",
    "RepLabel",
    "MirabolicRepLabel",
    "character",
    "speh",
    "stein",
    "speh_complementary",
    "attach_gl_rep",
    "adduce",
    "restrict_to_mirabolic",
    "attach_mirabolic_rep",
    "all_sign_choices",
    "verify_restriction",
    "RestrictionReport",
]

CHARACTER = "char"
SPEH = "speh"
STEIN = "stein"
SPEH_CS = "spehcs"

# every factor knows how much ambient size it spans per unit t and how much
# depth its restriction consumes
_SPAN = {CHARACTER: 1, SPEH: 2, STEIN: 2, SPEH_CS: 4}
_DEPTH_COST = {CHARACTER: 1, SPEH: 2, STEIN: 2, SPEH_CS: 4}
_KIND_ORDER = {CHARACTER: 0, SPEH: 1, STEIN: 2, SPEH_CS: 3}


class UnsupportedOrbitShape(Exception):
    """No attachment formula covers this orbit shape."""


class Factor:
    """One building block of a unitary label."""

    __slots__ = ("kind", "t", "twist", "w", "m", "s")

    def __init__(self, kind, t, twist=0, w=0, m=None, s=None):
        if kind not in _SPAN:
            raise ValueError("unknown factor kind %r" % (kind,))
        t = int(t)
        if t < 1:
            raise ValueError("factor size must be >= 1")
        self.kind = kind
        self.t = t
        self.twist = Fraction(twist)
        self.w = int(w)
        if self.w not in (0, 1):
            raise ValueError("sign exponent must be 0 or 1")
        if kind in (SPEH, SPEH_CS):
            if m is None or int(m) < 1:
                raise ValueError("Speh parameter m must be a positive integer")
            self.m = int(m)
        else:
            if m is not None:
                raise ValueError("m only applies to Speh factors")
            self.m = None
        if kind in (STEIN, SPEH_CS):
            s = Fraction(s)
            if not 0 < s < Fraction(1, 2):
                raise ValueError("Stein parameter must lie strictly in (0, 1/2)")
            self.s = s
        else:
            if s is not None:
                raise ValueError("s only applies to Stein-type factors")
            self.s = None

    @property
    def span(self) -> int:
        """Ambient GL size this factor occupies."""
        return _SPAN[self.kind] * self.t

    @property
    def depth_cost(self) -> int:
        return _DEPTH_COST[self.kind]

    def shrink(self) -> Optional["Factor"]:
        """The factor left after one restriction step, or None when it vanishes."""
        if self.t == 1:
            return None
        return Factor(self.kind, self.t - 1, self.twist, self.w, self.m, self.s)

    def sort_key(self):
        return (
            -self.twist,
            _KIND_ORDER[self.kind],
            -self.t,
            -(self.m or 0),
            -(self.s or 0),
            self.w,
        )

    def to_json(self) -> dict:
        obj = {"kind": self.kind, "t": self.t, "twist": str(self.twist)}
        if self.kind == CHARACTER:
            obj["w"] = self.w
        if self.m is not None:
            obj["m"] = self.m
        if self.s is not None:
            obj["s"] = str(self.s)
        return obj

    def _id(self):
        return (self.kind, self.t, self.twist, self.w, self.m, self.s)

    def __eq__(self, other):
        if isinstance(other, Factor):
            return self._id() == other._id()
        return NotImplemented

    def __hash__(self):
        return hash(self._id())

    def __repr__(self):
        extra = ""
        if self.m is not None:
            extra += ", m=%d" % self.m
        if self.s is not None:
            extra += ", s=%s" % self.s
        if self.kind == CHARACTER and self.w:
            extra += ", w=1"
        return "%s(t=%d, twist=%s%s)" % (self.kind, self.t, self.twist, extra)


def character(t, twist=0, w=0) -> Factor:
    return Factor(CHARACTER, t, twist, w)


def speh(t, m, twist=0) -> Factor:
    return Factor(SPEH, t, twist, m=m)


def stein(t, s, twist=0) -> Factor:
    return Factor(STEIN, t, twist, s=s)


def speh_complementary(t, m, s, twist=0) -> Factor:
    return Factor(SPEH_CS, t, twist, m=m, s=s)


class RepLabel:
    """A product of factors, compared as a multiset."""

    __slots__ = ("field", "factors")

    def __init__(self, field: str, factors: Iterable[Factor] = ()):
        if field not in (REAL, COMPLEX):
            raise ValueError("field must be R or C")
        factors = tuple(sorted(factors, key=Factor.sort_key))
        for f in factors:
            if field == COMPLEX and f.kind in (SPEH, SPEH_CS):
                raise ValueError("Speh factors only exist over the real field")
            if field == COMPLEX and f.w:
                raise ValueError("sign twists only exist over the real field")
        self.field = field
        self.factors = factors

    @property
    def size(self) -> int:
        return sum(f.span for f in self.factors)

    def __mul__(self, other):
        if not isinstance(other, RepLabel):
            return NotImplemented
        if self.field != other.field:
            raise ValueError("cannot multiply labels over different fields")
        return RepLabel(self.field, self.factors + other.factors)

    def to_json(self) -> list:
        return [f.to_json() for f in self.factors]

    def __eq__(self, other):
        # factors are canonically sorted at construction, so tuple equality
        # is multiset equality
        if isinstance(other, RepLabel):
            return self.field == other.field and self.factors == other.factors
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.factors))

    def __repr__(self):
        if not self.factors:
            return "RepLabel(%s, 1)" % self.field
        return "RepLabel(%s, %s)" % (self.field, " x ".join(repr(f) for f in self.factors))


class MirabolicRepLabel:
    """A mirabolic unitary label: I^(depth-1) E(adduced)."""

    __slots__ = ("depth", "adduced")

    def __init__(self, depth: int, adduced: RepLabel):
        depth = int(depth)
        if depth < 1:
            raise ValueError("depth must be >= 1")
        self.depth = depth
        self.adduced = adduced

    def to_json(self) -> dict:
        return {"depth": self.depth, "factors": self.adduced.to_json()}

    def __eq__(self, other):
        if isinstance(other, MirabolicRepLabel):
            return self.depth == other.depth and self.adduced == other.adduced
        return NotImplemented

    def __hash__(self):
        return hash((self.depth, self.adduced))

    def __repr__(self):
        return "I^%dE(%r)" % (self.depth - 1, self.adduced)


def _check_signs(orbit: OrbitDatum, signs) -> List[Tuple[int, ...]]:
    real_classes = orbit.real_classes()
    if orbit.field == COMPLEX or not real_classes:
        if signs:
            raise ValueError("sign assignment given but no real classes need one")
        return []
    if signs is None:
        raise ValueError(
            "real-field orbit with real classes needs a sign assignment "
            "(one 0/1 tuple per real class, one entry per dual-partition part)"
        )
    signs = [tuple(int(w) for w in ws) for ws in signs]
    if len(signs) != len(real_classes):
        raise ValueError(
            "expected %d sign tuples, got %d" % (len(real_classes), len(signs))
        )
    for cls, ws in zip(real_classes, signs):
        expected = len(cls.partition.dual())
        if len(ws) != expected:
            raise ValueError(
                "class at eigenvalue %s needs %d signs, got %d"
                % (cls.re, expected, len(ws))
            )
        if any(w not in (0, 1) for w in ws):
            raise ValueError("signs must be 0 or 1")
    return signs


def attach_gl_rep(orbit: OrbitDatum, signs=None) -> RepLabel:
    """The unitary label attached to a GL coadjoint orbit.

    Complex field: a class (a, P) contributes a twisted character of size p
    for every part p of the dual partition of P.  Real field: a real class
    does the same with the supplied sign exponents, and a conjugate-pair
    class (a, b, P) contributes Speh factors delta(p, 2b) provided 2b is a
    positive integer; any other pair parameter has no attachment formula
    and raises UnsupportedOrbitShape.
    """
    signs = _check_signs(orbit, signs)
    factors = []
    real_idx = 0
    for cls in orbit.classes:
        dual_parts = list(cls.partition.dual())
        if cls.is_pair:
            m2 = 2 * cls.im
            if m2.denominator != 1 or m2 <= 0:
                raise UnsupportedOrbitShape(
                    "pair class at %s+-%si: imaginary part must be a positive "
                    "half-integer" % (cls.re, cls.im)
                )
            for p in dual_parts:
                factors.append(speh(p, int(m2), twist=cls.re))
        elif orbit.field == REAL:
            ws = signs[real_idx]
            real_idx += 1
            for p, w in zip(dual_parts, ws):
                factors.append(character(p, twist=cls.re, w=w))
        else:
            for p in dual_parts:
                factors.append(character(p, twist=cls.re))
    return RepLabel(orbit.field, factors)


def adduce(label: RepLabel) -> Tuple[int, RepLabel]:
    """Total restriction depth and the product of the shrunken factors.

    Factorwise: every factor contributes its depth cost, its size drops by
    one, and size-zero leftovers disappear.  Costs add over products.
    """
    depth = 0
    shrunk = []
    for f in label.factors:
        depth += f.depth_cost
        left = f.shrink()
        if left is not None:
            shrunk.append(left)
    return depth, RepLabel(label.field, shrunk)


def restrict_to_mirabolic(label: RepLabel) -> MirabolicRepLabel:
    """The mirabolic label of the restriction of a GL label."""
    if not label.factors:
        raise ValueError("cannot restrict the empty label")
    depth, shrunk = adduce(label)
    return MirabolicRepLabel(depth, shrunk)


def attach_mirabolic_rep(datum: MirabolicOrbitDatum, signs=None) -> MirabolicRepLabel:
    """The mirabolic label attached to a mirabolic orbit normal form."""
    return MirabolicRepLabel(datum.depth, attach_gl_rep(datum.a_part, signs))


def _trimmed_signs(orbit: OrbitDatum, signs, a_part: OrbitDatum):
    """Signs for the head orbit induced by the per-part size decrement.

    Dual parts of size one disappear under restriction; their signs are
    dropped, the rest ride along unchanged.  Classes are matched by their
    eigenvalue.
    """
    if orbit.field == COMPLEX:
        return None
    signs = _check_signs(orbit, signs)
    by_eigenvalue = {}
    for cls, ws in zip(orbit.real_classes(), signs):
        dual_parts = list(cls.partition.dual())
        by_eigenvalue[cls.re] = tuple(
            w for w, p in zip(ws, dual_parts) if p >= 2
        )
    out = []
    for cls in a_part.real_classes():
        if cls.re not in by_eigenvalue:
            raise ValueError("head class at %s has no sign source" % cls.re)
        out.append(by_eigenvalue[cls.re])
    return out


def all_sign_choices(orbit: OrbitDatum):
    """Every admissible sign assignment for the orbit's real classes."""
    real_classes = orbit.real_classes()
    if orbit.field == COMPLEX or not real_classes:
        yield None
        return
    lengths = [len(cls.partition.dual()) for cls in real_classes]
    pools = [list(product((0, 1), repeat=ln)) for ln in lengths]
    for combo in product(*pools):
        yield list(combo)


class RestrictionReport:
    """Outcome of comparing a restriction with the dense-orbit attachment."""

    def __init__(self, orbit, signs, ok, restricted, attached, omega):
        self.orbit = orbit
        self.signs = signs
        self.ok = ok
        self.restricted = restricted
        self.attached = attached
        self.omega = omega

    def to_json(self) -> dict:
        return {
            "orbit": self.orbit.to_json(),
            "signs": [list(ws) for ws in self.signs] if self.signs else None,
            "restricted": self.restricted.to_json(),
            "omega": self.omega.to_json(),
            "attached": self.attached.to_json(),
            "ok": self.ok,
        }


def verify_restriction(orbit: OrbitDatum, signs=None) -> RestrictionReport:
    """Check that restriction lands on the dense image orbit's attachment.

    Computes the label attached to the orbit, restricts it to the mirabolic
    subgroup, computes the dense moment-map image, attaches a mirabolic
    label to that image (with the induced signs), and compares.
    """
    label = attach_gl_rep(orbit, signs)
    restricted = restrict_to_mirabolic(label)
    omega = symbolic_image(orbit, dense_selection(orbit))
    attached = attach_mirabolic_rep(omega, _trimmed_signs(orbit, signs, omega.a_part))
    return RestrictionReport(
        orbit, signs, restricted == attached, restricted, attached, omega
    )
