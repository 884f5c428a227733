"""Linear-order constructions: cuts and cut extension, the universal
order on finite binary strings, insertion witnesses, back-and-forth
partial isomorphisms, and a gap classifier for described cuts of Q.

Finite orders have no gaps (every cut has a left maximum or a right
minimum), so the gap extension of a FinOrder is the identity; gaps only
appear for the described, infinite cuts handled by `classify_cut`.
"""

import itertools
import math
from dataclasses import dataclass

from . import surreal
from .errors import PreconditionError, WitnessError
from .numtower import Frac


class FinOrder:
    """A finite strict linear order; the carrier tuple is ascending."""

    __slots__ = ("carrier",)

    def __init__(self, carrier=()):
        carrier = tuple(carrier)
        if len(set(carrier)) != len(carrier):
            raise PreconditionError("carrier labels must be distinct")
        self.carrier = carrier

    def __len__(self):
        return len(self.carrier)

    def index(self, label):
        return self.carrier.index(label)

    def __repr__(self):
        return f"FinOrder({self.carrier!r})"


def cuts(order):
    """All |carrier|+1 cuts (left, right), in left-set-inclusion order."""
    c = order.carrier
    return [(frozenset(c[:i]), frozenset(c[i:])) for i in range(len(c) + 1)]


def cut_extend(order):
    """Interleave the order with its cuts: n elements become 2n + 1.

    New elements are labeled by their cut pair (left tuple, right tuple),
    which keeps them distinct from the old labels and from cuts of
    earlier iterations.
    """
    c = order.carrier
    out = []
    for i in range(len(c)):
        out.append((c[:i], c[i:]))
        out.append(c[i])
    out.append((c, ()))
    return FinOrder(out)


def simplest_dyadic_labels(iterations):
    """Iterate cut_extend from the empty order, labeling by simplicity.

    Every new element is a cut (left, right) of already-labeled elements
    and receives the simplest dyadic strictly between their labels.
    Returns (order, labels); reading the carrier through `labels` gives
    the stage listing of the surreal construction.
    """
    order = FinOrder()
    labels = {}
    for _ in range(iterations):
        order = cut_extend(order)
        for el in order.carrier:
            if el not in labels:
                left, right = el
                labels[el] = surreal.simplest(
                    [labels[x] for x in left], [labels[y] for y in right]
                )
    return order, labels


def u_cmp(f, g):
    """Three-way comparison in the universal order on binary strings.

    f < g when f extends g with a 0 at position |g|, or g extends f with
    a 1 at position |f|, or the first disagreement has f at 0 and g at 1.
    """
    for cf, cg in zip(f, g):
        if cf != cg:
            return -1 if cf == "0" else 1
    if len(f) > len(g):
        return -1 if f[len(g)] == "0" else 1
    if len(g) > len(f):
        return 1 if g[len(f)] == "0" else -1
    return 0


def insert_between(a, b):
    """The shortest string strictly between the sets a and b.

    Minimality makes the witness unique, so no tie-breaking is needed.
    """
    a = list(a)
    b = list(b)
    for f, g in itertools.product(a, b):
        if u_cmp(f, g) >= 0:
            raise PreconditionError(f"need a < b elementwise, got {f!r} >= {g!r}")
    z = ""
    while True:
        if any(u_cmp(f, z) >= 0 for f in a):
            z += "1"
        elif any(u_cmp(z, g) >= 0 for g in b):
            z += "0"
        else:
            return z


def binary_strings():
    """All binary strings in (length, lexicographic) order."""
    for n in itertools.count():
        for i in range(1 << n):
            yield format(i, f"0{n}b") if n else ""


@dataclass(frozen=True)
class OrderSide:
    """One side of a back-and-forth construction.

    `enum` yields the carrier in the matching order; `cmp` is a strict
    three-way comparator; `between(lo, hi)` must produce an element
    strictly between the finite sets lo and hi (either may be empty).
    """

    name: str
    enum: object
    cmp: object
    between: object

    def items(self):
        return self.enum()


def binstring_side(name="U"):
    return OrderSide(name, binary_strings, u_cmp, insert_between)


def dyadic_side(name="No", lo=None, hi=None):
    """Dyadics in (birthday, value) order, optionally clipped to (lo, hi)."""

    def enum():
        for d in surreal.enumerate_dyadics():
            if lo is not None and not lo < d:
                continue
            if hi is not None and not d < hi:
                continue
            yield d

    def cmp(a, b):
        return (b < a) - (a < b)

    def between(left, right):
        left = set(left) | ({lo} if lo is not None else set())
        right = set(right) | ({hi} if hi is not None else set())
        return surreal.simplest(left, right)

    return OrderSide(name, enum, cmp, between)


def _place(side, matched, value):
    """Partner for `value` among matched (own, other) pairs."""
    lo = [other for own, other in matched if side.cmp(own, value) < 0]
    hi = [other for own, other in matched if side.cmp(own, value) > 0]
    return lo, hi


def back_and_forth(side_a, side_b, rounds):
    """Cantor's zigzag between two dense endless orders.

    Even rounds pull the next enumerated element of side A, odd rounds of
    side B, so after n rounds the map covers the first ceil(n/2) elements
    of A's enumeration and floor(n/2) of B's, and is strictly
    order-preserving in both directions.
    """
    matched = []  # (a element, b element)
    gen_a = side_a.items()
    gen_b = side_b.items()
    for r in range(rounds):
        if r % 2 == 0:
            src, dst, gen = side_a, side_b, gen_a
            pairs = [(a, b) for a, b in matched]
        else:
            src, dst, gen = side_b, side_a, gen_b
            pairs = [(b, a) for a, b in matched]
        target = next(gen)
        if any(own == target for own, _ in pairs):
            continue
        lo, hi = _place(src, pairs, target)
        try:
            partner = dst.between(lo, hi)
        except Exception as exc:  # surface which side stalled and on what
            raise WitnessError(dst.name, lo, hi, str(exc)) from exc
        bad = [x for x in lo if dst.cmp(x, partner) >= 0] + [x for x in hi if dst.cmp(partner, x) >= 0]
        if bad:
            raise WitnessError(dst.name, lo, hi, f"witness {partner!r} not strictly between")
        if r % 2 == 0:
            matched.append((target, partner))
        else:
            matched.append((partner, target))
    return dict(matched)


@dataclass(frozen=True)
class AtRationalLeftClosed:
    """The cut ({x <= q}, {x > q}) of Q."""

    q: Frac


@dataclass(frozen=True)
class AtRationalRightClosed:
    """The cut ({x < q}, {x >= q}) of Q."""

    q: Frac


@dataclass(frozen=True)
class SqrtThreshold:
    """The cut ({q <= 0 or q*q < n}, rest) of Q, for a positive integer n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("SqrtThreshold needs n >= 1")


@dataclass(frozen=True)
class GapCut:
    pass


@dataclass(frozen=True)
class LeftHasMax:
    q: Frac


@dataclass(frozen=True)
class RightHasMin:
    q: Frac


def classify_cut(spec):
    """Decide whether a described cut of Q is a gap or has an endpoint.

    SqrtThreshold(n) is a gap exactly when n is not a perfect square: a
    rational root of q*q = n would have to be an integer.
    """
    if isinstance(spec, AtRationalLeftClosed):
        return LeftHasMax(spec.q)
    if isinstance(spec, AtRationalRightClosed):
        return RightHasMin(spec.q)
    if isinstance(spec, SqrtThreshold):
        r = math.isqrt(spec.n)
        if r * r == spec.n:
            return RightHasMin(Frac(r))
        return GapCut()
    raise PreconditionError(f"unknown cut description {spec!r}")
