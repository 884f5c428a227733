"""Hereditarily finite sets in canonical form.

An HFSet stores its elements as a tuple sorted in ascending Ackermann-code
order with no duplicates, so structural equality coincides with
extensional equality and the code order is a total order on all values.
Codes are never materialized for comparison (they grow as iterated powers
of two); the order is computed by comparing element lists largest-first.
"""

from functools import cmp_to_key

from .errors import BudgetError, PreconditionError

DEFAULT_MAX_ELEMENTS = 10 ** 6


def _cmp(a, b):
    # Ackermann-code order: code(x) = sum(2**code(e) for e in x), so two
    # codes compare like their exponent sets read from the largest down.
    if a is b:
        return 0
    xs = a._elems
    ys = b._elems
    i = len(xs) - 1
    j = len(ys) - 1
    while i >= 0 and j >= 0:
        c = _cmp(xs[i], ys[j])
        if c:
            return c
        i -= 1
        j -= 1
    if i >= 0:
        return 1
    if j >= 0:
        return -1
    return 0


_SORT_KEY = cmp_to_key(_cmp)


class HFSet:
    """A canonical hereditarily finite set (an element of V_omega)."""

    __slots__ = ("_elems", "_hash")

    def __init__(self, elements=()):
        elems = list(elements)
        for e in elems:
            if not isinstance(e, HFSet):
                raise TypeError(f"HFSet elements must be HFSet, got {type(e).__name__}")
        elems.sort(key=_SORT_KEY)
        dedup = []
        for e in elems:
            if not dedup or _cmp(dedup[-1], e) != 0:
                dedup.append(e)
        self._elems = tuple(dedup)
        self._hash = hash(self._elems)

    @property
    def elements(self):
        return self._elems

    def __len__(self):
        return len(self._elems)

    def __iter__(self):
        return iter(self._elems)

    def __contains__(self, x):
        elems = self._elems
        lo, hi = 0, len(elems)
        while lo < hi:
            mid = (lo + hi) // 2
            c = _cmp(elems[mid], x)
            if c == 0:
                return True
            if c < 0:
                lo = mid + 1
            else:
                hi = mid
        return False

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, HFSet):
            return NotImplemented
        return self._hash == other._hash and self._elems == other._elems

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        return _cmp(self, other) < 0

    def __le__(self, other):
        return _cmp(self, other) <= 0

    def __gt__(self, other):
        return _cmp(self, other) > 0

    def __ge__(self, other):
        return _cmp(self, other) >= 0

    # set algebra on the element level
    def __or__(self, other):
        return HFSet(self._elems + other._elems)

    def __and__(self, other):
        return HFSet(e for e in self._elems if e in other)

    def __sub__(self, other):
        return HFSet(e for e in self._elems if e not in other)

    def issubset(self, other):
        return all(e in other for e in self._elems)

    def is_transitive(self):
        return all(e.issubset(self) for e in self._elems)

    def __str__(self):
        return "{" + ",".join(str(e) for e in self._elems) + "}"

    def __repr__(self):
        return f"HFSet({self})"


_EMPTY = HFSet()


def empty():
    return _EMPTY


def singleton(x):
    return HFSet((x,))


def pair(x, y):
    """Unordered pair {x, y}; collapses to a singleton when x = y."""
    return HFSet((x, y))


def kpair(x, y):
    """Kuratowski ordered pair {{x},{x,y}}."""
    return HFSet((singleton(x), pair(x, y)))


def kpair_split(z):
    """Invert kpair. Returns (x, y) or None when z is not an ordered pair."""
    elems = z._elems
    if len(elems) == 1:
        inner = elems[0]
        if len(inner) == 1:
            x = inner._elems[0]
            return (x, x)
        return None
    if len(elems) != 2:
        return None
    for s, p in ((elems[0], elems[1]), (elems[1], elems[0])):
        if len(s) != 1:
            continue
        x = s._elems[0]
        if len(p) == 2 and x in p:
            other = p._elems[0] if p._elems[1] == x else p._elems[1]
            if other != x:
                return (x, other)
    return None


def triple(x, y, z):
    """Ordered triple <<x,y>,z>."""
    return kpair(kpair(x, y), z)


def triple_split(t):
    outer = kpair_split(t)
    if outer is None:
        return None
    inner = kpair_split(outer[0])
    if inner is None:
        return None
    return (inner[0], inner[1], outer[1])


def union(x):
    """Big union of the elements of x."""
    out = []
    for e in x:
        out.extend(e._elems)
    return HFSet(out)


def inter(x, y):
    return x & y


def diff(x, y):
    return x - y


def power(x, max_elements=None):
    """Power set of x, guarded by the element budget."""
    budget = DEFAULT_MAX_ELEMENTS if max_elements is None else max_elements
    n = len(x)
    if 1 << n > budget:
        raise BudgetError(f"power set would have 2^{n} elements (budget {budget})")
    elems = x._elems
    subsets = []
    for mask in range(1 << n):
        subsets.append(HFSet(elems[i] for i in range(n) if mask >> i & 1))
    return HFSet(subsets)


def tc(x):
    """Transitive closure: the fixpoint of y -> y | union(y) starting at x."""
    cur = x
    while True:
        nxt = cur | union(cur)
        if nxt == cur:
            return cur
        cur = nxt


def vn_nat(n):
    """The von Neumann natural n = {0, 1, ..., n-1}."""
    if n < 0:
        raise PreconditionError("vn_nat needs a nonnegative integer")
    v = _EMPTY
    for _ in range(n):
        v = v | singleton(v)
    return v


def nat_of(x):
    """Invert vn_nat; None when x is not a von Neumann natural."""
    elems = x._elems
    for i, e in enumerate(elems):
        # n = {0,...,n-1} in canonical order, so the i-th element must be
        # exactly the set of its predecessors.
        if e._elems != elems[:i]:
            return None
    return len(elems)


def rank_in(x):
    """Membership rank: rank(x) = sup{rank(y)+1 : y in x}."""
    memo = {}

    def rec(s):
        r = memo.get(s)
        if r is None:
            r = 0
            for e in s._elems:
                r = max(r, rec(e) + 1)
            memo[s] = r
        return r

    return rec(x)


V_STAGE_CAP = 4


def v_stage(n):
    """The von Neumann stage V_n, materialized only for n <= 4."""
    if n < 0:
        raise PreconditionError("v_stage needs a nonnegative integer")
    if n > V_STAGE_CAP:
        raise BudgetError(f"v_stage({n}) exceeds the materialization cap {V_STAGE_CAP}")
    v = _EMPTY
    for _ in range(n):
        v = power(v)
    return v


V_SIZE_CAP = 6


def v_size(n):
    """|V_n| by iterated exponentiation: 0, 1, 2, 4, 16, 65536, 2^65536."""
    if n < 0:
        raise PreconditionError("v_size needs a nonnegative integer")
    if n > V_SIZE_CAP:
        raise BudgetError(f"v_size({n}) is not representable (cap {V_SIZE_CAP})")
    s = 0
    for _ in range(n):
        s = 1 << s
    return s


# the nine basic operations; indices match the conventional numbering
def _g0(x, y):
    return x


def _g1(x, y):
    return x - y


def _g2(x, y):
    return pair(x, y)


def _g3(x, y):
    # membership relation restricted to x cross y
    out = []
    for u in x:
        for v in y:
            if u in v:
                out.append(kpair(u, v))
    return HFSet(out)


def _g4(x, y):
    out = []
    for e in x:
        uv = kpair_split(e)
        if uv is not None:
            out.append(kpair(uv[1], uv[0]))
    return HFSet(out)


def _g5(x, y):
    out = []
    for e in x:
        uv = kpair_split(e)
        if uv is not None:
            out.append(uv[0])
    return HFSet(out)


def _g6(x, y):
    out = []
    for u in x:
        for v in y:
            out.append(kpair(u, v))
    return HFSet(out)


def _g7(x, y):
    return union(x)


def _g8(x, y):
    # cycles every triple <u,v,w> in x to <w,u,v>; non-triples drop out
    out = []
    for e in x:
        uvw = triple_split(e)
        if uvw is not None:
            out.append(triple(uvw[2], uvw[0], uvw[1]))
    return HFSet(out)


_GOEDEL_OPS = (_g0, _g1, _g2, _g3, _g4, _g5, _g6, _g7, _g8)


def goedel_op(i, x, y):
    """Apply basic operation i (0..8) to the pair (x, y)."""
    if not 0 <= i <= 8:
        raise PreconditionError(f"operation index {i} not in 0..8")
    return _GOEDEL_OPS[i](x, y)


def goedel_ext(x):
    """One extension step: all op results over ordered element pairs of x."""
    out = []
    for u in x:
        for v in x:
            for op in _GOEDEL_OPS:
                out.append(op(u, v))
    return HFSet(out)


def goedel_hull(x, n, max_elements=None):
    """n-fold iterate of the extension step, guarded by the element budget."""
    budget = DEFAULT_MAX_ELEMENTS if max_elements is None else max_elements
    cur = x
    for _ in range(n):
        if len(cur) ** 2 * 9 > budget:
            raise BudgetError(f"hull step on {len(cur)} elements exceeds budget {budget}")
        cur = goedel_ext(cur)
        if len(cur) > budget:
            raise BudgetError(f"hull grew past budget {budget}")
    return cur


class GoedelTree:
    """A full binary tree of the given height, every vertex labeled 0..8.

    Vertices are addressed by bit strings of length < height; the empty
    string is the root.  The label domain must be exactly the full tree.
    """

    __slots__ = ("height", "labels")

    def __init__(self, height, labels):
        if height < 0:
            raise PreconditionError("height must be nonnegative")
        labels = dict(labels)
        expected = set()
        for level in range(height):
            for i in range(1 << level):
                expected.add(format(i, f"0{level}b") if level else "")
        if set(labels) != expected:
            raise PreconditionError("labels must cover exactly the vertices of the full tree")
        for v, lab in labels.items():
            if not 0 <= lab <= 8:
                raise PreconditionError(f"label {lab!r} at {v!r} not in 0..8")
        self.height = height
        self.labels = labels

    def subtree(self, bit):
        """The labeled subtree rooted at child `bit` of the root."""
        sub = {v[1:]: lab for v, lab in self.labels.items() if v and v[0] == bit}
        return GoedelTree(self.height - 1, sub)


def goedel_tree_eval(tree, xs):
    """Evaluate the operation composition coded by `tree` on a leaf tuple.

    Leaves are indexed by bit strings of length `tree.height` in
    lexicographic order, so the first half of `xs` feeds the 0-subtree.
    """
    xs = tuple(xs)
    if len(xs) != 1 << tree.height:
        raise PreconditionError(
            f"need {1 << tree.height} leaf values for height {tree.height}, got {len(xs)}"
        )
    if tree.height == 0:
        return xs[0]
    if tree.height == 1:
        return goedel_op(tree.labels[""], xs[0], xs[1])
    half = len(xs) // 2
    left = goedel_tree_eval(tree.subtree("0"), xs[:half])
    right = goedel_tree_eval(tree.subtree("1"), xs[half:])
    return goedel_op(tree.labels[""], left, right)


def cantor_diagonal(f, x):
    """The diagonal set {z in x : z not in f(z)}; never lies in range(f).

    `f` must map exactly the elements of x to subsets of x.
    """
    if set(f) != set(x.elements):
        raise PreconditionError("domain of f must be the elements of x")
    for z, fz in f.items():
        if not fz.issubset(x):
            raise PreconditionError(f"f({z}) = {fz} is not a subset of {x}")
    return HFSet(z for z in x if z not in f[z])


def ackermann_encode(x):
    """The code sum(2**code(e) for e in x); a bijection onto the naturals."""
    memo = {}

    def rec(s):
        n = memo.get(s)
        if n is None:
            n = 0
            for e in s._elems:
                n += 1 << rec(e)
            memo[s] = n
        return n

    return rec(x)


def ackermann_decode(n):
    if n < 0:
        raise PreconditionError("codes are nonnegative")
    memo = {}

    def rec(m):
        s = memo.get(m)
        if s is None:
            elems = []
            rest, k = m, 0
            while rest:
                if rest & 1:
                    elems.append(rec(k))
                rest >>= 1
                k += 1
            s = HFSet(elems)
            memo[m] = s
        return s

    return rec(n)


def parse_set(text):
    """Parse the brace syntax, e.g. '{{},{{}}}'. Whitespace is ignored."""
    from .errors import ParseError

    s = "".join(text.split())
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(s) or s[pos] != "{":
            raise ParseError("expected '{'", column=pos, expected=("{",))
        pos += 1
        elems = []
        if pos < len(s) and s[pos] == "}":
            pos += 1
            return HFSet(elems)
        while True:
            elems.append(parse())
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            if pos < len(s) and s[pos] == "}":
                pos += 1
                return HFSet(elems)
            raise ParseError("expected ',' or '}'", column=pos, expected=(",", "}"))

    result = parse()
    if pos != len(s):
        raise ParseError("trailing input after set literal", column=pos)
    return result
