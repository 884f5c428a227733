"""Algorithms on finite relations: well-foundedness, rank, recursion,
the Mostowski-Shepherdson collapse, and the constructive
Cantor-Bernstein bijection.

A FinDigraph edge (x, y) reads "x is a strict predecessor of y"; the
predecessor set of x always excludes x itself, so a lone self-loop is
vacuous and such a graph still counts as well-founded.
"""

import json

from . import hfset
from .errors import NotWellFoundedError, NotWellOrderError, PreconditionError


class FinDigraph:
    """A finite directed graph over opaque hashable node ids."""

    __slots__ = ("nodes", "edges", "_preds")

    def __init__(self, nodes, edges=()):
        nodes = frozenset(nodes)
        edges = frozenset((x, y) for x, y in edges)
        for x, y in edges:
            if x not in nodes or y not in nodes:
                raise PreconditionError(f"edge ({x!r}, {y!r}) leaves the node set")
        self.nodes = nodes
        self.edges = edges
        preds = {v: set() for v in nodes}
        for x, y in edges:
            if x != y:
                preds[y].add(x)
        self._preds = {v: frozenset(s) for v, s in preds.items()}

    def preds(self, x):
        """Strict predecessors of x (never contains x)."""
        return self._preds[x]

    def __repr__(self):
        return f"FinDigraph({len(self.nodes)} nodes, {len(self.edges)} edges)"


def digraph_from_edge_text(text):
    """Parse 'a b' edge lines; a single token on a line is an isolated node."""
    nodes = set()
    edges = set()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            nodes.add(parts[0])
        elif len(parts) == 2:
            nodes.update(parts)
            edges.add((parts[0], parts[1]))
        else:
            raise PreconditionError(f"bad edge line: {raw!r}")
    return FinDigraph(nodes, edges)


def digraph_from_json(obj):
    """Adjacency mapping {node: [successor, ...]}."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    nodes = set(obj)
    edges = set()
    for x, succs in obj.items():
        for y in succs:
            nodes.add(y)
            edges.add((x, y))
    return FinDigraph(nodes, edges)


def _peel_order(g):
    """Kahn-style peeling of the predecessor structure.

    Returns a topological order of the strict-predecessor relation, or
    None when some nonempty residue has no minimal element (a cycle).
    """
    pending = {v: len(g.preds(v)) for v in g.nodes}
    dependents = {v: [] for v in g.nodes}
    for v in g.nodes:
        for p in g.preds(v):
            dependents[p].append(v)
    ready = [v for v, n in pending.items() if n == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in dependents[v]:
            pending[w] -= 1
            if pending[w] == 0:
                ready.append(w)
    if len(order) != len(g.nodes):
        return None
    return order


def is_well_founded(g):
    return _peel_order(g) is not None


def _require_order(g):
    order = _peel_order(g)
    if order is None:
        raise NotWellFoundedError("the strict-predecessor relation has a cycle")
    return order


def rank_map(g):
    """The least strictly increasing labeling: rank(x) = sup(rank(pred)+1)."""
    ranks = {}
    for v in _require_order(g):
        ranks[v] = max((ranks[p] + 1 for p in g.preds(v)), default=0)
    return ranks


def order_type(g):
    """The order type |nodes| of a strict finite linear order.

    Raises NotWellOrderError naming the first violated axiom with a
    concrete witness tuple.
    """
    for x, y in g.edges:
        if x == y:
            raise NotWellOrderError("irreflexivity", (x,))
    edge_set = g.edges
    for x, y in edge_set:
        for y2, z in edge_set:
            if y2 == y and (x, z) not in edge_set and x != z:
                raise NotWellOrderError("transitivity", (x, y, z))
    nodes = sorted(g.nodes, key=repr)
    for i, x in enumerate(nodes):
        for y in nodes[i + 1:]:
            if (x, y) not in edge_set and (y, x) not in edge_set:
                raise NotWellOrderError("totality", (x, y))
            if (x, y) in edge_set and (y, x) in edge_set:
                raise NotWellOrderError("antisymmetry", (x, y))
    return len(g.nodes)


def recursion_fold(g, step):
    """The unique map with value(x) = step(x, image of values on preds).

    The second argument of `step` is the image set (a frozenset), exactly
    as in the defining equation, so step results must be hashable.  The
    result does not depend on which topological order the fold uses.
    """
    values = {}
    for v in _require_order(g):
        values[v] = step(v, frozenset(values[p] for p in g.preds(v)))
    return values


def mostowski(g):
    """Collapse a well-founded digraph to sets: f(x) = {f(y) : y pred x}.

    Returns (image map, is_iso); is_iso is True exactly when g is
    extensional, and then f is a digraph isomorphism onto its range with
    the membership relation.
    """
    image = {}
    for v in _require_order(g):
        image[v] = hfset.HFSet(image[p] for p in g.preds(v))
    is_iso = len(set(image.values())) == len(g.nodes)
    return image, is_iso


class FinInjection:
    """A finite injective map, validated at construction."""

    __slots__ = ("forward",)

    def __init__(self, forward):
        forward = dict(forward)
        if len(set(forward.values())) != len(forward):
            raise PreconditionError("map is not injective")
        self.forward = forward

    def __len__(self):
        return len(self.forward)

    def __getitem__(self, x):
        return self.forward[x]


def cbs_bijection(f, g):
    """The Cantor-Bernstein bijection X -> Y built from injections
    f: X -> Y and g: Y -> X.

    X is layered by X_0 = X, X_1 = g[Y], X_{n+2} = g[f[X_n]]; the
    bijection applies f on even-minus-odd layers and the core, and the
    inverse of g on odd-minus-even layers.
    """
    f = dict(f.forward) if isinstance(f, FinInjection) else dict(f)
    g = dict(g.forward) if isinstance(g, FinInjection) else dict(g)
    if len(set(f.values())) != len(f):
        raise PreconditionError("f is not injective")
    if len(set(g.values())) != len(g):
        raise PreconditionError("g is not injective")
    X = set(f)
    Y = set(g)
    if not set(f.values()) <= Y:
        raise PreconditionError("f must map into the domain of g")
    if not set(g.values()) <= X:
        raise PreconditionError("g must map into the domain of f")

    g_inv = {v: k for k, v in g.items()}
    layers = [X, {g[y] for y in Y}]
    while True:
        nxt = {g[f[x]] for x in layers[-2]}
        if nxt == layers[-2]:
            break
        layers.append(nxt)

    h = {}
    for x in X:
        depth = 0
        while depth < len(layers) and x in layers[depth]:
            depth += 1
        if depth >= len(layers):
            h[x] = f[x]  # core: x survives every layer
        elif depth % 2 == 1:
            h[x] = f[x]  # x in X_{2n} \ X_{2n+1}
        else:
            h[x] = g_inv[x]  # x in X_{2n+1} \ X_{2n+2}
    return h
