"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the production code paths they
check: set closures go through Python sets, subset enumeration through
itertools, simplicity through a birthday-ordered pool scan, and ordinal
identities through reconstruction.
"""

import itertools

from setkernel import hfset, ordinal, surreal
from setkernel.hfset import HFSet
from setkernel.ordinal import CnfOrdinal
from setkernel.surreal import Dyadic


def rand_hfset(rng, max_rank, max_width=3):
    """A random HF set of rank at most max_rank."""
    if max_rank == 0 or rng.random() < 0.25:
        return hfset.empty()
    width = rng.randint(0, max_width)
    return HFSet(rand_hfset(rng, max_rank - 1, max_width) for _ in range(width))


def all_sets_of_rank_at_most(n):
    """Every HF set of rank <= n, i.e. the elements of V_{n+1}."""
    layer = [hfset.empty()]
    for _ in range(n):
        elems = list(layer)
        layer = []
        for r in range(len(elems) + 1):
            for combo in itertools.combinations(elems, r):
                layer.append(HFSet(combo))
    return layer


def saturate(x):
    """Transitive-closure oracle: saturate a Python set under membership."""
    seen = set(x.elements)
    stack = list(x.elements)
    while stack:
        s = stack.pop()
        for e in s.elements:
            if e not in seen:
                seen.add(e)
                stack.append(e)
    return HFSet(seen)


def power_oracle(x):
    """Power set by direct subset enumeration."""
    elems = x.elements
    subs = []
    for r in range(len(elems) + 1):
        for combo in itertools.combinations(elems, r):
            subs.append(HFSet(combo))
    return HFSet(subs)


def rand_ordinal(rng, depth, max_terms=3, max_coeff=5):
    """A random CNF ordinal with exponent nesting at most `depth`."""
    if depth == 0:
        return CnfOrdinal.from_int(rng.randint(0, max_coeff))
    n_terms = rng.randint(0, max_terms)
    exps = []
    seen = set()
    for _ in range(n_terms):
        e = rand_ordinal(rng, depth - 1, max_terms, max_coeff)
        if e not in seen:
            seen.add(e)
            exps.append(e)
    exps.sort(key=lambda e: _ord_key(e), reverse=True)
    return CnfOrdinal(tuple((e, rng.randint(1, max_coeff)) for e in exps))


def _ord_key(a):
    # any total-order key consistent with the ordinal order works for
    # sorting exponent candidates; reuse the comparison itself
    import functools

    return functools.cmp_to_key(ordinal.cmp)(a)


def frac_value(d):
    """Exact value of a Dyadic as a Python Fraction (external oracle)."""
    from fractions import Fraction

    return Fraction(d.num, 1 << d.k)


def birthday_oracle_pool(max_day):
    """Map Fraction -> first appearance day, built by midpoint insertion.

    Day 1 creates 0; each later day adds min-1, max+1, and the midpoints
    of neighbours.  Independent of the surreal module.
    """
    from fractions import Fraction

    days = {}
    cur = []
    for day in range(max_day + 1):
        if not cur:
            new = [Fraction(0)]
        else:
            new = [cur[0] - 1]
            new += [(a + b) / 2 for a, b in zip(cur, cur[1:])]
            new.append(cur[-1] + 1)
        for v in new:
            days[v] = day
        cur = sorted(days)
    return days


def simplest_oracle(a, b, days):
    """Earliest-born pool members strictly between the Fraction sets a, b."""
    between = [
        z
        for z in days
        if all(x < z for x in a) and all(z < y for y in b)
    ]
    if not between:
        return []
    best = min(days[z] for z in between)
    return sorted(z for z in between if days[z] == best)
