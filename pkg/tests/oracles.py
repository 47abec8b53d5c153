"""Independent brute-force oracles, written with plain Python loops over ring elements.

They only use ``ring.add``/``ring.mul``/``ring.neg`` and never touch the
vectorized kernels, so agreement with the library is meaningful.
"""

from itertools import product
from math import gcd

from hypothesis import strategies as st

SMALL_SPECS = [
    "Z1", "Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "Z12",
    "Z2 x Z2", "Z2 x Z3", "Z2 x Z4", "Z3 x Z4",
    "T2(Z2)", "T2(Z3)", "T3(Z2)",
    "Idealization(Z2, Z2)", "Idealization(Z4, Z2)", "Idealization(Z6, Z3)",
    "Morita(Z2, Z2, Z2, Z2, zero)", "Morita(Z2, Z2, Z2, Z2, mul)", "Morita(Z4, Z2, Z2, Z2, zero)",
    "Quot(Z12; 4)", "Quot(T2(Z2); [[0,1],[0,0]])", "Corner(T2(Z2); [[1,0],[0,0]])",
]


def small_specs():
    return st.sampled_from(SMALL_SPECS)


def residue_specs(lo=1, hi=40):
    return st.integers(lo, hi).map(lambda n: f"Z{n}")


def power(ring, x, k):
    out = ring.one
    for _ in range(k):
        out = ring.mul(out, x)
    return out


def idempotents(ring):
    return {x for x in range(ring.size) if ring.mul(x, x) == x}


def nilpotents(ring):
    return {x for x in range(ring.size) if power(ring, x, ring.size) == ring.zero}


def units(ring):
    return {x for x in range(ring.size)
            if any(ring.mul(x, y) == ring.one and ring.mul(y, x) == ring.one for y in range(ring.size))}


def jacobson(ring):
    u = units(ring)
    return {x for x in range(ring.size)
            if all(ring.add(ring.one, ring.neg(ring.mul(ring.mul(r, x), s))) in u
                   for r in range(ring.size) for s in range(ring.size))}


def center(ring):
    return {x for x in range(ring.size) if all(ring.mul(x, y) == ring.mul(y, x) for y in range(ring.size))}


def ideal_closure(ring, gens):
    """Smallest set containing ``gens`` closed under +, - and two-sided multiplication."""
    current = {ring.zero} | set(gens)
    while True:
        grown = set(current)
        for a in current:
            grown.add(ring.neg(a))
            for b in current:
                grown.add(ring.add(a, b))
            for r in range(ring.size):
                grown.add(ring.mul(r, a))
                grown.add(ring.mul(a, r))
        if grown == current:
            return frozenset(current)
        current = grown


def all_ideals(ring):
    """Every ideal, by closing every subset of a generating family (tiny rings only)."""
    found = {ideal_closure(ring, ())}
    frontier = set(found)
    while frontier:
        fresh = set()
        for I in frontier:
            for x in range(ring.size):
                if x not in I:
                    J = ideal_closure(ring, set(I) | {x})
                    if J not in found:
                        fresh.add(J)
        found |= fresh
        frontier = fresh
    return found


def decompositions(ring, x, *, weak, nil, strong, within=None):
    """All (sign, e) with x = sign*e + w and w in the target set."""
    target = nilpotents(ring) if nil else units(ring)
    idem = idempotents(ring)
    if within is not None:
        idem &= within
        target &= within
    out = []
    for e in sorted(idem):
        for sign in ((1, -1) if weak else (1,)):
            w = ring.sub(x, e if sign == 1 else ring.neg(e))
            if w in target and (not strong or ring.mul(e, w) == ring.mul(w, e)):
                out.append((sign, e))
    return out


def zn_ideal_count(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def zn_units(n):
    return {x for x in range(n) if gcd(x, n) == 1} if n > 1 else {0}


def matrix_product_mod(a, b, n):
    k = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) % n for j in range(k)] for i in range(k)]


def triangular_matrices(k, n):
    cells = [(i, j) for i in range(k) for j in range(i, k)]
    for values in product(range(n), repeat=len(cells)):
        m = [[0] * k for _ in range(k)]
        for (i, j), v in zip(cells, values):
            m[i][j] = v
        yield m
