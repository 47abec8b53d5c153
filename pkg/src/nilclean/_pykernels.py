"""Numpy implementations of the hot loops.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Tables are C-contiguous ``int32`` arrays; masks are ``uint8`` arrays.
"""

import numpy as np


def nilpotency_indices(mul, zero):
    """Smallest ``k`` with ``x**k == zero`` for every ``x``, 0 when none exists.

    Powers are advanced for all elements at once. An element stops as soon
    as it hits zero or revisits a power it has already produced.
    """
    n = mul.shape[0]
    out = np.zeros(n, dtype=np.int32)
    xs = np.arange(n)
    power = xs.copy()
    seen = np.zeros((n, n), dtype=bool)
    alive = np.ones(n, dtype=bool)
    k = 1
    while alive.any():
        live = xs[alive]
        p = power[alive]
        hit = p == zero
        out[live[hit]] = k
        cyc = ~hit & seen[live, p]
        seen[live, p] = True
        alive[live[hit | cyc]] = False
        power[alive] = mul[power[alive], xs[alive]]
        k += 1
    return out


def unit_inverses(mul, one):
    """Two-sided inverse of every element, -1 for non-units."""
    left = mul == one
    both = left & left.T
    inv = both.argmax(axis=1).astype(np.int32)
    inv[~both.any(axis=1)] = -1
    return inv


def jacobson_mask(mul, one_minus, is_unit, two_sided):
    """Mask of x with 1 - r x s a unit for all r, s (or 1 - r x for all r)."""
    n = mul.shape[0]
    is_unit = is_unit.astype(bool)
    out = np.zeros(n, dtype=np.uint8)
    for x in range(n):
        rx = mul[:, x]
        if not is_unit[one_minus[rx]].all():
            continue
        if two_sided and not is_unit[one_minus[mul[rx]]].all():
            continue
        out[x] = 1
    return out


def two_sided_products(mul, gens):
    """Mask of every r g s with g in ``gens``."""
    n = mul.shape[0]
    out = np.zeros(n, dtype=np.uint8)
    for g in gens:
        out[mul[mul[:, g]].ravel()] = 1
    return out


def subgroup_closure(add, seeds):
    """Mask of the additive subgroup generated by the elements flagged in ``seeds``."""
    n = add.shape[0]
    member = np.zeros(n, dtype=bool)
    member[0] = True
    elems = np.array([0], dtype=np.int64)
    for g in np.flatnonzero(seeds):
        if member[g]:
            continue
        coset = elems
        t = g
        parts = [elems]
        while not member[t]:
            coset = add[elems, t]
            parts.append(coset)
            t = add[t, g]
        elems = np.unique(np.concatenate(parts))
        member[elems] = True
    return member.astype(np.uint8)


def decompose_search(add, neg, mul, xs, idem, target, weak, strong):
    """First idempotent (ascending) giving ``x = sign*e + w`` with ``target[w]``.

    Returns ``(e, sign)`` arrays aligned with ``xs``; ``e == -1`` where no
    idempotent works. At a given ``e`` the ``+`` form is preferred.
    """
    xs = np.asarray(xs, dtype=np.int64)
    idem = np.asarray(idem, dtype=np.int64)
    target = target.astype(bool)
    e_out = np.full(len(xs), -1, dtype=np.int32)
    s_out = np.zeros(len(xs), dtype=np.int8)
    if len(xs) == 0 or len(idem) == 0:
        return e_out, s_out
    e_row = idem[None, :]
    w_plus = add[xs[:, None], neg[e_row]]
    ok_plus = target[w_plus]
    if strong:
        ok_plus &= mul[e_row, w_plus] == mul[w_plus, e_row]
    ok = ok_plus
    if weak:
        w_minus = add[xs[:, None], e_row]
        ok_minus = target[w_minus]
        if strong:
            ok_minus &= mul[e_row, w_minus] == mul[w_minus, e_row]
        ok = ok_plus | ok_minus
    rows = np.arange(len(xs))
    j = ok.argmax(axis=1)
    found = ok[rows, j]
    e_out[found] = idem[j[found]]
    s_out[found] = np.where(ok_plus[rows, j], 1, -1)[found]
    return e_out, s_out
