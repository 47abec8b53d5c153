"""Composite rings: products, triangular matrices, corners, idealizations, Morita contexts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .ring import (
    DEFAULT_SIZE_CAP,
    FiniteRing,
    ResidueRing,
    RingError,
    check_size,
    split_top,
    strip_brackets,
)


def _decode(size: int, radices: Sequence[int]) -> tuple[np.ndarray, ...]:
    return np.unravel_index(np.arange(size), tuple(radices))


def _encode(coords, radices: Sequence[int]) -> np.ndarray:
    if not radices:
        return np.zeros(np.shape(coords[0]) if coords else (), dtype=np.int64)
    return np.ravel_multi_index(tuple(coords), tuple(radices))


# -- direct products ------------------------------------------------------


class ProductRing(FiniteRing):
    """Direct product; element index is lexicographic in the coordinates."""

    kind = "product"

    def __init__(self, parts: Sequence[FiniteRing], spec=None):
        self.parts = tuple(parts)
        self.radices = tuple(p.size for p in self.parts)
        n = math.prod(self.radices)
        c = _decode(n, self.radices)
        self.coords = np.stack(c, axis=1) if c else np.zeros((1, 0), dtype=np.int64)
        add = _encode([p.add_table[ci[:, None], ci[None, :]] for p, ci in zip(self.parts, c)], self.radices)
        mul = _encode([p.mul_table[ci[:, None], ci[None, :]] for p, ci in zip(self.parts, c)], self.radices)
        one = int(_encode([np.array(p.one) for p in self.parts], self.radices))
        super().__init__(add, mul, one=one, spec=spec)

    def coordinates(self, x) -> tuple[int, ...]:
        return tuple(int(v) for v in self.coords[self._check(x)])

    def encode(self, coords: Sequence[int]) -> int:
        return int(_encode([np.array(v) for v in coords], self.radices))

    def project(self, x, k: int) -> int:
        return int(self.coords[self._check(x), k])

    def inject(self, k: int, y) -> int:
        coords = [p.zero for p in self.parts]
        coords[k] = self.parts[k]._check(y)
        return self.encode(coords)

    def _format(self, x: int) -> str:
        return "(" + ",".join(p.display(v) for p, v in zip(self.parts, self.coords[x])) + ")"

    def _parse(self, text: str) -> int:
        items = split_top(strip_brackets(text, "(", ")"))
        if len(items) != len(self.parts):
            raise RingError(f"expected {len(self.parts)} coordinates in {text!r}")
        return self.encode([p.parse(t) for p, t in zip(self.parts, items)])


def direct_product(parts: Sequence[FiniteRing], cap: int = DEFAULT_SIZE_CAP, spec=None) -> FiniteRing:
    if not parts:
        raise RingError("a product needs at least one factor")
    if len(parts) == 1 and spec is None:
        return parts[0]
    check_size("direct product", math.prod(p.size for p in parts), cap)
    return ProductRing(parts, spec=spec)


# -- upper triangular matrices -------------------------------------------


class TriangularRing(FiniteRing):
    """Upper triangular ``k x k`` matrices; entries row-major over ``i <= j``."""

    kind = "triangular"

    def __init__(self, k: int, base: FiniteRing, spec=None):
        if k < 1:
            raise RingError("matrix size must be at least 1")
        self.k = k
        self.base = base
        self.positions = [(i, j) for i in range(k) for j in range(i, k)]
        self.slot = {p: t for t, p in enumerate(self.positions)}
        self.radices = (base.size,) * len(self.positions)
        n = base.size ** len(self.positions)
        c = _decode(n, self.radices)
        self.coords = np.stack(c, axis=1)
        B_add, B_mul = base.add_table, base.mul_table
        add = _encode([B_add[ci[:, None], ci[None, :]] for ci in c], self.radices)
        out = []
        for i, j in self.positions:
            acc = np.full((n, n), base.zero, dtype=np.int64)
            for l in range(i, j + 1):
                a = c[self.slot[i, l]][:, None]
                b = c[self.slot[l, j]][None, :]
                acc = B_add[acc, B_mul[a, b]]
            out.append(acc)
        mul = _encode(out, self.radices)
        ident = [base.one if i == j else base.zero for i, j in self.positions]
        super().__init__(add, mul, one=self.encode_entries(ident), spec=spec)

    def encode_entries(self, entries: Sequence[int]) -> int:
        return int(_encode([np.array(v) for v in entries], self.radices))

    def entry(self, x, i: int, j: int) -> int:
        """Entry ``(i, j)`` (0-based) of matrix ``x``; zero below the diagonal."""
        if i > j:
            return self.base.zero
        return int(self.coords[self._check(x), self.slot[i, j]])

    def diagonal(self, x) -> tuple[int, ...]:
        return tuple(self.entry(x, i, i) for i in range(self.k))

    def from_matrix(self, rows: Sequence[Sequence[int]]) -> int:
        for i in range(self.k):
            for j in range(i):
                if rows[i][j] != self.base.zero:
                    raise RingError("matrix is not upper triangular")
        return self.encode_entries([rows[i][j] for i, j in self.positions])

    def _format(self, x: int) -> str:
        rows = []
        for i in range(self.k):
            rows.append("[" + ",".join(self.base.display(self.entry(x, i, j)) for j in range(self.k)) + "]")
        return "[" + ",".join(rows) + "]"

    def _parse(self, text: str) -> int:
        rows = split_top(strip_brackets(text, "[", "]"))
        if len(rows) != self.k:
            raise RingError(f"expected {self.k} rows in {text!r}")
        parsed = []
        for row in rows:
            cells = split_top(strip_brackets(row, "[", "]"))
            if len(cells) != self.k:
                raise RingError(f"expected {self.k} entries in row {row!r}")
            parsed.append([self.base.parse(c) for c in cells])
        return self.from_matrix(parsed)


def triangular_ring(k: int, base: FiniteRing, cap: int = DEFAULT_SIZE_CAP, spec=None) -> FiniteRing:
    if k < 1:
        raise RingError("matrix size must be at least 1")
    check_size(f"T{k}", base.size ** (k * (k + 1) // 2), cap)
    return TriangularRing(k, base, spec=spec)


# -- corner rings ----------------------------------------------------------


class CornerRing(FiniteRing):
    """``f R f`` for an idempotent ``f``, with unity ``f``.

    Elements are indexed by their position in the sorted carrier; they print
    and parse as host elements.
    """

    kind = "corner"

    def __init__(self, host: FiniteRing, f: int, spec=None):
        f = host._check(f)
        H = host.mul_table
        if H[f, f] != f:
            raise RingError(f"corner element {host.display(f)} is not idempotent")
        self.host = host
        self.f = f
        self.carrier = np.unique(H[H[f, :], f])
        self.position = np.full(host.size, -1, dtype=np.int64)
        self.position[self.carrier] = np.arange(len(self.carrier))
        sub = np.ix_(self.carrier, self.carrier)
        add = self.position[host.add_table[sub]]
        mul = self.position[H[sub]]
        if (add < 0).any() or (mul < 0).any():
            raise RingError("corner carrier is not closed")
        super().__init__(add, mul, one=int(self.position[f]), zero=int(self.position[host.zero]), spec=spec)

    def to_host(self, x) -> int:
        return int(self.carrier[self._check(x)])

    def from_host(self, h) -> int:
        p = int(self.position[self.host._check(h)])
        if p < 0:
            raise RingError(f"{self.host.display(h)} is not in the corner ring")
        return p

    def _format(self, x: int) -> str:
        return self.host.display(int(self.carrier[x]))

    def _parse(self, text: str) -> int:
        return self.from_host(self.host.parse(text))


def corner_ring(host: FiniteRing, f, spec=None) -> CornerRing:
    return CornerRing(host, host.parse(f), spec=spec)


# -- modules and bimodules -------------------------------------------------


class Bimodule:
    """A finite ``(left, right)``-bimodule on ``Z_{d1} x ... x Z_{dk}``.

    ``left_action[a, m]`` is ``a*m`` and ``right_action[m, b]`` is ``m*b``.
    A one-sided module over a commutative ring is the case
    ``right_ring is left_ring`` with ``right_action == left_action.T``.
    """

    def __init__(self, factors: Sequence[int], left_ring: FiniteRing, right_ring: FiniteRing,
                 left_action, right_action, name: Optional[str] = None):
        self.factors = tuple(int(d) for d in factors)
        if any(d < 1 for d in self.factors):
            raise RingError("module invariant factors must be positive")
        self.left_ring = left_ring
        self.right_ring = right_ring
        self.size = math.prod(self.factors)
        c = _decode(self.size, self.factors)
        self.coords = np.stack(c, axis=1) if c else np.zeros((1, 0), dtype=np.int64)
        add = _encode([(ci[:, None] + ci[None, :]) % d for ci, d in zip(c, self.factors)], self.factors)
        self.add_table = np.ascontiguousarray(np.broadcast_to(add, (self.size, self.size)), dtype=np.int32)
        self.neg_table = (self.add_table == 0).argmax(axis=1)
        self.left_action = np.ascontiguousarray(left_action, dtype=np.int32)
        self.right_action = np.ascontiguousarray(right_action, dtype=np.int32)
        if self.left_action.shape != (left_ring.size, self.size):
            raise RingError("left action table has the wrong shape")
        if self.right_action.shape != (self.size, right_ring.size):
            raise RingError("right action table has the wrong shape")
        self.name = name

    @classmethod
    def canonical(cls, factors: Sequence[int], left_ring: FiniteRing,
                  right_ring: Optional[FiniteRing] = None) -> "Bimodule":
        """``Z_{d1} x ... x Z_{dk}`` with residue rings acting by multiplication (``d_i | n``)."""
        right_ring = left_ring if right_ring is None else right_ring
        for ring in (left_ring, right_ring):
            if not isinstance(ring, ResidueRing):
                raise RingError(f"the canonical action needs a residue ring, not {ring}; supply action tables")
            for d in factors:
                if ring.modulus % d:
                    raise RingError(f"Z{d} is not a Z{ring.modulus}-module under the residue action")
        size = math.prod(factors)
        c = _decode(size, factors)

        def act(ring):
            r = np.arange(ring.size)[:, None]
            return _encode([(r * ci[None, :]) % d for ci, d in zip(c, factors)], factors)

        left = act(left_ring)
        right = act(right_ring).T
        return cls(factors, left_ring, right_ring, left, right)

    def _format(self, m: int) -> str:
        if len(self.factors) == 1:
            return str(int(self.coords[m, 0]))
        return "(" + ",".join(str(int(v)) for v in self.coords[m]) + ")"

    def display(self, m) -> str:
        return self._format(int(m))

    def parse(self, text: str) -> int:
        text = "".join(str(text).split())
        try:
            if len(self.factors) == 1:
                vals = [int(text)]
            else:
                vals = [int(t) for t in split_top(strip_brackets(text, "(", ")"))]
        except ValueError as exc:
            raise RingError(f"cannot parse module element {text!r}") from exc
        if len(vals) != len(self.factors):
            raise RingError(f"expected {len(self.factors)} coordinates in {text!r}")
        return int(_encode([np.array(v % d) for v, d in zip(vals, self.factors)], self.factors))

    def __str__(self) -> str:
        if self.name:
            return "@" + self.name
        return " x ".join(f"Z{d}" for d in self.factors)

    def validate(self) -> None:
        """Exhaustive bimodule axioms; raises :class:`RingError` naming the failed law."""
        A, B, Ma = self.left_ring, self.right_ring, self.add_table
        L, R = self.left_action, self.right_action

        def fail(law, **witness):
            w = ", ".join(f"{k}={v}" for k, v in witness.items())
            raise RingError(f"bimodule axiom {law} fails at {w}")

        for a in range(A.size):
            bad = np.argwhere(L[a][Ma] != Ma[L[a][:, None], L[a][None, :]])
            if len(bad):
                fail("a(m+m')=am+am'", a=A.display(a), m=self.display(bad[0][0]), m_=self.display(bad[0][1]))
        bad = np.argwhere(L[A.add_table] != Ma[L[:, None, :], L[None, :, :]])
        if len(bad):
            a, a2, m = bad[0]
            fail("(a+a')m=am+a'm", a=A.display(a), a_=A.display(a2), m=self.display(m))
        bad = np.argwhere(L[A.mul_table] != L[np.arange(A.size)[:, None, None], L[None, :, :]])
        if len(bad):
            a, a2, m = bad[0]
            fail("(aa')m=a(a'm)", a=A.display(a), a_=A.display(a2), m=self.display(m))
        bad = np.flatnonzero(L[A.one] != np.arange(self.size))
        if len(bad):
            fail("1m=m", m=self.display(bad[0]))
        for b in range(B.size):
            bad = np.argwhere(R[:, b][Ma] != Ma[R[:, b][:, None], R[:, b][None, :]])
            if len(bad):
                fail("(m+m')b=mb+m'b", b=B.display(b), m=self.display(bad[0][0]), m_=self.display(bad[0][1]))
        bad = np.argwhere(R[:, B.add_table] != Ma[R[:, :, None], R[:, None, :]])
        if len(bad):
            m, b, b2 = bad[0]
            fail("m(b+b')=mb+mb'", m=self.display(m), b=B.display(b), b_=B.display(b2))
        # m(bb') == (mb)b'
        bad = np.argwhere(R[:, B.mul_table] != R[R[:, :, None], np.arange(B.size)[None, None, :]])
        if len(bad):
            m, b, b2 = bad[0]
            fail("m(bb')=(mb)b'", m=self.display(m), b=B.display(b), b_=B.display(b2))
        bad = np.flatnonzero(R[:, B.one] != np.arange(self.size))
        if len(bad):
            fail("m1=m", m=self.display(bad[0]))
        # (am)b == a(mb)
        bad = np.argwhere(R[L] != L[:, R])
        if len(bad):
            a, m, b = bad[0]
            fail("(am)b=a(mb)", a=A.display(a), m=self.display(m), b=B.display(b))

    def submodules(self) -> list[np.ndarray]:
        """Every sub-bimodule as a boolean mask, sorted by size then elements."""
        def close(seed_mask):
            mask = seed_mask.copy()
            while True:
                spread = np.zeros(self.size, dtype=np.uint8)
                members = np.flatnonzero(mask)
                spread[self.left_action[:, members].ravel()] = 1
                spread[self.right_action[members, :].ravel()] = 1
                spread[members] = 1
                grown = kernels.subgroup_closure(self.add_table, spread).astype(bool)
                if (grown == mask).all():
                    return mask
                mask = grown

        found = {}
        for m in range(self.size):
            seed = np.zeros(self.size, dtype=bool)
            seed[m] = True
            seed[0] = True
            sub = close(seed)
            found.setdefault(sub.tobytes(), sub)
        frontier = list(found.values())
        while frontier:
            new = []
            for a in frontier:
                for b in list(found.values()):
                    s = close(a | b)
                    key = s.tobytes()
                    if key not in found:
                        found[key] = s
                        new.append(s)
            frontier = new
        subs = list(found.values())
        subs.sort(key=lambda s: (int(s.sum()), tuple(np.flatnonzero(s))))
        return subs


# -- idealization ------------------------------------------------------------


class IdealizationRing(FiniteRing):
    """``R(M)`` on ``R x M`` with ``(r,m)(r',m') = (rr', rm' + r'm)``; index ``r*|M| + m``."""

    kind = "idealization"

    def __init__(self, base: FiniteRing, module: Bimodule, spec=None):
        self.base = base
        self.module = module
        nm = module.size
        n = base.size * nm
        r = np.arange(n) // nm
        m = np.arange(n) % nm
        act = module.left_action
        ri, rj = r[:, None], r[None, :]
        mi, mj = m[:, None], m[None, :]
        add = base.add_table[ri, rj] * nm + module.add_table[mi, mj]
        mul = base.mul_table[ri, rj] * nm + module.add_table[act[ri, mj], act[rj, mi]]
        super().__init__(add, mul, one=base.one * nm, zero=base.zero * nm, spec=spec)

    def pair(self, x) -> tuple[int, int]:
        x = self._check(x)
        return divmod(x, self.module.size)

    def encode(self, r: int, m: int) -> int:
        return int(r) * self.module.size + int(m)

    def submodule_ideal(self, ideal_mask: np.ndarray, submodule_mask: np.ndarray) -> np.ndarray:
        """Mask of ``I(N) = {(a, n) : a in I, n in N}``."""
        return np.outer(np.asarray(ideal_mask, bool), np.asarray(submodule_mask, bool)).ravel()

    def _format(self, x: int) -> str:
        r, m = divmod(x, self.module.size)
        return f"({self.base.display(r)},{self.module.display(m)})"

    def _parse(self, text: str) -> int:
        items = split_top(strip_brackets(text, "(", ")"))
        if len(items) != 2:
            raise RingError(f"expected (r,m), got {text!r}")
        return self.encode(self.base.parse(items[0]), self.module.parse(items[1]))


def idealization(base: FiniteRing, module: Bimodule, cap: int = DEFAULT_SIZE_CAP, spec=None) -> IdealizationRing:
    if not base.is_commutative:
        raise RingError(f"idealization needs a commutative base ring; {base} is not commutative")
    if module.left_ring is not base or module.right_ring is not base:
        raise RingError("module must be over the base ring")
    if not (module.right_action == module.left_action.T).all():
        raise RingError("module action over a commutative ring must be symmetric")
    module.validate()
    check_size("idealization", base.size * module.size, cap)
    return IdealizationRing(base, module, spec=spec)


# -- Morita contexts -----------------------------------------------------------
#
# Layout is [[A, M], [N, B]]: M is an (A,B)-bimodule, N a (B,A)-bimodule,
# pair_A: M x N -> A and pair_B: N x M -> B. In the (R, S, N, M, psi, phi)
# naming of the usual definition this is R=A, S=B, its top-right N = our M,
# its M = our N, psi = pair_A, phi = pair_B.


def zero_pairings(A: FiniteRing, B: FiniteRing, M: Bimodule, N: Bimodule):
    return (np.full((M.size, N.size), A.zero, dtype=np.int32),
            np.full((N.size, M.size), B.zero, dtype=np.int32))


def multiplication_pairing(target: FiniteRing, X: Bimodule, Y: Bimodule) -> np.ndarray:
    """``(x, y) -> (sum_i x_i y_i) * 1`` in ``target``."""
    dots = (X.coords[:, None, :] * Y.coords[None, :, :]).sum(axis=2)
    image = {int(k): target.from_int(int(k)) for k in np.unique(dots)}
    return np.vectorize(image.__getitem__, otypes=[np.int32])(dots)


@dataclass
class MoritaSpec:
    A: FiniteRing
    B: FiniteRing
    M: Bimodule
    N: Bimodule
    pair_A: np.ndarray
    pair_B: np.ndarray

    @property
    def is_zero_pairing(self) -> bool:
        return bool((self.pair_A == self.A.zero).all() and (self.pair_B == self.B.zero).all())

    def validate(self) -> None:
        """Check module structure, bilinearity, balance and the two associativity laws."""
        A, B, M, N = self.A, self.B, self.M, self.N
        pA = np.asarray(self.pair_A)
        pB = np.asarray(self.pair_B)
        if M.left_ring is not A or M.right_ring is not B:
            raise RingError("M must be an (A,B)-bimodule")
        if N.left_ring is not B or N.right_ring is not A:
            raise RingError("N must be a (B,A)-bimodule")
        if pA.shape != (M.size, N.size) or pB.shape != (N.size, M.size):
            raise RingError("pairing tables have the wrong shape")
        M.validate()
        N.validate()
        mi = np.arange(M.size)
        ni = np.arange(N.size)

        def first(bad):
            return tuple(int(v) for v in np.argwhere(bad)[0])

        def fail(law, **w):
            text = ", ".join(f"{k}={v}" for k, v in w.items())
            raise RingError(f"pairing violates {law} at {text}")

        checks = [
            # additivity in each slot
            ("pair_A(m+m',n)=pair_A(m,n)+pair_A(m',n)",
             lambda: pA[M.add_table] != A.add_table[pA[:, None, :], pA[None, :, :]],
             lambda m, m2, n: dict(m=M.display(m), m_=M.display(m2), n=N.display(n))),
            ("pair_A(m,n+n')=pair_A(m,n)+pair_A(m,n')",
             lambda: pA[:, N.add_table] != A.add_table[pA[:, :, None], pA[:, None, :]],
             lambda m, n, n2: dict(m=M.display(m), n=N.display(n), n_=N.display(n2))),
            ("pair_B(n+n',m)=pair_B(n,m)+pair_B(n',m)",
             lambda: pB[N.add_table] != B.add_table[pB[:, None, :], pB[None, :, :]],
             lambda n, n2, m: dict(n=N.display(n), n_=N.display(n2), m=M.display(m))),
            ("pair_B(n,m+m')=pair_B(n,m)+pair_B(n,m')",
             lambda: pB[:, M.add_table] != B.add_table[pB[:, :, None], pB[:, None, :]],
             lambda n, m, m2: dict(n=N.display(n), m=M.display(m), m_=M.display(m2))),
            # linearity over the outer rings
            ("pair_A(am,n)=a pair_A(m,n)",
             lambda: pA[M.left_action] != A.mul_table[np.arange(A.size)[:, None, None], pA[None, :, :]],
             lambda a, m, n: dict(a=A.display(a), m=M.display(m), n=N.display(n))),
            ("pair_A(m,na)=pair_A(m,n)a",
             lambda: pA[:, N.right_action] != A.mul_table[pA[:, :, None], np.arange(A.size)[None, None, :]],
             lambda m, n, a: dict(m=M.display(m), n=N.display(n), a=A.display(a))),
            ("pair_B(bn,m)=b pair_B(n,m)",
             lambda: pB[N.left_action] != B.mul_table[np.arange(B.size)[:, None, None], pB[None, :, :]],
             lambda b, n, m: dict(b=B.display(b), n=N.display(n), m=M.display(m))),
            ("pair_B(n,mb)=pair_B(n,m)b",
             lambda: pB[:, M.right_action] != B.mul_table[pB[:, :, None], np.arange(B.size)[None, None, :]],
             lambda n, m, b: dict(n=N.display(n), m=M.display(m), b=B.display(b))),
            # balanced over the inner rings
            ("pair_A(mb,n)=pair_A(m,bn)",
             lambda: pA[M.right_action[:, :, None], ni[None, None, :]] != pA[mi[:, None, None], N.left_action[None, :, :]],
             lambda m, b, n: dict(m=M.display(m), b=B.display(b), n=N.display(n))),
            ("pair_B(na,m)=pair_B(n,am)",
             lambda: pB[N.right_action[:, :, None], mi[None, None, :]] != pB[ni[:, None, None], M.left_action[None, :, :]],
             lambda n, a, m: dict(n=N.display(n), a=A.display(a), m=M.display(m))),
            # associativity of the context
            ("pair_B(n,m)n'=n pair_A(m,n')",
             lambda: N.left_action[pB[:, :, None], ni[None, None, :]] != N.right_action[ni[:, None, None], pA[None, :, :]],
             lambda n, m, n2: dict(n=N.display(n), m=M.display(m), n_=N.display(n2))),
            ("pair_A(m,n)m'=m pair_B(n,m')",
             lambda: M.left_action[pA[:, :, None], mi[None, None, :]] != M.right_action[mi[:, None, None], pB[None, :, :]],
             lambda m, n, m2: dict(m=M.display(m), n=N.display(n), m_=M.display(m2))),
        ]
        for law, compute, witness in checks:
            bad = compute()
            if bad.any():
                fail(law, **witness(*first(bad)))


class MoritaRing(FiniteRing):
    """Ring of a Morita context, elements ``[[a,m],[n,b]]`` indexed lexicographically in (a,m,n,b)."""

    kind = "morita"

    def __init__(self, context: MoritaSpec, spec=None):
        self.context = context
        A, B, M, N = context.A, context.B, context.M, context.N
        self.radices = (A.size, M.size, N.size, B.size)
        size = math.prod(self.radices)
        a, m, n, b = _decode(size, self.radices)
        self.coords = np.stack([a, m, n, b], axis=1)
        pA, pB = np.asarray(context.pair_A), np.asarray(context.pair_B)
        ai, aj = a[:, None], a[None, :]
        mi, mj = m[:, None], m[None, :]
        ni, nj = n[:, None], n[None, :]
        bi, bj = b[:, None], b[None, :]
        add = _encode([A.add_table[ai, aj], M.add_table[mi, mj], N.add_table[ni, nj], B.add_table[bi, bj]],
                      self.radices)
        mul = _encode([
            A.add_table[A.mul_table[ai, aj], pA[mi, nj]],
            M.add_table[M.left_action[ai, mj], M.right_action[mi, bj]],
            N.add_table[N.right_action[ni, aj], N.left_action[bi, nj]],
            B.add_table[pB[ni, mj], B.mul_table[bi, bj]],
        ], self.radices)
        one = int(_encode([np.array(A.one), np.array(0), np.array(0), np.array(B.one)], self.radices))
        zero = int(_encode([np.array(A.zero), np.array(0), np.array(0), np.array(B.zero)], self.radices))
        super().__init__(add, mul, one=one, zero=zero, spec=spec)

    def components(self, x) -> tuple[int, int, int, int]:
        """``(a, m, n, b)`` of the matrix ``[[a,m],[n,b]]``."""
        return tuple(int(v) for v in self.coords[self._check(x)])

    def encode(self, a: int, m: int, n: int, b: int) -> int:
        return int(_encode([np.array(a), np.array(m), np.array(n), np.array(b)], self.radices))

    def _format(self, x: int) -> str:
        c = self.context
        a, m, n, b = self.coords[x]
        return f"[[{c.A.display(a)},{c.M.display(m)}],[{c.N.display(n)},{c.B.display(b)}]]"

    def _parse(self, text: str) -> int:
        c = self.context
        rows = split_top(strip_brackets(text, "[", "]"))
        if len(rows) != 2:
            raise RingError(f"expected [[a,m],[n,b]], got {text!r}")
        top = split_top(strip_brackets(rows[0], "[", "]"))
        bottom = split_top(strip_brackets(rows[1], "[", "]"))
        if len(top) != 2 or len(bottom) != 2:
            raise RingError(f"expected [[a,m],[n,b]], got {text!r}")
        return self.encode(c.A.parse(top[0]), c.M.parse(top[1]), c.N.parse(bottom[0]), c.B.parse(bottom[1]))


def morita_ring(context: MoritaSpec, cap: int = DEFAULT_SIZE_CAP, spec=None) -> MoritaRing:
    context.validate()
    check_size("Morita context", context.A.size * context.M.size * context.N.size * context.B.size, cap)
    return MoritaRing(context, spec=spec)


@dataclass(frozen=True)
class ContextProjection:
    """Corner collections of a subset of a Morita ring, as sorted index tuples."""

    p_A: tuple[int, ...]
    p_M: tuple[int, ...]
    p_N: tuple[int, ...]
    p_B: tuple[int, ...]


def context_projections(ideal) -> ContextProjection:
    ring = ideal.ring
    if not isinstance(ring, MoritaRing):
        raise RingError(f"{ring} is not a Morita context ring")
    c = ring.coords[np.asarray(ideal.elements, dtype=np.int64)]
    return ContextProjection(*(tuple(int(v) for v in np.unique(c[:, k])) for k in range(4)))
