"""Two-sided ideals, their lattice, quotient rings and idempotent lifting."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .ring import FiniteRing, RingError, check_size

DEFAULT_LATTICE_CAP = 256


class Ideal:
    """A two-sided ideal of ``ring``, stored as a membership mask.

    ``generators`` are the elements the ideal was generated from (for lattice
    members: a principal generator, or the union of the summands' generators).
    """

    __slots__ = ("ring", "generators", "mask", "_elements")

    def __init__(self, ring: FiniteRing, generators: Sequence[int], mask: np.ndarray):
        self.ring = ring
        self.generators = tuple(int(g) for g in generators)
        self.mask = np.asarray(mask, dtype=bool)
        self.mask.setflags(write=False)
        self._elements = None

    @property
    def elements(self) -> tuple[int, ...]:
        if self._elements is None:
            self._elements = tuple(int(i) for i in np.flatnonzero(self.mask))
        return self._elements

    @property
    def index_array(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @property
    def key(self) -> bytes:
        return self.mask.tobytes()

    @property
    def is_zero(self) -> bool:
        return len(self) == 1

    @property
    def is_whole(self) -> bool:
        return len(self) == self.ring.size

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, x) -> bool:
        return bool(self.mask[self.ring.parse(x)])

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and self.key == other.key

    def __hash__(self) -> int:
        return hash((id(self.ring), self.key))

    def __le__(self, other: "Ideal") -> bool:
        return bool((self.mask <= other.mask).all())

    def display(self) -> str:
        return "{" + ", ".join(self.ring.display(x) for x in self.elements) + "}"

    def __repr__(self) -> str:
        gens = ",".join(self.ring.display(g) for g in self.generators)
        return f"<Ideal <{gens}> of {self.ring}, size {len(self)}>"


def is_ideal_mask(ring: FiniteRing, mask: np.ndarray) -> bool:
    """True when ``mask`` is closed under ``+``, ``-`` and two-sided multiplication."""
    mask = np.asarray(mask, dtype=bool)
    members = np.flatnonzero(mask)
    if not mask[ring.zero]:
        return False
    A, M = ring.add_table, ring.mul_table
    return bool(mask[A[np.ix_(members, members)]].all()
                and mask[ring.neg_table[members]].all()
                and mask[M[:, members]].all()
                and mask[M[members, :]].all())


def ideal_from_mask(ring: FiniteRing, mask: np.ndarray, generators: Iterable[int] = ()) -> Ideal:
    mask = np.asarray(mask, dtype=bool)
    if not is_ideal_mask(ring, mask):
        raise RingError("element set is not a two-sided ideal")
    gens = tuple(generators) or tuple(int(i) for i in np.flatnonzero(mask))
    return Ideal(ring, gens, mask)


def _generated_mask(ring: FiniteRing, gens: Sequence[int]) -> np.ndarray:
    if not gens:
        mask = np.zeros(ring.size, dtype=bool)
        mask[ring.zero] = True
        return mask
    seeds = kernels.two_sided_products(ring.mul_table, gens)
    return kernels.subgroup_closure(ring.add_table, seeds).astype(bool)


def ideal_generated_by(ring: FiniteRing, gens: Iterable = (), cap: Optional[int] = None) -> Ideal:
    """Smallest two-sided ideal containing ``gens``: the additive span of ``R gens R``."""
    check_size("ideal generation", ring.size, cap)
    gens = tuple(ring.parse(g) for g in gens)
    return Ideal(ring, gens, _generated_mask(ring, gens))


def whole_ring(ring: FiniteRing) -> Ideal:
    return Ideal(ring, (ring.one,), np.ones(ring.size, dtype=bool))


def zero_ideal(ring: FiniteRing) -> Ideal:
    return ideal_generated_by(ring, ())


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    ring = a.ring
    mask = np.zeros(ring.size, dtype=bool)
    mask[ring.add_table[np.ix_(a.index_array, b.index_array)].ravel()] = True
    gens = tuple(dict.fromkeys(a.generators + b.generators))
    return Ideal(ring, gens, mask)


def all_ideals(ring: FiniteRing, cap: int = DEFAULT_LATTICE_CAP) -> list[Ideal]:
    """Every two-sided ideal once, ordered by size and then by element list.

    Principal ideals are computed first; the set is then closed under pairwise
    sums. Each ideal keeps the smallest generator set found for it.
    """
    check_size("ideal lattice", ring.size, cap)

    def compute():
        found: dict[bytes, Ideal] = {}
        for x in range(ring.size):
            mask = _generated_mask(ring, (x,))
            found.setdefault(mask.tobytes(), Ideal(ring, (x,), mask))
        frontier = list(found.values())
        while frontier:
            fresh = []
            current = list(found.values())
            for a in frontier:
                for b in current:
                    if a <= b or b <= a:
                        continue
                    s = ideal_sum(a, b)
                    if s.key not in found:
                        found[s.key] = s
                        fresh.append(s)
            frontier = fresh
        return sorted(found.values(), key=lambda i: (len(i), i.elements))

    return list(ring.cached(("all_ideals",), compute))


def is_nil_ideal(ideal: Ideal) -> bool:
    """Every element of the ideal is nilpotent."""
    return bool(ideal.ring.sets.is_nil[ideal.mask].all())


def proper(ideal: Ideal) -> bool:
    return not ideal.is_whole


# -- quotients -------------------------------------------------------------------


class QuotientRing(FiniteRing):
    """``base / modulus``; each coset is represented by its smallest base index.

    Quotient element ``i`` is the ``i``-th smallest representative.
    ``projection[x]`` is the quotient element containing base element ``x``.
    """

    kind = "quotient"

    def __init__(self, base: FiniteRing, modulus: Ideal, spec=None):
        if modulus.ring is not base:
            raise RingError("modulus is not an ideal of the base ring")
        self.base = base
        self.modulus = modulus
        reps_of = base.add_table[:, modulus.index_array].min(axis=1)
        self.representatives = np.unique(reps_of)
        lookup = np.full(base.size, -1, dtype=np.int64)
        lookup[self.representatives] = np.arange(len(self.representatives))
        self.projection = lookup[reps_of]
        self.projection.setflags(write=False)
        r = self.representatives
        add = self.projection[base.add_table[np.ix_(r, r)]]
        mul = self.projection[base.mul_table[np.ix_(r, r)]]
        super().__init__(add, mul, one=int(self.projection[base.one]), zero=int(self.projection[base.zero]),
                         spec=spec)

    @property
    def cosets(self) -> list[tuple[int, ...]]:
        out = [[] for _ in range(self.size)]
        for x, q in enumerate(self.projection):
            out[q].append(x)
        return [tuple(c) for c in out]

    def project(self, x) -> int:
        return int(self.projection[self.base.parse(x)])

    def lift(self, q) -> int:
        """Canonical (minimal) representative of quotient element ``q``."""
        return int(self.representatives[self._check(q)])

    def _format(self, x: int) -> str:
        return self.base.display(int(self.representatives[x]))

    def _parse(self, text: str) -> int:
        return int(self.projection[self.base.parse(text)])


def quotient_ring(ring: FiniteRing, ideal: Ideal, spec=None) -> QuotientRing:
    return QuotientRing(ring, ideal, spec=spec)


def image_ideal(q: QuotientRing, ideal: Ideal) -> Ideal:
    """``(ideal + modulus) / modulus`` as an ideal of the quotient."""
    if ideal.ring is not q.base:
        raise RingError("ideal does not live in the quotient's base ring")
    mask = np.zeros(q.size, dtype=bool)
    mask[q.projection[ideal.index_array]] = True
    gens = tuple(dict.fromkeys(int(q.projection[g]) for g in ideal.generators))
    return Ideal(q, gens, mask)


def preimage_ideal(q: QuotientRing, ideal: Ideal) -> Ideal:
    mask = ideal.mask[q.projection]
    return Ideal(q.base, tuple(q.lift(g) for g in ideal.generators), mask)


# -- idempotent lifting ------------------------------------------------------------


def lift_idempotent_mod_nil(ring: FiniteRing, ideal: Ideal, a) -> int:
    """Idempotent ``e`` with ``e - a`` in ``ideal``, for ``a*a - a`` in a nil ideal.

    Iterates ``e <- 3e^2 - 2e^3`` from ``a``. If ``e^2 - e`` lies in the k-th
    power of the ideal, the next iterate's defect lies in its 2k-th power, so
    the loop ends after about ``log2`` of the nilpotency bound steps.
    """
    a = ring.parse(a)
    if not is_nil_ideal(ideal):
        raise RingError("ideal is not nil")
    A, M, neg = ring.add_table, ring.mul_table, ring.neg_table
    if not ideal.mask[A[M[a, a], neg[a]]]:
        raise RingError(f"{ring.display(a)} is not idempotent modulo the ideal")
    three, two = ring.from_int(3), ring.from_int(2)
    e = a
    for _ in range(ring.size + 1):
        e2 = int(M[e, e])
        if e2 == e:
            return e
        e3 = int(M[e2, e])
        e = int(A[M[three, e2], neg[M[two, e3]]])
    raise RingError("idempotent lifting did not converge")  # unreachable for a nil ideal


def lift_idempotent_brute(ring: FiniteRing, ideal: Ideal, a) -> tuple[int, ...]:
    """All idempotents in the coset ``a + ideal``."""
    a = ring.parse(a)
    coset = ring.add_table[a, ideal.index_array]
    return tuple(sorted(int(x) for x in coset if ring.sets.is_idem[x]))
