"""Finite unital rings stored as explicit addition and multiplication tables.

Elements of a ring of size ``n`` are the integers ``0 .. n-1``. Each
construction decides how those integers encode its elements (mixed radix over
coordinates, matrix entries, coset representatives, ...) and how they are
printed and parsed.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional

import numpy as np

from . import kernels

DEFAULT_SIZE_CAP = 4096


class RingError(ValueError):
    """A construction or validation failure (bad element, failed axiom, ...)."""


class SizeLimitError(RingError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: cardinality {size} exceeds the size cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class ElementRangeError(RingError, IndexError):
    pass


def check_size(what: str, size: int, cap: Optional[int]) -> None:
    if cap is not None and size > cap:
        raise SizeLimitError(what, size, cap)


def split_top(text: str, sep: str = ",") -> list[str]:
    """Split ``text`` on ``sep`` occurring outside any bracket pair."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def strip_brackets(text: str, open_: str, close: str) -> str:
    text = text.strip()
    if not (text.startswith(open_) and text.endswith(close)):
        raise RingError(f"expected {open_}...{close}, got {text!r}")
    return text[1:-1]


def _frozen(a) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int32)
    a.setflags(write=False)
    return a


class FiniteRing:
    """A finite ring with unity, given by its operation tables.

    Subclasses override :meth:`_format` and :meth:`_parse` to give elements a
    readable form. ``spec`` is the :mod:`nilclean.specs` expression the ring
    was built from, when there is one.
    """

    kind = "ring"

    def __init__(self, add, mul, *, one: int, zero: int = 0, spec=None):
        self.add_table = _frozen(add)
        self.mul_table = _frozen(mul)
        n = self.add_table.shape[0]
        if self.add_table.shape != (n, n) or self.mul_table.shape != (n, n):
            raise RingError("operation tables must be square and of equal size")
        self.size = n
        self.zero = int(zero)
        self.one = int(one)
        self.neg_table = _frozen((self.add_table == self.zero).argmax(axis=1))
        self.spec = spec
        self._lock = threading.RLock()
        self._cache: dict = {}

    # -- arithmetic -------------------------------------------------------

    def _check(self, x) -> int:
        if isinstance(x, (str, Elem)):
            return self.parse(x)
        x = int(x)
        if not 0 <= x < self.size:
            raise ElementRangeError(f"element index {x} out of range for ring of size {self.size}")
        return x

    def add(self, a, b) -> int:
        return int(self.add_table[self._check(a), self._check(b)])

    def neg(self, a) -> int:
        return int(self.neg_table[self._check(a)])

    def sub(self, a, b) -> int:
        return int(self.add_table[self._check(a), self.neg_table[self._check(b)]])

    def mul(self, a, b) -> int:
        return int(self.mul_table[self._check(a), self._check(b)])

    def pow(self, a, k: int) -> int:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = self.one, self._check(a)
        while k:
            if k & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            k >>= 1
        return result

    def from_int(self, k: int) -> int:
        """The element ``k * 1``."""
        result, step = self.zero, self.one
        if k < 0:
            k, step = -k, self.neg_table[self.one]
        while k:
            if k & 1:
                result = int(self.add_table[result, step])
            step = int(self.add_table[step, step])
            k >>= 1
        return result

    # -- elements ---------------------------------------------------------

    def display(self, x) -> str:
        return self._format(self._check(x))

    def _format(self, x: int) -> str:
        return str(x)

    def parse(self, text) -> int:
        """Index of the element written as ``text`` (an :class:`Elem` or int passes through)."""
        if isinstance(text, Elem):
            if text.ring is not self:
                raise RingError("element belongs to a different ring")
            return text.index
        if isinstance(text, (int, np.integer)):
            return self._check(text)
        text = "".join(str(text).split())
        if not text:
            raise RingError("empty element literal")
        return self._parse(text)

    def _parse(self, text: str) -> int:
        try:
            return self._check(int(text))
        except (ValueError, IndexError) as exc:
            raise RingError(f"cannot parse element {text!r}") from exc

    def parse_elements(self, text: str) -> list[int]:
        """Parse a comma-separated list of element literals."""
        text = text.strip()
        if not text:
            return []
        return [self.parse(part) for part in split_top(text)]

    def elem(self, x) -> "Elem":
        return Elem(self, self.parse(x))

    def elements(self) -> Iterator["Elem"]:
        return (Elem(self, i) for i in range(self.size))

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self} |R|={self.size}>"

    def __str__(self) -> str:
        return str(self.spec) if self.spec is not None else f"ring[{self.size}]"

    # -- structure --------------------------------------------------------

    @property
    def sets(self) -> "ElementSets":
        with self._lock:
            if "sets" not in self._cache:
                self._cache["sets"] = ElementSets(self)
            return self._cache["sets"]

    def cached(self, key, compute):
        """Memoize ``compute()`` on this ring under ``key`` (thread safe)."""
        with self._lock:
            if key not in self._cache:
                self._cache[key] = compute()
            return self._cache[key]

    @cached_property
    def is_commutative(self) -> bool:
        return bool((self.mul_table == self.mul_table.T).all())

    def check_axioms(self) -> None:
        """Exhaustively check the ring axioms, raising :class:`RingError` with a witness."""
        A, M, n = self.add_table, self.mul_table, self.size
        idx = np.arange(n)
        if not (A == A.T).all():
            raise RingError("addition is not commutative")
        if not (A[self.zero] == idx).all():
            raise RingError("zero is not an additive identity")
        if not ((M[self.one] == idx).all() and (M[:, self.one] == idx).all()):
            raise RingError("one is not a multiplicative identity")
        for a in range(n):
            # (a+b)+c == a+(b+c), (ab)c == a(bc), a(b+c) == ab+ac, (b+c)a == ba+ca
            checks = {
                "addition is not associative": A[A[a]] == A[a][A],
                "multiplication is not associative": M[M[a]] == M[a][M],
                "left distributivity fails": M[a][A] == A[M[a][:, None], M[a][None, :]],
                "right distributivity fails": M[:, a][A] == A[M[:, a][:, None], M[:, a][None, :]],
            }
            for message, ok in checks.items():
                if not ok.all():
                    b, c = np.argwhere(~ok)[0]
                    raise RingError(f"{message} at a={self._format(a)}, b={self._format(int(b))}, c={self._format(int(c))}")


@dataclass(frozen=True)
class Elem:
    """A ring element; supports ``+ - * **`` and comparison within its ring."""

    ring: FiniteRing
    index: int

    def __post_init__(self):
        self.ring._check(self.index)

    def _other(self, other) -> int:
        if isinstance(other, Elem):
            if other.ring is not self.ring:
                raise RingError("elements of different rings")
            return other.index
        if isinstance(other, (int, np.integer)):
            return self.ring.from_int(int(other))
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return Elem(self.ring, self.ring.add(self.index, o))

    __radd__ = __add__

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.index))

    def __sub__(self, other):
        o = self._other(other)
        return Elem(self.ring, self.ring.sub(self.index, o))

    def __rsub__(self, other):
        o = self._other(other)
        return Elem(self.ring, self.ring.sub(o, self.index))

    def __mul__(self, other):
        o = self._other(other)
        return Elem(self.ring, self.ring.mul(self.index, o))

    def __rmul__(self, other):
        o = self._other(other)
        return Elem(self.ring, self.ring.mul(o, self.index))

    def __pow__(self, k: int):
        return Elem(self.ring, self.ring.pow(self.index, k))

    def __eq__(self, other):
        if isinstance(other, Elem):
            return self.ring is other.ring and self.index == other.index
        if isinstance(other, str):
            return self.index == self.ring.parse(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.index))

    def __int__(self):
        return self.index

    def __str__(self):
        return self.ring.display(self.index)

    def __repr__(self):
        return f"Elem({self})"


def nilpotency_index(x: Elem) -> Optional[int]:
    """Smallest ``k >= 1`` with ``x**k == 0``, or ``None`` if ``x`` is not nilpotent.

    The power sequence stops at the first repeated power, so at most ``|R|``
    multiplications are spent.
    """
    ring, p = x.ring, x.index
    seen = set()
    k = 1
    while p != ring.zero:
        if p in seen:
            return None
        seen.add(p)
        p = int(ring.mul_table[p, x.index])
        k += 1
    return k


def _as_tuple(mask) -> tuple[int, ...]:
    return tuple(int(i) for i in np.flatnonzero(mask))


class ElementSets:
    """Idem(R), Nil(R), U(R), J(R) and C(R) of a ring, computed by definition.

    The three cheap sets are built eagerly; ``jacobson`` and ``center`` on
    first access. Masks (``is_idem`` etc.) are boolean arrays over all
    elements.
    """

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        M = ring.mul_table
        idx = np.arange(ring.size)
        self.is_idem = M[idx, idx] == idx
        self.nilpotency = kernels.nilpotency_indices(M, ring.zero)
        self.is_nil = self.nilpotency > 0
        self.inverse = kernels.unit_inverses(M, ring.one)
        self.is_unit = self.inverse >= 0
        self.idempotents = _as_tuple(self.is_idem)
        self.nilpotents = _as_tuple(self.is_nil)
        self.units = _as_tuple(self.is_unit)
        self.one_minus = np.ascontiguousarray(ring.add_table[ring.one, ring.neg_table], dtype=np.int32)

    @cached_property
    def is_jacobson(self) -> np.ndarray:
        return self._jacobson(two_sided=True)

    @cached_property
    def jacobson(self) -> tuple[int, ...]:
        return _as_tuple(self.is_jacobson)

    def jacobson_one_sided(self) -> tuple[int, ...]:
        """``{x : 1 - r x is a unit for every r}``; kept as a cross-check."""
        return _as_tuple(self._jacobson(two_sided=False))

    def _jacobson(self, two_sided: bool) -> np.ndarray:
        mask = kernels.jacobson_mask(self.ring.mul_table, self.one_minus,
                                     self.is_unit.astype(np.uint8), two_sided)
        return mask.astype(bool)

    @cached_property
    def is_central(self) -> np.ndarray:
        M = self.ring.mul_table
        return (M == M.T).all(axis=1)

    @cached_property
    def center(self) -> tuple[int, ...]:
        return _as_tuple(self.is_central)

    @cached_property
    def central_idempotents(self) -> tuple[int, ...]:
        return _as_tuple(self.is_idem & self.is_central)

    def nilpotency_index(self, x) -> Optional[int]:
        k = int(self.nilpotency[self.ring.parse(x)])
        return k or None


def classify_element_sets(ring: FiniteRing, cap: int = DEFAULT_SIZE_CAP) -> ElementSets:
    """All five element sets of ``ring``, with J(R) and C(R) forced."""
    check_size("element sets", ring.size, cap)
    sets = ring.sets
    sets.jacobson
    sets.center
    return sets


class ResidueRing(FiniteRing):
    """The integers modulo ``n``."""

    kind = "residue"

    def __init__(self, n: int, spec=None):
        if n < 1:
            raise RingError("modulus must be positive")
        r = np.arange(n)
        super().__init__(np.add.outer(r, r) % n, np.multiply.outer(r, r) % n, one=1 % n, spec=spec)
        self.modulus = n

    def _parse(self, text: str) -> int:
        try:
            return int(text) % self.modulus
        except ValueError as exc:
            raise RingError(f"cannot parse {text!r} as an element of Z{self.modulus}") from exc

    def __str__(self) -> str:
        return str(self.spec) if self.spec is not None else f"Z{self.modulus}"
