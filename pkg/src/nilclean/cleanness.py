"""Clean, nil clean and weak nil clean decompositions, with checkable certificates.

A decomposition writes ``x = sign*e + w`` with ``e`` idempotent and ``w``
nilpotent (nil flavors) or a unit (clean flavors). Weak flavors allow
``sign = -1``; strong flavors also need ``e*w == w*e``.

Searches scan idempotents in ascending index order and try ``+`` before
``-`` at each one, so the certificate returned for an element is fixed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import kernels
from .ideals import Ideal, whole_ring
from .ring import DEFAULT_SIZE_CAP, Elem, FiniteRing, RingError, nilpotency_index


class Flavor(str, enum.Enum):
    CLEAN = "clean"
    WEAKLY_CLEAN = "weakly_clean"
    NIL_CLEAN = "nil_clean"
    WEAK_NIL_CLEAN = "weak_nil_clean"
    STRONGLY_CLEAN = "strongly_clean"
    STRONGLY_WEAKLY_CLEAN = "strongly_weakly_clean"
    STRONGLY_NIL_CLEAN = "strongly_nil_clean"
    STRONGLY_WEAK_NIL_CLEAN = "strongly_weak_nil_clean"

    @property
    def weak(self) -> bool:
        return self.value.endswith(("weakly_clean", "weak_nil_clean"))

    @property
    def strong(self) -> bool:
        return self.value.startswith("strongly_")

    @property
    def nil(self) -> bool:
        return self.value.endswith("nil_clean")

    def __str__(self) -> str:
        return self.value


def as_flavor(flavor: Union[str, Flavor]) -> Flavor:
    try:
        return Flavor(flavor)
    except ValueError:
        names = ", ".join(f.value for f in Flavor)
        raise RingError(f"unknown flavor {flavor!r}; choose from {names}") from None


@dataclass(frozen=True)
class DecompositionCertificate:
    """Claim that ``x = sign*e + w`` is a ``flavor`` decomposition in ``ring``."""

    flavor: Flavor
    ring: FiniteRing
    x: int
    sign: int
    e: int
    w: int
    commuting: bool
    type_tag: Optional[str] = None

    def to_dict(self) -> dict:
        R = self.ring
        return {
            "flavor": self.flavor.value,
            "ring_spec": str(R),
            "x": R.display(self.x),
            "sign": self.sign,
            "e": R.display(self.e),
            "w": R.display(self.w),
            "commuting": self.commuting,
            "type_tag": self.type_tag,
        }

    @classmethod
    def from_dict(cls, data: dict, cap: int = DEFAULT_SIZE_CAP, config: Optional[dict] = None,
                  ring: Optional[FiniteRing] = None) -> "DecompositionCertificate":
        from .specs import build_ring

        try:
            ring = ring or build_ring(data["ring_spec"], cap, config)
            return cls(
                flavor=as_flavor(data["flavor"]),
                ring=ring,
                x=ring.parse(data["x"]),
                sign=int(data["sign"]),
                e=ring.parse(data["e"]),
                w=ring.parse(data["w"]),
                commuting=bool(data["commuting"]),
                type_tag=data.get("type_tag"),
            )
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise RingError(f"malformed certificate: {exc}") from exc


def _type_tag(flavor: Flavor, sign: int) -> Optional[str]:
    if flavor.nil:
        return None
    return "I" if sign == 1 else "II"


def _target_mask(ring: FiniteRing, flavor: Flavor) -> np.ndarray:
    sets = ring.sets
    return sets.is_nil if flavor.nil else sets.is_unit


def _search(ring: FiniteRing, xs, flavor: Flavor, idem, target) -> tuple[np.ndarray, np.ndarray]:
    return kernels.decompose_search(
        ring.add_table, ring.neg_table, ring.mul_table,
        np.asarray(xs, dtype=np.int32), np.asarray(idem, dtype=np.int32),
        np.asarray(target, dtype=np.uint8), flavor.weak, flavor.strong,
    )


def decomposition_table(ring: FiniteRing, flavor: Union[str, Flavor]) -> tuple[np.ndarray, np.ndarray]:
    """``(e, sign)`` for every element of ``ring``; ``e == -1`` where none exists. Cached."""
    flavor = as_flavor(flavor)

    def compute():
        idem = np.asarray(ring.sets.idempotents, dtype=np.int32)
        e, s = _search(ring, np.arange(ring.size), flavor, idem, _target_mask(ring, flavor))
        e.setflags(write=False)
        s.setflags(write=False)
        return e, s

    return ring.cached(("decomposition", flavor), compute)


def _restricted_table(ideal: Ideal, flavor: Flavor) -> tuple[np.ndarray, np.ndarray]:
    ring = ideal.ring

    def compute():
        sets = ring.sets
        idem = np.flatnonzero(sets.is_idem & ideal.mask)
        target = _target_mask(ring, flavor) & ideal.mask
        e = np.full(ring.size, -1, dtype=np.int32)
        s = np.zeros(ring.size, dtype=np.int8)
        members = ideal.index_array
        e[members], s[members] = _search(ring, members, flavor, idem, target)
        return e, s

    return ring.cached(("restricted", flavor, ideal.key), compute)


def _certificate(ring: FiniteRing, flavor: Flavor, x: int, e: int, sign: int) -> DecompositionCertificate:
    A, M, neg = ring.add_table, ring.mul_table, ring.neg_table
    w = int(A[x, neg[e]]) if sign == 1 else int(A[x, e])
    return DecompositionCertificate(
        flavor=flavor, ring=ring, x=int(x), sign=int(sign), e=int(e), w=w,
        commuting=bool(M[e, w] == M[w, e]), type_tag=_type_tag(flavor, sign),
    )


def decompose(x: Elem, flavor: Union[str, Flavor], restrict_to: Optional[Ideal] = None
              ) -> Optional[DecompositionCertificate]:
    """First ``flavor`` decomposition of ``x``, or ``None``.

    With ``restrict_to`` both the idempotent and the nilpotent/unit part must
    lie in that ideal.
    """
    flavor = as_flavor(flavor)
    ring = x.ring
    if restrict_to is None:
        e_tab, s_tab = decomposition_table(ring, flavor)
    else:
        if restrict_to.ring is not ring:
            raise RingError("restricting ideal lives in a different ring")
        if not restrict_to.mask[x.index]:
            idem = np.flatnonzero(ring.sets.is_idem & restrict_to.mask)
            target = _target_mask(ring, flavor) & restrict_to.mask
            e, s = _search(ring, [x.index], flavor, idem, target)
            if e[0] < 0:
                return None
            return _certificate(ring, flavor, x.index, int(e[0]), int(s[0]))
        e_tab, s_tab = _restricted_table(restrict_to, flavor)
    e = int(e_tab[x.index])
    if e < 0:
        return None
    return _certificate(ring, flavor, x.index, e, int(s_tab[x.index]))


def unique_wnc_witness_count(x: Elem, ideal: Optional[Ideal] = None) -> int:
    """Number of idempotents ``e`` with ``x - e`` or ``x + e`` nilpotent (each ``e`` counted once)."""
    ring = x.ring
    if ideal is not None and not ideal.mask[x.index]:
        raise RingError(f"{x} is not in the ideal")
    sets = ring.sets
    idem = np.asarray(sets.idempotents)
    A, neg = ring.add_table, ring.neg_table
    ok = sets.is_nil[A[x.index, neg[idem]]] | sets.is_nil[A[x.index, idem]]
    return int(ok.sum())


def witness_counts(ring: FiniteRing) -> np.ndarray:
    """``unique_wnc_witness_count`` for every element at once. Cached."""
    def compute():
        sets = ring.sets
        idem = np.asarray(sets.idempotents)
        A, neg = ring.add_table, ring.neg_table
        ok = sets.is_nil[A[:, neg[idem]]] | sets.is_nil[A[:, idem]]
        return ok.sum(axis=1)

    return ring.cached(("witness_counts",), compute)


@dataclass
class IdealClassification:
    """Outcome of testing one flavor on every element of an ideal."""

    ideal: Ideal
    flavor: Flavor
    restricted: bool
    holds: bool
    failure: Optional[int]
    _e: np.ndarray
    _sign: np.ndarray

    def __bool__(self) -> bool:
        return self.holds

    def certificate(self, x) -> Optional[DecompositionCertificate]:
        ring = self.ideal.ring
        x = ring.parse(x)
        if not self.ideal.mask[x]:
            raise RingError(f"{ring.display(x)} is not in the ideal")
        e = int(self._e[x])
        if e < 0:
            return None
        return _certificate(ring, self.flavor, x, e, int(self._sign[x]))

    @property
    def witnesses(self) -> dict[int, DecompositionCertificate]:
        """Certificate for every element that has one."""
        out = {}
        for x in self.ideal.elements:
            c = self.certificate(x)
            if c is not None:
                out[x] = c
        return out

    @property
    def failure_display(self) -> Optional[str]:
        return None if self.failure is None else self.ideal.ring.display(self.failure)


def classify_ideal(ideal: Ideal, flavor: Union[str, Flavor], restricted: bool = False) -> IdealClassification:
    """Does every element of ``ideal`` admit a ``flavor`` decomposition?

    ``restricted`` draws the witnesses from the ideal itself. On failure the
    least failing element is reported.
    """
    flavor = as_flavor(flavor)
    ring = ideal.ring
    if restricted:
        e, s = _restricted_table(ideal, flavor)
    else:
        e, s = decomposition_table(ring, flavor)
    missing = ideal.mask & (e < 0)
    failure = int(np.argmax(missing)) if missing.any() else None
    return IdealClassification(ideal, flavor, restricted, failure is None, failure, e, s)


def is_flavor_ideal(ideal: Ideal, flavor: Union[str, Flavor], restricted: bool = False) -> bool:
    return classify_ideal(ideal, flavor, restricted).holds


def classify_ring(ring: FiniteRing, flavor: Union[str, Flavor]) -> IdealClassification:
    """Classification of the improper ideal ``R``."""
    return classify_ideal(whole_ring(ring), flavor)


def ideal_profile(ideal: Ideal, restricted: bool = False) -> dict[Flavor, bool]:
    return {f: classify_ideal(ideal, f, restricted).holds for f in Flavor}


def is_uniquely_wnc(ideal: Ideal) -> bool:
    """Each element has exactly one weak nil clean idempotent."""
    return bool((witness_counts(ideal.ring)[ideal.mask] == 1).all())


def _is_unit(ring: FiniteRing, w: int) -> bool:
    M = ring.mul_table
    return bool(((M[w] == ring.one) & (M[:, w] == ring.one)).any())


def verify_certificate(cert: Union[DecompositionCertificate, dict], cap: int = DEFAULT_SIZE_CAP,
                       config: Optional[dict] = None) -> bool:
    """Re-check a certificate from ring arithmetic alone.

    Accepts a :class:`DecompositionCertificate` or its JSON dict. Raises
    :class:`RingError` when the certificate is malformed (unknown flavor,
    elements not in the ring); returns ``False`` when it is well formed but
    wrong.
    """
    if isinstance(cert, dict):
        cert = DecompositionCertificate.from_dict(cert, cap, config)
    R = cert.ring
    for v in (cert.x, cert.e, cert.w):
        if not isinstance(v, (int, np.integer)) or not 0 <= v < R.size:
            raise RingError(f"malformed certificate: element index {v!r} outside the ring")
    flavor = as_flavor(cert.flavor)
    if cert.sign not in (1, -1):
        return False
    if cert.sign == -1 and not flavor.weak:
        return False
    if R.mul(cert.e, cert.e) != cert.e:
        return False
    signed_e = cert.e if cert.sign == 1 else R.neg(cert.e)
    if R.add(signed_e, cert.w) != cert.x:
        return False
    if flavor.nil:
        if nilpotency_index(Elem(R, cert.w)) is None:
            return False
    elif not _is_unit(R, cert.w):
        return False
    commutes = R.mul(cert.e, cert.w) == R.mul(cert.w, cert.e)
    if cert.commuting and not commutes:
        return False
    if flavor.strong and not (cert.commuting and commutes):
        return False
    if cert.type_tag != _type_tag(flavor, cert.sign):
        return False
    return True
