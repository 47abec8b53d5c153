"""Exhaustive checks of weak nil clean ideal statements over a corpus of small rings.

Each statement is a universally quantified property. A checker walks the
corpus, counts instances (and instances where an implication's hypothesis
fails, reported as vacuous) and records counterexamples.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from pathlib import Path
from typing import Callable, Optional, Union

import numpy as np

from .cleanness import (
    Flavor,
    classify_ideal,
    decomposition_table,
    is_uniquely_wnc,
)
from .constructions import (
    CornerRing,
    IdealizationRing,
    MoritaRing,
    ProductRing,
    TriangularRing,
)
from .ideals import (
    DEFAULT_LATTICE_CAP,
    Ideal,
    QuotientRing,
    all_ideals,
    ideal_generated_by,
    image_ideal,
    is_ideal_mask,
    is_nil_ideal,
    lift_idempotent_brute,
    lift_idempotent_mod_nil,
    whole_ring,
)
from .ring import DEFAULT_SIZE_CAP, FiniteRing, RingError
from .specs import Corner, Quotient, build_ring

WNC = Flavor.WEAK_NIL_CLEAN
NC = Flavor.NIL_CLEAN
SWNC = Flavor.STRONGLY_WEAK_NIL_CLEAN
SWC = Flavor.STRONGLY_WEAKLY_CLEAN
SNC = Flavor.STRONGLY_NIL_CLEAN

MAX_STORED_COUNTEREXAMPLES = 25


# -- corpus ---------------------------------------------------------------------------


def _default_products():
    pairs = [[a, b] for a in range(2, 13) for b in range(a, 13)]
    return pairs + [[2, 2, 2], [2, 3, 4], [2, 3, 6]]


def _default_triangular():
    return [[2, n] for n in range(2, 7)] + [[3, 2]]


def _default_idealizations():
    return [[n, d] for n in range(2, 13) for d in range(2, n + 1) if n % d == 0]


def _default_morita():
    out = []
    for n in (2, 3, 4):
        for pairing in ("zero", "mul"):
            out.append(f"Morita(Z{n}, Z{n}, Z{n}, Z{n}, {pairing})")
    out += ["Morita(Z4, Z2, Z2, Z2, zero)", "Morita(Z2, Z4, Z2, Z2, zero)", "Morita(Z4, Z4, Z2, Z4, zero)"]
    return out


@dataclass
class CorpusConfig:
    """Which rings to check. The defaults are the standard corpus.

    ``product_factors`` lists moduli tuples (``[2, 3]`` is ``Z2 x Z3``),
    ``triangular`` lists ``[k, n]`` for ``T_k(Z_n)``, ``idealizations`` lists
    ``[n, d]`` for ``Z_n(Z_d)``; ``morita`` and ``extra_rings`` are ring
    expressions.
    """

    zn_max: int = 50
    product_factors: list = field(default_factory=_default_products)
    triangular: list = field(default_factory=_default_triangular)
    idealizations: list = field(default_factory=_default_idealizations)
    morita: list = field(default_factory=_default_morita)
    extra_rings: list = field(default_factory=list)
    ring_cap: int = DEFAULT_SIZE_CAP
    lattice_cap: int = DEFAULT_LATTICE_CAP

    @classmethod
    def empty(cls, **overrides) -> "CorpusConfig":
        base = dict(zn_max=0, product_factors=[], triangular=[], idealizations=[], morita=[], extra_rings=[])
        base.update(overrides)
        return cls(**base)

    @classmethod
    def from_dict(cls, data: dict) -> "CorpusConfig":
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise RingError(f"unknown corpus config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, source: Union[str, Path, None]) -> "CorpusConfig":
        if source in (None, "default"):
            return cls()
        return cls.from_dict(json.loads(Path(source).read_text()))

    def ring_specs(self) -> list[str]:
        specs = [f"Z{n}" for n in range(1, self.zn_max + 1)]
        specs += [" x ".join(f"Z{n}" for n in f) for f in self.product_factors]
        specs += [f"T{k}(Z{n})" for k, n in self.triangular]
        specs += [f"Idealization(Z{n}, Z{d})" for n, d in self.idealizations]
        specs += list(self.morita) + list(self.extra_rings)
        return list(dict.fromkeys(specs))


@dataclass
class CorpusEntry:
    label: str
    ring: FiniteRing
    lattice_cap: int

    @property
    def ideals(self) -> list[Ideal]:
        return all_ideals(self.ring, self.lattice_cap)


def build_corpus(config: Optional[CorpusConfig] = None) -> list[CorpusEntry]:
    """Rings of the corpus, in config order, each with its ideal lattice computed."""
    config = config or CorpusConfig()
    entries = []
    for spec in config.ring_specs():
        ring = build_ring(spec, config.ring_cap)
        entry = CorpusEntry(str(ring.spec), ring, config.lattice_cap)
        entry.ideals
        entries.append(entry)
    return entries


# -- reports ------------------------------------------------------------------------


@dataclass
class TheoremReport:
    statement: str
    claim: str
    kind: str
    instances: int = 0
    vacuous: int = 0
    counterexample_count: int = 0
    counterexamples: list = field(default_factory=list)
    verdict: str = "pass"
    notes: str = ""
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def non_vacuous(self) -> int:
        return self.instances - self.vacuous

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("wall_time")
        return d


class _Tally:
    def __init__(self, report: TheoremReport):
        self.report = report

    def check(self, ok: bool, vacuous: bool = False, **payload):
        r = self.report
        r.instances += 1
        r.vacuous += bool(vacuous)
        if not ok:
            r.counterexample_count += 1
            if len(r.counterexamples) < MAX_STORED_COUNTEREXAMPLES:
                r.counterexamples.append({k: v for k, v in payload.items()})

    def note(self, text: str):
        r = self.report
        r.notes = f"{r.notes}; {text}" if r.notes else text

    def implies(self, hypothesis: bool, conclusion: Callable[[], bool], **payload):
        if not hypothesis:
            self.check(True, vacuous=True)
            return
        self.check(bool(conclusion()), **payload)


# -- shared helpers --------------------------------------------------------------------


def _gens(ideal: Ideal) -> str:
    return "<" + ",".join(ideal.ring.display(g) for g in ideal.generators) + ">"


def _holds(ideal: Ideal, flavor: Flavor) -> bool:
    return classify_ideal(ideal, flavor).holds


def _mask_ideal(ring: FiniteRing, mask) -> Ideal:
    mask = np.asarray(mask, dtype=bool)
    return Ideal(ring, tuple(int(i) for i in np.flatnonzero(mask)[:1]) or (ring.zero,), mask)


def corner_of(ring: FiniteRing, f: int) -> CornerRing:
    spec = Corner(ring.spec, ring.display(f)) if ring.spec is not None else None
    return ring.cached(("corner", int(f)), lambda: CornerRing(ring, int(f), spec=spec))


def quotient_of(ring: FiniteRing, ideal: Ideal) -> QuotientRing:
    spec = None
    if ring.spec is not None:
        spec = Quotient(ring.spec, tuple(ring.display(g) for g in ideal.generators))
    return ring.cached(("quotient", ideal.key), lambda: QuotientRing(ring, ideal, spec=spec))


def complete_central_sets(ring: FiniteRing, max_size: int = 3) -> list[tuple[int, ...]]:
    """Complete sets of nonzero, pairwise orthogonal central idempotents, size <= ``max_size``."""
    A, M = ring.add_table, ring.mul_table
    central = [e for e in ring.sets.central_idempotents if e != ring.zero]
    out = [(ring.one,)]
    for k in range(2, max_size + 1):
        for combo in combinations(central, k):
            if any(M[a, b] != ring.zero for a, b in combinations(combo, 2)):
                continue
            total = ring.zero
            for e in combo:
                total = int(A[total, e])
            if total == ring.one:
                out.append(combo)
    for combo in out:
        assert all(M[a, b] == ring.zero for a, b in combinations(combo, 2)), "not orthogonal"
        assert all(M[e, e] == e for e in combo), "not idempotent"
    return out


def _corner_image(ring: FiniteRing, e: int, ideal: Ideal) -> tuple[CornerRing, Ideal]:
    """``eR`` and ``eI`` for a central idempotent ``e``."""
    c = corner_of(ring, e)
    mask = np.zeros(c.size, dtype=bool)
    mask[c.position[ring.mul_table[e, ideal.index_array]]] = True
    return c, _mask_ideal(c, mask)


def _entries(corpus, kind=None):
    for entry in corpus:
        if kind is None or isinstance(entry.ring, kind):
            yield entry


# -- statement checkers --------------------------------------------------------------------


def check_l1(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        A, neg = R.add_table, R.neg_table
        sets = R.sets
        e_tab, s_tab = decomposition_table(R, WNC)
        two = R.from_int(2)
        minus_one = int(neg[R.one])
        for I in entry.ideals:
            def conclusion():
                if not _holds(I, Flavor.WEAKLY_CLEAN):
                    return False
                xs = I.index_array
                e, s = e_tab[xs].astype(np.int64), s_tab[xs]
                n = np.where(s == 1, A[xs, neg[e]], A[xs, e])
                f = sets.one_minus[e]
                u = np.where(s == 1, A[A[R.mul_table[two, e], minus_one], n], A[minus_one, n])
                return bool(sets.is_idem[f].all() and sets.is_unit[u].all() and (A[f, u] == xs).all())
            t.implies(_holds(I, WNC), conclusion, ring=entry.label, ideal=_gens(I))


def check_ppp1(corpus, t: _Tally):
    for entry in _entries(corpus):
        sets = entry.ring.sets
        for I in entry.ideals:
            t.implies(_holds(I, WNC), lambda: bool(sets.is_nil[I.mask & sets.is_jacobson].all()),
                      ring=entry.label, ideal=_gens(I))


def check_jac(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        sets = R.sets

        def conclusion():
            if not (sets.is_nil[sets.is_jacobson]).all():
                return False
            return not R.is_commutative or bool((sets.is_jacobson == sets.is_nil).all())
        t.implies(_holds(whole_ring(R), WNC), conclusion, ring=entry.label,
                  jacobson=[R.display(x) for x in sets.jacobson],
                  nilpotents=[R.display(x) for x in sets.nilpotents])


def check_strong(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        A, M, neg = R.add_table, R.mul_table, R.neg_table
        sets = R.sets
        one, two, minus_one = R.one, R.from_int(2), int(neg[R.one])
        e_tab, s_tab = decomposition_table(R, SWNC)
        idem = np.asarray(sets.idempotents, dtype=np.int64)
        sq = M[np.arange(R.size), np.arange(R.size)]
        minus_sq = A[np.arange(R.size), neg[sq]]  # x - x^2
        plus_sq = A[np.arange(R.size), sq]        # x + x^2

        def commute(a, b):
            return M[a, b] == M[b, a]

        for I in entry.ideals:
            xs = I.index_array

            # part 1: strongly weak nil clean => strongly weakly clean, with x -/+ x^2 nilpotent
            def part1():
                if not _holds(I, SWC):
                    return False
                e, s = e_tab[xs].astype(np.int64), s_tab[xs]
                n = np.where(s == 1, A[xs, neg[e]], A[xs, e])
                poly = np.where(s == 1, minus_sq[xs], plus_sq[xs])
                f = sets.one_minus[e]
                two_e = M[two, e]
                # +: x = (1-e) + (2e - 1 + n);  -: x = -(1-e) + (1 - 2e + n)
                u = np.where(s == 1, A[A[two_e, minus_one], n], A[A[one, neg[two_e]], n])
                signed_f = np.where(s == 1, f, neg[f])
                return bool(sets.is_nil[poly].all() and sets.is_unit[u].all()
                            and (A[signed_f, u] == xs).all() and commute(f, u).all())
            t.implies(_holds(I, SWNC), part1, ring=entry.label, ideal=_gens(I), part=1)

            # part 2, read per decomposition: a strongly weakly clean x = s*e + u whose
            # matching x -/+ x^2 is nilpotent yields x = s*(1-e) + w with w nilpotent
            e = idem[None, :]
            x = xs[:, None]
            ok_all = True
            has_good = np.zeros(len(xs), dtype=bool)
            for s in (1, -1):
                u = A[x, neg[e]] if s == 1 else A[x, e]
                valid = sets.is_unit[u] & commute(e, u)
                poly = (minus_sq if s == 1 else plus_sq)[x]
                good = valid & sets.is_nil[poly]
                two_e = M[two, e]
                w = A[A[two_e, minus_one], u] if s == 1 else A[A[one, neg[two_e]], u]
                f = sets.one_minus[e]
                signed_f = f if s == 1 else neg[f]
                built = sets.is_nil[w] & commute(f, w) & (A[signed_f, w] == x)
                ok_all &= bool((built | ~good).all())
                has_good |= good.any(axis=1)
            hyp = bool(has_good.all()) and _holds(I, SWC)
            t.check(ok_all, ring=entry.label, ideal=_gens(I), part="2-construction")
            t.implies(hyp, lambda: _holds(I, SWNC), ring=entry.label, ideal=_gens(I), part="2")


def check_uniqc(corpus, t: _Tally):
    for entry in _entries(corpus):
        sets = entry.ring.sets
        for I in entry.ideals:
            t.implies(is_uniquely_wnc(I), lambda: bool(sets.is_central[I.mask & sets.is_idem].all()),
                      ring=entry.label, ideal=_gens(I))


def check_t111(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        for I in entry.ideals:
            free = classify_ideal(I, WNC)
            inside = classify_ideal(I, WNC, restricted=True)
            ok = free.holds == inside.holds
            if ok and inside.holds:
                for x in I.elements:
                    c = inside.certificate(x)
                    ok &= bool(I.mask[c.e] and I.mask[c.w])
            t.check(ok, ring=entry.label, ideal=_gens(I), unrestricted=free.holds, restricted=inside.holds)


def check_local(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        trivial = set(R.sets.idempotents) <= {R.zero, R.one}
        for I in entry.ideals:
            if I.is_whole:
                continue
            t.implies(trivial and _holds(I, WNC), lambda: is_nil_ideal(I), ring=entry.label, ideal=_gens(I))


def check_main(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        lhs = _holds(whole_ring(R), WNC)
        rhs, witness = False, None
        for e in R.sets.central_idempotents:
            a = ideal_generated_by(R, [e])
            b = ideal_generated_by(R, [R.sets.one_minus[e]])
            if _holds(a, WNC) and _holds(b, WNC) and (_holds(a, NC) or _holds(b, NC)):
                rhs, witness = True, R.display(e)
                break
        t.check(lhs == rhs, ring=entry.label, expected=lhs, actual=rhs, central_idempotent=witness)


def _set_condition(pieces: list[Ideal]) -> bool:
    return all(_holds(p, WNC) for p in pieces) and sum(not _holds(p, NC) for p in pieces) <= 1


def check_cset(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        lhs = _holds(whole_ring(R), WNC)
        rhs = any(_set_condition([ideal_generated_by(R, [e]) for e in es]) for es in complete_central_sets(R))
        t.check(lhs == rhs, ring=entry.label, expected=lhs, actual=rhs)


def check_peirce(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        sets_list = complete_central_sets(R)
        for I in entry.ideals:
            lhs = _holds(I, WNC)
            rhs = any(_set_condition([_corner_image(R, e, I)[1] for e in es]) for es in sets_list)
            t.check(lhs == rhs, ring=entry.label, ideal=_gens(I), expected=lhs, actual=rhs)


def check_quot(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        A, neg = R.add_table, R.neg_table
        ideals = entry.ideals
        for I in ideals:
            if not is_nil_ideal(I):
                continue
            Q = quotient_of(R, I)
            qe, qs = decomposition_table(Q, WNC)
            for I1 in ideals:
                if not I <= I1:
                    continue
                lhs = _holds(I1, WNC)
                image = image_ideal(Q, I1)
                rhs = _holds(image, WNC)
                ok = lhs == rhs
                if ok and rhs:
                    # lift each quotient witness and confirm the decomposition upstairs
                    for x in I1.elements:
                        q = int(Q.projection[x])
                        e = lift_idempotent_mod_nil(R, I, Q.lift(int(qe[q])))
                        w = int(A[x, neg[e]]) if qs[q] == 1 else int(A[x, e])
                        if not R.sets.is_nil[w]:
                            ok = False
                            break
                t.check(ok, ring=entry.label, nil_ideal=_gens(I), ideal=_gens(I1), expected=lhs, actual=rhs)


def check_hom(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        for K in entry.ideals:
            Q = quotient_of(R, K)
            for I in entry.ideals:
                t.implies(_holds(I, WNC), lambda: _holds(image_ideal(Q, I), WNC),
                          ring=entry.label, ideal=_gens(I), kernel=_gens(K))


def _plus_only(ideal: Ideal) -> Optional[int]:
    """Least element with an ``e + n`` form but no ``-e + n`` form."""
    R = ideal.ring
    sets = R.sets
    idem = np.asarray(sets.idempotents)
    for x in ideal.elements:
        plus = sets.is_nil[R.add_table[x, R.neg_table[idem]]].any()
        minus = sets.is_nil[R.add_table[x, idem]].any()
        if plus and not minus:
            return x
    return None


def _minus_only(ideal: Ideal) -> Optional[int]:
    R = ideal.ring
    sets = R.sets
    idem = np.asarray(sets.idempotents)
    for x in ideal.elements:
        plus = sets.is_nil[R.add_table[x, R.neg_table[idem]]].any()
        minus = sets.is_nil[R.add_table[x, idem]].any()
        if minus and not plus:
            return x
    return None


def check_prod(corpus, t: _Tally):
    for entry in _entries(corpus, ProductRing):
        R = entry.ring
        factor_ideals = [all_ideals(p, entry.lattice_cap) for p in R.parts]
        for combo in product(*factor_ideals):
            mask = np.ones(1, dtype=bool)
            for I in combo:
                mask = np.outer(mask, I.mask).ravel()
            P = _mask_ideal(R, mask)
            lhs = _holds(P, WNC)
            wnc = [_holds(I, WNC) for I in combo]
            not_nc = [k for k, I in enumerate(combo) if not _holds(I, NC)]
            rhs = all(wnc) and len(not_nc) <= 1
            ok = lhs == rhs
            witness = None
            if ok and all(wnc) and len(not_nc) >= 2:
                # two factors that are not nil clean: an element mixing a "+ only"
                # coordinate with a "- only" coordinate has no decomposition
                coords = [p.zero for p in R.parts]
                coords[not_nc[0]] = _plus_only(combo[not_nc[0]])
                coords[not_nc[1]] = _minus_only(combo[not_nc[1]])
                x = R.encode(coords)
                witness = R.display(x)
                ok = decomposition_table(R, WNC)[0][x] < 0
            t.check(ok, ring=entry.label, ideal="x".join(_gens(I) for I in combo),
                    expected=rhs, actual=lhs, witness=witness)


def check_d211(corpus, t: _Tally):
    for entry in _entries(corpus, TriangularRing):
        T = entry.ring
        B = T.base
        diag = T.coords[:, [T.slot[i, i] for i in range(T.k)]]
        ts, bs = T.sets, B.sets
        diag_idem = bs.is_idem[diag].all(axis=1)
        diag_nil = bs.is_nil[diag].all(axis=1)
        for x in range(T.size):
            ok = (not ts.is_idem[x] or diag_idem[x]) and ts.is_nil[x] == diag_nil[x]
            t.check(bool(ok), ring=entry.label, element=T.display(x))


def check_t2(corpus, t: _Tally):
    for entry in _entries(corpus, TriangularRing):
        T = entry.ring
        if T.k != 2:
            continue
        B = T.base
        a = T.coords[:, T.slot[0, 0]]
        b = T.coords[:, T.slot[1, 1]]
        base_ideals = all_ideals(B, entry.lattice_cap)
        for I, J in product(base_ideals, repeat=2):
            mask = I.mask[a] & J.mask[b]
            if not is_ideal_mask(T, mask):
                t.check(False, ring=entry.label, ideal=f"[[{_gens(I)},R],[0,{_gens(J)}]]", detail="not an ideal")
                continue
            S = _mask_ideal(T, mask)
            lhs = _holds(S, WNC)
            rhs = _holds(I, WNC) and _holds(J, WNC) and (_holds(I, NC) or _holds(J, NC))
            t.check(lhs == rhs, ring=entry.label, ideal=f"[[{_gens(I)},R],[0,{_gens(J)}]]",
                    expected=rhs, actual=lhs)


def check_rm(corpus, t: _Tally):
    for entry in _entries(corpus, IdealizationRing):
        RM = entry.ring
        R, Mod = RM.base, RM.module
        r = np.arange(RM.size) // Mod.size
        m = np.arange(RM.size) % Mod.size
        s, bs = RM.sets, R.sets
        idem_ok = s.is_idem == (bs.is_idem[r] & (m == 0))
        nil_ok = s.is_nil == bs.is_nil[r]
        # (r,m)^k == (r^k, k r^(k-1) m)
        power = np.arange(RM.size)
        r_prev = np.full(RM.size, R.one)  # r^(k-1)
        power_ok = np.ones(RM.size, dtype=bool)
        for k in range(1, RM.size + 1):
            if k > 1:
                power = RM.mul_table[power, np.arange(RM.size)]
                r_prev = R.mul_table[r_prev, r]
            r_k = R.mul_table[r_prev, r]
            acted = Mod.coords[Mod.left_action[r_prev, m]]
            scaled = np.ravel_multi_index(tuple(((acted * k) % Mod.factors).T), Mod.factors)
            power_ok &= power == r_k * Mod.size + scaled
        for x in range(RM.size):
            t.check(bool(idem_ok[x] and nil_ok[x] and power_ok[x]), ring=entry.label, element=RM.display(x),
                    idempotent=bool(idem_ok[x]), nilpotent=bool(nil_ok[x]), power=bool(power_ok[x]))


def check_rm1(corpus, t: _Tally):
    skipped = skipped_agree = 0
    for entry in _entries(corpus, IdealizationRing):
        RM = entry.ring
        subs = RM.module.submodules()
        for I in all_ideals(RM.base, entry.lattice_cap):
            for N in subs:
                mask = RM.submodule_ideal(I.mask, N)
                label = f"{_gens(I)}({'{' + ','.join(RM.module.display(v) for v in np.flatnonzero(N)) + '}'})"
                lhs = _holds(I, WNC)
                rhs = _holds(_mask_ideal(RM, mask), WNC)
                if not is_ideal_mask(RM, mask):
                    # I x N is an ideal only when IM lies in N; compare the subsets anyway
                    skipped += 1
                    skipped_agree += lhs == rhs
                    continue
                t.check(lhs == rhs, ring=entry.label, ideal=label, expected=lhs, actual=rhs)
    t.note(f"{skipped} pairs with IM not inside N give a non-ideal I(N) and are not instances; "
           f"the equivalence holds for {skipped_agree} of those subsets")


def check_corner(corpus, t: _Tally):
    for entry in _entries(corpus):
        R = entry.ring
        host_ok = decomposition_table(R, SWNC)[0] >= 0
        ring_swnc = bool(host_ok.all())
        for f in R.sets.idempotents:
            C = corner_of(R, f)
            corner_ok = decomposition_table(C, SWNC)[0] >= 0
            agree = host_ok[C.carrier] == corner_ok
            bad = [R.display(int(C.carrier[i])) for i in np.flatnonzero(~agree)[:3]]
            ok = bool(agree.all()) and (not ring_swnc or bool(corner_ok.all()))
            t.check(ok, ring=entry.label, idempotent=R.display(f), elements=bad)


def _closed_module_image(mod, mask, acting_left_mask=None) -> bool:
    members = np.flatnonzero(mask)
    return bool(mask[mod.add_table[np.ix_(members, members)]].all()
                and mask[mod.left_action[:, members]].all()
                and mask[mod.right_action[members, :]].all())


def check_morl(corpus, t: _Tally):
    for entry in _entries(corpus, MoritaRing):
        T = entry.ring
        ctx = T.context
        A, B, M, N = ctx.A, ctx.B, ctx.M, ctx.N
        pA, pB = np.asarray(ctx.pair_A), np.asarray(ctx.pair_B)
        for I in entry.ideals:
            c = T.coords[I.index_array]
            masks = []
            for k, size in enumerate(T.radices):
                mk = np.zeros(size, dtype=bool)
                mk[c[:, k]] = True
                masks.append(mk)
            a1, m1, n1, b1 = masks
            failures = []
            if not is_ideal_mask(A, a1):
                failures.append("p_A(I) not an ideal of A")
            if not is_ideal_mask(B, b1):
                failures.append("p_B(I) not an ideal of B")
            if not _closed_module_image(M, m1):
                failures.append("p_M(I) not a sub-bimodule")
            if not _closed_module_image(N, n1):
                failures.append("p_N(I) not a sub-bimodule")
            containments = {
                "M1 N in A1": a1[pA[m1, :]].all(),
                "N1 M in B1": b1[pB[n1, :]].all(),
                "A1 M in M1": m1[M.left_action[a1, :]].all(),
                "B1 N in N1": n1[N.left_action[b1, :]].all(),
                "M N1 in A1": a1[pA[:, n1]].all(),
                "N M1 in B1": b1[pB[:, m1]].all(),
                "M B1 in M1": m1[M.right_action[:, b1]].all(),
                "N A1 in N1": n1[N.right_action[:, a1]].all(),
            }
            failures += [k for k, v in containments.items() if not v]
            full = np.einsum("a,m,n,b->amnb", a1, m1, n1, b1).ravel()
            if not (full == I.mask).all():
                failures.append("I is not the product of its projections")
            t.check(not failures, ring=entry.label, ideal=_gens(I), failures=failures)


def _projection_ideal(ring: FiniteRing, mask) -> Ideal:
    return _mask_ideal(ring, mask)


def check_morp(corpus, t: _Tally):
    for entry in _entries(corpus, MoritaRing):
        T = entry.ring
        A, B = T.context.A, T.context.B
        for I in entry.ideals:
            c = T.coords[I.index_array]
            a1 = np.zeros(A.size, dtype=bool)
            a1[c[:, 0]] = True
            b1 = np.zeros(B.size, dtype=bool)
            b1[c[:, 3]] = True
            t.implies(_holds(I, SWNC),
                      lambda: _holds(_projection_ideal(A, a1), SWNC) and _holds(_projection_ideal(B, b1), SWNC),
                      ring=entry.label, ideal=_gens(I))


def check_morz(corpus, t: _Tally):
    for entry in _entries(corpus, MoritaRing):
        T = entry.ring
        ctx = T.context
        if not ctx.is_zero_pairing:
            continue
        A, B = ctx.A, ctx.B

        def hypothesis(a1: Ideal, b1: Ideal) -> bool:
            return (_holds(a1, WNC) and _holds(b1, WNC)
                    and (_holds(a1, SNC) or _holds(b1, SNC)))

        for I in entry.ideals:
            c = T.coords[I.index_array]
            a1 = np.zeros(A.size, dtype=bool)
            a1[c[:, 0]] = True
            b1 = np.zeros(B.size, dtype=bool)
            b1[c[:, 3]] = True
            t.implies(hypothesis(_mask_ideal(A, a1), _mask_ideal(B, b1)), lambda: _holds(I, WNC),
                      ring=entry.label, ideal=_gens(I))
        full_m = np.ones(ctx.M.size, dtype=bool)
        full_n = np.ones(ctx.N.size, dtype=bool)
        for a1, b1 in product(all_ideals(A, entry.lattice_cap), all_ideals(B, entry.lattice_cap)):
            mask = np.einsum("a,m,n,b->amnb", a1.mask, full_m, full_n, b1.mask).ravel()
            label = f"[[{_gens(a1)},M],[N,{_gens(b1)}]]"
            if not is_ideal_mask(T, mask):
                t.check(False, ring=entry.label, ideal=label, detail="construction is not an ideal")
                continue
            t.implies(hypothesis(a1, b1), lambda: _holds(_mask_ideal(T, mask), WNC), ring=entry.label, ideal=label)


# -- catalog ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class Statement:
    id: str
    claim: str
    kind: str  # "iff" or "implies"
    checker: Callable
    notes: str = ""


CATALOG: dict[str, Statement] = {s.id: s for s in [
    Statement("STMT-L1", "weak nil clean ideal => weakly clean ideal, via x=(1-e)+(2e-1+n) or x=(1-e)+(-1+n)",
              "implies", check_l1),
    Statement("STMT-PPP1", "I weak nil clean => I & J(R) is a nil ideal", "implies", check_ppp1),
    Statement("STMT-JAC", "R weak nil clean => J(R) in Nil(R); equality when R is commutative",
              "implies", check_jac),
    Statement("STMT-STRONG", "strongly weak nil clean ideal <=> strongly weakly clean with x-x^2 or x+x^2 "
              "nilpotent for the matching type", "implies", check_strong,
              notes="part 2 is checked per decomposition: the type-I/II hypothesis is applied to each "
                    "strongly weakly clean decomposition found"),
    Statement("STMT-UNIQC", "uniquely weak nil clean ideal => its idempotents are central", "implies", check_uniqc),
    Statement("STMT-T111", "I weak nil clean <=> every x in I is +-e+n with e in Idem(I), n in Nil(I)",
              "iff", check_t111),
    Statement("STMT-LOCAL", "no nontrivial idempotents => proper weak nil clean ideals are nil",
              "implies", check_local),
    Statement("STMT-MAIN", "R weak nil clean <=> some central e has <e>, <1-e> weak nil clean and one nil clean",
              "iff", check_main),
    Statement("STMT-CSET", "R weak nil clean <=> complete central idempotent set with every <e_i> weak nil clean "
              "and at most one not nil clean", "iff", check_cset,
              notes="complete sets of size <= 3"),
    Statement("STMT-PEIRCE", "I weak nil clean <=> complete central idempotent set with e_iI weak nil clean in e_iR "
              "and at most one not nil clean", "iff", check_peirce, notes="complete sets of size <= 3"),
    Statement("STMT-QUOT", "for a nil ideal I in I1: I1 weak nil clean in R <=> I1/I weak nil clean in R/I",
              "iff", check_quot, notes="quotient witnesses are lifted by Newton iteration and re-checked in R"),
    Statement("STMT-HOM", "images of weak nil clean ideals under quotient maps are weak nil clean",
              "implies", check_hom, notes="homomorphic images realized as quotients R/K"),
    Statement("STMT-PROD", "prod I_i weak nil clean <=> each I_i weak nil clean and at most one not nil clean",
              "iff", check_prod,
              notes="finite products only; the infinite-product counterexample is out of scope"),
    Statement("STMT-D211", "in T_n(R): idempotents have idempotent diagonals; N nilpotent <=> diagonal nilpotent",
              "implies", check_d211),
    Statement("STMT-T2", "[[I,R],[0,J]] weak nil clean in T_2(R) <=> I, J weak nil clean and one nil clean",
              "iff", check_t2),
    Statement("STMT-RM", "in R(M): idempotents are (e,0), nilpotents are (n,m), (r,m)^k=(r^k, k r^(k-1) m)",
              "iff", check_rm),
    Statement("STMT-RM1", "I weak nil clean in R <=> I(N) weak nil clean in R(M) for submodules N",
              "iff", check_rm1),
    Statement("STMT-CORNER", "a in fRf strongly weak nil clean in R <=> in fRf; strongly weak nil clean rings "
              "have strongly weak nil clean corners", "iff", check_corner),
    Statement("STMT-MORL", "ideals of a Morita context ring are [[A1,M1],[N1,B1]] with the context containments",
              "implies", check_morl, notes="forward containments only"),
    Statement("STMT-MORP", "I strongly weak nil clean => p_A(I), p_B(I) strongly weak nil clean",
              "implies", check_morp),
    Statement("STMT-MORZ", "zero pairing: A1, B1 weak nil clean, one strongly nil clean => [[A1,M1],[N1,B1]] weak "
              "nil clean", "implies", check_morz,
              notes="strongly nil clean ideal: every x = e + n with en = ne"),
]}


def run_statement(statement_id: str, corpus: Union[CorpusConfig, list, None] = None) -> TheoremReport:
    """Check one catalog statement over ``corpus`` (a config or a built corpus)."""
    if statement_id not in CATALOG:
        raise KeyError(f"unknown statement {statement_id!r}")
    if corpus is None or isinstance(corpus, CorpusConfig):
        corpus = build_corpus(corpus)
    st = CATALOG[statement_id]
    report = TheoremReport(st.id, st.claim, st.kind, notes=st.notes)
    start = time.perf_counter()
    try:
        st.checker(corpus, _Tally(report))
    except Exception as exc:  # reported, not raised: one broken checker must not sink the batch
        report.verdict = "error"
        report.counterexamples.append({"error": f"{type(exc).__name__}: {exc}"})
    else:
        report.verdict = "pass" if report.counterexample_count == 0 else "fail"
    report.wall_time = time.perf_counter() - start
    return report


def run_all(corpus: Union[CorpusConfig, list, None] = None, jobs: int = 1) -> list[TheoremReport]:
    """Every catalog statement, reports ordered by statement id."""
    if corpus is None or isinstance(corpus, CorpusConfig):
        corpus = build_corpus(corpus)
    ids = sorted(CATALOG)
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            reports = list(pool.map(lambda i: run_statement(i, corpus), ids))
    else:
        reports = [run_statement(i, corpus) for i in ids]
    return sorted(reports, key=lambda r: r.statement)


# -- oracle cross-checks ------------------------------------------------------------------------


def jacobson_disagreements(corpus) -> list[str]:
    """Corpus rings where the two-sided and one-sided radical tests differ."""
    out = []
    for entry in corpus:
        sets = entry.ring.sets
        if sets.jacobson != sets.jacobson_one_sided():
            out.append(entry.label)
    return out


def lifting_disagreements(corpus) -> tuple[int, list[dict]]:
    """Compare Newton lifting with brute-force search on every (nil ideal, a) pair."""
    count, bad = 0, []
    for entry in corpus:
        R = entry.ring
        A, M, neg = R.add_table, R.mul_table, R.neg_table
        sq_minus = A[M[np.arange(R.size), np.arange(R.size)], neg]
        for I in entry.ideals:
            if not is_nil_ideal(I):
                continue
            for a in np.flatnonzero(I.mask[sq_minus]):
                count += 1
                brute = lift_idempotent_brute(R, I, int(a))
                try:
                    e = lift_idempotent_mod_nil(R, I, int(a))
                except RingError as exc:
                    bad.append({"ring": entry.label, "ideal": _gens(I), "a": R.display(a), "error": str(exc)})
                    continue
                if not brute or e not in brute:
                    bad.append({"ring": entry.label, "ideal": _gens(I), "a": R.display(a),
                                "newton": R.display(e), "brute": [R.display(x) for x in brute]})
    return count, bad
