"""Ring expressions: the ``Z6``, ``T2(Z4)``, ``Morita(Z2, Z2, Z2, Z2, mul)`` grammar.

::

    ring    := term { "x" term }
    term    := "Z" INT | "T" INT "(" ring ")" | "(" ring ")"
             | "Quot(" ring ";" elems ")" | "Corner(" ring ";" elem ")"
             | "Idealization(" ring "," module ")"
             | "Morita(" ring "," ring "," module "," module ["," pairing] ")"
    module  := "Z" INT { "x" "Z" INT } | "@" NAME
    pairing := "zero" | "mul" | "@" NAME

``@NAME`` refers to an entry of the ``modules`` / ``pairings`` sections of a
JSON config. A module entry is ``{"factors": [...], "left": [[...]],
"right": [[...]]}`` with action tables of element indices (``right`` may be
omitted for idealizations); a pairing entry is ``{"pair_A": [[...]],
"pair_B": [[...]]}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .constructions import (
    Bimodule,
    CornerRing,
    MoritaSpec,
    direct_product,
    idealization,
    morita_ring,
    multiplication_pairing,
    triangular_ring,
    zero_pairings,
)
from .ideals import ideal_generated_by, quotient_ring
from .ring import DEFAULT_SIZE_CAP, FiniteRing, ResidueRing, RingError, check_size, split_top


class SpecSyntaxError(RingError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text[:pos]}<HERE>{text[pos:]}")
        self.pos = pos


def _norm(text: str) -> str:
    return "".join(text.split())


@dataclass(frozen=True)
class ModuleSpec:
    factors: tuple[int, ...]
    name: Optional[str] = None
    tables: Optional[dict] = field(default=None, compare=False, hash=False, repr=False)

    def __str__(self) -> str:
        if self.name:
            return "@" + self.name
        return " x ".join(f"Z{d}" for d in self.factors)

    def build(self, left: FiniteRing, right: FiniteRing) -> Bimodule:
        if self.tables is None:
            return Bimodule.canonical(self.factors, left, right)
        lt = np.asarray(self.tables["left"], dtype=np.int64)
        rt = self.tables.get("right")
        rt = lt.T if rt is None else np.asarray(rt, dtype=np.int64)
        return Bimodule(self.factors, left, right, lt, rt, name=self.name)


class RingSpec:
    """Base of the ring expression tree. ``str(spec)`` is the canonical text."""

    def build(self, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
        raise NotImplementedError


@dataclass(frozen=True)
class Zn(RingSpec):
    n: int

    def __str__(self):
        return f"Z{self.n}"

    def build(self, cap=DEFAULT_SIZE_CAP):
        check_size(str(self), self.n, cap)
        return ResidueRing(self.n, spec=self)


def _wrap(spec: RingSpec) -> str:
    return f"({spec})" if isinstance(spec, Product) else str(spec)


@dataclass(frozen=True)
class Product(RingSpec):
    parts: tuple[RingSpec, ...]

    def __str__(self):
        return " x ".join(_wrap(p) for p in self.parts)

    def build(self, cap=DEFAULT_SIZE_CAP):
        return direct_product([p.build(cap) for p in self.parts], cap, spec=self)


@dataclass(frozen=True)
class Triangular(RingSpec):
    k: int
    base: RingSpec

    def __str__(self):
        return f"T{self.k}({self.base})"

    def build(self, cap=DEFAULT_SIZE_CAP):
        return triangular_ring(self.k, self.base.build(cap), cap, spec=self)


@dataclass(frozen=True)
class Quotient(RingSpec):
    base: RingSpec
    gens: tuple[str, ...]

    def __str__(self):
        return f"Quot({self.base}; {', '.join(self.gens)})"

    def build(self, cap=DEFAULT_SIZE_CAP):
        ring = self.base.build(cap)
        ideal = ideal_generated_by(ring, [ring.parse(g) for g in self.gens])
        return quotient_ring(ring, ideal, spec=self)


@dataclass(frozen=True)
class Corner(RingSpec):
    base: RingSpec
    element: str

    def __str__(self):
        return f"Corner({self.base}; {self.element})"

    def build(self, cap=DEFAULT_SIZE_CAP):
        host = self.base.build(cap)
        return CornerRing(host, host.parse(self.element), spec=self)


@dataclass(frozen=True)
class Idealization(RingSpec):
    base: RingSpec
    module: ModuleSpec

    def __str__(self):
        return f"Idealization({self.base}, {self.module})"

    def build(self, cap=DEFAULT_SIZE_CAP):
        base = self.base.build(cap)
        return idealization(base, self.module.build(base, base), cap, spec=self)


@dataclass(frozen=True)
class Morita(RingSpec):
    A: RingSpec
    B: RingSpec
    M: ModuleSpec
    N: ModuleSpec
    pairing: str = "zero"
    pairing_tables: Optional[dict] = field(default=None, compare=False, hash=False, repr=False)

    def __str__(self):
        return f"Morita({self.A}, {self.B}, {self.M}, {self.N}, {self.pairing})"

    def build(self, cap=DEFAULT_SIZE_CAP):
        A, B = self.A.build(cap), self.B.build(cap)
        M, N = self.M.build(A, B), self.N.build(B, A)
        if self.pairing == "zero":
            pA, pB = zero_pairings(A, B, M, N)
        elif self.pairing == "mul":
            pA, pB = multiplication_pairing(A, M, N), multiplication_pairing(B, N, M)
        elif self.pairing_tables is not None:
            pA = np.asarray(self.pairing_tables["pair_A"], dtype=np.int32)
            pB = np.asarray(self.pairing_tables["pair_B"], dtype=np.int32)
        else:
            raise RingError(f"unknown pairing {self.pairing!r}")
        return morita_ring(MoritaSpec(A, B, M, N, pA, pB), cap, spec=self)


# -- parser ---------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, config: Optional[dict]):
        self.text = text
        self.pos = 0
        self.config = config or {}

    def error(self, message):
        raise SpecSyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, literal: str) -> bool:
        self.skip()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str):
        if not self.peek(literal):
            self.error(f"expected {literal!r}")
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def name(self) -> str:
        self.skip()
        m = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*").match(self.text, self.pos)
        if not m:
            self.error("expected a name")
        self.pos = m.end()
        return m.group()

    def raw_until_close(self) -> str:
        """Text up to the ``)`` closing the current call, left unconsumed."""
        depth, start = 0, self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in "([":
                depth += 1
            elif ch in ")]":
                if depth == 0:
                    return self.text[start:self.pos]
                depth -= 1
            self.pos += 1
        self.error("unterminated element list")

    def ring(self) -> RingSpec:
        parts = [self.term()]
        while self.peek("x"):
            self.pos += 1
            parts.append(self.term())
        if len(parts) == 1:
            return parts[0]
        flat = []
        for p in parts:
            flat.extend(p.parts if isinstance(p, Product) else [p])
        return Product(tuple(flat))

    def term(self) -> RingSpec:
        self.skip()
        for keyword, handler in (("Quot(", self.quot), ("Corner(", self.corner),
                                 ("Idealization(", self.idealization), ("Morita(", self.morita)):
            if self.peek(keyword):
                self.pos += len(keyword)
                spec = handler()
                self.expect(")")
                return spec
        if self.peek("("):
            self.pos += 1
            inner = self.ring()
            self.expect(")")
            return inner
        if self.peek("Z"):
            self.pos += 1
            n = self.integer()
            if n < 1:
                self.error("residue modulus must be positive")
            return Zn(n)
        if self.peek("T"):
            self.pos += 1
            k = self.integer()
            if k < 1:
                self.error("matrix size must be positive")
            self.expect("(")
            base = self.ring()
            self.expect(")")
            return Triangular(k, base)
        self.error("expected a ring")

    def quot(self):
        base = self.ring()
        self.expect(";")
        gens = tuple(_norm(g) for g in split_top(self.raw_until_close()) if g.strip())
        return Quotient(base, gens)

    def corner(self):
        base = self.ring()
        self.expect(";")
        elem = _norm(self.raw_until_close())
        if not elem:
            self.error("missing corner idempotent")
        return Corner(base, elem)

    def idealization(self):
        base = self.ring()
        self.expect(",")
        return Idealization(base, self.module())

    def morita(self):
        A = self.ring()
        self.expect(",")
        B = self.ring()
        self.expect(",")
        M = self.module()
        self.expect(",")
        N = self.module()
        pairing, tables = "zero", None
        if self.peek(","):
            self.pos += 1
            if self.peek("@"):
                self.pos += 1
                name = self.name()
                tables = self.config.get("pairings", {}).get(name)
                if tables is None:
                    self.error(f"unknown pairing @{name}")
                pairing = "@" + name
            else:
                pairing = self.name()
                if pairing not in ("zero", "mul"):
                    self.error(f"unknown pairing {pairing!r}")
        return Morita(A, B, M, N, pairing, tables)

    def module(self) -> ModuleSpec:
        if self.peek("@"):
            self.pos += 1
            name = self.name()
            entry = self.config.get("modules", {}).get(name)
            if entry is None:
                self.error(f"unknown module @{name}")
            return ModuleSpec(tuple(entry["factors"]), name, entry)
        factors = []
        while True:
            self.expect("Z")
            d = self.integer()
            if d < 1:
                self.error("module factor must be positive")
            factors.append(d)
            if not self.peek("x"):
                return ModuleSpec(tuple(factors))
            self.pos += 1


def parse_ring_spec(text: str, config: Optional[dict] = None) -> RingSpec:
    """Parse a ring expression; ``config`` supplies ``@name`` module and pairing tables."""
    p = _Parser(text, config)
    spec = p.ring()
    p.skip()
    if p.pos != len(text):
        p.error("unexpected trailing input")
    return spec


def load_config(path: Union[str, Path, None]) -> dict:
    if path is None:
        return {}
    return json.loads(Path(path).read_text())


def build_ring(spec: Union[str, RingSpec], cap: int = DEFAULT_SIZE_CAP, config: Optional[dict] = None) -> FiniteRing:
    if isinstance(spec, str):
        spec = parse_ring_spec(spec, config)
    return spec.build(cap)
