# Copyright 2025 Google LLC

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     https://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
This module contains the concrete unital rings the package computes in:
residues modulo n, and k x k matrices over the Gaussian rationals.
"""

from __future__ import annotations

import random
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Iterator, Tuple, Union

import numpy as np

from ring_inverses import linalg
from ring_inverses.errors import LiteralError, NotAUnit, NotFinite, RingMismatch
from ring_inverses.gaussian import ONE, ZERO, GaussianRational

MatrixPayload = Tuple[Tuple[GaussianRational, ...], ...]
Payload = Union[int, MatrixPayload]

_RING_SPEC_RE = re.compile(r"^(?P<kind>zmod|gqmat):(?P<size>\d+)$")
_INTEGER_RE = re.compile(r"^[+-]?\d+$")


class RingKind(Enum):
    """Defines the families of rings the package supports."""
    MODULAR = "zmod"
    MATRIX = "gqmat"


@dataclass(frozen=True)
class RingSpec:
    """
    A factory and configuration holder naming one concrete ring.

    Attributes:
        kind: The ring family.
        size: The modulus n for `zmod:<n>`, or the dimension k for `gqmat:<k>`.
    """
    kind: RingKind
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise LiteralError(f"ring size must be at least 1, got {self.size}")

    @classmethod
    def zmod(cls, n: int) -> RingSpec:
        """Creates a spec for the residues modulo n."""
        return cls(RingKind.MODULAR, n)

    @classmethod
    def gqmat(cls, k: int) -> RingSpec:
        """Creates a spec for k x k matrices over the Gaussian rationals."""
        return cls(RingKind.MATRIX, k)

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        match = _RING_SPEC_RE.match(text.strip())
        if not match:
            raise LiteralError(
                f"invalid ring spec {text!r}: expected zmod:<n> or gqmat:<k>")
        return cls(RingKind(match["kind"]), int(match["size"]))

    def get_key(self) -> str:
        return f"{self.kind.value}:{self.size}"

    def __str__(self) -> str:
        return self.get_key()


class RingContext(ABC):
    """A unital ring with exact equality and an involution.

    Subclasses work on canonical payloads; `Element` wraps a payload together
    with its ring and is the type the rest of the package handles.
    """

    def __init__(self, spec: RingSpec):
        self.spec = spec

    def __eq__(self, other) -> bool:
        return isinstance(other, RingContext) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"<{type(self).__name__}[{self.spec}]>"

    def element(self, payload: Payload) -> Element:
        return Element(self, payload)

    @property
    def zero(self) -> Element:
        return self.from_int(0)

    @property
    def one(self) -> Element:
        return self.from_int(1)

    @abstractmethod
    def from_int(self, value: int) -> Element:
        pass

    @abstractmethod
    def add_payloads(self, x: Payload, y: Payload) -> Payload:
        pass

    @abstractmethod
    def mul_payloads(self, x: Payload, y: Payload) -> Payload:
        pass

    @abstractmethod
    def neg_payload(self, x: Payload) -> Payload:
        pass

    @abstractmethod
    def involution(self, a: Element) -> Element:
        pass

    @abstractmethod
    def unit_inverse(self, a: Element) -> Element:
        pass

    @abstractmethod
    def is_finite(self) -> bool:
        pass

    @abstractmethod
    def enumerate(self) -> Iterator[Element]:
        pass

    @abstractmethod
    def is_central(self, c: Element) -> bool:
        pass

    @abstractmethod
    def random_element(self, rng: random.Random) -> Element:
        pass

    @abstractmethod
    def parse(self, text: str) -> Element:
        pass

    @abstractmethod
    def format(self, a: Element) -> str:
        pass

    def is_unit(self, a: Element) -> bool:
        try:
            self.unit_inverse(a)
            return True
        except NotAUnit:
            return False

    def order(self) -> int:
        raise NotFinite(f"{self.spec} is not a finite ring")


class ModularRing(RingContext):
    """The ring Z_n; the involution is the identity since Z_n is commutative."""

    def __init__(self, n: int):
        super().__init__(RingSpec.zmod(n))
        self.n = n

    def from_int(self, value: int) -> Element:
        return self.element(value % self.n)

    def add_payloads(self, x: int, y: int) -> int:
        return (x + y) % self.n

    def mul_payloads(self, x: int, y: int) -> int:
        return (x * y) % self.n

    def neg_payload(self, x: int) -> int:
        return (-x) % self.n

    def involution(self, a: Element) -> Element:
        return a

    def unit_inverse(self, a: Element) -> Element:
        g, s = extended_gcd(a.payload, self.n)
        if g != 1:
            raise NotAUnit(f"{a.payload} is not invertible modulo {self.n}")
        return self.from_int(s)

    def is_finite(self) -> bool:
        return True

    def order(self) -> int:
        return self.n

    def enumerate(self) -> Iterator[Element]:
        return (self.element(i) for i in range(self.n))

    def is_central(self, c: Element) -> bool:
        return True

    def random_element(self, rng: random.Random) -> Element:
        return self.element(rng.randrange(self.n))

    def parse(self, text: str) -> Element:
        text = text.strip()
        if not _INTEGER_RE.match(text):
            raise LiteralError(f"invalid residue literal for {self.spec}: {text!r}")
        return self.from_int(int(text))

    def format(self, a: Element) -> str:
        return str(a.payload)


class MatrixRing(RingContext):
    """k x k matrices over Q(i); the involution is the conjugate transpose."""

    def __init__(self, k: int):
        super().__init__(RingSpec.gqmat(k))
        self.k = k

    def from_array(self, x: np.ndarray) -> Element:
        return self.element(linalg.as_tuple(x))

    def to_array(self, a: Element) -> np.ndarray:
        return np.array(a.payload, dtype=object).reshape(self.k, self.k)

    def from_int(self, value: int) -> Element:
        scalar = GaussianRational(Fraction(value))
        return self.element(tuple(
            tuple(scalar if i == j else ZERO for j in range(self.k))
            for i in range(self.k)))

    def from_rows(self, rows: Any) -> Element:
        """Builds an element from nested sequences of ints, Fractions or scalars."""
        grid = tuple(tuple(GaussianRational.of(v) for v in row) for row in rows)
        if len(grid) != self.k or any(len(row) != self.k for row in grid):
            raise LiteralError(f"expected a {self.k}x{self.k} matrix")
        return self.element(grid)

    def elementary(self, p: int, q: int) -> Element:
        return self.element(tuple(
            tuple(ONE if (i, j) == (p, q) else ZERO for j in range(self.k))
            for i in range(self.k)))

    def add_payloads(self, x: MatrixPayload, y: MatrixPayload) -> MatrixPayload:
        return tuple(tuple(u + v for u, v in zip(rx, ry)) for rx, ry in zip(x, y))

    def mul_payloads(self, x: MatrixPayload, y: MatrixPayload) -> MatrixPayload:
        product = linalg.matmul(np.array(x, dtype=object).reshape(self.k, self.k),
                                np.array(y, dtype=object).reshape(self.k, self.k))
        return linalg.as_tuple(product)

    def neg_payload(self, x: MatrixPayload) -> MatrixPayload:
        return tuple(tuple(-v for v in row) for row in x)

    def involution(self, a: Element) -> Element:
        return self.from_array(linalg.conjugate_transpose(self.to_array(a)))

    def unit_inverse(self, a: Element) -> Element:
        return self.from_array(linalg.inverse(self.to_array(a)))

    def determinant(self, a: Element) -> GaussianRational:
        return linalg.determinant(self.to_array(a))

    def is_finite(self) -> bool:
        return False

    def enumerate(self) -> Iterator[Element]:
        raise NotFinite(f"{self.spec} is an infinite ring and cannot be enumerated")

    def is_central(self, c: Element) -> bool:
        # The elementary matrices generate the ring, so commuting with each of
        # them is equivalent to commuting with everything.
        generators = (self.elementary(p, q)
                      for p in range(self.k) for q in range(self.k))
        return all(c * e == e * c for e in generators)

    def random_element(self, rng: random.Random) -> Element:
        def part() -> Fraction:
            return Fraction(rng.randint(-3, 3), rng.randint(1, 3))

        def entry() -> GaussianRational:
            if rng.random() < 0.5:
                return GaussianRational(part())
            return GaussianRational(part(), part())

        return self.element(tuple(tuple(entry() for _ in range(self.k))
                                  for _ in range(self.k)))

    def parse(self, text: str) -> Element:
        compact = text.strip().replace(" ", "")
        if not (compact.startswith("[[") and compact.endswith("]]")):
            raise LiteralError(f"invalid matrix literal: {text!r}")
        rows = compact[2:-2].split("],[")
        grid = []
        for row in rows:
            if "[" in row or "]" in row:
                raise LiteralError(f"invalid matrix literal: {text!r}")
            grid.append([GaussianRational.parse(entry) for entry in row.split(",")])
        return self.from_rows(grid)

    def format(self, a: Element) -> str:
        return "[" + ",".join(
            "[" + ",".join(str(v) for v in row) + "]" for row in a.payload) + "]"


def extended_gcd(a: int, b: int) -> Tuple[int, int]:
    """Returns (g, s) with s*a = g (mod b), g = gcd(a, b)."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return r0, s0


class ArithmeticOp(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    NEG = "neg"
    POWER = "power"


@dataclass(frozen=True)
class Element:
    """
    An immutable ring element. Equality is structural because payloads are
    kept canonical: residues in [0, n), reduced fractions in matrix entries.

    Integers are accepted as operands and mean the corresponding multiple
    of 1, so `d * a + 1 - d * d_inner` reads as written. They also compare
    equal to the element they denote, but hash differently, so do not mix
    elements and ints as keys of one dict or set.
    """
    ring: RingContext
    payload: Payload

    def _coerce(self, other: Union[Element, int]) -> Element:
        if isinstance(other, int):
            return self.ring.from_int(other)
        if not isinstance(other, Element):
            raise TypeError(f"cannot combine an element with {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"operands belong to {self.ring.spec} and {other.ring.spec}")
        return other

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.payload == self.ring.from_int(other).payload
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring == other.ring and self.payload == other.payload

    def __hash__(self) -> int:
        return hash((self.ring, self.payload))

    def __add__(self, other: Union[Element, int]) -> Element:
        other = self._coerce(other)
        return self.ring.element(self.ring.add_payloads(self.payload, other.payload))

    def __radd__(self, other: int) -> Element:
        return self._coerce(other) + self

    def __neg__(self) -> Element:
        return self.ring.element(self.ring.neg_payload(self.payload))

    def __sub__(self, other: Union[Element, int]) -> Element:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> Element:
        return self._coerce(other) - self

    def __mul__(self, other: Union[Element, int]) -> Element:
        other = self._coerce(other)
        return self.ring.element(self.ring.mul_payloads(self.payload, other.payload))

    def __rmul__(self, other: int) -> Element:
        return self._coerce(other) * self

    def __pow__(self, exponent: int) -> Element:
        if exponent < 0:
            raise ValueError("power exponent must be non-negative")
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    @property
    def star(self) -> Element:
        """The involution a*."""
        return self.ring.involution(self)

    def is_zero(self) -> bool:
        return self == self.ring.zero

    def __str__(self) -> str:
        return self.ring.format(self)

    def __repr__(self) -> str:
        return f"Element({self.ring.spec}, {self})"


def arithmetic(op: ArithmeticOp, *operands: Union[Element, int]) -> Element:
    """Applies one ring operation; `power` takes an element and an exponent."""
    if op == ArithmeticOp.NEG:
        (a,) = operands
        return -a
    if op == ArithmeticOp.POWER:
        a, exponent = operands
        return a ** exponent
    a, b = operands
    if op == ArithmeticOp.ADD:
        return a + b
    if op == ArithmeticOp.SUB:
        return a - b
    if op == ArithmeticOp.MUL:
        return a * b
    raise ValueError(f"unknown arithmetic op: {op}")


def make_ring(spec: RingSpec) -> RingContext:
    if spec.kind == RingKind.MODULAR:
        return ModularRing(spec.size)
    elif spec.kind == RingKind.MATRIX:
        return MatrixRing(spec.size)
    raise ValueError(f"Unsupported ring kind: {spec.kind}")
