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
Exact Gaussian rationals p/q + (r/s)i, the scalars of the matrix rings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ring_inverses.errors import LiteralError

_MAGNITUDE = r"\d+(?:/\d+)?"
_IMAGINARY_RE = re.compile(rf"^(?P<sign>[+-])?(?P<mag>{_MAGNITUDE})?i$")
_COMPLEX_RE = re.compile(
    rf"^(?P<re>[+-]?{_MAGNITUDE})(?P<sign>[+-])(?P<mag>{_MAGNITUDE})?i$")
_REAL_RE = re.compile(rf"^[+-]?{_MAGNITUDE}$")

Scalar = Union["GaussianRational", Fraction, int]


@dataclass(frozen=True)
class GaussianRational:
    """
    An exact complex number whose real and imaginary parts are rationals.

    `Fraction` keeps both parts reduced with a positive denominator, so two
    equal values always compare and hash equal.

    Attributes:
        re: The real part.
        im: The imaginary part.
    """
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, value: Scalar) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parses `p`, `p/q`, `p/q+r/si`, `r/si`, `i` or `-i`."""
        text = text.strip().replace(" ", "")
        try:
            match = _IMAGINARY_RE.match(text)
            if match:
                return cls(Fraction(0), _signed(match["sign"], match["mag"]))
            match = _COMPLEX_RE.match(text)
            if match:
                return cls(Fraction(match["re"]),
                           _signed(match["sign"], match["mag"]))
            if _REAL_RE.match(text):
                return cls(Fraction(text))
        except ZeroDivisionError:
            raise LiteralError(f"zero denominator in scalar literal: {text!r}")
        raise LiteralError(f"invalid scalar literal: {text!r}")

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __add__(self, other: Scalar) -> GaussianRational:
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> GaussianRational:
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other: Scalar) -> GaussianRational:
        return GaussianRational.of(other) - self

    def __mul__(self, other: Scalar) -> GaussianRational:
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.of(other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> GaussianRational:
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.of(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by a zero Gaussian rational")
        numerator = self * other.conjugate()
        return GaussianRational(numerator.re / norm, numerator.im / norm)

    def __rtruediv__(self, other: Scalar) -> GaussianRational:
        return GaussianRational.of(other) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        magnitude = abs(self.im)
        imag = "i" if magnitude == 1 else f"{magnitude}i"
        sign = "-" if self.im < 0 else "+"
        if self.re == 0:
            return imag if sign == "+" else f"-{imag}"
        return f"{self.re}{sign}{imag}"

    def __repr__(self) -> str:
        return f"GaussianRational({self})"


def _signed(sign: str | None, magnitude: str | None) -> Fraction:
    value = Fraction(magnitude) if magnitude else Fraction(1)
    return -value if sign == "-" else value


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
