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
Group, Drazin and Moore-Penrose inverses from unit criteria.

Each inverse is built from a closed formula in sigma(u^-1) for a suitable u
and then checked against its defining equations before it is returned.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Union

from ring_inverses.along import Side, invert_along
from ring_inverses.centralizer import CentralizerMap, identity_centralizer
from ring_inverses.errors import (
    Absent, AbsentReason, InternalFormulaMismatch, NotAUnit, NotBijectiveCentralizer,
    NotRegular, PreconditionFailed, RingMismatch,
)
from ring_inverses.jacobson import jacobson_complete
from ring_inverses.regular import inner_inverse, penrose_check
from ring_inverses.rings import Element, MatrixRing

logger = logging.getLogger(__name__)


class SpecialKind(Enum):
    """The classical inverses that are inverses along a power or the adjoint."""
    GROUP = "group"
    DRAZIN = "drazin"
    MP = "mp"


@dataclass(frozen=True)
class DrazinResult:
    """
    Attributes:
        b: The Drazin inverse.
        index: The smallest k >= 1 with a^k = a^(k+1) b.
        n_used: The power n at which the unit criterion first held.
    """
    b: Element
    index: int
    n_used: int


def _bijective_sigma(a: Element, sigma: Optional[CentralizerMap]) -> CentralizerMap:
    if sigma is None:
        return identity_centralizer(a.ring)
    if sigma.ring != a.ring:
        raise RingMismatch(f"{sigma} acts on {sigma.ring.spec}, not {a.ring.spec}")
    if not sigma.is_bijective_centralizer:
        raise NotBijectiveCentralizer(f"{sigma} is not a bijective centralizer on {a.ring.spec}")
    return sigma


def _inner_or_absent(a: Element,
                     inner: Optional[Element] = None) -> Union[Element, Absent]:
    if inner is not None:
        if a * inner * a != a:
            raise PreconditionFailed(f"{inner} is not an inner inverse of {a}")
        return inner
    try:
        return inner_inverse(a)
    except NotRegular:
        return Absent(AbsentReason.NOT_REGULAR_D, f"{a} is not regular")


def _unit_or_absent(u: Element) -> Union[Element, Absent]:
    try:
        return u.ring.unit_inverse(u)
    except NotAUnit:
        return Absent(AbsentReason.UNIT_CRITERION_FAILED, f"u = {u} is not a unit")


def group_inverse(a: Element, sigma: Optional[CentralizerMap] = None,
                  inner: Optional[Element] = None) -> Union[Element, Absent]:
    """Computes a^# = sigma(u^-1) a with u = sigma(a^2) + 1 - aa-.

    Raises:
        NotBijectiveCentralizer: If sigma is given and is not a bijective
            centralizer.
    """
    sigma = _bijective_sigma(a, sigma)
    a_inner = _inner_or_absent(a, inner)
    if isinstance(a_inner, Absent):
        return a_inner

    u_inv = _unit_or_absent(sigma(a * a) + 1 - a * a_inner)
    if isinstance(u_inv, Absent):
        return u_inv

    b = sigma(u_inv) * a
    if a * b != b * a or a * b * a != a or b * a * b != b:
        raise InternalFormulaMismatch(f"{b} is not a group inverse of {a}")
    return b


def drazin_scan_bound(a: Element) -> int:
    """The largest power the Drazin scan needs to try.

    In a matrix ring the index never exceeds the dimension. In a finite ring
    the powers of a eventually cycle, and the index never exceeds the
    exponent at which the cycle is entered.
    """
    ring = a.ring
    if isinstance(ring, MatrixRing):
        return ring.k
    if not ring.is_finite():
        return 0

    seen: Dict[Element, int] = {}
    power = a
    exponent = 1
    while power not in seen:
        seen[power] = exponent
        power = power * a
        exponent += 1
    return max(1, seen[power])


def drazin_inverse(a: Element,
                   sigma: Optional[CentralizerMap] = None) -> Union[DrazinResult, Absent]:
    """Computes a^D = sigma(u^-1) a^n at the first n where a^n is regular
    and u = sigma(a^(n+1)) + 1 - a^n (a^n)- is a unit.
    """
    sigma = _bijective_sigma(a, sigma)
    bound = drazin_scan_bound(a)
    for n in range(1, bound + 1):
        a_n = a ** n
        a_n_inner = _inner_or_absent(a_n)
        if isinstance(a_n_inner, Absent):
            logger.debug("a^%d = %s is not regular", n, a_n)
            continue
        u_inv = _unit_or_absent(sigma(a_n * a) + 1 - a_n * a_n_inner)
        if isinstance(u_inv, Absent):
            logger.debug("unit criterion fails at n=%d for a=%s", n, a)
            continue

        b = sigma(u_inv) * a_n
        if a * b != b * a or b * b * a != b:
            raise InternalFormulaMismatch(f"{b} is not a Drazin inverse of {a}")
        index = next((k for k in range(1, n + 1) if a ** k == a ** (k + 1) * b), None)
        if index is None:
            raise InternalFormulaMismatch(f"{b} fails a^k = a^(k+1)b for every k <= {n}")
        return DrazinResult(b=b, index=index, n_used=n)

    return Absent(AbsentReason.BOUND_EXHAUSTED,
                  f"no power of {a} up to {bound} satisfies the criterion")


def _require_moore_penrose(a: Element, b: Element, route: str) -> Element:
    profile = penrose_check(a, b)
    if not profile.is_moore_penrose:
        raise InternalFormulaMismatch(
            f"{route} candidate {b} for {a} only satisfies Penrose equations {profile}")
    return b


def _mp_parts(a: Element, sigma: Optional[CentralizerMap]):
    sigma = _bijective_sigma(a, sigma)
    a_inner = _inner_or_absent(a)
    if isinstance(a_inner, Absent):
        return sigma, a_inner, None, None
    u = sigma(a * a.star) + 1 - a * a_inner
    v = sigma(a.star * a) + 1 - a_inner * a
    return sigma, a_inner, u, v


def moore_penrose(a: Element,
                  sigma: Optional[CentralizerMap] = None) -> Union[Element, Absent]:
    """Computes a-dagger from u = sigma(aa*) + 1 - aa- and v = sigma(a*a) + 1 - a-a.

    Both a* (sigma(u^-1))^2 a a* and a* a (sigma(v^-1))^2 a* are built and
    each must satisfy all four Penrose equations.

    Raises:
        InternalFormulaMismatch: If either candidate fails a Penrose equation
            or the two candidates differ.
    """
    sigma, a_inner, u, v = _mp_parts(a, sigma)
    if isinstance(a_inner, Absent):
        return a_inner

    u_inv = _unit_or_absent(u)
    if isinstance(u_inv, Absent):
        return u_inv
    try:
        v_inv = a.ring.unit_inverse(v)
    except NotAUnit:
        raise InternalFormulaMismatch(f"u = {u} is a unit but v = {v} is not")

    x = sigma(u_inv)
    y = sigma(v_inv)
    via_u = _require_moore_penrose(a, a.star * x * x * a * a.star, "u")
    via_v = _require_moore_penrose(a, a.star * a * y * y * a.star, "v")
    if via_u != via_v:
        raise InternalFormulaMismatch(f"u and v routes disagree: {via_u} and {via_v}")
    return via_u


def mp_alternate(a: Element,
                 sigma: Optional[CentralizerMap] = None) -> Union[Element, Absent]:
    """a-dagger = (sigma(u^-1) a)* a (sigma(u^-1) a)*."""
    sigma, a_inner, u, _ = _mp_parts(a, sigma)
    if isinstance(a_inner, Absent):
        return a_inner
    u_inv = _unit_or_absent(u)
    if isinstance(u_inv, Absent):
        return u_inv
    p = (sigma(u_inv) * a).star
    return _require_moore_penrose(a, p * a * p, "alternate")


def _one_sided_inverse(u: Element, side: Side) -> Optional[Element]:
    ring = u.ring
    if isinstance(ring, MatrixRing):
        # Square matrices over a field: one-sided invertible iff det != 0.
        if ring.determinant(u).is_zero():
            return None
        return ring.unit_inverse(u)
    for x in ring.enumerate():
        if (x * u if side == Side.LEFT else u * x) == 1:
            return x
    return None


def convert_right_inverse(a: Element, u_r_inv: Element, sigma: CentralizerMap,
                          inner: Element) -> Element:
    """Turns a right inverse of u = sigma(aa*) + 1 - aa- into one of
    v = sigma(a*a) + 1 - a-a, namely 1 - (sigma(a*) - a-) u_r^-1 a.
    """
    return jacobson_complete(a, sigma(a.star) - inner, u_r_inv, Side.LEFT)


def mp_one_sided(a: Element, side: Side,
                 sigma: Optional[CentralizerMap] = None) -> Union[Element, Absent]:
    """Computes a-dagger from a one-sided inverse of u.

    LEFT uses a left inverse u_l^-1 and a* (sigma(u_l^-1))^2 a a*. RIGHT
    converts a right inverse of u into a right inverse v_r^-1 of v and uses
    a* a (sigma(v_r^-1))^2 a*.
    """
    sigma, a_inner, u, _ = _mp_parts(a, sigma)
    if isinstance(a_inner, Absent):
        return a_inner

    u_side_inv = _one_sided_inverse(u, side)
    if u_side_inv is None:
        return Absent(AbsentReason.UNIT_CRITERION_FAILED,
                      f"u = {u} has no {side.value} inverse")

    if side == Side.LEFT:
        x = sigma(u_side_inv)
        candidate = a.star * x * x * a * a.star
    else:
        y = sigma(convert_right_inverse(a, u_side_inv, sigma, a_inner))
        candidate = a.star * a * y * y * a.star
    return _require_moore_penrose(a, candidate, f"{side.value}-sided")


def inverse_along_specializations(a: Element, which: SpecialKind,
                                  power: int = 1) -> Union[Element, Absent]:
    """The group, Drazin and MP inverses as a along a, a^power and a*."""
    if which == SpecialKind.GROUP:
        d = a
    elif which == SpecialKind.DRAZIN:
        if power < 1:
            raise ValueError("the Drazin power must be at least 1")
        d = a ** power
    else:
        d = a.star
    result = invert_along(a, d)
    if isinstance(result, Absent):
        return result
    return result.b
