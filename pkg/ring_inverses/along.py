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
Left, right and two-sided inverses of an element a along an element d.

b is the inverse of a along d when bad = d = dab and b lies in Rd and dR.
It is computed here by the unit criterion: with d- an inner inverse of d,
it exists iff u = sigma(da) + 1 - dd- is a unit, and then equals
sigma(u^-1) d = d sigma(v^-1) where v = sigma(ad) + 1 - d-d. Definitional
searches are kept for finite rings and serve as oracles.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Union

from ring_inverses import linalg
from ring_inverses.centralizer import CentralizerMap, identity_centralizer
from ring_inverses.errors import (
    Absent, AbsentReason, InternalFormulaMismatch, NotAUnit, NotBijectiveCentralizer,
    NotFinite, NotRegular, PreconditionFailed, RingMismatch,
)
from ring_inverses.regular import inner_inverse
from ring_inverses.rings import Element, MatrixRing

logger = logging.getLogger(__name__)


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class SidedInverse:
    """
    A one-sided inverse of a along d.

    Attributes:
        side: LEFT means bad = d and b = witness d; RIGHT means dab = d and
            b = d witness.
        b: The one-sided inverse.
        witness: The ideal-membership witness.
    """
    side: Side
    b: Element
    witness: Element


@dataclass(frozen=True)
class AlongInverseResult:
    """
    The inverse of a along d together with the certificates that prove it.

    Attributes:
        a: The element being inverted.
        d: The element a is inverted along.
        b: The inverse of a along d.
        u: sigma(da) + 1 - dd-.
        u_inv: The inverse of u.
        v: sigma(ad) + 1 - d-d.
        v_inv: The inverse of v.
        left_witness: x with b = x d, namely sigma(u^-1).
        right_witness: y with b = d y, namely sigma(v^-1).
        d_inner: The inner inverse d- the certificates were built with.
        sigma: The centralizer used, identity for the plain criterion.
    """
    a: Element
    d: Element
    b: Element
    u: Element
    u_inv: Element
    v: Element
    v_inv: Element
    left_witness: Element
    right_witness: Element
    d_inner: Element
    sigma: CentralizerMap


def _same_ring(*elements: Element) -> None:
    ring = elements[0].ring
    for e in elements[1:]:
        if e.ring != ring:
            raise RingMismatch(f"operands belong to {ring.spec} and {e.ring.spec}")


def ideal_membership(b: Element, d: Element, side: Side) -> Union[Element, Absent]:
    """Finds x with b = x d (LEFT) or y with b = d y (RIGHT)."""
    _same_ring(b, d)
    ring = b.ring
    if isinstance(ring, MatrixRing):
        d_arr, b_arr = ring.to_array(d), ring.to_array(b)
        if side == Side.LEFT:
            x = linalg.solve_left(d_arr, b_arr)
        else:
            x = linalg.solve(d_arr, b_arr)
        if x is None:
            return Absent(AbsentReason.NOT_FOUND, f"{b} is not in {_ideal_name(d, side)}")
        return ring.from_array(x)

    for x in ring.enumerate():
        if (x * d if side == Side.LEFT else d * x) == b:
            return x
    return Absent(AbsentReason.NOT_FOUND, f"{b} is not in {_ideal_name(d, side)}")


def _ideal_name(d: Element, side: Side) -> str:
    return f"R{d}" if side == Side.LEFT else f"{d}R"


def _satisfies_sided(a: Element, d: Element, b: Element, side: Side, verbatim: bool) -> bool:
    if side == Side.LEFT:
        return b * a * d == d
    if verbatim:
        return d * a * b == b
    return d * a * b == d


def sided_inverse_along(a: Element, d: Element, side: Side,
                        verbatim: bool = False) -> Union[SidedInverse, Absent]:
    """Finds a left (bad = d, b in Rd) or right (dab = d, b in dR) inverse.

    Args:
        a: The element to invert.
        d: The element to invert along.
        side: Which one-sided inverse to find.
        verbatim: Use "dab = b" for the right equation instead of "dab = d".
            Under that reading b = 0 always qualifies.

    Returns:
        The smallest such b in enumeration order for finite rings, or the
        canonical solution of the linear system in the witness for matrix
        rings; Absent when none exists.
    """
    _same_ring(a, d)
    ring = a.ring
    if isinstance(ring, MatrixRing):
        return _matrix_sided_inverse(a, d, side, verbatim)

    for b in ring.enumerate():
        if not _satisfies_sided(a, d, b, side, verbatim):
            continue
        witness = ideal_membership(b, d, side)
        if witness:
            return SidedInverse(side, b, witness)
    return Absent(AbsentReason.NOT_FOUND,
                  f"{a} has no {side.value} inverse along {d}")


def _matrix_sided_inverse(a: Element, d: Element, side: Side,
                          verbatim: bool) -> Union[SidedInverse, Absent]:
    ring = a.ring
    dad = ring.to_array(d * a * d)
    d_arr = ring.to_array(d)
    if side == Side.LEFT:
        # b = x d and b a d = d  <=>  x (dad) = d
        x = linalg.solve_left(dad, d_arr)
        if x is None:
            return Absent(AbsentReason.NOT_FOUND, f"{a} has no left inverse along {d}")
        witness = ring.from_array(x)
        return SidedInverse(side, witness * d, witness)

    if verbatim:
        # b = d y and d a b = b  <=>  (dad - d) y = 0
        y = linalg.solve(dad - d_arr, linalg.zeros(ring.k, ring.k))
    else:
        # b = d y and d a b = d  <=>  (dad) y = d
        y = linalg.solve(dad, d_arr)
    if y is None:
        return Absent(AbsentReason.NOT_FOUND, f"{a} has no right inverse along {d}")
    witness = ring.from_array(y)
    return SidedInverse(side, d * witness, witness)


def enumerate_sided_inverses(a: Element, d: Element, side: Side,
                             verbatim: bool = False) -> List[SidedInverse]:
    """Every one-sided inverse of a along d in a finite ring."""
    _same_ring(a, d)
    if not a.ring.is_finite():
        raise NotFinite(f"{a.ring.spec} is infinite; one-sided inverses cannot be listed")
    found = []
    for b in a.ring.enumerate():
        if _satisfies_sided(a, d, b, side, verbatim):
            witness = ideal_membership(b, d, side)
            if witness:
                found.append(SidedInverse(side, b, witness))
    return found


def search_inverse_along(a: Element, d: Element) -> List[Element]:
    """Every b with bad = d = dab and b in Rd and dR, by exhaustive search."""
    _same_ring(a, d)
    if not a.ring.is_finite():
        raise NotFinite(f"{a.ring.spec} is infinite; use invert_along instead")
    return [b for b in a.ring.enumerate()
            if b * a * d == d and d * a * b == d
            and ideal_membership(b, d, Side.LEFT)
            and ideal_membership(b, d, Side.RIGHT)]


def _resolve_inner(d: Element, inner: Optional[Element]) -> Union[Element, Absent]:
    if inner is None:
        try:
            return inner_inverse(d)
        except NotRegular:
            return Absent(AbsentReason.NOT_REGULAR_D, f"{d} is not regular")
    if d * inner * d != d:
        raise PreconditionFailed(f"{inner} is not an inner inverse of {d}")
    return inner


def _unit_criterion(a: Element, d: Element, sigma: CentralizerMap,
                    inner: Optional[Element]) -> Union[AlongInverseResult, Absent]:
    d_inner = _resolve_inner(d, inner)
    if isinstance(d_inner, Absent):
        return d_inner

    u = sigma(d * a) + 1 - d * d_inner
    v = sigma(a * d) + 1 - d_inner * d
    try:
        u_inv = a.ring.unit_inverse(u)
    except NotAUnit:
        logger.debug("unit criterion failed for a=%s d=%s: u=%s", a, d, u)
        return Absent(AbsentReason.UNIT_CRITERION_FAILED, f"u = {u} is not a unit")
    try:
        v_inv = a.ring.unit_inverse(v)
    except NotAUnit:
        raise InternalFormulaMismatch(f"u = {u} is a unit but v = {v} is not")

    left_witness = sigma(u_inv)
    right_witness = sigma(v_inv)
    b = left_witness * d
    if b != d * right_witness:
        raise InternalFormulaMismatch(
            f"sigma(u^-1)d = {b} differs from d sigma(v^-1) = {d * right_witness}")
    if b * a * d != d or d * a * b != d:
        raise InternalFormulaMismatch(f"{b} fails bad = d = dab for a={a}, d={d}")

    return AlongInverseResult(
        a=a, d=d, b=b, u=u, u_inv=u_inv, v=v, v_inv=v_inv,
        left_witness=left_witness, right_witness=right_witness,
        d_inner=d_inner, sigma=sigma,
    )


def invert_along(a: Element, d: Element,
                 inner: Optional[Element] = None) -> Union[AlongInverseResult, Absent]:
    """Computes the inverse of a along d from u = da + 1 - dd-.

    Args:
        a: The element to invert.
        d: The element to invert along.
        inner: The inner inverse of d to build u and v with; the canonical
            one when omitted. The outcome does not depend on the choice.

    Returns:
        The result with its certificates, or Absent with reason
        NOT_REGULAR_D or UNIT_CRITERION_FAILED.
    """
    _same_ring(a, d)
    return _unit_criterion(a, d, identity_centralizer(a.ring), inner)


def invert_along_sigma(a: Element, d: Element, sigma: CentralizerMap,
                       inner: Optional[Element] = None,
                       bypass_bijectivity_check: bool = False
                       ) -> Union[AlongInverseResult, Absent]:
    """Computes the inverse of a along d from u = sigma(da) + 1 - dd-.

    Raises:
        NotBijectiveCentralizer: If sigma is not a centralizer, or is not
            bijective and `bypass_bijectivity_check` is not set. With a
            non-bijective sigma a non-unit u no longer proves absence.
    """
    _same_ring(a, d, sigma.scaling)
    if not sigma.is_centralizer:
        raise NotBijectiveCentralizer(f"{sigma} is not a centralizer on {a.ring.spec}")
    if not sigma.bijective and not bypass_bijectivity_check:
        raise NotBijectiveCentralizer(f"{sigma} is not bijective on {a.ring.spec}")
    return _unit_criterion(a, d, sigma, inner)


def exists_along(a: Element, d: Element) -> bool:
    return not isinstance(invert_along(a, d), Absent)
