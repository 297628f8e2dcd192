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
Jacobson's lemma: 1 + ab is (one-sidedly) invertible iff 1 + ba is.
"""

from __future__ import annotations

from ring_inverses.along import Side
from ring_inverses.errors import InternalFormulaMismatch, PreconditionFailed
from ring_inverses.rings import Element


def jacobson_complete(a: Element, b: Element, c: Element, side: Side) -> Element:
    """Turns a one-sided inverse c of 1 + ab into one of 1 + ba.

    Args:
        a: First factor.
        b: Second factor.
        c: For LEFT, an element with (1 + ab)c = 1. For RIGHT, an element
            with c(1 + ab) = 1.
        side: Which identity c satisfies.

    Returns:
        1 - bca, which satisfies (1 + ba)(1 - bca) = 1 for LEFT and
        (1 - bca)(1 + ba) = 1 for RIGHT.

    Raises:
        PreconditionFailed: If c does not satisfy the identity for `side`.
    """
    one_ab = 1 + a * b
    if side == Side.LEFT:
        if one_ab * c != 1:
            raise PreconditionFailed(f"(1 + ab)c = {one_ab * c}, expected 1")
    elif c * one_ab != 1:
        raise PreconditionFailed(f"c(1 + ab) = {c * one_ab}, expected 1")

    completion = 1 - b * c * a
    one_ba = 1 + b * a
    product = one_ba * completion if side == Side.LEFT else completion * one_ba
    if product != 1:
        raise InternalFormulaMismatch(f"Jacobson completion gave {product}, expected 1")
    return completion


def two_sided_jacobson_inverse(a: Element, b: Element) -> Element:
    """(1 + ba)^-1 = 1 - b(1 + ab)^-1 a.

    Raises:
        NotAUnit: If 1 + ab is not a unit, in which case neither is 1 + ba.
    """
    c = a.ring.unit_inverse(1 + a * b)
    left = jacobson_complete(a, b, c, Side.LEFT)
    right = jacobson_complete(a, b, c, Side.RIGHT)
    if left != right:
        raise InternalFormulaMismatch(f"one-sided completions differ: {left} and {right}")
    return left
