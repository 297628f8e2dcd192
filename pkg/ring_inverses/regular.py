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
Inner inverses and the Penrose equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List

from ring_inverses import linalg
from ring_inverses.errors import NotFinite, NotRegular
from ring_inverses.rings import Element, MatrixRing


@dataclass(frozen=True)
class PenroseProfile:
    """
    The subset of the Penrose equations satisfied by a pair (a, b):

        (1) aba = a   (2) bab = b   (3) (ab)* = ab   (4) (ba)* = ba
    """
    satisfied: FrozenSet[int]

    @property
    def is_inner(self) -> bool:
        return 1 in self.satisfied

    @property
    def is_13_inverse(self) -> bool:
        return {1, 3} <= self.satisfied

    @property
    def is_14_inverse(self) -> bool:
        return {1, 4} <= self.satisfied

    @property
    def is_moore_penrose(self) -> bool:
        return self.satisfied == frozenset({1, 2, 3, 4})

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.satisfied)) + "}"


def penrose_check(a: Element, b: Element) -> PenroseProfile:
    ab = a * b
    ba = b * a
    equations = {
        1: ab * a == a,
        2: ba * b == b,
        3: ab.star == ab,
        4: ba.star == ba,
    }
    return PenroseProfile(frozenset(i for i, holds in equations.items() if holds))


def inner_inverse(a: Element) -> Element:
    """Returns a canonical x with axa = a.

    In a finite ring this is the smallest such x in enumeration order. In a
    matrix ring, with P a Q = [[I_r, 0], [0, 0]] from a rank factorization,
    it is Q [[I_r, 0], [0, 0]] P.

    Raises:
        NotRegular: If a has no inner inverse.
    """
    ring = a.ring
    if isinstance(ring, MatrixRing):
        factorization = linalg.rank_factorization(ring.to_array(a))
        middle = linalg.leading_identity(ring.k, factorization.rank)
        x = linalg.matmul(linalg.matmul(factorization.right, middle), factorization.left)
        return ring.from_array(x)

    for x in ring.enumerate():
        if a * x * a == a:
            return x
    raise NotRegular(f"{a} is not regular in {ring.spec}")


def is_regular(a: Element) -> bool:
    try:
        inner_inverse(a)
        return True
    except NotRegular:
        return False


def all_inner_inverses(a: Element) -> List[Element]:
    """Every inner inverse of a, in enumeration order (finite rings only)."""
    if not a.ring.is_finite():
        raise NotFinite(f"{a.ring.spec} is infinite; inner inverses cannot be listed")
    return [x for x in a.ring.enumerate() if a * x * a == a]
