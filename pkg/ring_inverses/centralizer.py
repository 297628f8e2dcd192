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
Scaling centralizers sigma(x) = c x.

A centralizer satisfies a sigma(b) = sigma(ab) = sigma(a) b. Scaling by any c
is a left centralizer; it is two-sided exactly when c is central, and
bijective exactly when c is a unit.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum, auto
from typing import Iterable, Iterator, List, Optional, Tuple

from ring_inverses.errors import NotAUnit, NotBijective, NotFinite, RingMismatch
from ring_inverses.rings import Element, MatrixRing, RingContext

_DEFAULT_SEED = 0


class VerificationKind(Enum):
    EXHAUSTIVE = auto()
    SAMPLED = auto()


@dataclass(frozen=True)
class VerificationMode:
    """Which pairs (a, b) `verify_centralizer` checks the laws on."""
    kind: VerificationKind
    count: int = 0
    seed: int = _DEFAULT_SEED

    @classmethod
    def exhaustive(cls) -> VerificationMode:
        return cls(VerificationKind.EXHAUSTIVE)

    @classmethod
    def sampled(cls, count: int, seed: int = _DEFAULT_SEED) -> VerificationMode:
        if count < 1:
            raise ValueError("sampled verification needs a positive count")
        return cls(VerificationKind.SAMPLED, count, seed)


@dataclass(frozen=True)
class CentralizerMap:
    """
    The map sigma(x) = c x together with its verified status.

    Attributes:
        ring: The ring sigma acts on.
        scaling: The scaling element c.
        left_verified: sigma(ab) = sigma(a) b holds.
        right_verified: sigma(ab) = a sigma(b) holds, i.e. c is central.
        bijective: c is a unit.
        inverse_scaling: c^-1 when bijective, otherwise None.
    """
    ring: RingContext
    scaling: Element
    left_verified: bool
    right_verified: bool
    bijective: bool
    inverse_scaling: Optional[Element] = None

    @property
    def is_centralizer(self) -> bool:
        return self.left_verified and self.right_verified

    @property
    def is_bijective_centralizer(self) -> bool:
        return self.is_centralizer and self.bijective

    def apply(self, a: Element) -> Element:
        return self.scaling * a

    def __call__(self, a: Element) -> Element:
        return self.apply(a)

    def inverse_apply(self, a: Element) -> Element:
        if not self.bijective:
            raise NotBijective(f"sigma(x) = {self.scaling}x is not bijective on {self.ring.spec}")
        return self.inverse_scaling * a

    def inverse(self) -> CentralizerMap:
        """The centralizer sigma^-1(x) = c^-1 x."""
        if not self.bijective:
            raise NotBijective(f"sigma(x) = {self.scaling}x is not bijective on {self.ring.spec}")
        return make_scaling_centralizer(self.ring, self.inverse_scaling)

    def describe(self) -> str:
        return f"sigma(x)={self.scaling}x"

    def __str__(self) -> str:
        return self.describe()


def make_scaling_centralizer(ring: RingContext, c: Element) -> CentralizerMap:
    if c.ring != ring:
        raise RingMismatch(f"scaling element belongs to {c.ring.spec}, not {ring.spec}")
    try:
        inverse_scaling = ring.unit_inverse(c)
    except NotAUnit:
        inverse_scaling = None
    return CentralizerMap(
        ring=ring,
        scaling=c,
        left_verified=True,
        right_verified=ring.is_central(c),
        bijective=inverse_scaling is not None,
        inverse_scaling=inverse_scaling,
    )


def identity_centralizer(ring: RingContext) -> CentralizerMap:
    return make_scaling_centralizer(ring, ring.one)


def scaling_centralizers(ring: RingContext) -> List[CentralizerMap]:
    """sigma(x) = cx for every c of a finite ring, bijective or not."""
    return [make_scaling_centralizer(ring, c) for c in ring.enumerate()]


def bijective_scalings(ring: RingContext) -> Iterator[CentralizerMap]:
    """Every bijective scaling centralizer of a finite ring."""
    for sigma in scaling_centralizers(ring):
        if sigma.is_bijective_centralizer:
            yield sigma


def _verification_pairs(sigma: CentralizerMap,
                        mode: VerificationMode) -> Iterable[Tuple[Element, Element]]:
    ring = sigma.ring
    if mode.kind == VerificationKind.EXHAUSTIVE:
        if not ring.is_finite():
            raise NotFinite(f"exhaustive verification needs a finite ring, got {ring.spec}")
        elements = list(ring.enumerate())
        return itertools.product(elements, elements)

    rng = random.Random(mode.seed)
    pairs = [(ring.random_element(rng), ring.random_element(rng)) for _ in range(mode.count)]
    if isinstance(ring, MatrixRing):
        # (E_pq, 1) fails the right law exactly when c does not commute with E_pq.
        pairs.extend((ring.elementary(p, q), ring.one)
                     for p in range(ring.k) for q in range(ring.k))
    return pairs


def verify_centralizer(sigma: CentralizerMap, mode: VerificationMode) -> bool:
    """True iff a sigma(b) = sigma(ab) = sigma(a) b on every verification pair.

    Raises:
        NotFinite: For exhaustive mode on an infinite ring.
    """
    for a, b in _verification_pairs(sigma, mode):
        image = sigma(a * b)
        if image != sigma(a) * b or image != a * sigma(b):
            return False
    return True
