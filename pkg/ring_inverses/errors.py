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
Errors raised by the ring_inverses package, and the `Absent` value returned
when a requested generalized inverse does not exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class RingInverseError(Exception):
    """Base class for every error raised by this package."""


class RingMismatch(RingInverseError, ValueError):
    """Operands belong to different rings."""


class NotAUnit(RingInverseError, ArithmeticError):
    """The element has no two-sided inverse."""


class NotFinite(RingInverseError, ValueError):
    """An exhaustive operation was requested on an infinite ring."""


class NotRegular(RingInverseError, ArithmeticError):
    """The element has no inner inverse."""


class NotBijective(RingInverseError, ValueError):
    """The centralizer has no inverse map."""


class NotBijectiveCentralizer(RingInverseError, ValueError):
    """A criterion that needs a bijective centralizer was given something else."""


class PreconditionFailed(RingInverseError, ValueError):
    pass


class InternalFormulaMismatch(RingInverseError, RuntimeError):
    """A closed-form candidate failed the equations it must satisfy."""


class LiteralError(RingInverseError, ValueError):
    """A ring spec or element literal could not be parsed."""


class AbsentReason(Enum):
    NOT_REGULAR_D = "not-regular-d"
    UNIT_CRITERION_FAILED = "unit-criterion-failed"
    NOT_FOUND = "not-found"
    BOUND_EXHAUSTED = "bound-exhausted"
    NOT_A_UNIT = "not-a-unit"
    NOT_REGULAR = "not-regular"


@dataclass(frozen=True)
class Absent:
    """
    The outcome of an operation whose result does not exist.

    Attributes:
        reason: Why the result is absent. Callers use this to tell a failed
            hypothesis (`NOT_REGULAR_D`) from a failed criterion.
        detail: A human readable explanation, e.g. the offending element.
    """
    reason: AbsentReason
    detail: str = ""

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        if self.detail:
            return f"absent ({self.reason.value}: {self.detail})"
        return f"absent ({self.reason.value})"
