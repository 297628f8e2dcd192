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
Executable checks of identities about inverses along an element, and a
search for inputs that violate them once a hypothesis is dropped.

Every checker returns a `LawReport` with a three-valued verdict: a failed
hypothesis is reported as HYPOTHESES_UNMET, never as a violation.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import (
    Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union,
)

from ring_inverses import exec_env
from ring_inverses.along import (
    Side, invert_along, invert_along_sigma, search_inverse_along, sided_inverse_along,
)
from ring_inverses.centralizer import (
    CentralizerMap, bijective_scalings, identity_centralizer, scaling_centralizers,
)
from ring_inverses.classical import drazin_inverse, group_inverse, moore_penrose
from ring_inverses.errors import Absent, NotAUnit
from ring_inverses.jacobson import jacobson_complete
from ring_inverses.regular import is_regular
from ring_inverses.rings import Element, RingContext

logger = logging.getLogger(__name__)

SIGMA_BIJECTIVE = "sigma-bijective"
SIGMA_CENTRALIZER = "sigma-centralizer"


class Verdict(Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    HYPOTHESES_UNMET = "hypotheses-unmet"


@dataclass(frozen=True)
class IdentityCheck:
    """
    One side-by-side comparison. A side is None when the element it names
    does not exist; two absent sides agree.
    """
    name: str
    lhs: Optional[Element]
    rhs: Optional[Element]

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class LawReport:
    """
    The outcome of checking one law on one input tuple.

    Attributes:
        law: The law identifier.
        inputs: (name, element) pairs in the law's input order.
        sigma: The centralizer the law was checked with, if it takes one.
        hypotheses: (name, holds) pairs for every hypothesis evaluated.
        hypotheses_met: Whether every hypothesis that was not dropped holds.
        checks: The identities compared, conclusions first.
    """
    law: str
    inputs: Tuple[Tuple[str, Element], ...]
    sigma: Optional[CentralizerMap]
    hypotheses: Tuple[Tuple[str, bool], ...]
    hypotheses_met: bool
    checks: Tuple[IdentityCheck, ...] = ()

    @property
    def verdict(self) -> Verdict:
        if not self.hypotheses_met or not self.checks:
            return Verdict.HYPOTHESES_UNMET
        if all(check.holds for check in self.checks):
            return Verdict.HOLDS
        return Verdict.VIOLATED

    @property
    def failing_check(self) -> Optional[IdentityCheck]:
        return next((check for check in self.checks if not check.holds), None)

    @property
    def lhs(self) -> Optional[Element]:
        check = self.failing_check or (self.checks[0] if self.checks else None)
        return check.lhs if check else None

    @property
    def rhs(self) -> Optional[Element]:
        check = self.failing_check or (self.checks[0] if self.checks else None)
        return check.rhs if check else None

    @property
    def certificate(self) -> Optional[str]:
        """Where a violated report diverges, e.g. "absorption: 6 != 3"."""
        check = self.failing_check
        if self.verdict != Verdict.VIOLATED or check is None:
            return None
        return f"{check.name}: {_show(check.lhs)} != {_show(check.rhs)}"

    def describe_inputs(self) -> str:
        parts = [f"{name}={value}" for name, value in self.inputs]
        if self.sigma is not None:
            parts.append(str(self.sigma))
        return ", ".join(parts)

    def __str__(self) -> str:
        text = f"{self.law} [{self.describe_inputs()}]: {self.verdict.value}"
        if self.certificate:
            text += f" ({self.certificate})"
        return text


def _show(value: Optional[Element]) -> str:
    return "absent" if value is None else str(value)


def _value(result) -> Optional[Element]:
    """The element held by an inverse result, or None if it is absent."""
    if result is None or isinstance(result, Absent):
        return None
    return getattr(result, "b", result)


def _report(law: str, names: Sequence[str], values: Sequence[Element],
            sigma: Optional[CentralizerMap], hypotheses: Mapping[str, bool],
            drop: FrozenSet[str], checks: Iterable[IdentityCheck]) -> LawReport:
    met = all(holds for name, holds in hypotheses.items() if name not in drop)
    return LawReport(
        law=law,
        inputs=tuple(zip(names, values)),
        sigma=sigma,
        hypotheses=tuple(hypotheses.items()),
        hypotheses_met=met,
        checks=tuple(checks),
    )


def _sigma_hypotheses(sigma: CentralizerMap) -> Dict[str, bool]:
    return {
        SIGMA_CENTRALIZER: sigma.is_centralizer,
        SIGMA_BIJECTIVE: sigma.is_bijective_centralizer,
    }


def _absorption(name: str, x: Element, s: Element, y: Element) -> IdentityCheck:
    """x + y = x s y, where s is the sum a + b."""
    return IdentityCheck(name, x + y, x * s * y)


def _one_sided_report(law: str, a: Element, b: Element, d: Element,
                      with_absorption: bool) -> LawReport:
    a_left = _value(sided_inverse_along(a, d, Side.LEFT))
    b_right = _value(sided_inverse_along(b, d, Side.RIGHT))
    a_right = _value(sided_inverse_along(a, d, Side.RIGHT))
    b_left = _value(sided_inverse_along(b, d, Side.LEFT))
    first = a_left is not None and b_right is not None
    second = a_right is not None and b_left is not None

    absorption, products = [], []
    if first:
        absorption.append(_absorption("a_l + b_r = a_l(a+b)b_r", a_left, a + b, b_right))
        products.append(IdentityCheck("a_l a b_r = b_r", a_left * a * b_right, b_right))
        products.append(IdentityCheck("a_l b b_r = a_l", a_left * b * b_right, a_left))
    if second:
        absorption.append(IdentityCheck("a_r + b_l = b_l(a+b)a_r",
                                        a_right + b_left, b_left * (a + b) * a_right))
        products.append(IdentityCheck("b_l b a_r = a_r", b_left * b * a_right, a_right))
        products.append(IdentityCheck("b_l a a_r = b_l", b_left * a * a_right, b_left))

    # Either pair of one-sided inverses is enough for its half of the law.
    hypotheses = {"left-a-right-b": first, "right-a-left-b": second}
    return LawReport(
        law=law,
        inputs=(("a", a), ("b", b), ("d", d)),
        sigma=None,
        hypotheses=tuple(hypotheses.items()),
        hypotheses_met=first or second,
        checks=tuple(absorption + products if with_absorption else products),
    )


def check_one_sided_products(a: Element, b: Element, d: Element,
                             drop: FrozenSet[str] = frozenset()) -> LawReport:
    """a_l a b_r = b_r and a_l b b_r = a_l, and symmetrically with a, b swapped."""
    return _one_sided_report("one-sided-products", a, b, d, with_absorption=False)


def check_absorption_one_sided(a: Element, b: Element, d: Element,
                               drop: FrozenSet[str] = frozenset()) -> LawReport:
    """a_l + b_r = a_l (a + b) b_r and a_r + b_l = b_l (a + b) a_r, together
    with the products they rest on."""
    return _one_sided_report("absorption-one-sided", a, b, d, with_absorption=True)


def check_absorption(a: Element, b: Element, d: Element,
                     drop: FrozenSet[str] = frozenset()) -> LawReport:
    """a^||d + b^||d = a^||d (a + b) b^||d."""
    a_along = _value(invert_along(a, d))
    b_along = _value(invert_along(b, d))
    hypotheses = {"a-along-d": a_along is not None, "b-along-d": b_along is not None}
    checks = []
    if a_along is not None and b_along is not None:
        checks.append(_absorption("absorption", a_along, a + b, b_along))
    return _report("absorption", ("a", "b", "d"), (a, b, d), None, hypotheses, drop, checks)


def check_absorption_cross(a: Element, b: Element, d1: Element, d2: Element,
                           sigma: CentralizerMap,
                           drop: FrozenSet[str] = frozenset()) -> LawReport:
    """a^||d1 + b^||d2 = a^||d1 (a + b) b^||d2 when d1 = sigma(d2)."""
    a_along = _value(invert_along(a, d1))
    b_along = _value(invert_along(b, d2))
    hypotheses = {
        "a-along-d1": a_along is not None,
        "b-along-d2": b_along is not None,
        "d1=sigma(d2)": d1 == sigma(d2),
        **_sigma_hypotheses(sigma),
    }
    checks = []
    if a_along is not None and b_along is not None:
        checks.append(_absorption("absorption-cross", a_along, a + b, b_along))
    return _report("absorption-cross", ("a", "b", "d1", "d2"), (a, b, d1, d2),
                   sigma, hypotheses, drop, checks)


def _classical_absorption(law: str, a: Element, b: Element, sigma: CentralizerMap,
                          a_inverse: Optional[Element], b_inverse: Optional[Element],
                          link_name: str, link_holds: bool,
                          drop: FrozenSet[str]) -> LawReport:
    hypotheses = {
        "a-invertible": a_inverse is not None,
        "b-invertible": b_inverse is not None,
        link_name: link_holds,
        **_sigma_hypotheses(sigma),
    }
    checks = []
    if a_inverse is not None and b_inverse is not None:
        checks.append(_absorption(law, a_inverse, a + b, b_inverse))
    return _report(law, ("a", "b"), (a, b), sigma, hypotheses, drop, checks)


def check_absorption_group(a: Element, b: Element, sigma: CentralizerMap,
                           drop: FrozenSet[str] = frozenset()) -> LawReport:
    """a^# + b^# = a^# (a + b) b^# when a = sigma(b)."""
    return _classical_absorption(
        "absorption-group", a, b, sigma,
        _value(group_inverse(a)), _value(group_inverse(b)),
        "a=sigma(b)", a == sigma(b), drop)


def _power_link(a: Element, b: Element, sigma: CentralizerMap,
                a_index: int, b_index: int) -> bool:
    """Whether a^n = sigma(b^m) for some n >= ind(a) and m >= ind(b)."""
    ring = a.ring
    top = ring.order() + 1 if ring.is_finite() else max(a_index, b_index) + ring.spec.size
    a_powers = [a ** n for n in range(a_index, max(top, a_index) + 1)]
    return any(sigma(b ** m) in a_powers for m in range(b_index, max(top, b_index) + 1))


def check_absorption_drazin(a: Element, b: Element, sigma: CentralizerMap,
                            drop: FrozenSet[str] = frozenset()) -> LawReport:
    """a^D + b^D = a^D (a + b) b^D when a^n = sigma(b^m), n and m at least
    the Drazin indices of a and b."""
    a_drazin = drazin_inverse(a)
    b_drazin = drazin_inverse(b)
    linked = (not isinstance(a_drazin, Absent) and not isinstance(b_drazin, Absent)
              and _power_link(a, b, sigma, a_drazin.index, b_drazin.index))
    return _classical_absorption(
        "absorption-drazin", a, b, sigma, _value(a_drazin), _value(b_drazin),
        "a^n=sigma(b^m)", linked, drop)


def check_absorption_mp(a: Element, b: Element, sigma: CentralizerMap,
                        drop: FrozenSet[str] = frozenset()) -> LawReport:
    """a-dagger + b-dagger = a-dagger (a + b) b-dagger when a* = sigma(b*)."""
    return _classical_absorption(
        "absorption-mp", a, b, sigma,
        _value(moore_penrose(a)), _value(moore_penrose(b)),
        "a*=sigma(b*)", a.star == sigma(b.star), drop)


def check_absorption_mixed(a: Element, b: Element, sigma: CentralizerMap,
                           drop: FrozenSet[str] = frozenset()) -> LawReport:
    """a^# + b-dagger = a^# (a + b) b-dagger when a = sigma(b*)."""
    return _classical_absorption(
        "absorption-mixed", a, b, sigma,
        _value(group_inverse(a)), _value(moore_penrose(b)),
        "a=sigma(b*)", a == sigma(b.star), drop)


def check_commutation(a: Element, d: Element, sigma: CentralizerMap,
                      drop: FrozenSet[str] = frozenset()) -> LawReport:
    """a^||d a = a a^||d when ad = sigma(da)."""
    a_along = _value(invert_along(a, d))
    hypotheses = {
        "a-along-d": a_along is not None,
        "ad=sigma(da)": a * d == sigma(d * a),
        **_sigma_hypotheses(sigma),
    }
    checks = []
    if a_along is not None:
        checks.append(IdentityCheck("commutation", a_along * a, a * a_along))
    return _report("commutation", ("a", "d"), (a, d), sigma, hypotheses, drop, checks)


def check_reverse_order(a: Element, b: Element, d: Element, sigma: CentralizerMap,
                        drop: FrozenSet[str] = frozenset(),
                        law: str = "reverse-order") -> LawReport:
    """(ab)^||d = b^||d a^||d and (ba)^||d = a^||d b^||d when ad = sigma(da)."""
    a_along = _value(invert_along(a, d))
    b_along = _value(invert_along(b, d))
    hypotheses = {
        "a-along-d": a_along is not None,
        "b-along-d": b_along is not None,
        "ad=sigma(da)": a * d == sigma(d * a),
        **_sigma_hypotheses(sigma),
    }
    checks = []
    if a_along is not None and b_along is not None:
        checks.append(IdentityCheck("(ab)^||d = b^||d a^||d",
                                    _value(invert_along(a * b, d)), b_along * a_along))
        checks.append(IdentityCheck("(ba)^||d = a^||d b^||d",
                                    _value(invert_along(b * a, d)), a_along * b_along))
    return _report(law, ("a", "b", "d"), (a, b, d), sigma, hypotheses, drop, checks)


def check_reverse_order_commuting(a: Element, b: Element, d: Element,
                                  drop: FrozenSet[str] = frozenset()) -> LawReport:
    """The reverse order law with sigma the identity, i.e. when ad = da."""
    report = check_reverse_order(a, b, d, identity_centralizer(a.ring),
                                 law="reverse-order-commuting")
    hypotheses = {
        ("ad=da" if name == "ad=sigma(da)" else name): holds
        for name, holds in report.hypotheses
        if name not in (SIGMA_CENTRALIZER, SIGMA_BIJECTIVE)
    }
    return _report(report.law, ("a", "b", "d"), (a, b, d), None,
                   hypotheses, drop, report.checks)


def check_shift_invariance(a: Element, d: Element, sigma: CentralizerMap,
                           drop: FrozenSet[str] = frozenset()) -> LawReport:
    """a^||sigma(d) = a^||d and sigma(a)^||d = sigma^-1(a^||d), each side
    existing exactly when the other does."""
    a_along = _value(invert_along(a, d))
    checks = [IdentityCheck("a^||sigma(d) = a^||d",
                            _value(invert_along(a, sigma(d))), a_along)]
    if sigma.bijective:
        expected = sigma.inverse_apply(a_along) if a_along is not None else None
        checks.append(IdentityCheck("sigma(a)^||d = sigma^-1(a^||d)",
                                    _value(invert_along(sigma(a), d)), expected))
    return _report("shift-invariance", ("a", "d"), (a, d), sigma,
                   _sigma_hypotheses(sigma), drop, checks)


def check_jacobson(a: Element, b: Element,
                   drop: FrozenSet[str] = frozenset()) -> LawReport:
    """(1 + ba)^-1 = 1 - b (1 + ab)^-1 a, either side existing iff the other does."""
    ring = a.ring
    try:
        ab_inverse = ring.unit_inverse(1 + a * b)
    except NotAUnit:
        ab_inverse = None
    try:
        ba_inverse = ring.unit_inverse(1 + b * a)
    except NotAUnit:
        ba_inverse = None

    checks = []
    if ab_inverse is not None:
        completion = jacobson_complete(a, b, ab_inverse, Side.LEFT)
        checks.append(IdentityCheck("(1+ba)^-1 = 1-b(1+ab)^-1a", ba_inverse, completion))
        checks.append(IdentityCheck("(1+ba)(1-bca) = 1", (1 + b * a) * completion, ring.one))
    else:
        checks.append(IdentityCheck("(1+ba)^-1 = 1-b(1+ab)^-1a", ba_inverse, None))
    return _report("jacobson", ("a", "b"), (a, b), None, {}, drop, checks)


def check_along_sigma_criterion(a: Element, d: Element, sigma: CentralizerMap,
                                drop: FrozenSet[str] = frozenset()) -> LawReport:
    """The definitional a^||d equals sigma(u^-1) d, and exists exactly when
    u = sigma(da) + 1 - dd- is a unit."""

    hypotheses = {"d-regular": is_regular(d), **_sigma_hypotheses(sigma)}
    checks = []
    if hypotheses["d-regular"] and sigma.is_centralizer:
        if a.ring.is_finite():
            found = search_inverse_along(a, d)
            definitional = found[0] if found else None
        else:
            definitional = _value(invert_along(a, d))
        criterion = invert_along_sigma(a, d, sigma, bypass_bijectivity_check=True)
        checks.append(IdentityCheck("a^||d = sigma(u^-1)d", definitional, _value(criterion)))
    return _report("along-sigma-criterion", ("a", "d"), (a, d), sigma,
                   hypotheses, drop, checks)


@dataclass(frozen=True)
class Law:
    """
    A registered law.

    Attributes:
        name: The identifier used on the command line.
        inputs: The names of the element inputs, in checker order.
        uses_sigma: Whether the checker takes a centralizer.
        droppable: Hypotheses a counterexample search may drop.
        check: The checker.
        summary: One line describing the identity.
    """
    name: str
    inputs: Tuple[str, ...]
    uses_sigma: bool
    droppable: Tuple[str, ...]
    check: Callable[..., LawReport] = field(repr=False)
    summary: str = ""

    def run(self, values: Sequence[Element], sigma: Optional[CentralizerMap] = None,
            drop: FrozenSet[str] = frozenset()) -> LawReport:
        if len(values) != len(self.inputs):
            raise ValueError(f"{self.name} takes inputs {', '.join(self.inputs)}")
        if self.uses_sigma:
            if sigma is None:
                sigma = identity_centralizer(values[0].ring)
            return self.check(*values, sigma, drop=drop)
        return self.check(*values, drop=drop)


_SIGMA_DROPS = (SIGMA_BIJECTIVE,)

LAWS: Dict[str, Law] = {law.name: law for law in (
    Law("one-sided-products", ("a", "b", "d"), False, (), check_one_sided_products,
        "a_l a b_r = b_r, a_l b b_r = a_l"),
    Law("absorption-one-sided", ("a", "b", "d"), False, (), check_absorption_one_sided,
        "a_l + b_r = a_l(a+b)b_r, a_r + b_l = b_l(a+b)a_r"),
    Law("absorption", ("a", "b", "d"), False, (), check_absorption,
        "a^||d + b^||d = a^||d(a+b)b^||d"),
    Law("absorption-cross", ("a", "b", "d1", "d2"), True,
        ("d1=sigma(d2)",) + _SIGMA_DROPS, check_absorption_cross,
        "a^||d1 + b^||d2 = a^||d1(a+b)b^||d2 if d1 = sigma(d2)"),
    Law("absorption-group", ("a", "b"), True, ("a=sigma(b)",) + _SIGMA_DROPS,
        check_absorption_group, "a^# + b^# = a^#(a+b)b^# if a = sigma(b)"),
    Law("absorption-drazin", ("a", "b"), True, ("a^n=sigma(b^m)",) + _SIGMA_DROPS,
        check_absorption_drazin, "a^D + b^D = a^D(a+b)b^D if a^n = sigma(b^m)"),
    Law("absorption-mp", ("a", "b"), True, ("a*=sigma(b*)",) + _SIGMA_DROPS,
        check_absorption_mp, "a+ + b+ = a+(a+b)b+ if a* = sigma(b*)"),
    Law("absorption-mixed", ("a", "b"), True, ("a=sigma(b*)",) + _SIGMA_DROPS,
        check_absorption_mixed, "a^# + b+ = a^#(a+b)b+ if a = sigma(b*)"),
    Law("commutation", ("a", "d"), True, ("ad=sigma(da)",) + _SIGMA_DROPS,
        check_commutation, "a^||d a = a a^||d if ad = sigma(da)"),
    Law("reverse-order", ("a", "b", "d"), True, ("ad=sigma(da)",) + _SIGMA_DROPS,
        check_reverse_order, "(ab)^||d = b^||d a^||d if ad = sigma(da)"),
    Law("reverse-order-commuting", ("a", "b", "d"), False, ("ad=da",),
        check_reverse_order_commuting, "(ab)^||d = b^||d a^||d if ad = da"),
    Law("shift-invariance", ("a", "d"), True, _SIGMA_DROPS, check_shift_invariance,
        "a^||sigma(d) = a^||d, sigma(a)^||d = sigma^-1(a^||d)"),
    Law("jacobson", ("a", "b"), False, (), check_jacobson,
        "(1+ba)^-1 = 1 - b(1+ab)^-1 a"),
    Law("along-sigma-criterion", ("a", "d"), True, _SIGMA_DROPS,
        check_along_sigma_criterion, "a^||d exists iff sigma(da) + 1 - dd- is a unit"),
)}


def get_law(name: str) -> Law:
    law = LAWS.get(name)
    if law is None:
        raise ValueError(f"unknown law {name!r}; choose from {', '.join(LAWS)}")
    return law


def validate_drop(law: Law, drop: Iterable[str]) -> FrozenSet[str]:
    drop = frozenset(drop)
    unknown = drop - set(law.droppable)
    if unknown:
        allowed = ", ".join(law.droppable) or "none"
        raise ValueError(
            f"{law.name} cannot drop {', '.join(sorted(unknown))}; droppable: {allowed}")
    return drop


def default_sigmas(ring: RingContext, include_non_bijective: bool) -> List[CentralizerMap]:
    """The centralizers a law is checked with when none are given."""
    if not ring.is_finite():
        return [identity_centralizer(ring)]
    if include_non_bijective:
        return scaling_centralizers(ring)
    return list(bijective_scalings(ring))


def _input_tuples(law: Law, elements: Sequence[Element],
                  sigmas: Sequence[Optional[CentralizerMap]]
                  ) -> Iterable[Tuple[Tuple[Element, ...], Optional[CentralizerMap]]]:
    return itertools.product(itertools.product(elements, repeat=len(law.inputs)), sigmas)


def evaluate_law(ring: RingContext, law: Union[Law, str],
                 drop: Iterable[str] = (),
                 candidates: Optional[Sequence[Element]] = None,
                 sigmas: Optional[Sequence[CentralizerMap]] = None,
                 bound: Optional[int] = None,
                 workers: Optional[int] = None) -> List[LawReport]:
    """Checks a law on every input tuple in lexicographic order.

    Args:
        ring: The ring to enumerate, unless `candidates` is given.
        law: A `Law` or its identifier.
        drop: Hypotheses to ignore.
        candidates: The elements to draw inputs from; required for infinite
            rings.
        sigmas: The centralizers to pair with each tuple. Defaults to every
            scaling map of a finite ring (only the bijective ones unless
            `sigma-bijective` is dropped), or the identity otherwise.
        bound: The maximum number of tuples to examine.
        workers: Thread count; defaults to `exec_env.get_thread_count()`.

    Returns:
        One report per examined tuple, in enumeration order.

    Raises:
        NotFinite: If the ring is infinite and no candidates are given.
        ValueError: For an unknown law or hypothesis.
    """
    if isinstance(law, str):
        law = get_law(law)
    drop = validate_drop(law, drop)
    elements = list(candidates) if candidates is not None else list(ring.enumerate())
    if law.uses_sigma:
        if sigmas is None:
            sigmas = default_sigmas(ring, SIGMA_BIJECTIVE in drop)
    else:
        sigmas = [None]

    tuples = _input_tuples(law, elements, sigmas)
    if bound is not None:
        tuples = itertools.islice(tuples, bound)

    def evaluate(item) -> LawReport:
        values, sigma = item
        return law.run(values, sigma, drop)

    workers = workers or exec_env.get_thread_count()
    logger.debug("checking %s on %s with %d workers", law.name, ring.spec, workers)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        # map() yields in submission order, which keeps reports lexicographic.
        reports = list(executor.map(evaluate, tuples))
    logger.debug("checked %d tuples for %s", len(reports), law.name)
    return reports


def search_counterexamples(ring: RingContext, law: Union[Law, str],
                           drop: Iterable[str] = (),
                           candidates: Optional[Sequence[Element]] = None,
                           sigmas: Optional[Sequence[CentralizerMap]] = None,
                           bound: Optional[int] = None,
                           workers: Optional[int] = None) -> List[LawReport]:
    """Every violated report among the examined tuples, first hit first."""
    reports = evaluate_law(ring, law, drop, candidates, sigmas, bound, workers)
    violations = [report for report in reports if report.verdict == Verdict.VIOLATED]
    logger.debug("found %d violations", len(violations))
    return violations
