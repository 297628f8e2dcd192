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
This module tests the law checkers, the law registry and the counterexample
search.
"""

from __future__ import annotations

import unittest

from ring_inverses.centralizer import identity_centralizer, make_scaling_centralizer
from ring_inverses.errors import NotFinite
from ring_inverses.exec_env import get_ring
from ring_inverses.laws import (
    LAWS, Verdict, check_absorption, check_absorption_cross, check_absorption_one_sided,
    check_along_sigma_criterion, check_commutation, check_jacobson, check_reverse_order,
    check_shift_invariance, default_sigmas, evaluate_law, get_law, search_counterexamples,
    validate_drop,
)
from ring_inverses.rings import ModularRing


def _payloads(report):
    return [value.payload for _, value in report.inputs]


class TestCheckers(unittest.TestCase):

    def setUp(self):
        self.z9 = get_ring("zmod:9")
        self.m2 = get_ring("gqmat:2")

    def _z9(self, *values):
        return [self.z9.from_int(v) for v in values]

    def test_absorption_one_sided(self):
        report = check_absorption_one_sided(*self._z9(7, 5, 4))
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.lhs, 6)
        self.assertEqual(report.rhs, 6)

        z5 = get_ring("zmod:5")
        report = check_absorption_one_sided(z5.one, z5.one, z5.one)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.lhs, 2)

        z4 = get_ring("zmod:4")
        report = check_absorption_one_sided(z4.one, z4.one, z4.from_int(2))
        self.assertEqual(report.verdict, Verdict.HYPOTHESES_UNMET)

    def test_absorption(self):
        report = check_absorption(*self._z9(7, 5, 4))
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.lhs, 6)
        a, d = self.m2.parse("[[1,0],[1,0]]"), self.m2.parse("[[1,1],[0,0]]")
        self.assertEqual(check_absorption(a, a, d).verdict, Verdict.HOLDS)

    def test_absorption_cross_modular(self):
        sigma = make_scaling_centralizer(self.z9, self.z9.from_int(2))
        report = check_absorption_cross(*self._z9(7, 5, 4, 2), sigma)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.lhs, 6)
        self.assertEqual(report.rhs, 6)

    def test_absorption_cross_matrix(self):
        a, b, d1, d2 = (self.m2.parse(text) for text in (
            "[[0,0],[1,1]]", "[[1,0],[0,0]]", "[[1/2,1/2],[0,0]]", "[[1,1],[0,0]]"))
        half = make_scaling_centralizer(self.m2, self.m2.parse("[[1/2,0],[0,1/2]]"))
        report = check_absorption_cross(a, b, d1, d2, half)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.lhs, self.m2.parse("[[2,2],[0,0]]"))
        self.assertEqual(report.rhs, self.m2.parse("[[2,2],[0,0]]"))

    def test_absorption_cross_needs_link(self):
        a, b, d1, d2 = (self.m2.parse(text) for text in (
            "[[1,0],[1,0]]", "[[0,0],[1,1]]", "[[1,1],[0,0]]", "[[1,1],[1,1]]"))
        sigma = identity_centralizer(self.m2)
        report = check_absorption_cross(a, b, d1, d2, sigma)
        self.assertEqual(report.verdict, Verdict.HYPOTHESES_UNMET)
        self.assertIn(("d1=sigma(d2)", False), report.hypotheses)

        report = check_absorption_cross(a, b, d1, d2, sigma,
                                        drop=frozenset({"d1=sigma(d2)"}))
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertEqual(report.lhs, self.m2.parse("[[1,1],[1/2,1/2]]"))
        self.assertEqual(report.rhs, self.m2.parse("[[1,1],[0,0]]"))
        self.assertEqual(report.certificate,
                         "absorption-cross: [[1,1],[1/2,1/2]] != [[1,1],[0,0]]")

    def test_commutation(self):
        sigma = identity_centralizer(self.z9)
        self.assertEqual(check_commutation(*self._z9(7, 4), sigma).verdict, Verdict.HOLDS)

        a, d = self.m2.parse("[[1,0],[1,0]]"), self.m2.parse("[[1,1],[0,0]]")
        sigma = identity_centralizer(self.m2)
        self.assertEqual(check_commutation(a, d, sigma).verdict, Verdict.HYPOTHESES_UNMET)
        report = check_commutation(a, d, sigma, drop=frozenset({"ad=sigma(da)"}))
        self.assertEqual(report.verdict, Verdict.VIOLATED)

        self.assertEqual(check_commutation(self.m2.from_int(2), d, sigma).verdict,
                         Verdict.HOLDS)

    def test_reverse_order(self):
        sigma = identity_centralizer(self.z9)
        report = check_reverse_order(*self._z9(7, 5, 4), sigma)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.lhs, 8)

        a = self.m2.from_int(2)
        b, d = self.m2.parse("[[0,0],[1,1]]"), self.m2.parse("[[1,1],[1,1]]")
        report = check_reverse_order(a, b, d, identity_centralizer(self.m2))
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.lhs, self.m2.parse("[[1/4,1/4],[1/4,1/4]]"))

    def test_shift_invariance(self):
        z7 = get_ring("zmod:7")
        sigma = make_scaling_centralizer(z7, z7.from_int(2))
        report = check_shift_invariance(z7.from_int(5), z7.from_int(3), sigma)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(len(report.checks), 2)
        self.assertEqual(report.checks[1].lhs, 5)

    def test_jacobson(self):
        self.assertEqual(check_jacobson(*self._z9(1, 1)).verdict, Verdict.HOLDS)
        z6 = get_ring("zmod:6")
        self.assertEqual(check_jacobson(z6.one, z6.one).verdict, Verdict.HOLDS)

    def test_along_sigma_criterion(self):
        z6 = get_ring("zmod:6")
        sigma = make_scaling_centralizer(z6, z6.from_int(3))
        a, d = z6.from_int(4), z6.from_int(2)
        report = check_along_sigma_criterion(a, d, sigma)
        self.assertEqual(report.verdict, Verdict.HYPOTHESES_UNMET)

        report = check_along_sigma_criterion(a, d, sigma, drop=frozenset({"sigma-bijective"}))
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertEqual(report.lhs, 4)
        self.assertIsNone(report.rhs)
        self.assertEqual(
            str(report),
            "along-sigma-criterion [a=4, d=2, sigma(x)=3x]: violated "
            "(a^||d = sigma(u^-1)d: 4 != absent)")


class TestRegistry(unittest.TestCase):

    def test_get_law(self):
        self.assertEqual(get_law("absorption").inputs, ("a", "b", "d"))
        with self.assertRaises(ValueError):
            get_law("no-such-law")

    def test_validate_drop(self):
        law = get_law("absorption-cross")
        self.assertEqual(validate_drop(law, ["d1=sigma(d2)"]), frozenset({"d1=sigma(d2)"}))
        with self.assertRaises(ValueError):
            validate_drop(law, ["a-along-d1"])
        with self.assertRaises(ValueError):
            validate_drop(get_law("absorption"), ["anything"])

    def test_run(self):
        z9 = get_ring("zmod:9")
        law = get_law("absorption")
        report = law.run([z9.from_int(7), z9.from_int(5), z9.from_int(4)])
        self.assertEqual(report.verdict, Verdict.HOLDS)
        with self.assertRaises(ValueError):
            law.run([z9.one])
        report = get_law("commutation").run([z9.from_int(7), z9.from_int(4)])
        self.assertEqual(report.sigma.scaling, 1)

    def test_default_sigmas(self):
        z6 = get_ring("zmod:6")
        self.assertEqual(len(default_sigmas(z6, include_non_bijective=False)), 2)
        self.assertEqual(len(default_sigmas(z6, include_non_bijective=True)), 6)
        sigmas = default_sigmas(get_ring("gqmat:2"), include_non_bijective=True)
        self.assertEqual([s.scaling for s in sigmas], [get_ring("gqmat:2").one])


class TestSearch(unittest.TestCase):

    def test_absorption_cross_counterexample_in_z6(self):
        z6 = get_ring("zmod:6")
        found = search_counterexamples(z6, "absorption-cross", drop=["d1=sigma(d2)"])
        self.assertTrue(found)
        matches = [r for r in found
                   if _payloads(r) == [1, 1, 1, 3] and r.sigma.scaling == 1]
        self.assertEqual(len(matches), 1)
        self.assertEqual(matches[0].lhs, 4)
        self.assertEqual(matches[0].rhs, 0)

    def test_matrix_candidates(self):
        m2 = get_ring("gqmat:2")
        a, b, d1, d2 = (m2.parse(text) for text in (
            "[[1,0],[1,0]]", "[[0,0],[1,1]]", "[[1,1],[0,0]]", "[[1,1],[1,1]]"))
        found = search_counterexamples(m2, "absorption-cross", drop=["d1=sigma(d2)"],
                                       candidates=[a, b, d1, d2])
        inputs = [tuple(value for _, value in r.inputs) for r in found]
        self.assertIn((a, b, d1, d2), inputs)
        with self.assertRaises(NotFinite):
            search_counterexamples(m2, "absorption")

    def test_along_sigma_criterion_needs_bijectivity(self):
        z6 = get_ring("zmod:6")
        self.assertEqual(search_counterexamples(z6, "along-sigma-criterion"), [])
        found = search_counterexamples(z6, "along-sigma-criterion", drop=["sigma-bijective"])
        matches = [r for r in found if _payloads(r) == [4, 2] and r.sigma.scaling == 3]
        self.assertEqual(len(matches), 1)
        self.assertEqual(matches[0].lhs, 4)
        self.assertIsNone(matches[0].rhs)

    def test_classical_absorption_needs_link(self):
        z2 = get_ring("zmod:2")
        cases = [
            ("absorption-group", "a=sigma(b)"),
            ("absorption-drazin", "a^n=sigma(b^m)"),
            ("absorption-mp", "a*=sigma(b*)"),
            ("absorption-mixed", "a=sigma(b*)"),
        ]
        for law, hypothesis in cases:
            with self.subTest(law=law):
                self.assertEqual(search_counterexamples(z2, law), [])
                found = search_counterexamples(z2, law, drop=[hypothesis])
                matches = [r for r in found if _payloads(r) == [1, 0]]
                self.assertEqual(len(matches), 1)
                self.assertEqual(matches[0].lhs, 1)
                self.assertEqual(matches[0].rhs, 0)

    def test_shift_invariance_needs_bijectivity(self):
        z2 = get_ring("zmod:2")
        self.assertEqual(search_counterexamples(z2, "shift-invariance"), [])
        found = search_counterexamples(z2, "shift-invariance", drop=["sigma-bijective"])
        matches = [r for r in found if _payloads(r) == [0, 1] and r.sigma.scaling == 0]
        self.assertEqual(len(matches), 1)
        self.assertEqual(matches[0].lhs, 0)
        self.assertIsNone(matches[0].rhs)

    def test_reverse_order_needs_commuting(self):
        m2 = get_ring("gqmat:2")
        a, d = m2.parse("[[1,0],[1,0]]"), m2.parse("[[1,1],[0,0]]")
        for law, hypothesis in (("reverse-order", "ad=sigma(da)"),
                                ("reverse-order-commuting", "ad=da")):
            with self.subTest(law=law):
                self.assertEqual(search_counterexamples(m2, law, candidates=[a, d]), [])
                found = search_counterexamples(m2, law, drop=[hypothesis],
                                               candidates=[a, d])
                matches = [r for r in found
                           if tuple(value for _, value in r.inputs) == (a, a, d)]
                self.assertEqual(len(matches), 1)
                self.assertEqual(matches[0].lhs, m2.parse("[[1/2,1/2],[0,0]]"))
                self.assertEqual(matches[0].rhs, m2.parse("[[1/4,1/4],[0,0]]"))

    def test_order_is_deterministic(self):
        z5 = get_ring("zmod:5")
        serial = evaluate_law(z5, "reverse-order", workers=1)
        parallel = evaluate_law(z5, "reverse-order", workers=4)
        self.assertEqual([str(r) for r in serial], [str(r) for r in parallel])
        self.assertEqual(_payloads(serial[0]), [0, 0, 0])
        self.assertEqual(_payloads(serial[-1]), [4, 4, 4])

    def test_bound(self):
        z5 = get_ring("zmod:5")
        self.assertEqual(len(evaluate_law(z5, "absorption", bound=10)), 10)

    def test_laws_hold_exhaustively(self):
        """No law is violated when its hypotheses are met."""
        for name, law in LAWS.items():
            for n in range(2, 10):
                ring = ModularRing(n)
                with self.subTest(law=name, n=n):
                    violations = search_counterexamples(ring, law, workers=2)
                    self.assertEqual([str(r) for r in violations], [])


if __name__ == '__main__':
    unittest.main()
