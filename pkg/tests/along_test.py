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
This module tests one-sided and two-sided inverses along an element, both by
search and through the unit criterion.
"""

from __future__ import annotations

import itertools
import unittest

from ring_inverses.along import (
    AlongInverseResult, Side, enumerate_sided_inverses, exists_along, ideal_membership,
    invert_along, invert_along_sigma, search_inverse_along, sided_inverse_along,
)
from ring_inverses.centralizer import (
    bijective_scalings, identity_centralizer, make_scaling_centralizer,
)
from ring_inverses.errors import (
    Absent, AbsentReason, NotBijectiveCentralizer, NotFinite, PreconditionFailed, RingMismatch,
)
from ring_inverses.exec_env import get_ring
from ring_inverses.regular import all_inner_inverses, is_regular
from ring_inverses.rings import ModularRing


def _z(n, *values):
    ring = get_ring(f"zmod:{n}")
    return [ring.from_int(v) for v in values]


def _m(*literals):
    ring = get_ring("gqmat:2")
    return [ring.parse(text) for text in literals]


class TestIdealMembership(unittest.TestCase):

    def test_modular(self):
        b, d = _z(6, 4, 2)
        self.assertEqual(ideal_membership(b, d, Side.LEFT), _z(6, 2)[0])
        b, d = _z(4, 1, 2)
        absent = ideal_membership(b, d, Side.LEFT)
        self.assertIsInstance(absent, Absent)
        self.assertEqual(absent.reason, AbsentReason.NOT_FOUND)

    def test_matrix(self):
        b, d, x = _m("[[1,1],[0,0]]", "[[0,0],[1,1]]", "[[0,1],[0,0]]")
        self.assertEqual(ideal_membership(b, d, Side.LEFT), x)
        self.assertIsInstance(ideal_membership(b, d, Side.RIGHT), Absent)


class TestSidedInverse(unittest.TestCase):

    def test_left_modular(self):
        a, d = _z(6, 4, 2)
        result = sided_inverse_along(a, d, Side.LEFT)
        self.assertEqual(result.b, _z(6, 4)[0])
        self.assertEqual(result.witness, _z(6, 2)[0])
        self.assertEqual(result.witness * d, result.b)

    def test_right_modular(self):
        a, d = _z(7, 5, 3)
        result = sided_inverse_along(a, d, Side.RIGHT)
        self.assertEqual(result.b, _z(7, 3)[0])
        self.assertEqual(d * result.witness, result.b)

    def test_verbatim_right_admits_zero(self):
        a, d = _z(7, 5, 3)
        result = sided_inverse_along(a, d, Side.RIGHT, verbatim=True)
        self.assertTrue(result.b.is_zero())

    def test_left_matrix(self):
        a, d, expected = _m("[[1,0],[1,0]]", "[[1,1],[0,0]]", "[[1/2,1/2],[0,0]]")
        result = sided_inverse_along(a, d, Side.LEFT)
        self.assertEqual(result.b, expected)
        self.assertEqual(result.b * a * d, d)

    def test_absent(self):
        a, d = _z(4, 2, 1)
        self.assertIsInstance(sided_inverse_along(a, d, Side.LEFT), Absent)

    def test_enumerate(self):
        a, d = _z(6, 4, 2)
        self.assertEqual([s.b for s in enumerate_sided_inverses(a, d, Side.LEFT)], _z(6, 4))
        self.assertEqual([s.b for s in enumerate_sided_inverses(a, d, Side.RIGHT)], _z(6, 4))
        a, d = _m("[[1,0],[1,0]]", "[[1,1],[0,0]]")
        with self.assertRaises(NotFinite):
            enumerate_sided_inverses(a, d, Side.LEFT)


class TestInvertAlong(unittest.TestCase):

    def test_units(self):
        cases = [(7, 5, 3, 3), (9, 7, 4, 4), (9, 5, 2, 2), (6, 4, 2, 4)]
        for n, a, d, expected in cases:
            with self.subTest(n=n, a=a, d=d):
                a_e, d_e, b_e = _z(n, a, d, expected)
                result = invert_along(a_e, d_e)
                self.assertIsInstance(result, AlongInverseResult)
                self.assertEqual(result.b, b_e)

    def test_matrices(self):
        a, d1, b, d2 = _m("[[1,0],[1,0]]", "[[1,1],[0,0]]", "[[0,0],[1,1]]", "[[1,1],[1,1]]")
        self.assertEqual(invert_along(a, d1).b, _m("[[1/2,1/2],[0,0]]")[0])
        self.assertEqual(invert_along(b, d2).b, _m("[[1/2,1/2],[1/2,1/2]]")[0])

    def test_certificates(self):
        a, d = _m("[[1,0],[1,0]]", "[[1,1],[0,0]]")
        result = invert_along(a, d)
        self.assertEqual(result.u * result.u_inv, 1)
        self.assertEqual(result.v * result.v_inv, 1)
        self.assertEqual(result.left_witness * d, result.b)
        self.assertEqual(d * result.right_witness, result.b)
        self.assertEqual(d * result.d_inner * d, d)

    def test_along_zero(self):
        a, d = _z(6, 5, 0)
        result = invert_along(a, d)
        self.assertTrue(result.b.is_zero())
        self.assertEqual(result.u, 1)

    def test_non_regular_d(self):
        a, d = _z(4, 1, 2)
        result = invert_along(a, d)
        self.assertEqual(result.reason, AbsentReason.NOT_REGULAR_D)
        self.assertFalse(exists_along(a, d))

    def test_unit_criterion_fails(self):
        a, d = _z(6, 3, 2)
        result = invert_along(a, d)
        self.assertEqual(result.reason, AbsentReason.UNIT_CRITERION_FAILED)
        self.assertEqual(search_inverse_along(a, d), [])

    def test_explicit_inner(self):
        a, d, inner = _z(6, 4, 2, 5)
        self.assertEqual(invert_along(a, d, inner=inner).b, _z(6, 4)[0])
        with self.assertRaises(PreconditionFailed):
            invert_along(a, d, inner=_z(6, 1)[0])

    def test_ring_mismatch(self):
        with self.assertRaises(RingMismatch):
            invert_along(_z(6, 1)[0], _z(7, 1)[0])


class TestInvertAlongSigma(unittest.TestCase):

    def test_bijective_scaling(self):
        z9 = get_ring("zmod:9")
        a, d = _z(9, 7, 4)
        result = invert_along_sigma(a, d, make_scaling_centralizer(z9, z9.from_int(2)))
        self.assertEqual(result.u, 2)
        self.assertEqual(result.b, 4)

    def test_identity_matches_plain(self):
        z9 = get_ring("zmod:9")
        for a, d in itertools.product(z9.enumerate(), repeat=2):
            with self.subTest(a=a, d=d):
                plain = invert_along(a, d)
                with_sigma = invert_along_sigma(a, d, identity_centralizer(z9))
                self.assertEqual(getattr(plain, "b", None), getattr(with_sigma, "b", None))

    def test_non_bijective_scaling(self):
        z6 = get_ring("zmod:6")
        a, d = _z(6, 4, 2)
        sigma = make_scaling_centralizer(z6, z6.from_int(3))
        with self.assertRaises(NotBijectiveCentralizer):
            invert_along_sigma(a, d, sigma)
        result = invert_along_sigma(a, d, sigma, bypass_bijectivity_check=True)
        self.assertEqual(result.reason, AbsentReason.UNIT_CRITERION_FAILED)
        self.assertIn("u = 3", result.detail)
        self.assertEqual(invert_along(a, d).b, 4)

    def test_non_centralizer_is_rejected(self):
        m2 = get_ring("gqmat:2")
        a, d = _m("[[1,0],[1,0]]", "[[1,1],[0,0]]")
        shear = make_scaling_centralizer(m2, m2.parse("[[1,1],[0,1]]"))
        with self.assertRaises(NotBijectiveCentralizer):
            invert_along_sigma(a, d, shear, bypass_bijectivity_check=True)

    def test_matrix_scaling(self):
        m2 = get_ring("gqmat:2")
        a, d = _m("[[1,0],[1,0]]", "[[1,1],[0,0]]")
        sigma = make_scaling_centralizer(m2, m2.from_int(3))
        self.assertEqual(invert_along_sigma(a, d, sigma).b, invert_along(a, d).b)


class TestCriterionAgainstSearch(unittest.TestCase):

    def test_criterion_matches_search(self):
        """Every bijective sigma and every inner inverse agree with search."""
        for n in range(2, 13):
            ring = ModularRing(n)
            sigmas = list(bijective_scalings(ring))
            for a, d in itertools.product(list(ring.enumerate()), repeat=2):
                found = search_inverse_along(a, d)
                self.assertLessEqual(len(found), 1)
                expected = found[0] if found else None
                inners = all_inner_inverses(d)
                if not inners:
                    self.assertEqual(invert_along(a, d).reason, AbsentReason.NOT_REGULAR_D)
                    self.assertIsNone(expected)
                    continue
                for sigma, inner in itertools.product(sigmas, inners):
                    with self.subTest(n=n, a=a, d=d, sigma=sigma.describe(), inner=inner):
                        result = invert_along_sigma(a, d, sigma, inner=inner)
                        self.assertEqual(getattr(result, "b", None), expected)

    def test_two_sided_iff_both_sides(self):
        for n in range(2, 10):
            ring = ModularRing(n)
            for a, d in itertools.product(list(ring.enumerate()), repeat=2):
                with self.subTest(n=n, a=a, d=d):
                    left = sided_inverse_along(a, d, Side.LEFT)
                    right = sided_inverse_along(a, d, Side.RIGHT)
                    self.assertEqual(exists_along(a, d), bool(left) and bool(right))

    def test_u_and_v_are_units_together(self):
        for n in range(2, 10):
            ring = ModularRing(n)
            for a, d in itertools.product(list(ring.enumerate()), repeat=2):
                if not is_regular(d):
                    continue
                for inner in all_inner_inverses(d):
                    u = d * a + 1 - d * inner
                    v = a * d + 1 - inner * d
                    self.assertEqual(ring.is_unit(u), ring.is_unit(v))


if __name__ == '__main__':
    unittest.main()
