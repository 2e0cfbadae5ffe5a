from django.test import SimpleTestCase

from factoring.engine import is_left_factor
from factorlab.exceptions import BadParams
from groups.catalog import load
from groups.tables import generated_subgroup
from subsets.bitsets import Subset
from subsets.notation import parse_subset

from .forge import (
    MainWitnessParams,
    TheoremCase,
    build_main_witness,
    build_order8_witness,
    enumerate_main_witness_params,
    identity_translates,
    order8_witness_pairs,
    theorem_case_witness,
    translates_equal_to,
    uncovered_residue,
)


def cyclic_subgroup(g, x):
    return generated_subgroup(g, Subset.from_indices(g.order, [x]))


class MainWitnessTest(SimpleTestCase):
    def test_cyclic_ten(self):
        c10 = load("C10")
        params = MainWitnessParams(cyclic_subgroup(c10, 2), h0=2, h1=4, g_elt=1)
        a = build_main_witness(c10, params)
        self.assertEqual(c10.format_subset(a), "{a,a^4,a^5,a^6,a^8}")
        result = is_left_factor(c10, a)
        self.assertFalse(result.is_factor)
        self.assertTrue(result.exhausted)

    def test_cyclic_twelve(self):
        c12 = load("C12")
        params = MainWitnessParams(cyclic_subgroup(c12, 2), h0=2, h1=6, g_elt=1)
        a = build_main_witness(c12, params)
        self.assertEqual(len(a), 6)
        self.assertFalse(is_left_factor(c12, a).is_factor)

    def test_bad_params(self):
        c10 = load("C10")
        h = cyclic_subgroup(c10, 2)
        invalid = [
            MainWitnessParams(h, h0=2, h1=8, g_elt=1),
            MainWitnessParams(h, h0=0, h1=4, g_elt=1),
            MainWitnessParams(h, h0=2, h1=4, g_elt=6),
            MainWitnessParams(Subset.from_indices(10, [0, 1]), h0=1, h1=4, g_elt=3),
            MainWitnessParams(c10.full_subset(), h0=2, h1=4, g_elt=1),
        ]
        for params in invalid:
            with self.subTest(params=params), self.assertRaises(BadParams):
                build_main_witness(c10, params)

    def test_enumeration_counts(self):
        self.assertEqual(list(enumerate_main_witness_params(load("C2^3"))), [])
        self.assertEqual(list(enumerate_main_witness_params(load("A4"))), [])
        params = list(enumerate_main_witness_params(load("C10")))
        self.assertEqual(len(params), 40)
        self.assertEqual({len(p.h) for p in params}, {5})
        per_h0 = {}
        for p in params:
            per_h0.setdefault(p.h0, set()).add(p.h1)
        self.assertTrue(all(len(h1s) == 2 for h1s in per_h0.values()))

    def test_every_dihedral_five_tuple_is_refused(self):
        d5 = load("D5")
        for params in enumerate_main_witness_params(d5):
            self.assertFalse(is_left_factor(d5, build_main_witness(d5, params)).is_factor)


class Order8WitnessTest(SimpleTestCase):
    def test_quaternion(self):
        q8 = load("Q8")
        a = build_order8_witness(q8, q8.index_of("a"), q8.index_of("b"))
        self.assertEqual(q8.format_subset(a), "{a,a^2,a^3,b}")
        self.assertFalse(is_left_factor(q8, a).is_factor)

    def test_cyclic_by_two(self):
        g = load("C4xC2")
        a = build_order8_witness(g, g.index_of("a"), g.index_of("ab"))
        self.assertEqual(len(a), 4)
        self.assertFalse(is_left_factor(g, a).is_factor)

    def test_pairs(self):
        self.assertEqual(len(order8_witness_pairs(load("Q8"))), 24)
        self.assertEqual(len(order8_witness_pairs(load("C4xC2"))), 8)
        for expression in ("D4", "C8", "C2^3", "C12"):
            self.assertEqual(order8_witness_pairs(load(expression)), [])

    def test_bad_params(self):
        g = load("C2^3")
        with self.assertRaises(BadParams):
            build_order8_witness(g, 1, 2)
        d4 = load("D4")
        with self.assertRaises(BadParams):
            build_order8_witness(d4, 1, 3)
        with self.assertRaises(BadParams):
            build_order8_witness(load("C12"), 3, 9)


class TheoremCaseTest(SimpleTestCase):
    def test_sets(self):
        expected = {
            TheoremCase.D4: ("D4", (1, 2, 4, 6)),
            TheoremCase.C8: ("C8", (1, 2, 3, 5)),
            TheoremCase.C9: ("C9", (1, 2, 4)),
        }
        for case, (expression, indices) in expected.items():
            g, a = theorem_case_witness(case)
            self.assertEqual(g.label, expression)
            self.assertEqual(a.indices, indices)
            self.assertEqual(g.order % len(a), 0)
            result = is_left_factor(g, a)
            self.assertFalse(result.is_factor)
            self.assertTrue(result.exhausted)

    def test_dihedral_translates_all_meet(self):
        g, a = theorem_case_witness(TheoremCase.D4)
        probes = identity_translates(g, a)
        self.assertEqual(
            sorted(g.name(probe.x) for probe in probes), sorted(["a^3", "a^2", "b", "a^2b"])
        )
        self.assertTrue(all(probe.meets for probe in probes))

    def test_cyclic_eight_translates_all_meet(self):
        g, a = theorem_case_witness(TheoremCase.C8)
        self.assertTrue(all(probe.meets for probe in identity_translates(g, a)))

    def test_cyclic_nine_residue(self):
        g, a = theorem_case_witness(TheoremCase.C9)
        a5 = g.index_of("a^5")
        disjoint = [probe for probe in identity_translates(g, a) if not probe.meets]
        self.assertEqual([probe.x for probe in disjoint], [a5])
        self.assertEqual(g.format_subset(disjoint[0].translate), "{e,a^6,a^7}")
        residue = uncovered_residue(g, a, [0, a5])
        self.assertEqual(residue, parse_subset(g, "{a^3,a^5,a^8}"))
        self.assertEqual(translates_equal_to(g, a, residue), [])
