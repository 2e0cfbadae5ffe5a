from django.test import SimpleTestCase

from factoring.engine import is_left_factor
from factorlab.exceptions import (
    NotAFactorOfH,
    NotASubgroup,
    NotElementaryAbelian2,
    NotElementaryAbelian3,
    OddOrder,
    WrongSize,
)
from groups.catalog import catalog_entries, load
from groups.tables import element_order, generated_subgroup
from subsets.algebra import product_check, subsets_containing_identity, translate_right
from subsets.bitsets import Subset
from subsets.notation import parse_subset

from .recipes import (
    complement_for_3subset_elem3,
    complement_for_4subset_elem2,
    complement_for_order2_subset,
    lift_complement,
)


class LiftComplementTest(SimpleTestCase):
    def test_whole_group_returns_complement_unchanged(self):
        c6 = load("C6")
        a = parse_subset(c6, "{e,a^3}")
        b_prime = parse_subset(c6, "{e,a,a^2}")
        self.assertEqual(lift_complement(c6, c6.full_subset(), a, b_prime), b_prime)

    def test_lifts_through_coset_representatives(self):
        c4 = load("C4")
        h = parse_subset(c4, "{e,a^2}")
        b = lift_complement(c4, h, h, parse_subset(c4, "{e}"))
        self.assertEqual(c4.format_subset(b), "{e,a}")

    def test_dihedral_lift(self):
        d4 = load("D4")
        h = parse_subset(d4, "{e,a,a^2,a^3}")
        a = parse_subset(d4, "{e,a}")
        b = lift_complement(d4, h, a, parse_subset(d4, "{e,a^2}"))
        self.assertEqual(len(b), 4)
        self.assertTrue(product_check(d4, a, b).is_factorization)

    def test_errors(self):
        c4 = load("C4")
        with self.assertRaises(NotASubgroup):
            lift_complement(c4, parse_subset(c4, "{e,a}"), parse_subset(c4, "{e}"), parse_subset(c4, "{e}"))
        h = parse_subset(c4, "{e,a^2}")
        with self.assertRaises(NotAFactorOfH):
            lift_complement(c4, h, parse_subset(c4, "{e}"), parse_subset(c4, "{e}"))
        with self.assertRaises(NotAFactorOfH):
            lift_complement(c4, h, parse_subset(c4, "{e,a}"), parse_subset(c4, "{e}"))


class Order2ComplementTest(SimpleTestCase):
    def test_cyclic_four(self):
        c4 = load("C4")
        self.assertEqual(c4.format_subset(complement_for_order2_subset(c4, 1)), "{e,a^2}")

    def test_cyclic_two(self):
        self.assertEqual(complement_for_order2_subset(load("C2"), 1).indices, (0,))

    def test_dihedral_six(self):
        d6 = load("D6")
        b = complement_for_order2_subset(d6, 1)
        self.assertEqual(len(b), 6)
        self.assertTrue(product_check(d6, Subset.from_indices(12, [0, 1]), b).is_factorization)

    def test_odd_order(self):
        c6 = load("C6")
        with self.assertRaises(OddOrder):
            complement_for_order2_subset(c6, 2)

    def test_agreement_and_converse_over_catalog(self):
        for entry in catalog_entries(16):
            if entry.order % 2:
                continue
            g = load(entry.expression)
            for x in range(1, g.order):
                a = Subset.from_indices(g.order, [0, x])
                with self.subTest(group=entry.expression, x=g.name(x)):
                    if element_order(g, x) % 2 == 0:
                        b = complement_for_order2_subset(g, x)
                        self.assertTrue(product_check(g, a, b).is_factorization)
                        self.assertTrue(is_left_factor(g, a).is_factor)
                    else:
                        self.assertFalse(is_left_factor(g, a).is_factor)


class Elementary2ComplementTest(SimpleTestCase):
    def test_klein_group(self):
        g = load("C2^2")
        self.assertEqual(complement_for_4subset_elem2(g, g.full_subset()).indices, (0,))

    def test_subgroup_case(self):
        g = load("C2^3")
        a = Subset.from_indices(8, [0, 1, 2, 3])
        b = complement_for_4subset_elem2(g, a)
        self.assertEqual(len(b), 2)
        self.assertTrue(product_check(g, a, b).is_factorization)

    def test_independent_case(self):
        g = load("C2^4")
        a = Subset.from_indices(16, [0, 1, 2, 4])
        b = complement_for_4subset_elem2(g, a)
        self.assertEqual(len(b), 4)
        xyz = g.mul(g.mul(1, 2), 4)
        self.assertIn(xyz, b)
        self.assertTrue(product_check(g, a, b).is_factorization)

    def test_all_subsets_agree_with_engine(self):
        for expression, expected in (("C2^3", 35), ("C2^4", 455)):
            g = load(expression)
            subsets = list(subsets_containing_identity(g.order, 4))
            self.assertEqual(len(subsets), expected)
            for a in subsets:
                b = complement_for_4subset_elem2(g, a)
                self.assertTrue(product_check(g, a, b).is_factorization, g.format_subset(a))
                self.assertTrue(is_left_factor(g, a).is_factor)

    def test_translated_input(self):
        g = load("C2^3")
        a = translate_right(g, Subset.from_indices(8, [0, 1, 2, 4]), 7)
        self.assertNotIn(0, a)
        self.assertTrue(product_check(g, a, complement_for_4subset_elem2(g, a)).is_factorization)

    def test_errors(self):
        with self.assertRaises(NotElementaryAbelian2):
            complement_for_4subset_elem2(load("C4xC2"), Subset.from_indices(8, [0, 1, 2, 3]))
        with self.assertRaises(WrongSize):
            complement_for_4subset_elem2(load("C2^3"), Subset.from_indices(8, [0, 1, 2]))


class Elementary3ComplementTest(SimpleTestCase):
    def test_cyclic_three(self):
        g = load("C3")
        self.assertEqual(complement_for_3subset_elem3(g, g.full_subset()).indices, (0,))

    def test_generating_subset(self):
        g = load("C3^2")
        x, y = 1, 3
        a = Subset.from_indices(9, [0, x, y])
        self.assertEqual(len(generated_subgroup(g, a)), 9)
        b = complement_for_3subset_elem3(g, a)
        t = g.mul(x, y)
        self.assertEqual(b, Subset.from_indices(9, [0, t, g.mul(t, t)]))
        translates = [translate_right(g, a, v) for v in b]
        self.assertTrue(all(
            translates[i].is_disjoint(translates[j]) for i in range(3) for j in range(i + 1, 3)
        ))

    def test_all_subsets_agree_with_engine(self):
        g = load("C3^2")
        subsets = list(subsets_containing_identity(9, 3))
        self.assertEqual(len(subsets), 28)
        for a in subsets:
            b = complement_for_3subset_elem3(g, a)
            self.assertTrue(product_check(g, a, b).is_factorization, g.format_subset(a))
            self.assertTrue(is_left_factor(g, a).is_factor)

    def test_lift_in_order_27(self):
        g = load("C3^3")
        a = Subset.from_indices(27, [0, 1, 3])
        b = complement_for_3subset_elem3(g, a)
        self.assertEqual(len(b), 9)
        self.assertTrue(product_check(g, a, b).is_factorization)

    def test_errors(self):
        with self.assertRaises(NotElementaryAbelian3):
            complement_for_3subset_elem3(load("C9"), Subset.from_indices(9, [0, 1, 2]))
        with self.assertRaises(WrongSize):
            complement_for_3subset_elem3(load("C3^2"), Subset.from_indices(9, [0, 1]))
