from math import comb

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from factorlab.exceptions import EmptySubset, NotLagrange, SubsetParseError
from groups.catalog import load

from .algebra import (
    divisors,
    enumerate_lagrange_subsets,
    normalize_to_identity,
    product_check,
    subsets_containing_identity,
    translate_left,
    translate_right,
)
from .bitsets import Subset
from .notation import parse_subset


def subsets_of(order, min_size=1):
    return st.sets(st.integers(0, order - 1), min_size=min_size).map(
        lambda indices: Subset.from_indices(order, indices)
    )


class SubsetTest(SimpleTestCase):
    def test_bit_vector_operations(self):
        a = Subset.from_indices(8, [0, 3, 5])
        b = Subset.from_indices(8, [3, 4])
        self.assertEqual(list(a), [0, 3, 5])
        self.assertEqual(len(a), 3)
        self.assertIn(5, a)
        self.assertNotIn(4, a)
        self.assertEqual((a | b).indices, (0, 3, 4, 5))
        self.assertEqual((a & b).indices, (3,))
        self.assertEqual((a - b).indices, (0, 5))
        self.assertEqual(a.smallest, 0)
        self.assertFalse(a.is_disjoint(b))
        self.assertTrue(Subset.from_indices(8, [3]).issubset(a))

    def test_rejects_out_of_range(self):
        with self.assertRaises(ValueError):
            Subset.from_indices(4, [4])
        with self.assertRaises(ValueError):
            Subset(1 << 4, 4)

    def test_lexicographic_key_matches_combinations(self):
        keys = [s.lex_key() for s in subsets_containing_identity(6, 3)]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(keys[0], (0, 1, 2))


class TranslationTest(SimpleTestCase):
    def test_translates_in_nonabelian_group(self):
        d4 = load("D4")
        b = d4.index_of("b")
        a = parse_subset(d4, "{e,a}")
        self.assertEqual(d4.format_subset(translate_left(d4, b, a)), "{b,a^3b}")
        self.assertEqual(d4.format_subset(translate_right(d4, a, b)), "{b,ab}")

    def test_normalize_to_identity(self):
        c9 = load("C9")
        a = parse_subset(c9, "{a,a^2,a^4}")
        self.assertEqual(c9.format_subset(normalize_to_identity(c9, a)), "{e,a,a^3}")
        with self.assertRaises(EmptySubset):
            normalize_to_identity(c9, Subset.empty(9))

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_translation_preserves_size(self, data):
        g = load(data.draw(st.sampled_from(["S3", "D4", "Q8", "A4"])))
        a = data.draw(subsets_of(g.order))
        u = data.draw(st.integers(0, g.order - 1))
        self.assertEqual(len(translate_left(g, u, a)), len(a))
        self.assertEqual(len(translate_right(g, a, u)), len(a))
        self.assertEqual(translate_left(g, g.inv(u), translate_left(g, u, a)), a)

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_normalize_is_idempotent(self, data):
        g = load(data.draw(st.sampled_from(["C9", "S3", "D4", "Q8", "A4"])))
        a = data.draw(subsets_of(g.order))
        once = normalize_to_identity(g, a)
        self.assertIn(0, once)
        self.assertEqual(len(once), len(a))
        self.assertEqual(normalize_to_identity(g, once), once)


class ProductCheckTest(SimpleTestCase):
    def test_unique_factorization(self):
        c4 = load("C4")
        check = product_check(c4, parse_subset(c4, "{e,a}"), parse_subset(c4, "{e,a^2}"))
        self.assertTrue(check.unique)
        self.assertTrue(check.is_factorization)
        self.assertIsNone(check.first_collision)

    def test_first_collision_in_scan_order(self):
        c4 = load("C4")
        check = product_check(c4, parse_subset(c4, "{e,a}"), parse_subset(c4, "{e,a}"))
        self.assertFalse(check.unique)
        self.assertEqual(check.coverage.indices, (0, 1, 2))
        self.assertEqual(check.first_collision, (1, (0, 1), (1, 0)))

    def test_empty_operands(self):
        c4 = load("C4")
        with self.assertRaises(EmptySubset):
            product_check(c4, Subset.empty(4), c4.full_subset())

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_matches_naive_products(self, data):
        g = load(data.draw(st.sampled_from(["C6", "S3", "D4", "C3^2"])))
        a = data.draw(subsets_of(g.order))
        b = data.draw(subsets_of(g.order))
        products = [g.mul(x, y) for x in a for y in b]
        check = product_check(g, a, b)
        self.assertEqual(set(check.coverage), set(products))
        self.assertEqual(check.unique, len(set(products)) == len(products))


class LagrangeEnumerationTest(SimpleTestCase):
    def test_counts(self):
        for expression in ("C6", "D4", "C3^2", "A4"):
            g = load(expression)
            for d in divisors(g.order):
                with self.subTest(group=expression, d=d):
                    found = list(enumerate_lagrange_subsets(g, d))
                    self.assertEqual(len(found), comb(g.order - 1, d - 1))
                    self.assertTrue(all(0 in s and len(s) == d for s in found))

    def test_rejects_non_divisor(self):
        with self.assertRaises(NotLagrange):
            enumerate_lagrange_subsets(load("C6"), 4)

    def test_divisors(self):
        self.assertEqual(divisors(12), [1, 2, 3, 4, 6, 12])
        self.assertEqual(divisors(1), [1])


class NotationTest(SimpleTestCase):
    def test_power_names_and_indices(self):
        c9 = load("C9")
        self.assertEqual(parse_subset(c9, "{a,a^2,a^4}").indices, (1, 2, 4))
        self.assertEqual(parse_subset(c9, "{1, 2, 4}").indices, (1, 2, 4))
        self.assertEqual(parse_subset(c9, "e, a^1").indices, (0, 1))

    def test_product_names(self):
        d4 = load("D4")
        self.assertEqual(parse_subset(d4, "{a,a^2,b,a^2b}").indices, (1, 2, 4, 6))
        self.assertEqual(parse_subset(d4, "{a^2*b}").indices, (6,))

    def test_names_win_over_indices(self):
        g = load("C2^2")
        renamed = g.__class__(g.table, ("e", "2", "1", "3"), None)
        self.assertEqual(parse_subset(renamed, "{1}").indices, (2,))

    def test_errors(self):
        c4 = load("C4")
        for text in ("{}", "{a^7}", "{z}", "{4}", "{a"):
            with self.subTest(text=text), self.assertRaises(SubsetParseError):
                parse_subset(c4, text)
