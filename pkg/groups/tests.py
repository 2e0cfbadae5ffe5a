import json
import tempfile
from itertools import combinations
from math import lcm
from io import StringIO
from pathlib import Path

import numpy as np
from django.core.management import call_command
from django.test import SimpleTestCase

from factorlab.exceptions import NotAGroup, NotPrime, OrderOutOfRange, SpecParseError, TableFileError
from subsets.bitsets import Subset

from .catalog import CATALOG, THEOREM_EXCEPTIONAL, catalog_entries, expected_strong_cfs, load
from .loaders import CayleyTableLoader, parse_table_text
from .specs import parse_group_spec
from .summary import cayley_frame, describe_group
from .tables import (
    build_alternating4,
    build_cyclic,
    build_dicyclic,
    build_dihedral,
    build_elementary_abelian,
    build_quaternion,
    direct_product,
    element_order,
    from_cayley_table,
    generated_subgroup,
    is_subgroup,
    left_coset_representatives,
    restrict,
    subgroups,
)

# Latin square with identity 0 in which every element squares to e; no such
# group of order 5 exists.
NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def orders(g):
    return [element_order(g, x) for x in range(g.order)]


class GroupTableInvariantsTest(SimpleTestCase):
    def test_catalog_tables_satisfy_group_axioms(self):
        for entry in CATALOG:
            g = load(entry.expression)
            with self.subTest(group=entry.expression):
                n = g.order
                self.assertEqual(n, entry.order)
                table = g.table
                self.assertTrue((table[0] == np.arange(n)).all())
                self.assertTrue((table[:, 0] == np.arange(n)).all())
                for x in range(n):
                    self.assertEqual(g.mul(x, g.inv(x)), 0)
                    self.assertEqual(g.mul(g.inv(x), x), 0)
                self.assertTrue((table[table] == table[:, table]).all())
                self.assertEqual(len(set(g.names)), n)

    def test_catalog_serialize_round_trip(self):
        for entry in CATALOG:
            g = load(entry.expression)
            with self.subTest(group=entry.expression):
                rows, names = parse_table_text(g.serialize())
                parsed = from_cayley_table(rows, names)
                self.assertTrue(parsed.has_same_table(g))
                self.assertEqual(parsed.names, g.names)

    def test_inverse_has_same_order(self):
        for entry in CATALOG:
            g = load(entry.expression)
            with self.subTest(group=entry.expression):
                for x in range(g.order):
                    self.assertEqual(element_order(g, x), element_order(g, g.inv(x)))
                    self.assertEqual(g.order % element_order(g, x), 0)

    def test_generated_subgroups_from_small_seeds(self):
        for entry in CATALOG:
            g = load(entry.expression)
            seeds = [(x,) for x in range(g.order)] + list(combinations(range(g.order), 2))
            with self.subTest(group=entry.expression):
                for seed in seeds:
                    s = Subset.from_indices(g.order, seed)
                    h = generated_subgroup(g, s)
                    self.assertTrue(is_subgroup(g, h), seed)
                    self.assertTrue(s.issubset(h))
                    self.assertEqual(g.order % len(h), 0)

    def test_direct_product_orders_are_lcms(self):
        for left, right in (("C2", "C4"), ("S3", "C2"), ("C3", "C4"), ("Q8", "C2"), ("C2^2", "C3")):
            g, h = load(left), load(right)
            product = direct_product(g, h)
            with self.subTest(product=f"{left}x{right}"):
                for x in range(g.order):
                    for y in range(h.order):
                        self.assertEqual(
                            element_order(product, x * h.order + y),
                            lcm(element_order(g, x), element_order(h, y)),
                        )

    def test_tables_are_read_only(self):
        g = build_cyclic(4)
        with self.assertRaises(ValueError):
            g.table[0, 0] = 1


class BuildersTest(SimpleTestCase):
    def test_trivial_cyclic(self):
        g = build_cyclic(1)
        self.assertEqual(g.table.tolist(), [[0]])
        self.assertEqual(g.names, ("e",))

    def test_cyclic_orders(self):
        self.assertEqual(element_order(build_cyclic(9), 1), 9)
        c8 = build_cyclic(8)
        self.assertEqual(c8.name(4), "a^4")
        self.assertEqual(element_order(c8, 4), 2)

    def test_cyclic_range(self):
        for n in (0, 65):
            with self.assertRaises(OrderOutOfRange):
                build_cyclic(n)

    def test_elementary_abelian(self):
        klein = build_elementary_abelian(2, 2)
        self.assertEqual(orders(klein), [1, 2, 2, 2])
        self.assertEqual(build_elementary_abelian(2, 3).order, 8)
        c3_2 = build_elementary_abelian(3, 2)
        self.assertEqual(orders(c3_2).count(3), 8)

    def test_elementary_abelian_errors(self):
        with self.assertRaises(NotPrime):
            build_elementary_abelian(4, 2)
        with self.assertRaises(OrderOutOfRange):
            build_elementary_abelian(2, 7)

    def test_elementary_abelian_matches_direct_power(self):
        power = direct_product(direct_product(build_cyclic(2), build_cyclic(2)), build_cyclic(2))
        self.assertTrue(build_elementary_abelian(2, 3).has_same_table(power))

    def test_direct_product_names(self):
        g = parse_group_spec("C4xC2")
        self.assertEqual(g.names, ("e", "b", "a", "ab", "a^2", "a^2b", "a^3", "a^3b"))

    def test_dihedral(self):
        d4 = build_dihedral(4)
        self.assertEqual(d4.order, 8)
        self.assertEqual(d4.name(2), "a^2")
        self.assertEqual(d4.name(6), "a^2b")
        self.assertTrue(all(d4.mul(2, x) == d4.mul(x, 2) for x in range(8)))
        self.assertFalse(d4.is_abelian)

    def test_dihedral_small_cases(self):
        self.assertLessEqual(max(orders(build_dihedral(2))), 2)
        d6 = build_dihedral(6)
        self.assertEqual(len(generated_subgroup(d6, Subset.from_indices(12, [1]))), 6)
        with self.assertRaises(OrderOutOfRange):
            build_dihedral(1)
        with self.assertRaises(OrderOutOfRange):
            build_dihedral(33)

    def test_quaternion(self):
        q8 = build_quaternion()
        self.assertEqual(q8.order, 8)
        self.assertEqual(sorted(orders(q8)), [1, 2, 4, 4, 4, 4, 4, 4])
        i, j = q8.index_of("a"), q8.index_of("b")
        self.assertEqual(element_order(q8, i), 4)
        self.assertEqual(element_order(q8, q8.index_of("a^2")), 2)
        cyclic_i = generated_subgroup(q8, Subset.from_indices(8, [i]))
        cyclic_j = generated_subgroup(q8, Subset.from_indices(8, [j]))
        self.assertNotEqual(cyclic_i, cyclic_j)
        self.assertEqual(len(cyclic_i), 4)
        self.assertEqual(len(cyclic_j), 4)

    def test_dicyclic(self):
        dic3 = build_dicyclic(3)
        self.assertEqual(dic3.order, 12)
        self.assertEqual(sorted(orders(dic3)).count(2), 1)
        with self.assertRaises(OrderOutOfRange):
            build_dicyclic(1)

    def test_alternating4(self):
        a4 = build_alternating4()
        self.assertEqual(a4.order, 12)
        self.assertEqual(sorted(orders(a4)), [1, 2, 2, 2] + [3] * 8)


class CayleyTableTest(SimpleTestCase):
    def test_identity_is_relabelled_to_zero(self):
        g = from_cayley_table([[1, 0], [0, 1]], names=["x", "one"])
        self.assertEqual(g.table.tolist(), [[0, 1], [1, 0]])
        self.assertEqual(g.names, ("one", "x"))

    def test_default_names(self):
        g = from_cayley_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
        self.assertEqual(g.names, ("e", "g1", "g2"))
        self.assertIsNone(g.letters)

    def test_rejects_repeated_row_entry(self):
        with self.assertRaises(NotAGroup) as ctx:
            from_cayley_table([[0, 1], [1, 1]])
        self.assertIn("permutation", str(ctx.exception))

    def test_rejects_out_of_range_entry(self):
        with self.assertRaises(NotAGroup):
            from_cayley_table([[0, 2], [1, 0]])

    def test_rejects_non_associative_loop(self):
        with self.assertRaises(NotAGroup) as ctx:
            from_cayley_table(NON_ASSOCIATIVE_LOOP)
        self.assertIn("associativity", str(ctx.exception))
        self.assertEqual(len(ctx.exception.triple), 3)

    def test_rejects_ragged_table(self):
        with self.assertRaises(NotAGroup):
            from_cayley_table([[0, 1], [1]])

    def test_rejects_fractional_entries(self):
        for raw in ([[0, 1], [1, 0.9]], [[0.0, 1.5], [1.5, 0.0]], [[0, 1], [1, float("nan")]]):
            with self.subTest(raw=raw), self.assertRaises(NotAGroup) as ctx:
                from_cayley_table(raw)
            self.assertIn("not integers", str(ctx.exception))

    def test_accepts_integral_floats(self):
        self.assertTrue(from_cayley_table([[0.0, 1.0], [1.0, 0.0]]).has_same_table(build_cyclic(2)))

    def test_serialize_round_trip(self):
        d4 = build_dihedral(4)
        rows, names = parse_table_text(d4.serialize())
        self.assertTrue(from_cayley_table(rows, names).has_same_table(d4))
        self.assertEqual(tuple(names), d4.names)


class GroupSpecTest(SimpleTestCase):
    def test_expressions_resolve(self):
        self.assertEqual(parse_group_spec("C4").order, 4)
        self.assertEqual(parse_group_spec("c3 × c3").spec.expression, "C3xC3")
        self.assertEqual(parse_group_spec("Dic3").order, 12)
        self.assertEqual(parse_group_spec("C2xC2xC2").spec.order, 8)

    def test_products_associate_left(self):
        left = direct_product(direct_product(build_cyclic(2), build_cyclic(3)), build_cyclic(2))
        self.assertTrue(parse_group_spec("C2xC3xC2").has_same_table(left))

    def test_prime_power_is_elementary_abelian(self):
        self.assertTrue(parse_group_spec("C2^3").has_same_table(build_elementary_abelian(2, 3)))
        self.assertTrue(parse_group_spec("C3xC3").has_same_table(parse_group_spec("C3^2")))

    def test_parse_errors_report_position(self):
        with self.assertRaises(SpecParseError) as ctx:
            parse_group_spec("C4x")
        self.assertEqual(ctx.exception.position, 3)
        for text in ("", "X4", "C", "C4 C2", "Q9"):
            with self.subTest(text=text), self.assertRaises(SpecParseError):
                parse_group_spec(text)

    def test_order_limits(self):
        with self.assertRaises(OrderOutOfRange):
            parse_group_spec("C0")
        with self.assertRaises(OrderOutOfRange):
            parse_group_spec("C8xC16")


class SubgroupTest(SimpleTestCase):
    def test_alternating4_subgroup_census(self):
        sizes = [len(h) for h in subgroups(load("A4"))]
        self.assertEqual(sizes, [1, 2, 2, 2, 3, 3, 3, 3, 4, 12])

    def test_cyclic_subgroups_match_divisors(self):
        self.assertEqual([len(h) for h in subgroups(load("C12"))], [1, 2, 3, 4, 6, 12])

    def test_elementary_abelian_subgroup_count(self):
        self.assertEqual(len(subgroups(load("C2^3"))), 16)

    def test_coset_representatives(self):
        c4 = load("C4")
        h = Subset.from_indices(4, [0, 2])
        self.assertEqual(left_coset_representatives(c4, h), [0, 1])
        g = load("C2^3")
        quarter = Subset.from_indices(8, [0, 1])
        half = Subset.from_indices(8, [0, 1, 2, 3])
        self.assertEqual(len(left_coset_representatives(g, quarter, within=half)), 2)

    def test_restrict(self):
        d6 = load("D6")
        rotations = generated_subgroup(d6, Subset.from_indices(12, [1]))
        sub, members = restrict(d6, rotations)
        self.assertEqual(sub.order, 6)
        self.assertEqual(members[0], 0)
        self.assertTrue(sub.is_abelian)
        self.assertEqual(element_order(sub, 1), 6)


class CatalogTest(SimpleTestCase):
    def test_catalog_bounds(self):
        self.assertTrue(all(entry.order <= 12 for entry in catalog_entries(12)))
        self.assertNotIn("C16", [entry.expression for entry in catalog_entries(16, include_stress=False)])
        self.assertIn("C3^3", [entry.expression for entry in catalog_entries()])

    def test_expected_strong_cfs(self):
        for expression in THEOREM_EXCEPTIONAL:
            self.assertTrue(expected_strong_cfs(expression))
        for expression in ("C2", "C7", "C11"):
            self.assertTrue(expected_strong_cfs(expression))
        for expression in ("C1", "C6", "C8", "D4", "C2^4", "C4xC2"):
            self.assertFalse(expected_strong_cfs(expression))


class CayleyTableLoaderTest(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.dir = Path(self.tmp.name)

    def test_text_format_with_names(self):
        path = self.dir / "s3.txt"
        path.write_text(load("S3").serialize())
        g = CayleyTableLoader(path).load()
        self.assertTrue(g.has_same_table(load("S3")))
        self.assertEqual(g.spec.expression, "table:s3.txt")
        self.assertEqual(g.index_of("ab"), load("S3").index_of("ab"))

    def test_csv_format(self):
        path = self.dir / "c3.csv"
        path.write_text("0,1,2\n1,2,0\n2,0,1\n")
        g = CayleyTableLoader(path).load()
        self.assertEqual(g.order, 3)

    def test_json_format(self):
        path = self.dir / "klein.json"
        path.write_text(json.dumps({"table": load("C2^2").table.tolist(), "names": ["1", "x", "y", "z"]}))
        g = CayleyTableLoader(path).load()
        self.assertEqual(g.names, ("1", "x", "y", "z"))

    def test_errors(self):
        with self.assertRaises(TableFileError):
            CayleyTableLoader(self.dir / "group.xlsx").load()
        with self.assertRaises(TableFileError):
            CayleyTableLoader(self.dir / "missing.txt").load()
        short = self.dir / "short.txt"
        short.write_text("3\n0 1 2\n1 2 0\n")
        with self.assertRaises(TableFileError):
            CayleyTableLoader(short).load()
        loop = self.dir / "loop.txt"
        loop.write_text("5\n" + "\n".join(" ".join(map(str, row)) for row in NON_ASSOCIATIVE_LOOP))
        with self.assertRaises(NotAGroup):
            CayleyTableLoader(loop).load()

    def test_fractional_entries_are_rejected(self):
        truncates_to_c2 = self.dir / "c2.json"
        truncates_to_c2.write_text(json.dumps({"table": [[0, 1], [1, 0.9]]}))
        with self.assertRaises(NotAGroup):
            CayleyTableLoader(truncates_to_c2).load()
        csv = self.dir / "c2.csv"
        csv.write_text("0,1\n1,0.9\n")
        with self.assertRaises(NotAGroup):
            CayleyTableLoader(csv).load()


class GroupSummaryTest(SimpleTestCase):
    def test_describe_group(self):
        summary = describe_group(load("Q8"))
        self.assertFalse(summary.abelian)
        self.assertEqual(summary.order_counts, {1: 1, 2: 1, 4: 6})
        self.assertEqual(summary.subgroup_orders, (1, 2, 4, 4, 4, 8))

    def test_cayley_frame_uses_names(self):
        frame = cayley_frame(load("C3"))
        self.assertEqual(frame.loc["a", "a^2"], "e")


class GroupCommandsTest(SimpleTestCase):
    def test_group_info(self):
        out = StringIO()
        call_command("group_info", "D4", stdout=out)
        self.assertIn("D4: order 8, non-abelian", out.getvalue())

    def test_group_info_json(self):
        out = StringIO()
        call_command("group_info", "C2^2", "--json", "-", stdout=out)
        document = json.loads(out.getvalue())
        self.assertEqual(document["command"], "group_info")
        self.assertEqual(document["stats"]["order"], 4)

    def test_from_table(self):
        with tempfile.TemporaryDirectory() as tmp:
            source = Path(tmp) / "c4.txt"
            source.write_text("4\n1 2 3 0\n2 3 0 1\n3 0 1 2\n0 1 2 3\n")
            target = Path(tmp) / "normalized.txt"
            out = StringIO()
            call_command("from_table", str(source), "--normalized", str(target), stdout=out)
            rows, _ = parse_table_text(target.read_text())
            self.assertEqual(rows[0], [0, 1, 2, 3])
            self.assertIn("Loaded a valid group table", out.getvalue())
