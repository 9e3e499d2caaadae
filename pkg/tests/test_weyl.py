import numpy as np
import pytest

from chebdens import (
    ResourceLimitError,
    RootSystemType,
    build_root_system,
    class_count,
    conjugacy_class_count,
    constants_for_group,
    enumerate_weyl_group,
    enumerated_constants,
    invariant_degrees,
    parse_type,
    simple_reflection_perms,
    weyl_order,
)
from oracles import partitions_by_enumeration

# (label, rank, order, classes) for the cases quoted throughout
TABLE = [
    ("A1", 1, 2, 2),
    ("A2", 2, 6, 3),
    ("B2", 2, 8, 5),
    ("B3", 3, 48, 10),
    ("C3", 3, 48, 10),
    ("D4", 4, 192, 13),
    ("D5", 5, 1920, 18),
    ("G2", 2, 12, 6),
    ("F4", 4, 1152, 25),
    ("E6", 6, 51840, 25),
    ("E7", 7, 2903040, 60),
    ("E8", 8, 696729600, 112),
]


class TestTypes:
    def test_parse(self):
        assert parse_type("A1") == RootSystemType("A", 1)
        assert parse_type("e8") == RootSystemType("E", 8)
        assert parse_type("D_4") == RootSystemType("D", 4)

    @pytest.mark.parametrize("bad", ["G3", "F5", "E9", "E5", "D3", "B1", "A0", "H4", "XY"])
    def test_invalid_types_rejected(self, bad):
        with pytest.raises(ValueError):
            parse_type(bad)


class TestTables:
    @pytest.mark.parametrize("label,rank,order,classes", TABLE)
    def test_constants(self, label, rank, order, classes):
        constants = constants_for_group(label)
        assert constants == (rank, order, classes, order)

    def test_e8_degrees_product(self):
        degrees = invariant_degrees(parse_type("E8"))
        assert degrees == (2, 8, 12, 14, 18, 20, 24, 30)
        assert weyl_order(parse_type("E8")) == 696729600

    def test_order_is_degree_product_and_classes_bounded(self):
        for label, _, order, classes in TABLE:
            t = parse_type(label)
            product = 1
            for deg in invariant_degrees(t):
                product *= deg
            assert weyl_order(t) == product == order
            assert 1 <= classes <= order

    def test_symmetric_group_class_count_is_partitions(self):
        for n in range(1, 8):
            assert class_count(parse_type(f"A{n}")) == partitions_by_enumeration(n + 1)

    def test_bc_class_count_is_partition_pairs(self):
        for n in range(2, 7):
            expected = sum(
                partitions_by_enumeration(k) * partitions_by_enumeration(n - k)
                for k in range(n + 1)
            )
            assert class_count(parse_type(f"B{n}")) == expected
            assert class_count(parse_type(f"C{n}")) == expected

    def test_b4_value(self):
        assert class_count(parse_type("B4")) == 20


class TestRootSystems:
    @pytest.mark.parametrize("label,count", [
        ("A2", 6), ("A5", 30), ("B3", 18), ("C4", 32), ("D4", 24),
        ("G2", 12), ("F4", 48), ("E6", 72), ("E7", 126), ("E8", 240),
    ])
    def test_root_counts(self, label, count):
        data = build_root_system(label)
        assert len(data.roots) == count
        assert set(data.simple_roots) <= set(data.roots)
        assert data.d == data.type.rank

    def test_roots_closed_under_negation(self):
        data = build_root_system("F4")
        roots = set(data.roots)
        assert all(tuple(-x for x in r) in roots for r in roots)

    def test_deterministic_order(self):
        first = build_root_system("D4")
        second = build_root_system("D4")
        assert first.roots == second.roots


class TestEnumeration:
    @pytest.mark.parametrize("label,order,classes", [
        ("A1", 2, 2), ("A2", 6, 3), ("A3", 24, 5),
        ("B2", 8, 5), ("B3", 48, 10), ("C3", 48, 10),
        ("D4", 192, 13), ("G2", 12, 6), ("F4", 1152, 25),
    ])
    def test_oracle_matches_table(self, label, order, classes):
        assert enumerated_constants(label) == (order, classes)

    def test_enumerate_returns_permutation_group(self):
        elements = enumerate_weyl_group("B2")
        assert len(elements) == 8
        assert len(set(elements)) == 8
        identity = tuple(range(8))
        assert identity in elements
        n = len(elements[0])
        assert all(sorted(e) == list(range(n)) for e in elements)

    def test_elements_preserve_inner_products(self):
        data = build_root_system("G2")
        roots = np.array(data.roots)
        gram = roots @ roots.T
        for element in enumerate_weyl_group(data):
            perm = np.array(element)
            assert (gram[np.ix_(perm, perm)] == gram).all()

    def test_generators_are_involutions(self):
        data = build_root_system("B3")
        for perm in simple_reflection_perms(data):
            perm = np.array(perm)
            assert (perm[perm] == np.arange(len(perm))).all()

    def test_cap_enforced(self):
        with pytest.raises(ResourceLimitError):
            enumerate_weyl_group("E7")
        with pytest.raises(ResourceLimitError):
            enumerate_weyl_group("A3", cap=10)

    def test_conjugacy_count_without_generators(self):
        elements = enumerate_weyl_group("A2")
        assert conjugacy_class_count(elements) == 3

    def test_conjugacy_count_with_generators(self):
        data = build_root_system("B3")
        elements = enumerate_weyl_group(data)
        gens = simple_reflection_perms(data)
        assert conjugacy_class_count(elements, gens) == 10


@pytest.mark.slow
class TestLargeEnumeration:
    def test_d6(self):
        assert enumerated_constants("D6") == (23040, 37)

    def test_e6(self):
        assert enumerated_constants("E6") == (51840, 25)
