import pytest
from hypothesis import given, settings

from gsets import (
    DomainError,
    InformationTable,
    Partition,
    approximation_pair,
    graded_approximations,
    granular_from_chain,
    indiscernibility_partition,
    lower_approx,
    refines,
    sensitivity_profile,
    upper_approx,
    validate_graded,
)
from strategies import table_with_attr_chain, table_with_target_chain, tables

ALL = [f"O{i}" for i in range(1, 11)]
PE = ["P1", "P2", "P3", "P4", "P5"]


class TestInformationTable:
    def test_value_lookup(self, sample_table):
        assert sample_table.value("O5", "P2") == "1"
        assert sample_table.value("O10", "P5") == "0"

    def test_unknown_object_or_attribute(self, sample_table):
        with pytest.raises(DomainError, match="unknown object"):
            sample_table.value("O99", "P1")
        with pytest.raises(DomainError, match="unknown attribute"):
            sample_table.value("O1", "P9")

    def test_duplicate_object_rejected(self):
        with pytest.raises(DomainError, match="duplicate object"):
            InformationTable(("a", "a"), ("p",), (("0",), ("1",)))

    def test_duplicate_attribute_rejected(self):
        with pytest.raises(DomainError, match="duplicate attribute"):
            InformationTable(("a",), ("p", "p"), (("0", "1"),))

    def test_ragged_row_rejected(self):
        with pytest.raises(DomainError, match="cells"):
            InformationTable(("a",), ("p", "q"), (("0",),))

    def test_empty_cell_rejected(self):
        with pytest.raises(DomainError, match="empty"):
            InformationTable(("a",), ("p",), (("",),))


class TestIndiscernibility:
    def test_single_attribute_classes(self, sample_table, expected_classes):
        assert indiscernibility_partition(sample_table, ["P1"]) == expected_classes["C1"]

    def test_middle_chain_classes_coincide(self, sample_table, expected_classes):
        for attrs in (["P1", "P2"], ["P1", "P2", "P3"], ["P1", "P2", "P3", "P4"]):
            assert indiscernibility_partition(sample_table, attrs) == expected_classes["C2"]

    def test_all_attribute_classes(self, sample_table, expected_classes):
        assert indiscernibility_partition(sample_table, PE) == expected_classes["C5"]

    def test_attribute_order_is_irrelevant(self, sample_table):
        a = indiscernibility_partition(sample_table, ["P2", "P1"])
        b = indiscernibility_partition(sample_table, ["P1", "P2"])
        assert a == b

    def test_distinct_rows_give_singletons(self):
        t = InformationTable(("a", "b"), ("p",), (("0",), ("1",)))
        p = indiscernibility_partition(t, ["p"])
        assert p == Partition.from_blocks([["a"], ["b"]])

    def test_empty_attribute_set_gives_one_block(self, sample_table):
        p = indiscernibility_partition(sample_table, [])
        assert p.blocks == (tuple(ALL),)

    def test_unknown_attribute_rejected(self, sample_table):
        with pytest.raises(DomainError, match="unknown attribute"):
            indiscernibility_partition(sample_table, ["P9"])

    def test_universe_follows_table_order(self, sample_table):
        p = indiscernibility_partition(sample_table, ["P1"])
        assert p.universe == tuple(ALL)

    @given(tables())
    @settings(max_examples=100)
    def test_blocks_agree_on_all_chosen_attributes(self, table):
        attrs = table.attributes[: max(1, len(table.attributes) // 2)]
        p = indiscernibility_partition(table, attrs)
        for block in p.blocks:
            rows = {tuple(table.value(o, a) for a in attrs) for o in block}
            assert len(rows) == 1


class TestGranularFromChain:
    def test_sample_chain_produces_expected_tower(
        self, sample_table, sample_chain_levels, expected_classes
    ):
        chain = validate_graded(sample_chain_levels)
        g = granular_from_chain(sample_table, chain)
        expected = [
            expected_classes["C5"],
            expected_classes["C4"],
            expected_classes["C3"],
            expected_classes["C2"],
            expected_classes["C1"],
        ]
        assert list(g.levels) == expected

    def test_single_level_chain(self, sample_table, expected_classes):
        g = granular_from_chain(sample_table, validate_graded([["P1"]]))
        assert list(g.levels) == [expected_classes["C1"]]

    def test_chain_starting_empty(self, sample_table, expected_classes):
        g = granular_from_chain(sample_table, validate_graded([[], ["P1"]]))
        assert list(g.levels) == [
            expected_classes["C1"],
            Partition.from_blocks([ALL]),
        ]

    @given(table_with_attr_chain())
    @settings(max_examples=200)
    def test_nested_chains_always_granulate(self, case):
        table, chain_levels = case
        g = granular_from_chain(table, validate_graded(chain_levels))
        assert len(g) == len(chain_levels)

    @given(tables())
    @settings(max_examples=100)
    def test_refinement_monotone_in_attributes(self, table):
        half = table.attributes[: max(1, len(table.attributes) // 2)]
        finer = indiscernibility_partition(table, table.attributes)
        coarser = indiscernibility_partition(table, half)
        assert refines(finer, coarser)


class TestApproximations:
    def test_lower_of_small_target(self, sample_table):
        assert lower_approx(sample_table, PE, ["O1", "O2", "O3"]) == {"O1", "O2"}

    def test_upper_of_small_target(self, sample_table):
        assert upper_approx(sample_table, PE, ["O1", "O2", "O3"]) == {
            "O1", "O2", "O3", "O7", "O10",
        }

    def test_full_universe_is_exact(self, sample_table):
        assert lower_approx(sample_table, PE, ALL) == set(ALL)
        assert upper_approx(sample_table, PE, ALL) == set(ALL)

    def test_empty_target_is_exact(self, sample_table):
        assert lower_approx(sample_table, PE, []) == set()
        assert upper_approx(sample_table, PE, []) == set()

    def test_unknown_target_object_rejected(self, sample_table):
        with pytest.raises(DomainError, match="unknown object"):
            lower_approx(sample_table, PE, ["O99"])

    def test_pair_combines_both_sides(self, sample_table):
        pair = approximation_pair(sample_table, PE, ["O1", "O2", "O3"])
        assert pair.lower == {"O1", "O2"}
        assert pair.upper == {"O1", "O2", "O3", "O7", "O10"}
        assert pair.boundary == {"O3", "O7", "O10"}

    @given(table_with_target_chain())
    @settings(max_examples=200)
    def test_rough_sandwich(self, case):
        table, attrs, targets = case
        for target in targets:
            pair = approximation_pair(table, attrs, target)
            assert pair.lower <= set(target) <= pair.upper

    @given(table_with_target_chain())
    @settings(max_examples=200)
    def test_target_monotonicity(self, case):
        table, attrs, targets = case
        pairs = [approximation_pair(table, attrs, t) for t in targets]
        for a, b in zip(pairs, pairs[1:]):
            assert a.lower <= b.lower and a.upper <= b.upper

    @given(table_with_attr_chain())
    @settings(max_examples=200)
    def test_attribute_monotonicity(self, case):
        table, chain_levels = case
        target = table.objects[: len(table.objects) // 2]
        pairs = [approximation_pair(table, attrs, target) for attrs in chain_levels]
        for small, large in zip(pairs, pairs[1:]):
            assert small.lower <= large.lower
            assert large.upper <= small.upper

    @given(table_with_target_chain())
    @settings(max_examples=100)
    def test_approximations_are_unions_of_blocks(self, case):
        table, attrs, targets = case
        part = indiscernibility_partition(table, attrs)
        for target in targets:
            pair = approximation_pair(table, attrs, target)
            for side in (pair.lower, pair.upper):
                touched = [b for b in part.blocks if set(b) & side]
                covered = frozenset().union(*touched) if touched else frozenset()
                assert side == covered


class TestGradedApproximations:
    def test_two_level_fixture(self, sample_table):
        targets = validate_graded([["O1"], ["O1", "O2"]])
        lowers, uppers = graded_approximations(sample_table, PE, targets)
        assert lowers.levels == (frozenset(), frozenset({"O1", "O2"}))
        assert uppers.levels == (frozenset({"O1", "O2"}), frozenset({"O1", "O2"}))

    def test_constant_targets_give_constant_chains(self, sample_table):
        targets = validate_graded([["O1", "O2"], ["O1", "O2"]])
        lowers, uppers = graded_approximations(sample_table, PE, targets)
        assert lowers.levels[0] == lowers.levels[1]
        assert uppers.levels[0] == uppers.levels[1]

    def test_empty_to_full_targets(self, sample_table):
        targets = validate_graded([[], ALL])
        lowers, uppers = graded_approximations(sample_table, PE, targets)
        assert lowers.levels == (frozenset(), frozenset(ALL))
        assert uppers.levels == (frozenset(), frozenset(ALL))

    @given(table_with_target_chain())
    @settings(max_examples=200)
    def test_output_chains_always_validate(self, case):
        table, attrs, targets = case
        lowers, uppers = graded_approximations(table, attrs, validate_graded(targets))
        assert len(lowers) == len(targets) and len(uppers) == len(targets)


class TestSensitivityProfile:
    def test_sample_profile_sizes(self, sample_table, sample_chain_levels):
        chain = validate_graded(sample_chain_levels)
        records = sensitivity_profile(sample_table, chain, ["O1", "O2", "O3"])
        assert [r.attribute_count for r in records] == [1, 2, 3, 4, 5]
        assert records[0].lower_size == 2 and records[0].upper_size == 7
        lower_sizes = [r.lower_size for r in records]
        upper_sizes = [r.upper_size for r in records]
        assert lower_sizes == sorted(lower_sizes)
        assert upper_sizes == sorted(upper_sizes, reverse=True)

    def test_full_target_has_accuracy_one(self, sample_table, sample_chain_levels):
        chain = validate_graded(sample_chain_levels)
        for r in sensitivity_profile(sample_table, chain, ALL):
            assert r.accuracy == 1.0 and r.boundary_size == 0

    def test_empty_target_uses_empty_upper_convention(self, sample_table, sample_chain_levels):
        chain = validate_graded(sample_chain_levels)
        for r in sensitivity_profile(sample_table, chain, []):
            assert r.lower_size == 0 and r.upper_size == 0
            assert r.accuracy == 1.0

    def test_level_indices_run_in_chain_order(self, sample_table, sample_chain_levels):
        chain = validate_graded(sample_chain_levels)
        records = sensitivity_profile(sample_table, chain, ["O4"])
        assert [r.level_index for r in records] == [0, 1, 2, 3, 4]

    @given(table_with_attr_chain())
    @settings(max_examples=100)
    def test_accuracy_is_monotone_along_the_chain(self, case):
        table, chain_levels = case
        target = table.objects[: len(table.objects) // 2]
        chain = validate_graded(chain_levels)
        records = sensitivity_profile(table, chain, target)
        accuracies = [r.accuracy for r in records]
        assert all(b >= a - 1e-12 for a, b in zip(accuracies, accuracies[1:]))
