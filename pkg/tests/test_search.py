import itertools

import pytest

from beckettgray.beckett import BeckettKind, classify_beckett
from beckettgray.canonical import canonicalize
from beckettgray.core import GrayKind, classify_gray, parse_symbols, transitions_of
from beckettgray.search import (
    SearchConfig,
    SearchState,
    enumerate_beckett,
    enumerate_gray_cycles_small,
    split_prefixes,
)

TABLE_FIVE_BIT_CYCLIC = {
    "01020132010432104342132340412304",
    "01020312403024041232414013234013",
    "01020314203024041234214103234103",
    "01020314203240421034214130324103",
    "01020341202343142320143201043104",
    "01023412032403041230341012340124",
    "01201321402314340232134021431041",
    "01203041230314043210403202413241",
}


def run(n, mode="both"):
    codes = []
    report = enumerate_beckett(SearchConfig(n, mode), lambda k, s: codes.append((k, s)))
    return report, codes


class TestExactCounts:
    def test_tiny(self):
        assert run(1)[0].count_cyclic == 1
        assert run(2)[0].count_cyclic == 1

    def test_three_bits(self):
        report, codes = run(3)
        assert report.count_cyclic == 0
        assert report.count_open_total == 1
        assert [str(s) for k, s in codes] == ["0102101"]

    def test_four_bits(self):
        report, codes = run(4)
        assert report.count_cyclic == 0
        assert {str(s) for k, s in codes} == {
            "010213202313020",
            "010213212031321",
            "012301202301230",
            "012301213210321",
        }

    def test_five_bits_cyclic_matches_published_table(self):
        report, codes = run(5, "cyclic")
        assert report.count_cyclic == 8
        assert {str(canonicalize(s)) for k, s in codes} == TABLE_FIVE_BIT_CYCLIC

    def test_five_bits_open_count(self):
        report, _ = run(5, "open")
        # the published figure of 116 excludes open codes whose one-step
        # extension closes a cycle; the inclusive count is 132
        assert report.count_open_strict == 116
        assert report.count_open_total == 132


class TestEmittedCodes:
    def test_every_emission_is_classified_and_canonical(self):
        for n in (3, 4, 5):
            _, codes = run(n)
            for kind, s in codes:
                expected = BeckettKind.CYCLIC if kind == "cyclic" else BeckettKind.OPEN
                assert classify_beckett(s).kind is expected
                assert canonicalize(s) == s

    def test_emission_order_is_lexicographic(self):
        _, codes = run(5, "cyclic")
        symbol_lists = [s.symbols for k, s in codes]
        assert symbol_lists == sorted(symbol_lists)

    def test_nodes_visited_deterministic(self):
        assert run(4)[0].nodes_visited == run(4)[0].nodes_visited == 263


class TestUnprunedOracle:
    def test_three_bit_search_without_pruning_gives_same_classes(self):
        # independent oracle: DFS over ALL Beckett-consistent growths with
        # no restricted-growth pruning, then post-hoc canonical dedup
        n, found = 3, set()

        def dfs(state):
            depth = len(state.seq)
            if depth == (1 << n) - 1 and state.visited_count == (1 << n):
                found.add(("open", canonicalize(state.sequence()).symbols))
            if depth == (1 << n):
                found.add(("cyclic", canonicalize(state.sequence()).symbols))
                return
            for p in state.children(restricted_growth=False):
                popped = state.queue[0] if state.word >> p & 1 else None
                saved = (state.word, state.visited, state.visited_count, state.used)
                state.push(p)
                dfs(state)
                state.seq.pop()
                if popped is None:
                    state.queue.pop()
                else:
                    state.queue.insert(0, popped)
                state.word, state.visited, state.visited_count, state.used = saved

        dfs(SearchState(n))
        _, codes = run(n)
        assert found == {(k, canonicalize(s).symbols) for k, s in codes}


class TestSplitPrefixes:
    def test_first_symbol_is_forced(self):
        assert [str(c.prefix) for c in split_prefixes(3, 1)] == ["0"]

    def test_depth_two_survivors(self):
        # "00" dies (dequeue revisits the all-zero word): only "01" survives
        assert [str(c.prefix) for c in split_prefixes(3, 2)] == ["01"]

    @pytest.mark.parametrize("depth", [4, 6, 8])
    def test_shard_sums_match_unsplit_run(self, depth):
        whole, _ = run(5, "both")
        merged = None
        for cfg in split_prefixes(5, depth):
            shard = enumerate_beckett(
                SearchConfig(5, "both", prefix=cfg.prefix, emit="count-only")
            )
            merged = shard if merged is None else merged.merge(shard)
        assert merged.count_cyclic == whole.count_cyclic == 8
        assert merged.count_open_total == whole.count_open_total
        assert merged.count_open_strict == whole.count_open_strict

    def test_prefix_must_be_consistent(self):
        with pytest.raises(ValueError):
            SearchState.from_prefix(3, parse_symbols(3, "00"))


class TestGrayCycleEnumeration:
    def test_two_bit_cycles(self):
        paths = enumerate_gray_cycles_small(2)
        assert {str(transitions_of(p)) for p in paths} == {"0101", "1010"}

    def test_three_bit_count_frozen(self):
        # oracle: brute-force permutation filter over word orderings agrees
        assert len(enumerate_gray_cycles_small(3)) == 12

    def test_four_bit_count_frozen(self):
        # 1344 undirected Hamilton cycles of the 4-cube, both orientations
        assert len(enumerate_gray_cycles_small(4)) == 2688

    def test_oracle_brute_force_three_bits(self):
        count = 0
        for perm in itertools.permutations(range(1, 8)):
            cycle = (0,) + perm + (0,)
            if all(bin(cycle[i] ^ cycle[i + 1]).count("1") == 1 for i in range(8)):
                count += 1
        assert count == len(enumerate_gray_cycles_small(3))

    def test_every_path_is_cyclic_gray(self):
        for p in enumerate_gray_cycles_small(3):
            assert classify_gray(transitions_of(p)).kind is GrayKind.CYCLIC

    def test_size_limit(self):
        with pytest.raises(ValueError):
            enumerate_gray_cycles_small(5)


class TestBudgets:
    def test_node_limit_marks_truncated(self):
        report = enumerate_beckett(SearchConfig(5, node_limit=1000, emit="count-only"))
        assert report.truncated
        assert report.nodes_visited <= 1001
