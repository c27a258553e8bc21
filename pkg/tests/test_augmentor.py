"""
Тесты слоёв, аугментирующих последовательностей и редукции степени при фиксированном k
"""

import pytest

from mdst_engine.core.augmentor import (
    AugmentingSequence,
    apply_sequence,
    aug_dfs,
    aug_seq_deg_red,
    validate_sequence,
)
from mdst_engine.core.errors import EmptySk, InvalidSequence, ThresholdTooSmall
from mdst_engine.core.layering import UNLAYERED, build_layering, layer_cap
from mdst_engine.models import Graph, SpanningTree, bfs_tree
from mdst_engine.oracle.reference import reference_degred
from tests.conftest import EPS, gnp

SHIELDED_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 7), (1, 4), (1, 8), (2, 5), (3, 6),  # tree
    (4, 8), (1, 5),  # non-tree
]  # fmt: skip


def shielded() -> SpanningTree:
    """
    Hub 0 of degree 4; its child 1 has degree 3 and is marked for k = 4.
    The only way out is (4, 8) together with (1, 5): a length-2 sequence.
    """
    graph = Graph.from_edges(9, SHIELDED_EDGES)
    return SpanningTree(graph, range(8))


def marks(tree: SpanningTree, k: int) -> bytearray:
    return bytearray(1 if d == k - 1 else 0 for d in tree.deg)


class TestLayering:
    """Построение слоёв"""

    def test_cross_edge_at_level_zero(self, star_edge_tree: SpanningTree):
        """Ребро (1, 2) звезды - пересекающее уже на уровне 0"""
        state = build_layering(star_edge_tree, 4, EPS, marks(star_edge_tree, 4))
        assert state.h == 0
        assert state.layer(0) == [0]
        assert list(state.cross_edges()) == [4]
        assert not state.is_terminal

    def test_shielded_hub_needs_one_layer(self):
        """Помеченный сосед закрывает центр: нужен один слой"""
        tree = shielded()
        state = build_layering(tree, 4, EPS, marks(tree, 4))
        assert state.h == 1
        assert state.layers == [[0], [1]]
        assert state.layer_of[4] == UNLAYERED
        assert list(state.cross_edges()) == [8]
        assert state.blocking_violations() == []
        state.check_components()

    def test_tree_only_graph_is_terminal(self):
        """Граф-дерево: слои растут до h_max"""
        star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        state = build_layering(bfs_tree(star), 4, EPS, bytearray(5))
        assert state.is_terminal
        assert state.h == state.h_max == layer_cap(5, EPS)

    def test_threshold_errors(self, star_edge_tree: SpanningTree):
        """k < 3 и пустое S_k отклоняются"""
        with pytest.raises(ThresholdTooSmall):
            build_layering(star_edge_tree, 2, EPS, bytearray(5))
        with pytest.raises(EmptySk):
            build_layering(star_edge_tree, 5, EPS, bytearray(5))

    @pytest.mark.parametrize("seed", range(1, 6))
    def test_blocking_on_random_graphs(self, seed):
        """Свежие слои блокирующие, слой 0 - это S_k, остальные помечены"""
        tree = bfs_tree(gnp(60, 0.1, seed))
        k = tree.delta
        state = build_layering(tree, k, EPS, marks(tree, k))
        assert state.blocking_violations() == []
        for u in range(tree.n):
            if tree.deg[u] >= k:
                assert state.layer_of[u] == 0
            elif state.layer_of[u] != UNLAYERED:
                assert state.marked[u]


class TestAugmentingSequence:
    """Поиск, проверка и применение последовательностей"""

    def test_length_one_on_star(self, star_edge_tree: SpanningTree):
        """Последовательность длины 1 с якорем в центре"""
        state = build_layering(star_edge_tree, 4, EPS, marks(star_edge_tree, 4))
        state.untag_all()
        seq = aug_dfs(state, 1, (1, 2))
        assert seq is not None
        assert seq.pairs == [(1, 2)] and seq.anchor == 0
        assert validate_sequence(star_edge_tree, 4, state.marked, seq)

    def test_length_two_through_marked_vertex(self):
        """Последовательность длины 2 через помеченную вершину"""
        tree = shielded()
        marked = marks(tree, 4)
        state = build_layering(tree, 4, EPS, marked)
        state.untag_all()
        seq = aug_dfs(state, 2, (4, 8))
        assert seq is not None
        assert seq.pairs == [(1, 5), (4, 8)]
        assert seq.ws == [0, 1, 4]
        assert validate_sequence(tree, 4, marked, seq)

        report = apply_sequence(tree, state, seq, check_invariants=True)
        assert sorted(report.removed_edges) == [1, 5]
        assert tree.deg[0] == 3 and tree.deg[1] == 3
        assert tree.d_k(4) == 0

    def test_validate_reports_violations(self, star_edge_tree: SpanningTree):
        """Проверка называет нарушенное условие"""
        seq = AugmentingSequence(pairs=[(1, 2)], edge_ids=[4], anchor=0)
        marked = bytearray(5)
        marked[2] = 1
        assert validate_sequence(star_edge_tree, 4, marked, seq).violations == [
            "(ii) z_1=2 is marked"
        ]
        weak = AugmentingSequence(pairs=[(1, 2)], edge_ids=[4], anchor=1)
        check = validate_sequence(star_edge_tree, 4, bytearray(5), weak)
        assert not check
        assert check.violations[0].startswith("(i) anchor 1")

    def test_apply_rejects_tree_edge(self, star_edge_tree: SpanningTree):
        """Ребро дерева нельзя добавить обменом"""
        state = build_layering(star_edge_tree, 4, EPS, marks(star_edge_tree, 4))
        bogus = AugmentingSequence(pairs=[(0, 1)], edge_ids=[0], anchor=0)
        with pytest.raises(InvalidSequence):
            apply_sequence(star_edge_tree, state, bogus)


class TestDegreeReduction:
    """Редукция степени при фиксированном k"""

    def test_star_plus_edge(self, star_edge_tree: SpanningTree):
        """Звезда с ребром: одна модификация, d_4 падает до 0"""
        report = aug_seq_deg_red(star_edge_tree, 4, EPS, check_invariants=True)
        assert (report.d_before, report.d_after) == (4, 0)
        assert report.modifications == 1
        assert report.h_history == [0]
        assert star_edge_tree.delta == 3
        assert report.marked_growth == 1

    def test_shielded_hub(self):
        """Закрытый центр снимается за одну итерацию с h = 1"""
        tree = shielded()
        report = aug_seq_deg_red(tree, 4, EPS, check_invariants=True)
        assert report.d_after == 0
        assert report.h_history == [1]
        assert report.terminal_layer_sizes == [1, 1]

    def test_tree_only_graph_is_noop(self):
        """Без недревесных рёбер редукция ничего не меняет"""
        star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        tree = bfs_tree(star)
        report = aug_seq_deg_red(tree, 4, EPS)
        assert report.modifications == 0
        assert report.d_after == report.d_before == 4
        assert report.state is not None and report.state.is_terminal

    @pytest.mark.parametrize("seed", range(1, 11))
    def test_invariants_on_random_graphs(self, seed):
        """d_k строго убывает, h растёт, остановка только в терминальном состоянии"""
        tree = bfs_tree(gnp(40, 0.2, seed))
        k = tree.delta
        s_k_before = tree.s_k_size(k)
        report = aug_seq_deg_red(tree, k, EPS, check_invariants=True)
        tree.validate()
        assert report.d_after <= report.d_before
        assert tree.s_k_size(k) <= s_k_before
        trajectory = [report.d_before] + report.d_history
        assert all(b < a for a, b in zip(trajectory, trajectory[1:]))
        assert all(b > a for a, b in zip(report.h_history, report.h_history[1:]))
        assert report.state is not None
        if report.d_after > 0:
            assert report.state.is_terminal

    @pytest.mark.parametrize("seed", range(1, 11))
    def test_terminal_layering_is_blocking(self, seed):
        """Терминальные слои после модификаций остаются блокирующими"""
        assert_terminal_blocking(gnp(50, 0.15, seed))


def assert_terminal_blocking(graph: Graph) -> None:
    """Reduce at k = Δ and k = Δ - 1; every terminal layering must be blocking"""
    tree = bfs_tree(graph)
    for k in (tree.delta, tree.delta - 1):
        if k < 3 or tree.d_k(k) == 0:
            continue
        report = aug_seq_deg_red(tree, k, EPS)
        assert report.state is not None
        if report.state.is_terminal:
            assert report.state.blocking_violations() == []
            report.state.check_components()


@pytest.mark.slow
class TestTerminalBlockingSweep:
    """Серия из 200 случайных графов"""

    @pytest.mark.parametrize("seed", range(200))
    def test_gnp(self, seed):
        """Блокирующее свойство в терминальном состоянии на G(n, p)"""
        n = 30 + (seed % 5) * 10
        p = (0.08, 0.15, 0.3)[seed % 3]
        assert_terminal_blocking(gnp(n, p, seed))


class TestReferenceEquivalence:
    """Наивная редукция повторяет быструю шаг в шаг"""

    def _both(self, tree: SpanningTree, k: int):
        fast_tree, slow_tree = tree.copy(), tree.copy()
        fast = aug_seq_deg_red(fast_tree, k, EPS)
        slow = reference_degred(slow_tree, k, EPS)
        return fast_tree, fast, slow_tree, slow

    def test_star_plus_edge(self, star_edge_tree: SpanningTree):
        """Одинаковый результат на звезде с ребром"""
        fast_tree, fast, slow_tree, slow = self._both(star_edge_tree, 4)
        assert fast.d_history == slow.d_history == [0]
        assert fast_tree.edge_ids() == slow_tree.edge_ids()

    def test_tree_only_graph(self):
        """Одинаковые терминальные слои на графе-дереве"""
        star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        _, fast, _, slow = self._both(bfs_tree(star), 4)
        assert fast.modifications == slow.modifications == 0
        assert fast.terminal_layer_sizes == slow.terminal_layer_sizes

    @pytest.mark.parametrize("seed", range(1, 31))
    def test_random_graphs(self, seed):
        """Одинаковые траектории и деревья на G(50, 0.15)"""
        tree = bfs_tree(gnp(50, 0.15, seed))
        fast_tree, fast, slow_tree, slow = self._both(tree, tree.delta)
        assert fast.d_history == slow.d_history
        assert fast.h_history == slow.h_history
        assert fast.terminal_layer_sizes == slow.terminal_layer_sizes
        assert fast.d_after == slow.d_after
        assert fast_tree.edge_ids() == slow_tree.edge_ids()
