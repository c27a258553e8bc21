"""
Тесты сертификатов нижней оценки
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mdst_engine.core.certificate import (
    boundary_bound,
    build_certificate,
    certificate_guarantee,
    component_count_bound,
    explain_certificate,
    forest_components,
    pigeonhole_ratio,
    verify_certificate,
)
from mdst_engine.core.driver import improved_mdst
from mdst_engine.core.errors import (
    BoundOverclaimed,
    ComponentNotConnected,
    ComponentsOverlap,
    InvariantViolation,
    MalformedCertificate,
    NotTerminal,
    UncoveredBoundaryEdge,
)
from mdst_engine.core.layering import build_layering
from mdst_engine.models import Graph, Phase, RunConfig, SpanningTree, bfs_tree
from tests.conftest import EPS, star_plus_edge


@pytest.fixture
def solved():
    """Звезда с ребром: решатель останавливается с сертификатом"""
    graph = star_plus_edge()
    result = improved_mdst(graph, RunConfig(eps_user=0.1, threshold_scale=0.0))
    assert result.phase is Phase.LARGE_STEP_RETURN
    assert result.certificate is not None
    return graph, result.tree, result.certificate


class TestBoundFormulas:
    """Формулы оценок"""

    @pytest.mark.parametrize(
        "components, boundary, expected",
        [(1, 3, 0), (0, 3, 0), (7, 3, 2), (8, 3, 3), (5, 1, 4)],
    )
    def test_boundary_bound(self, components, boundary, expected):
        """Оценка ⌈(c - 1) / |W|⌉ и ноль при малом числе компонент"""
        assert boundary_bound(components, boundary) == expected

    def test_component_count_bound_path(self):
        """Внутренняя вершина пути даёт две компоненты"""
        path = Graph.from_edges(6, [(i, i + 1) for i in range(5)])
        assert component_count_bound(bfs_tree(path), {3}) == 2

    def test_component_count_bound_star(self):
        """Центр звезды даёт компоненту на каждый лист"""
        star = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
        assert component_count_bound(bfs_tree(star), {0}) == 5

    def test_component_count_bound_rejects_bad_sets(self):
        """Пустое и полное множества отклоняются"""
        tree = bfs_tree(star_plus_edge())
        with pytest.raises(ValueError):
            component_count_bound(tree, set())
        with pytest.raises(ValueError):
            component_count_bound(tree, set(range(5)))

    @given(st.data())
    def test_component_count_bound_holds(self, data):
        """Число компонент T - B не меньше суммы степеней - 2|B| + 2"""
        n = data.draw(st.integers(2, 14))
        edges = [(data.draw(st.integers(0, v - 1)), v) for v in range(1, n)]
        tree = bfs_tree(Graph.from_edges(n, edges))
        removed = data.draw(
            st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1)
        )
        count = len(forest_components(tree, removed))
        assert count >= component_count_bound(tree, removed)
        inner = sum(1 for u in removed for v in tree.adjacency[u] if v in removed) // 2
        assert count == sum(tree.deg[u] for u in removed) - len(removed) - inner + 1
        if inner == len(removed) - 1:
            assert count == component_count_bound(tree, removed)


class TestBuildCertificate:
    """Построение сертификата по терминальному разбиению на слои"""

    def test_solver_certificate(self, solved):
        """Сертификат решателя на звезде с ребром"""
        graph, tree, cert = solved
        assert cert.k == 3
        assert cert.h == 0
        assert cert.layers == [[0], []]
        assert cert.clean_components == [[3], [4]]
        assert cert.bound == 1
        assert verify_certificate(graph, tree, cert) == 1

    def test_guarantee_numbers(self, solved):
        """Отношение слоёв и теоретическая гарантия из чисел сертификата"""
        _, _, cert = solved
        assert pigeonhole_ratio(cert) == Fraction(1)
        assert float(certificate_guarantee(cert)) == pytest.approx(3 * (1 - 4 * EPS))

    def test_requires_terminal_layering(self, star_edge_tree: SpanningTree):
        """Нетерминальные слои не дают сертификата"""
        state = build_layering(star_edge_tree, 4, EPS, bytearray(5))
        with pytest.raises(NotTerminal):
            build_certificate(state, star_edge_tree, 4)

    def test_no_layer_count_passes_ratio(self, star_edge_tree: SpanningTree):
        """Если ни одно h не проходит тест отношения, сертификат не строится"""
        state = build_layering(star_edge_tree, 4, EPS, bytearray(5))
        state.layers = [[0], [1, 2, 3]]
        state.h = state.h_max = 1
        with pytest.raises(InvariantViolation):
            build_certificate(state, star_edge_tree, 4)

    def test_explain(self, solved):
        """Пояснение проверки с размерами слоёв"""
        graph, tree, cert = solved
        details = explain_certificate(graph, tree, cert)
        assert details["verified_bound"] == 1
        assert details["layer_sizes"] == [1, 0]
        assert details["removed_components"] == 3
        assert details["removed_components_lower_bound"] == 3


class TestVerifyCertificate:
    """Проверка отвергает испорченные сертификаты"""

    def test_tampered_layers(self, solved):
        """Подмена слоёв ломает покрытие граничных рёбер"""
        graph, tree, cert = solved
        bad = cert.model_copy(update={"layers": [[1], []]})
        with pytest.raises(UncoveredBoundaryEdge) as info:
            verify_certificate(graph, tree, bad)
        assert info.value.witness == (0, 3)

    def test_overclaimed_bound(self, solved):
        """Завышенная оценка отклоняется"""
        graph, tree, cert = solved
        with pytest.raises(BoundOverclaimed):
            verify_certificate(graph, tree, cert.model_copy(update={"bound": 5}))

    def test_overlapping_components(self, solved):
        """Пересекающиеся компоненты отклоняются"""
        graph, tree, cert = solved
        bad = cert.model_copy(update={"clean_components": [[3], [3]]})
        with pytest.raises(ComponentsOverlap):
            verify_certificate(graph, tree, bad)

    def test_disconnected_component(self, solved):
        """Компонента должна быть связной в дереве"""
        graph, tree, cert = solved
        bad = cert.model_copy(update={"clean_components": [[3, 4]]})
        with pytest.raises(ComponentNotConnected) as info:
            verify_certificate(graph, tree, bad)
        assert info.value.witness == 4

    def test_removed_vertex_in_component(self, solved):
        """Удалённая вершина не может быть в компоненте"""
        graph, tree, cert = solved
        bad = cert.model_copy(update={"clean_components": [[0]]})
        with pytest.raises(ComponentNotConnected):
            verify_certificate(graph, tree, bad)

    def test_wrong_layer_count(self, solved):
        """Число слоёв должно быть h + 2"""
        graph, tree, cert = solved
        with pytest.raises(MalformedCertificate):
            verify_certificate(graph, tree, cert.model_copy(update={"layers": [[0]]}))

    def test_tree_of_another_graph(self, solved):
        """Дерево другого графа отклоняется"""
        _, tree, cert = solved
        other = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        with pytest.raises(MalformedCertificate):
            verify_certificate(other, tree, cert)
