"""
Конфигурация тестов и фикстуры
"""

import pytest
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

from mdst_engine.models import Graph, SpanningTree, bfs_tree
from mdst_engine.models.base import Base
from mdst_engine.models.reports import GenSpec, GraphKind
from mdst_engine.oracle.generators import generate

# Analysis epsilon for eps_user = 0.1
EPS = 0.1 / 8


@pytest.fixture(scope="session")
def test_engine():
    """Create a test database engine"""
    # Use in-memory SQLite for tests
    engine = create_engine("sqlite:///:memory:", echo=False)
    Base.metadata.create_all(engine)
    yield engine
    engine.dispose()


@pytest.fixture
def db_session(test_engine):
    """Create a database session for each test"""
    factory = sessionmaker(test_engine, expire_on_commit=False)
    with factory() as session:
        try:
            yield session
        finally:
            session.rollback()


@pytest.fixture(autouse=True)
def clean_database(test_engine):
    """Clean database before each test"""
    Base.metadata.drop_all(test_engine)
    Base.metadata.create_all(test_engine)


def star_plus_edge() -> Graph:
    """Star with centre 0 and leaves 1..4, plus the edge (1, 2)"""
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])


def gnp(n: int, p: float, seed: int) -> Graph:
    return generate(GenSpec(kind=GraphKind.GNP, n=n, p=p, seed=seed)).graph


@pytest.fixture
def star_edge_graph() -> Graph:
    return star_plus_edge()


@pytest.fixture
def star_edge_tree(star_edge_graph: Graph) -> SpanningTree:
    """The star itself: Δ = 4"""
    return bfs_tree(star_edge_graph, 0)
