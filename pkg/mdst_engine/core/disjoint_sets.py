"""
Union-find with union by rank and path compression
"""

from mdst_engine.core.errors import IndexOutOfRange


class DisjointSets:
    """Partition of 0..n-1 into classes; one instance per layer index"""

    __slots__ = ("parent", "rank", "classes")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"universe size must be positive, got {n}")
        self.parent = list(range(n))
        self.rank = bytearray(n)
        self.classes = n

    def __len__(self) -> int:
        return len(self.parent)

    def find(self, a: int) -> int:
        parent = self.parent
        if not 0 <= a < len(parent):
            raise IndexOutOfRange(f"element {a} outside 0..{len(parent) - 1}")
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b; True iff they were different"""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        rank = self.rank
        if rank[ra] < rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if rank[ra] == rank[rb]:
            rank[ra] += 1
        self.classes -= 1
        return True

    def same_set(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def labels(self) -> list[int]:
        """Class representative of every element"""
        return [self.find(a) for a in range(len(self.parent))]


def make_sets(n: int) -> DisjointSets:
    return DisjointSets(n)
