from typing import Dict, Generic, Hashable, List, TypeVar

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
    def __init__(self):
        self.parent: Dict[T, T] = {}
        self.rank: Dict[T, int] = {}

    def make_set(self, e: T):
        if e in self.parent:
            return
        self.parent[e] = e
        self.rank[e] = 0

    # find with path halving
    def find(self, e: T) -> T:
        self.make_set(e)
        while self.parent[e] != e:
            self.parent[e] = self.parent[self.parent[e]]
            e = self.parent[e]
        return e

    # union by rank; returns False when already joined
    def union(self, x: T, y: T) -> bool:
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return False
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1
        return True

    def groups(self) -> List[List[T]]:
        """Members grouped by root, in insertion order of their first member."""
        by_root: Dict[T, List[T]] = {}
        for e in self.parent:
            by_root.setdefault(self.find(e), []).append(e)
        return list(by_root.values())
