"""
Disjoint-set forest used by connectivity and filtration code.

Works with any hashable element; unknown elements are singletons.
"""

from typing import Dict, Generic, Hashable, List, TypeVar

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
    """Union-find with union by rank and path compression."""

    def __init__(self) -> None:
        self._parents: Dict[T, T] = {}
        self._ranks: Dict[T, int] = {}

    def __contains__(self, element: object) -> bool:
        return element in self._parents

    def __len__(self) -> int:
        return len(self._parents)

    def add(self, element: T) -> None:
        """Add a singleton set (no-op when already present)."""
        if element not in self._parents:
            self._parents[element] = element
            self._ranks[element] = 0

    def find(self, element: T) -> T:
        """Return the representative of the set containing element."""
        self.add(element)

        path: List[T] = [element]
        root = self._parents[element]
        while root != path[-1]:
            path.append(root)
            root = self._parents[root]

        # Compress path
        for node in path:
            self._parents[node] = root

        return root

    def union(self, a: T, b: T) -> bool:
        """
        Merge the sets of a and b.

        Returns:
            False when a and b were already in the same set
        """
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False

        rank_a = self._ranks[root_a]
        rank_b = self._ranks[root_b]
        if rank_a < rank_b:
            root_a, root_b = root_b, root_a
        self._parents[root_b] = root_a
        if rank_a == rank_b:
            self._ranks[root_a] += 1
        return True

    def groups(self) -> List[List[T]]:
        """All sets, each in insertion order, ordered by first member."""
        members: Dict[T, List[T]] = {}
        for element in self._parents:
            members.setdefault(self.find(element), []).append(element)
        return list(members.values())
