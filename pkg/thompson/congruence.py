"""
Congruence closure over edge-labeled graphs with at most one child per digit

Merging two vertices merges their same-digit children (down closure), and two
classes whose children agree digit by digit are merged (up closure). Folding a
glued graph into a core and forming quotients of an automaton both run on
this engine.
"""

from typing import Iterable


class Congruence:
    """Union-find with path compression and union by size, closed under down/up rules."""

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, int, str]] = ()):
        self._parent: dict[str, str] = {}
        self._size: dict[str, int] = {}
        self._kids: dict[str, dict[int, str]] = {}
        self._pending: list[tuple[str, str]] = []
        for v in vertices:
            self._parent[v] = v
            self._size[v] = 1
        for src, digit, dst in edges:
            self._add_edge(src, digit, dst)
        self._close()

    def find(self, x: str) -> str:
        path = []
        while self._parent[x] != x:
            path.append(x)
            x = self._parent[x]
        for y in path:
            self._parent[y] = x
        return x

    def _add_edge(self, src: str, digit: int, dst: str):
        for v in (src, dst):
            if v not in self._parent:
                self._parent[v] = v
                self._size[v] = 1
        kids = self._kids.setdefault(self.find(src), {})
        if digit in kids:
            self._pending.append((kids[digit], dst))
        else:
            kids[digit] = dst

    def merge(self, a: str, b: str):
        self._pending.append((a, b))
        self._close()

    def merge_all(self, pairs: Iterable[tuple[str, str]]):
        self._pending.extend(pairs)
        self._close()

    def _union(self, a: str, b: str):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        moved = self._kids.pop(rb, None)
        if not moved:
            return
        kept = self._kids.setdefault(ra, {})
        for digit, child in moved.items():
            if digit in kept:
                self._pending.append((kept[digit], child))
            else:
                kept[digit] = child

    def _close(self):
        while True:
            while self._pending:
                self._union(*self._pending.pop())
            seen: dict[tuple[str, str], str] = {}
            for rep, kids in self._kids.items():
                if len(kids) != 2:
                    continue
                key = (self.find(kids[0]), self.find(kids[1]))
                other = seen.setdefault(key, rep)
                if other != rep:
                    self._pending.append((other, rep))
            if not self._pending:
                return

    def same(self, a: str, b: str) -> bool:
        return self.find(a) == self.find(b)

    def classes(self) -> dict[str, list[str]]:
        groups: dict[str, list[str]] = {}
        for v in self._parent:
            groups.setdefault(self.find(v), []).append(v)
        return {rep: sorted(members) for rep, members in groups.items()}

    def partition(self) -> frozenset:
        return frozenset(frozenset(members) for members in self.classes().values())

    def generating_pairs(self) -> list[tuple[str, str]]:
        """Pairs whose closure reproduces this congruence."""
        pairs = []
        for members in self.classes().values():
            pairs.extend((members[0], other) for other in members[1:])
        return pairs

    def quotient_edges(self) -> dict[tuple[str, int], str]:
        return {
            (rep, digit): self.find(child)
            for rep, kids in self._kids.items()
            for digit, child in kids.items()
        }
