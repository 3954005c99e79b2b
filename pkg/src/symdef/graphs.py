"""Simple undirected graphs, structural predicates, and named families.

Vertices are indexed 0..n-1 internally and printed 1-based as x1..xn to
match the variable names of the monomial side.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ODD_CYCLE_VERTICES = 14


class GraphTooLargeError(RuntimeError):
    """Exhaustive cycle enumeration refused beyond the vertex budget."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset((min(i, j), max(i, j)) for i, j in edges))

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> set[int]:
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_isolated_vertex(self) -> bool:
        covered = {v for e in self.edges for v in e}
        return len(covered) < self.n

    def neighbors_of_set(self, vertices: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for v in vertices:
            out |= self.neighbors(v)
        return out

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on the given vertices, reindexed in ascending order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = {
            (index[i], index[j]) for i, j in self.edges if i in index and j in index
        }
        return Graph.from_edges(len(keep), edges)

    def two_coloring(self) -> list[int] | None:
        """A proper 2-coloring, or None if the graph has an odd cycle."""
        adj = self.adjacency()
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for w in adj[v]:
                    if color[w] == -1:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    # -- cycle machinery

    def simple_cycles(self) -> Iterator[tuple[int, ...]]:
        """All simple cycles, each yielded once as a vertex tuple.

        Canonical form: the cycle starts at its smallest vertex and its
        second vertex is smaller than its last.  Exponential in general,
        intended for small graphs only.
        """
        adj = self.adjacency()

        def extend(root: int, path: list[int], on_path: set[int]):
            v = path[-1]
            for w in sorted(adj[v]):
                if w == root and len(path) >= 3:
                    if path[1] < path[-1]:
                        yield tuple(path)
                elif w > root and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend(root, path, on_path)
                    on_path.discard(w)
                    path.pop()

        for root in range(self.n):
            yield from extend(root, [root], {root})

    def odd_cycles(self) -> list[tuple[int, ...]]:
        if self.n > MAX_ODD_CYCLE_VERTICES:
            raise GraphTooLargeError(
                f"{self.n} vertices: too large for exhaustive odd-cycle enumeration"
                f" (budget {MAX_ODD_CYCLE_VERTICES})"
            )
        return [c for c in self.simple_cycles() if len(c) % 2 == 1]

    def every_vertex_adjacent_to_every_odd_cycle(self) -> bool:
        """True iff each vertex has a neighbor on every odd cycle.

        A vertex lying on a cycle counts as adjacent to it (its two cycle
        neighbors are on the cycle), so the check reduces to: the
        neighborhood of each odd cycle's vertex set is the whole graph.
        """
        everything = set(range(self.n))
        for cycle in self.odd_cycles():
            if self.neighbors_of_set(cycle) != everything:
                return False
        return True

    # -- serialization

    def to_json(self) -> str:
        edges = [[i + 1, j + 1] for i, j in self.edge_list()]
        return json.dumps({"n": self.n, "edges": edges})

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        data = json.loads(text)
        n = int(data["n"])
        edges = {(int(i) - 1, int(j) - 1) for i, j in data["edges"]}
        return cls.from_edges(n, edges)

    @classmethod
    def from_json_file(cls, path) -> "Graph":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())


# ---------------------------------------------------------------------------
# named families


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """Path on n vertices (n - 1 edges)."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def triangle_tail(n: int) -> Graph:
    """Triangle x1 x2 x3 with a tail y1..yn attached at x3 (n + 3 vertices)."""
    if n < 1:
        raise ValueError("triangle tail needs at least one tail vertex")
    edges = [(0, 1), (0, 2), (1, 2), (2, 3)]
    edges += [(3 + i, 4 + i) for i in range(n - 1)]
    return Graph.from_edges(n + 3, edges)


_FAMILY_RE = re.compile(r"^([KCPT])(\d+)$")
_FAMILIES = {"K": complete, "C": cycle, "P": path, "T": triangle_tail}


def parse_family(spec: str) -> Graph:
    """Parse shorthand like "K5", "C7", "P4", "T3"."""
    m = _FAMILY_RE.match(spec.strip())
    if not m:
        raise ValueError(f"unrecognized graph family {spec!r}")
    letter, size = m.group(1), int(m.group(2))
    return _FAMILIES[letter](size)
