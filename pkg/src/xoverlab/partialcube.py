"""Partial-cube recognition and the structure statistics built on it.

Recognition follows the classical route: compute the edge parallelism
relation from geodesic intervals, demand that it is an equivalence whose
classes are genuine cuts (removal splits the graph into exactly two parts),
label each vertex by its cut sides, and accept only when the labeling is an
isometry into the hypercube.  Everything downstream (cut sizes, antipodal
maps, VC dimension, cube minors, quadrangulation statistics) consumes either
the graph or the returned embedding.

Vertex labels are plain 0/1 strings, one coordinate per cut class, so empty
labelings (single-vertex graphs) stay representable.  Class order, and hence
coordinate order, is fixed by the smallest edge in each class; the side of a
cut containing vertex index 0 is labeled 0.  All outputs are therefore
reproducible byte for byte.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

import networkx as nx

from .graphs import SimpleGraph, degree_sequence, diameter, is_connected
from .words import Word

Edge = tuple[int, int]


def _require_connected(g: SimpleGraph) -> None:
    if not is_connected(g):
        raise ValueError("graph must be connected")


@dataclass(frozen=True)
class ParallelRelation:
    """Edge parallelism: uv is related to xy when each edge's endpoints lie
    in the geodesic interval spanned by the other's.

    Reflexive and symmetric by construction.  Transitivity is a property of
    the input graph, not of this container, so it is exposed as a query.
    """

    edges: tuple[Edge, ...]
    relation: frozenset[tuple[Edge, Edge]]

    def related(self, e: Edge, f: Edge) -> bool:
        return (e, f) in self.relation if e <= f else (f, e) in self.relation

    def classes(self) -> list[list[Edge]]:
        """Connected components of the relation, ordered by smallest edge."""
        comp: dict[Edge, int] = {}
        order: list[list[Edge]] = []
        for e in self.edges:
            if e in comp:
                continue
            comp[e] = len(order)
            bucket = [e]
            queue = deque([e])
            while queue:
                cur = queue.popleft()
                for f in self.edges:
                    if f not in comp and self.related(cur, f):
                        comp[f] = comp[e]
                        bucket.append(f)
                        queue.append(f)
            order.append(sorted(bucket))
        return order

    def is_transitive(self) -> bool:
        for bucket in self.classes():
            for e, f in combinations(bucket, 2):
                if not self.related(e, f):
                    return False
        return True


def parallel_relation(g: SimpleGraph) -> ParallelRelation:
    _require_connected(g)
    dist = g.distances()

    def between(z: int, a: int, b: int) -> bool:
        return dist[a][z] + dist[z][b] == dist[a][b]

    def oriented(u: int, v: int, x: int, y: int) -> bool:
        return (
            between(v, u, y)
            and between(x, u, y)
            and between(u, v, x)
            and between(y, v, x)
        )

    pairs: set[tuple[Edge, Edge]] = set()
    edges = g.edges
    for a in range(len(edges)):
        u, v = edges[a]
        for b in range(a, len(edges)):
            x, y = edges[b]
            if oriented(u, v, x, y) or oriented(u, v, y, x):
                pairs.add((edges[a], edges[b]))
    return ParallelRelation(edges, frozenset(pairs))


@dataclass(frozen=True)
class PartialCubeEmbedding:
    """Isometric binary labeling of a graph together with its cut classes.

    labels maps every vertex payload to a 0/1 string whose i-th character
    says on which side of cut i the vertex lies; cuts lists the edge classes
    in the same coordinate order.
    """

    labels: Mapping[object, str]
    cuts: tuple[tuple[Edge, ...], ...]

    @property
    def word_length(self) -> int:
        return len(self.cuts)

    def as_dict(self) -> dict[str, str]:
        return {str(v): lbl for v, lbl in self.labels.items()}


def _split_sides(g: SimpleGraph, removed: frozenset[Edge]) -> list[set[int]]:
    seen = [False] * g.n
    parts: list[set[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        part = {s}
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                e = (u, w) if u < w else (w, u)
                if e in removed or seen[w]:
                    continue
                seen[w] = True
                part.add(w)
                queue.append(w)
        parts.append(part)
    return parts


def is_partial_cube(g: SimpleGraph) -> PartialCubeEmbedding | None:
    """Embedding of g into a hypercube, or None when g is not a partial cube.

    The parallelism relation must be transitive, every class must be a cut
    whose removal leaves exactly two components, and the induced side
    labeling must reproduce all graph distances.
    """
    _require_connected(g)
    rel = parallel_relation(g)
    if not rel.is_transitive():
        return None
    classes = rel.classes()
    masks = [0] * g.n
    for c, bucket in enumerate(classes):
        parts = _split_sides(g, frozenset(bucket))
        if len(parts) != 2:
            return None
        one = parts[0] if 0 not in parts[0] else parts[1]
        for v in one:
            masks[v] |= 1 << (len(classes) - 1 - c)
    dist = g.distances()
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if (masks[i] ^ masks[j]).bit_count() != dist[i][j]:
                return None
    for i, j in g.edges:  # isometry forces bipartiteness; keep it checked
        assert masks[i].bit_count() % 2 != masks[j].bit_count() % 2
    c = len(classes)
    labels = {
        g.vertices[v]: format(masks[v], f"0{c}b") if c else ""
        for v in range(g.n)
    }
    return PartialCubeEmbedding(labels, tuple(tuple(b) for b in classes))


def cut_sizes(e: PartialCubeEmbedding) -> tuple[int, ...]:
    """Edge count of each cut class, in coordinate order."""
    return tuple(len(c) for c in e.cuts)


def is_antipodal(g: SimpleGraph) -> dict | None:
    """Map sending each vertex to its unique farthest vertex, if one exists.

    Every vertex must have exactly one vertex at distance diameter(g);
    otherwise the result is None.
    """
    _require_connected(g)
    dist = g.distances()
    diam = diameter(g)
    out = {}
    for i in range(g.n):
        far = [j for j in range(g.n) if dist[i][j] == diam]
        if len(far) != 1:
            return None
        out[g.vertices[i]] = g.vertices[far[0]]
    return out


def _masks_and_length(words: Iterable) -> tuple[list[int], int]:
    masks: list[int] = []
    n = -1
    for w in words:
        if isinstance(w, Word):
            for size in w.spec.sizes:
                if size != 2:
                    raise ValueError("VC dimension needs binary words")
            mask, length = w.index, w.spec.n
        else:
            text = str(w)
            if text and set(text) - {"0", "1"}:
                raise ValueError("VC dimension needs binary words")
            mask, length = int(text, 2) if text else 0, len(text)
        if n < 0:
            n = length
        elif n != length:
            raise ValueError("words must share a common length")
        masks.append(mask)
    return masks, max(n, 0)


def _largest_full_projection(masks: list[int], n: int) -> int:
    """Largest t with some t-subset of bit positions realizing all patterns.

    Sizes are tried in increasing order; shattering is monotone, so the
    search may stop at the first size with no witness.
    """
    if not masks:
        return -1
    distinct = set(masks)
    best = 0
    for t in range(1, n + 1):
        if len(distinct) < 1 << t:
            break
        found = False
        for positions in combinations(range(n), t):
            seen = set()
            for m in distinct:
                seen.add(tuple((m >> (n - 1 - p)) & 1 for p in positions))
            if len(seen) == 1 << t:
                found = True
                break
        if not found:
            break
        best = t
    return best


def vc_dimension(words) -> int:
    """Largest coordinate set shattered by the given binary words.

    Accepts Words or 0/1 strings of a common length; the empty family has
    dimension -1 by convention.
    """
    masks, n = _masks_and_length(words)
    return _largest_full_projection(masks, n)


def largest_cube_minor_dim(e: PartialCubeEmbedding) -> int:
    """Largest d such that keeping d cut coordinates and merging equal
    labels yields the full d-cube vertex set."""
    n = e.word_length
    masks = [int(lbl, 2) if lbl else 0 for lbl in e.labels.values()]
    return max(_largest_full_projection(masks, n), 0)


def degree_profile(g: SimpleGraph) -> dict[int, int]:
    """Histogram degree -> vertex count."""
    out: dict[int, int] = {}
    for d in degree_sequence(g):
        out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))


def min_max_degree(g: SimpleGraph) -> tuple[int, int]:
    seq = degree_sequence(g)
    return min(seq), max(seq)


def is_planar_quadrangulation(g: SimpleGraph) -> tuple[bool, int | None]:
    """Whether g is planar and bipartite with every face a 4-cycle.

    On success the second component is the quadrangle count |E| - |V| + 2;
    the face walk uses the certificate embedding of the planarity test,
    which is face-unique for the 2-connected graphs this is applied to.
    """
    _require_connected(g)
    if g.n < 4:
        raise ValueError("need at least 4 vertices")
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if color[w] < 0:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return False, None
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    ok, embedding = nx.check_planarity(nxg)
    if not ok:
        return False, None
    visited: set[tuple[int, int]] = set()
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            if (a, b) in visited:
                continue
            face = embedding.traverse_face(a, b, mark_half_edges=visited)
            if len(face) != 4:
                return False, None
    return True, g.m - g.n + 2
