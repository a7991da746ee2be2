"""Graphs, the admissibility conditions on them, and their combinatorial invariants."""

import json
import math
import random
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations

INF = math.inf


class GraphFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..d-1 with edges stored as sorted pairs."""

    vertex_count: int
    edges: tuple

    def __post_init__(self):
        if not isinstance(self.vertex_count, int) or self.vertex_count < 1:
            raise GraphFormatError("vertex count must be a positive integer")
        norm = []
        seen = set()
        for e in self.edges:
            if len(e) != 2:
                raise GraphFormatError(f"edge {e!r} is not a pair")
            u, v = (int(x) for x in e)
            for x in (u, v):
                if not 0 <= x < self.vertex_count:
                    raise GraphFormatError(f"vertex {x} out of range [0, {self.vertex_count})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise GraphFormatError(f"duplicate edge {pair}")
            seen.add(pair)
            norm.append(pair)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def d(self):
        return self.vertex_count

    @property
    def m(self):
        return len(self.edges)

    def neighbors(self, v):
        return self._adjacency()[v]

    def degree(self, v):
        return len(self._adjacency()[v])

    def degrees(self):
        return [len(a) for a in self._adjacency()]

    def _adjacency(self):
        adj = self.__dict__.get("_adj")
        if adj is None:
            adj = [[] for _ in range(self.vertex_count)]
            for u, v in self.edges:
                adj[u].append(v)
                adj[v].append(u)
            adj = tuple(tuple(sorted(a)) for a in adj)
            object.__setattr__(self, "_adj", adj)
        return adj

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self._edge_set()

    def _edge_set(self):
        es = self.__dict__.get("_es")
        if es is None:
            es = frozenset(self.edges)
            object.__setattr__(self, "_es", es)
        return es

    def trivalent(self):
        return [v for v in range(self.vertex_count) if self.degree(v) == 3]

    def is_connected(self):
        return len(self.distances_from(0)) == self.vertex_count

    def distances_from(self, s):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def to_json(self):
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    def relabeled(self, perm):
        """Graph with vertex v renamed perm[v]."""
        return Graph(self.vertex_count, tuple((perm[u], perm[v]) for u, v in self.edges))


def parse_graph(text):
    """Parse ``{"vertices": d, "edges": [[u, v], ...]}``."""
    try:
        doc = json.loads(text) if isinstance(text, (str, bytes)) else text
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise GraphFormatError('expected an object with "vertices" and "edges"')
    d = doc["vertices"]
    if isinstance(d, bool) or not isinstance(d, int):
        raise GraphFormatError('"vertices" must be an integer')
    edges = doc["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise GraphFormatError('"edges" must be a list of [u, v] pairs')
    if not all(isinstance(x, int) and not isinstance(x, bool) for e in edges for x in e):
        raise GraphFormatError("edge endpoints must be integers")
    return Graph(d, tuple(tuple(e) for e in edges))


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    simple: bool
    strictly_subtrivalent: bool
    trivalent_separated: bool
    triangle_free: bool
    trivalent_separation: float
    violations: tuple = field(default=())

    @property
    def ok(self):
        return all(self.flags().values())

    def flags(self):
        return {
            "connected": self.connected,
            "simple": self.simple,
            "strictly_subtrivalent": self.strictly_subtrivalent,
            "trivalent_separated": self.trivalent_separated,
            "triangle_free": self.triangle_free,
        }

    def to_json(self):
        sep = self.trivalent_separation
        return {
            "ok": self.ok,
            "assumptions": {str(i + 1): {"name": k, "pass": v}
                            for i, (k, v) in enumerate(self.flags().items())},
            "trivalent_separation": None if sep == INF else sep,
            "violations": list(self.violations),
        }


def trivalent_separation(g):
    """Fewest edges on a path between two distinct trivalent vertices (inf if < 2 of them)."""
    tri = g.trivalent()
    best = INF
    tri_set = set(tri)
    for s in tri:
        dist = g.distances_from(s)
        for t, dd in dist.items():
            if t != s and t in tri_set and dd < best:
                best = dd
    return best


def has_triangle(g):
    for u, v in g.edges:
        if set(g.neighbors(u)) & set(g.neighbors(v)):
            return True
    return False


def validate_assumptions(g):
    degs = g.degrees()
    violations = []
    connected = g.is_connected()
    if not connected:
        violations.append("(1) graph is not connected")
    simple = len(set(g.edges)) == len(g.edges) and all(u != v for u, v in g.edges)
    if not simple:
        violations.append("(2) graph is not simple")
    sub = max(degs) <= 3 and min(degs) < 3
    if max(degs) > 3:
        violations.append(f"(3) vertex of degree {max(degs)} > 3")
    elif min(degs) >= 3:
        violations.append("(3) every vertex is trivalent")
    sep = trivalent_separation(g)
    separated = sep >= 3
    if not separated:
        violations.append(f"(4) trivalent vertices separated by only {sep} edge(s)")
    tri_free = not has_triangle(g)
    if not tri_free:
        violations.append("(5) graph contains a triangle")
    return ValidationReport(connected, simple, sub, separated, tri_free, sep, tuple(violations))


def girth(g):
    """Length of a shortest cycle (inf for forests), by BFS from every vertex."""
    best = INF
    for s in range(g.vertex_count):
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def cycles_of_length(g, n):
    """All simple cycles with exactly n edges, each as a vertex tuple starting at its minimum."""
    out = []
    if n < 3:
        return out
    for s in range(g.vertex_count):
        stack = [(s, (s,))]
        while stack:
            u, path = stack.pop()
            for w in g.neighbors(u):
                if w == s and len(path) == n:
                    if path[1] < path[-1]:  # one orientation only
                        out.append(path)
                elif w > s and w not in path and len(path) < n:
                    stack.append((w, path + (w,)))
    return sorted(out)


@dataclass(frozen=True)
class GraphInvariants:
    genus: int
    girth: float
    girth_cycle_count: int
    trivalent_separation: float
    degree_histogram: dict

    def to_json(self):
        fin = lambda x: None if x == INF else x  # noqa: E731
        return {
            "genus": self.genus,
            "girth": fin(self.girth),
            "girth_cycle_count": self.girth_cycle_count,
            "trivalent_separation": fin(self.trivalent_separation),
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
        }


def invariants(g):
    if not g.is_connected():
        raise ValueError("invariants need a connected graph")
    n = girth(g)
    count = len(cycles_of_length(g, n)) if n != INF else 0
    return GraphInvariants(
        genus=g.m - g.vertex_count + 1,
        girth=n,
        girth_cycle_count=count,
        trivalent_separation=trivalent_separation(g),
        degree_histogram=dict(Counter(g.degrees())),
    )


def genus(g):
    return g.m - g.vertex_count + 1


# families ------------------------------------------------------------------

def cycle_graph(m):
    if m < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)))


def path_graph(d):
    return Graph(d, tuple((i, i + 1) for i in range(d - 1)))


def subdivided_k4(s=1):
    """K4 with s new bivalent vertices on every edge; s=1 gives d=10, g=3."""
    edges = []
    nxt = 4
    for a, b in combinations(range(4), 2):
        chain = [a] + list(range(nxt, nxt + s)) + [b]
        nxt += s
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, tuple(edges))


def theta_graph(a, b, c):
    """Two trivalent vertices joined by three paths with a, b, c interior vertices."""
    edges = []
    nxt = 2
    for k in (a, b, c):
        chain = [0] + list(range(nxt, nxt + k)) + [1]
        nxt += k
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, tuple(edges))


def _locally_admissible(g):
    """Degree <= 3, triangle-free and trivalent separation >= 3 (connectivity not required)."""
    return max(g.degrees(), default=0) <= 3 and not has_triangle(g) and trivalent_separation(g) >= 3


def random_valid_graph(d, g, rng, max_tries=2000):
    """A random graph on d vertices with genus g passing every admissibility check.

    Grows a random tree one vertex at a time, then adds g chords, only ever
    taking steps that keep the graph triangle-free with trivalent vertices
    at least three edges apart; restarts when stuck.
    """
    if g < 0 or d < 1:
        raise ValueError("need d >= 1 and g >= 0")
    if d >= 2 and d < 2 * g + 2:
        raise ValueError(f"no admissible graph with d={d} < 2g+2={2 * g + 2}")
    # degree count gives (#trivalent) - (#leaves) = 2g - 2, and separation >= 3
    # makes closed neighbourhoods of trivalent vertices disjoint: 4(2g - 2) <= d
    if g >= 2 and d < 8 * (g - 1):
        raise ValueError(f"no admissible graph with d={d} < 8(g-1)={8 * (g - 1)}")
    if g == 1 and d < 4:
        raise ValueError("a triangle-free cycle needs d >= 4")
    if d == 1:
        if g:
            raise ValueError("a single vertex has genus 0")
        return Graph(1, ())
    for _ in range(max_tries):
        edges = set()
        for v in range(1, d):
            targets = list(range(v))
            rng.shuffle(targets)
            for u in targets:
                trial = Graph(v + 1, tuple(sorted(edges | {(u, v)})))
                if _locally_admissible(trial):
                    edges.add((u, v))
                    break
            else:
                break
        if len(edges) != d - 1:
            continue
        for _ in range(g):
            cands = [e for e in combinations(range(d), 2) if e not in edges]
            rng.shuffle(cands)
            for e in cands:
                trial = Graph(d, tuple(sorted(edges | {e})))
                if _locally_admissible(trial):
                    edges.add(e)
                    break
            else:
                break
        G = Graph(d, tuple(sorted(edges)))
        if len(edges) == d - 1 + g and validate_assumptions(G).ok:
            # shuffle vertex names so the labeling sees varied orders
            perm = list(range(d))
            rng.shuffle(perm)
            return G.relabeled(perm)
    raise RuntimeError(f"no admissible graph found for d={d}, g={g} after {max_tries} tries")


_FAMILY_RE = re.compile(r"^\s*(\w+)\s*\((.*)\)\s*$")


def _parse_descriptor(spec):
    if isinstance(spec, dict):
        spec = dict(spec)
        name = spec.pop("family")
        return name, [], spec
    m = _FAMILY_RE.match(spec)
    if not m:
        raise ValueError(f"bad family descriptor {spec!r}")
    name, body = m.groups()
    args, kwargs = [], {}
    for part in filter(None, (p.strip() for p in body.split(","))):
        if "=" in part:
            k, v = part.split("=", 1)
            kwargs[k.strip()] = int(v)
        else:
            args.append(int(part))
    return name, args, kwargs


def generate_family(spec):
    """Graphs of a named family.

    ``spec`` is a string such as ``"cycle(5)"``, ``"subdivided_K4(1)"`` or
    ``"random_valid(12, 2, seed=1, count=5)"``, or the equivalent dict
    ``{"family": "random_valid", "d": 12, "g": 2, "seed": 1, "count": 5}``.
    """
    name, args, kw = _parse_descriptor(spec)
    if name == "cycle":
        return [cycle_graph(*args, **kw)]
    if name == "path":
        return [path_graph(*args, **kw)]
    if name in ("subdivided_K4", "subdivided_k4"):
        return [subdivided_k4(*args, **kw)]
    if name == "theta":
        return [theta_graph(*args, **kw)]
    if name == "random_valid":
        params = dict(zip(("d", "g"), args))
        params.update(kw)
        rng = random.Random(params.get("seed", 0))
        count = params.get("count", 1)
        return [random_valid_graph(params["d"], params["g"], rng) for _ in range(count)]
    raise ValueError(f"unknown graph family {name!r}")
