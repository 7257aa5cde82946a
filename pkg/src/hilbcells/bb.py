"""Fixed-point weight tables and the intersection criterion for torus flows.

For a complete variety with an ample line bundle and a one-parameter torus
action with isolated fixed points, the closure of the cell flowing into v
from above can meet the closure of the cell flowing into w from below only
if v = w or the fiber weight of v is strictly smaller than that of w.  Only
that combinatorial shadow is modeled: weight tables, allowed masks, and the
sign patterns of edge directions at the vertices of a lattice polygon.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class FixedPointTable:
    """Fixed points with their fiber weights; ids are opaque and unique."""

    entries: tuple  # of (id, phi)

    def __post_init__(self):
        ids = [e[0] for e in self.entries]
        if len(set(ids)) != len(ids):
            raise ValueError("fixed point ids must be unique")

    def phi(self, vid):
        for eid, value in self.entries:
            if eid == vid:
                return value
        raise ValueError(f"unknown fixed point id {vid!r}")

    def sorted_by_phi(self):
        return tuple(sorted(self.entries, key=lambda e: (e[1], str(e[0]))))

    def allowed_mask(self):
        """Boolean grid over entries sorted by increasing phi."""
        order = self.sorted_by_phi()
        return [
            [intersection_allowed(self, a[0], b[0]) for b in order]
            for a in order
        ]


def intersection_allowed(table, vid, wid):
    """False certifies the two cell closures are disjoint."""
    pv = table.phi(vid)
    pw = table.phi(wid)
    return vid == wid or pv < pw


class LatticePolygon:
    """Convex lattice polygon given by its cyclically ordered vertices.

    Vertices must be distinct, in strictly convex position, and listed
    counterclockwise; at least three are required.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        vertices = tuple((int(x), int(y)) for x, y in vertices)
        if len(vertices) < 3:
            raise ValueError(f"need at least 3 vertices, got {len(vertices)}")
        if len(set(vertices)) != len(vertices):
            raise ValueError("vertices must be distinct")
        m = len(vertices)
        for k in range(m):
            a = vertices[k]
            b = vertices[(k + 1) % m]
            c = vertices[(k + 2) % m]
            cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
            if cross <= 0:
                raise ValueError(
                    "vertices not in counterclockwise strictly convex position "
                    f"near {b}"
                )
        self.vertices = vertices

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(data)

    def neighbors(self, v):
        """The two vertices adjacent to v along the boundary."""
        m = len(self.vertices)
        k = self.vertices.index(v)
        return (self.vertices[(k - 1) % m], self.vertices[(k + 1) % m])

    def edge_steps(self, v):
        """First lattice points reached from v along its two edges."""
        steps = []
        for w in self.neighbors(v):
            dx, dy = w[0] - v[0], w[1] - v[1]
            g = gcd(abs(dx), abs(dy))
            steps.append((v[0] + dx // g, v[1] + dy // g))
        return tuple(steps)

    def is_smooth(self):
        """Whether every vertex cone is unimodular."""
        for v in self.vertices:
            (p, q) = self.neighbors(v)
            d1 = _primitive((p[0] - v[0], p[1] - v[1]))
            d2 = _primitive((q[0] - v[0], q[1] - v[1]))
            if abs(d1[0] * d2[1] - d1[1] * d2[0]) != 1:
                return False
        return True


def _primitive(vec):
    g = gcd(abs(vec[0]), abs(vec[1]))
    return (vec[0] // g, vec[1] // g)


def _pair(lam, point):
    return lam[0] * point[0] + lam[1] * point[1]


def check_separating(polygon, lam):
    values = {}
    for v in polygon.vertices:
        value = _pair(lam, v)
        if value in values:
            raise ValueError(
                f"lambda ({lam[0]}, {lam[1]}) does not separate vertices: "
                f"{values[value]} and {v} tie"
            )
        values[value] = v


def toric_phi(polygon, lam):
    """Fiber weights -<lam, v> at the vertices, as a FixedPointTable."""
    check_separating(polygon, lam)
    return FixedPointTable(
        entries=tuple((v, -_pair(lam, v)) for v in polygon.vertices)
    )


def toric_cell_signs(polygon, v, lam):
    """Partition of the two edge steps at v by the sign of <lam, step - v>.

    The 'up' side spans the cell of points flowing into v from above, the
    'down' side the cell flowing in from below.
    """
    check_separating(polygon, lam)
    if v not in polygon.vertices:
        raise ValueError(f"{v} is not a vertex")
    up, down = [], []
    for alpha in polygon.edge_steps(v):
        value = _pair(lam, (alpha[0] - v[0], alpha[1] - v[1]))
        if value > 0:
            up.append(alpha)
        elif value < 0:
            down.append(alpha)
        else:
            raise AssertionError(f"separating lambda produced a zero sign at {alpha}")
    return (tuple(up), tuple(down))


def source_and_sink(polygon, lam):
    """The unique vertices with all edges up and all edges down."""
    sources, sinks = [], []
    for v in polygon.vertices:
        up, down = toric_cell_signs(polygon, v, lam)
        if not down:
            sources.append(v)
        if not up:
            sinks.append(v)
    if len(sources) != 1 or len(sinks) != 1:
        raise AssertionError(
            f"expected unique source and sink, got {sources} and {sinks}"
        )
    return sources[0], sinks[0]
