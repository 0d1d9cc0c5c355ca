"""Quivers: finite directed graphs with named vertices and arrows.

The text format accepted by :func:`load_quiver` has one declaration per
line::

    vertex 1
    vertex 2
    arrow a: 1 -> 2

Blank lines and ``#`` comments are ignored.  Loops, directed cycles and
disconnected underlying graphs are rejected with line-numbered diagnostics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import QuiverLoadError, UnsupportedError

_ARROW_RE = re.compile(r"^arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")
_VERTEX_RE = re.compile(r"^vertex\s+(\S+)$")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """A finite acyclic connected quiver.

    ``vertices`` fixes the canonical coordinate order used by every
    dimension vector over this quiver.
    """

    vertices: tuple
    arrows: tuple
    name: str = ""
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if self._checked:
            return
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise QuiverLoadError(f"duplicate vertex {v!r}")
            seen.add(v)
        anames = set()
        for a in self.arrows:
            if a.name in anames:
                raise QuiverLoadError(f"duplicate arrow {a.name!r}")
            anames.add(a.name)
            for end in (a.source, a.target):
                if end not in seen:
                    raise QuiverLoadError(
                        f"arrow {a.name!r} uses unknown vertex {end!r}"
                    )
            if a.source == a.target:
                raise QuiverLoadError(f"arrow {a.name!r} is a loop")
        if self._has_directed_cycle():
            raise QuiverLoadError("quiver has a directed cycle")
        if self.vertices and not self._is_connected():
            raise QuiverLoadError("underlying graph is not connected")

    # -- basic structure ---------------------------------------------------

    def vertex_index(self, v):
        return self.vertices.index(v)

    def arrows_from(self, v):
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v):
        return [a for a in self.arrows if a.target == v]

    def is_sink(self, v):
        return not self.arrows_from(v)

    def is_source(self, v):
        return not self.arrows_into(v)

    def _has_directed_cycle(self):
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        queue = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for a in self.arrows_from(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    queue.append(a.target)
        return seen != len(self.vertices)

    def _is_connected(self):
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    # -- derived quivers ---------------------------------------------------

    def reversed_at(self, v):
        """Reverse every arrow incident to ``v``."""
        new = tuple(
            Arrow(a.name, a.target, a.source)
            if v in (a.source, a.target)
            else a
            for a in self.arrows
        )
        return Quiver(self.vertices, new, self.name, _checked=True)

    def opposite(self):
        return Quiver(
            self.vertices,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
            f"{self.name}^op" if self.name else "",
            _checked=True,
        )

    def sink_ordering(self):
        """An admissible ordering v1, v2, ... with v1 a sink of the quiver,
        v2 a sink after reflecting at v1, and so on (reversed topological
        order)."""
        order = []
        indeg = {v: len(self.arrows_from(v)) for v in self.vertices}
        remaining = set(self.vertices)
        while remaining:
            v = min(
                (w for w in remaining if indeg[w] == 0),
                key=self.vertices.index,
            )
            order.append(v)
            remaining.remove(v)
            for a in self.arrows_into(v):
                if a.source in remaining:
                    indeg[a.source] -= 1
        return order

    # -- Dynkin classification ---------------------------------------------

    def dynkin_type(self):
        """Return ('A'|'D'|'E', n) for a Dynkin quiver, else raise.

        A connected loop-free graph without multiple edges is Dynkin exactly
        when its Tits form is positive definite; the type is then read off
        the degree sequence.
        """
        n = len(self.vertices)
        pairs = {frozenset((a.source, a.target)) for a in self.arrows}
        if len(pairs) != len(self.arrows):
            raise UnsupportedError(
                "multiple arrows between two vertices: not Dynkin "
                "(the Kronecker quiver is handled by the tame model)"
            )
        deg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            deg[a.source] += 1
            deg[a.target] += 1
        degs = sorted(deg.values(), reverse=True)
        if len(self.arrows) != n - 1:
            raise UnsupportedError("underlying graph is not a tree: not Dynkin")
        if not degs or degs[0] <= 2:
            return ("A", n)
        if degs[0] > 3 or (len(degs) > 1 and degs[1] > 2):
            raise UnsupportedError("underlying graph is not of ADE shape")
        # one branch vertex of degree 3; arm lengths decide D vs E
        branch = next(v for v, d in deg.items() if d == 3)
        arms = sorted(self._arm_lengths(branch, deg))
        if arms[0] != 1:
            raise UnsupportedError("underlying graph is not of ADE shape")
        if arms[1] == 1:
            return ("D", n)
        if arms[1] == 2 and arms[2] in (2, 3, 4):
            return ("E", n)
        raise UnsupportedError("underlying graph is not of ADE shape")

    def _arm_lengths(self, branch, deg):
        adj = {v: [] for v in self.vertices}
        for a in self.arrows:
            adj[a.source].append(a.target)
            adj[a.target].append(a.source)
        lengths = []
        for start in adj[branch]:
            prev, cur, length = branch, start, 1
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            lengths.append(length)
        return lengths

    def positive_root_count(self):
        kind, n = self.dynkin_type()
        if kind == "A":
            return n * (n + 1) // 2
        if kind == "D":
            return n * (n - 1)
        return {6: 36, 7: 63, 8: 120}[n]


def load_quiver(text, name=""):
    """Parse the quiver text format.  Raises QuiverLoadError with line
    numbers on malformed input."""
    vertices = []
    arrows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _VERTEX_RE.match(line)
        if m:
            vertices.append(m.group(1))
            continue
        m = _ARROW_RE.match(line)
        if m:
            arrows.append(Arrow(m.group(1), m.group(2), m.group(3)))
            continue
        raise QuiverLoadError(f"unrecognized declaration {line!r}", line=lineno)
    try:
        return Quiver(tuple(vertices), tuple(arrows), name)
    except QuiverLoadError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise QuiverLoadError(str(exc))


def load_quiver_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return load_quiver(fh.read(), name=str(path))


def linear_quiver(n):
    """A_n with linear orientation 1 -> 2 -> ... -> n."""
    vs = tuple(str(i) for i in range(1, n + 1))
    arrows = tuple(
        Arrow(f"a{i}", str(i), str(i + 1)) for i in range(1, n)
    )
    return Quiver(vs, arrows, name=f"A{n}")


def d4_quiver():
    """D_4 with the three outer vertices pointing into the center."""
    vs = ("1", "2", "3", "c")
    arrows = tuple(Arrow(f"a{v}", v, "c") for v in ("1", "2", "3"))
    return Quiver(vs, arrows, name="D4")


BUILTIN_QUIVERS = {
    "a2": lambda: linear_quiver(2),
    "a3": lambda: linear_quiver(3),
    "a4": lambda: linear_quiver(4),
    "d4": d4_quiver,
}
