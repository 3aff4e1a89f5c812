"""Acyclic quivers, their doubles, weight functions and degree-graded paths.

Composition convention, used everywhere in this package: a product ``p q``
traverses ``q`` first.  A :class:`Path` stores its arrows in composition
order, so the *rightmost* arrow is the first one walked and its source is
the start of the path.  Appending an arrow on the right therefore prepends a
step to the walk; this is what right multiplication ``V^u -> V^t`` by an
arrow ``t -> u`` does.

Vertices are 0-based in the Python API and 1-based in files and reports.

Quiver file grammar (UTF-8, one statement per line)::

    # comment until end of line
    vertices N
    arrow LABEL: S -> T
    weight a LABEL = C
    weight b LABEL = C

``LABEL`` matches ``[A-Za-z_][A-Za-z0-9_]*``; ``S``, ``T`` are 1-based
vertex numbers; ``C`` is a nonzero integer, reduced modulo p when used.
``vertices`` may be omitted, in which case the largest vertex mentioned is
used.  Weights not given default to 1.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import CycleError, PreprankError, QuiverParseError, ZeroWeightError
from .exactlinalg import FieldSpec


@dataclass(frozen=True)
class Arrow:
    id: int
    label: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise PreprankError("arrow labels must be unique")
        for i, a in enumerate(self.arrows):
            if a.id != i:
                raise PreprankError("arrow ids must be 0..m-1 in order")
            for v in (a.source, a.target):
                if not 0 <= v < self.vertex_count:
                    raise PreprankError(f"arrow {a.label} uses vertex {v + 1} outside 1..{self.vertex_count}")
        cycle = _find_cycle(self.vertex_count, [(a.source, a.target) for a in self.arrows])
        if cycle is not None:
            raise CycleError([str(v + 1) for v in cycle])

    @classmethod
    def from_edges(cls, vertex_count: int, edges, labels=None) -> "Quiver":
        """Build from 0-based ``(source, target)`` pairs."""
        edges = list(edges)
        if labels is None:
            labels = [f"a{i + 1}" for i in range(len(edges))]
        return cls(vertex_count, tuple(Arrow(i, lab, s, t) for i, ((s, t), lab) in enumerate(zip(edges, labels))))

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(label)

    def topological_order(self) -> list[int]:
        indeg = [0] * self.vertex_count
        for a in self.arrows:
            indeg[a.target] += 1
        order = []
        ready = [v for v in range(self.vertex_count) if indeg[v] == 0]
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.arrows_from(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
        return order


def _find_cycle(n, edges):
    adj = [[] for _ in range(n)]
    for s, t in edges:
        adj[s].append(t)
    state = [0] * n
    stack = []

    def dfs(v):
        state[v] = 1
        stack.append(v)
        for w in adj[v]:
            if state[w] == 1:
                return stack[stack.index(w):] + [w]
            if state[w] == 0:
                c = dfs(w)
                if c:
                    return c
        state[v] = 2
        stack.pop()
        return None

    for v in range(n):
        if state[v] == 0:
            c = dfs(v)
            if c:
                return c
    return None


@dataclass(frozen=True)
class DArrow:
    """Arrow of the doubled quiver; starred arrows have degree 1."""

    id: int
    label: str
    source: int
    target: int
    base: int
    starred: bool

    @property
    def degree(self) -> int:
        return int(self.starred)


@dataclass(frozen=True)
class DoubledQuiver:
    base: Quiver

    @property
    def arrows(self) -> tuple[DArrow, ...]:
        return _doubled_arrows(self.base)

    @property
    def vertex_count(self) -> int:
        return self.base.vertex_count

    def star(self, base_id: int) -> DArrow:
        return self.arrows[len(self.base.arrows) + base_id]

    def arrows_from(self, v: int) -> list[DArrow]:
        return [a for a in self.arrows if a.source == v]

    def path(self, start: int, arrows=()) -> "Path":
        """Path from explicit arrow ids (composition order)."""
        arrows = tuple(arrows)
        end = start
        deg = 0
        for aid in reversed(arrows):
            a = self.arrows[aid]
            if a.source != end:
                raise PreprankError(f"arrow {a.label} does not compose at vertex {end + 1}")
            end = a.target
            deg += a.degree
        return Path(start, arrows, end, deg)

    def compose(self, p: "Path", q: "Path") -> "Path":
        """The product ``p q`` (``q`` walked first)."""
        if q.end != p.start:
            raise PreprankError("paths do not compose")
        return Path(q.start, p.arrows + q.arrows, p.end, p.degree + q.degree)

    def render(self, path: "Path") -> str:
        if not path.arrows:
            return f"e_{path.start + 1}"
        return ".".join(self.arrows[a].label for a in path.arrows)


_DOUBLED_CACHE: dict = {}


def _doubled_arrows(q: Quiver):
    got = _DOUBLED_CACHE.get(q)
    if got is None:
        m = len(q.arrows)
        got = tuple(DArrow(a.id, a.label, a.source, a.target, a.id, False) for a in q.arrows) + tuple(
            DArrow(m + a.id, a.label + "*", a.target, a.source, a.id, True) for a in q.arrows
        )
        _DOUBLED_CACHE[q] = got
    return got


def double(q: Quiver) -> DoubledQuiver:
    return DoubledQuiver(q)


@dataclass(frozen=True)
class Path:
    start: int
    arrows: tuple[int, ...]
    end: int
    degree: int

    @classmethod
    def trivial(cls, t: int) -> "Path":
        return cls(t, (), t, 0)

    @property
    def length(self) -> int:
        return len(self.arrows)

    def sort_key(self):
        return (len(self.arrows), self.arrows)


@dataclass(frozen=True)
class Weights:
    """Nonzero scalars ``a(γ)``, ``b(γ)`` indexed by base arrow id."""

    a: tuple
    b: tuple

    @classmethod
    def ones(cls, q: Quiver) -> "Weights":
        m = len(q.arrows)
        return cls((1,) * m, (1,) * m)

    def values(self, q: Quiver, field: FieldSpec):
        """Weights as field elements; raises if one reduces to zero."""
        out = []
        for which, ws in (("a", self.a), ("b", self.b)):
            vals = []
            for arrow, c in zip(q.arrows, ws):
                x = field.elem(Fraction(c))
                if not x:
                    raise ZeroWeightError(arrow.label, which)
                vals.append(x)
            out.append(vals)
        return out[0], out[1]


def paths_of_degree(dq: DoubledQuiver, start: int, d: int) -> list[Path]:
    """All paths of degree ``d`` starting at ``start``, ordered by (length, arrow ids).

    Finite because every oriented cycle of the double contains a starred arrow.
    """
    if d < 0:
        return []
    out = []
    out_arrows = [dq.arrows_from(v) for v in range(dq.vertex_count)]
    stack = [Path.trivial(start)]
    while stack:
        p = stack.pop()
        if p.degree == d:
            out.append(p)
        for a in out_arrows[p.end]:
            if p.degree + a.degree <= d:
                stack.append(Path(start, (a.id,) + p.arrows, a.target, p.degree + a.degree))
    out.sort(key=Path.sort_key)
    return out


_LABEL = r"[A-Za-z_][A-Za-z0-9_]*"
_RE_VERTICES = re.compile(r"^vertices\s+(\d+)$")
_RE_ARROW = re.compile(rf"^arrow\s+({_LABEL})\s*:\s*(\d+)\s*->\s*(\d+)$")
_RE_WEIGHT = re.compile(rf"^weight\s+([ab])\s+({_LABEL})\s*=\s*([+-]?\d+)$")


def parse_quiver(text: str) -> tuple[Quiver, Weights]:
    n = None
    arrows = []  # (label, s, t, line)
    weights = []  # (which, label, value, line)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _RE_VERTICES.match(line):
            if n is not None:
                raise QuiverParseError(lineno, "duplicate 'vertices' statement")
            n = int(m.group(1))
        elif m := _RE_ARROW.match(line):
            label, s, t = m.group(1), int(m.group(2)), int(m.group(3))
            if s < 1 or t < 1:
                raise QuiverParseError(lineno, "vertices are numbered from 1")
            if any(a[0] == label for a in arrows):
                raise QuiverParseError(lineno, f"duplicate arrow label {label!r}")
            arrows.append((label, s, t, lineno))
        elif m := _RE_WEIGHT.match(line):
            weights.append((m.group(1), m.group(2), int(m.group(3)), lineno))
        else:
            raise QuiverParseError(lineno, f"cannot parse {line!r}")
    if n is None:
        n = max((max(s, t) for _, s, t, _ in arrows), default=0)
        if n == 0:
            raise QuiverParseError(1, "missing 'vertices' statement")
    for label, s, t, lineno in arrows:
        if s > n or t > n:
            raise QuiverParseError(lineno, f"arrow {label} uses a vertex outside 1..{n}")
    q = Quiver(n, tuple(Arrow(i, lab, s - 1, t - 1) for i, (lab, s, t, _) in enumerate(arrows)))
    a = [1] * len(arrows)
    b = [1] * len(arrows)
    index = {lab: i for i, (lab, *_rest) in enumerate(arrows)}
    for which, label, value, lineno in weights:
        if label not in index:
            raise QuiverParseError(lineno, f"weight for unknown arrow {label!r}")
        if value == 0:
            raise ZeroWeightError(label, which)
        (a if which == "a" else b)[index[label]] = value
    return q, Weights(tuple(a), tuple(b))


def format_quiver(q: Quiver, w: Weights | None = None) -> str:
    lines = [f"vertices {q.vertex_count}"]
    lines += [f"arrow {a.label}: {a.source + 1} -> {a.target + 1}" for a in q.arrows]
    if w is not None:
        for a in q.arrows:
            if w.a[a.id] != 1:
                lines.append(f"weight a {a.label} = {w.a[a.id]}")
            if w.b[a.id] != 1:
                lines.append(f"weight b {a.label} = {w.b[a.id]}")
    return "\n".join(lines) + "\n"


def quiver_hash(q: Quiver, w: Weights | None = None) -> str:
    return hashlib.sha256(format_quiver(q, w).encode()).hexdigest()[:16]
