"""The pillow configuration of bidegree (a, b).

Two a x b grids of unit cells ("top" and "bottom"), each cell split into
two triangles by a diagonal, glued along their common boundary cycle of
2a + 2b segments: a triangulation of the 2-sphere with 2ab + 2 vertices,
6ab lines, and 4ab triangles.  With g = 2ab + 1 these counts read g + 1,
3g - 3, and 2g - 2.

Labeling conventions (fixed so all outputs are reproducible bit for bit):

* Boundary vertices are 1 .. 2a+2b, consecutively clockwise from the
  top-left corner: 1 .. a+1 across the top, a+1 .. a+b+1 down the right
  side, a+b+1 .. 2a+b+1 across the bottom (right to left), then up the
  left side ending with 2a+2b just below 1.  The four corners are
  therefore 1, a+1, a+b+1, and 2a+b+1.
* Interior vertices are labeled row-major (left to right, rows top to
  bottom): 2a+2b+1 .. ab+a+b+1 for the top grid, ab+a+b+2 .. 2ab+2 for
  the bottom grid.
* Top cells carry rising diagonals (lower-left to upper-right), bottom
  cells falling ones.  Opposite orientations are what give each corner
  exactly three incident triangles.

Two lines of the configuration meet exactly when they share a labeled
vertex: the planes span coordinate subspaces, so lines spanned by pairs
of coordinate points intersect precisely when the pairs overlap.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd

from . import pairs
from .checks import Report
from .errors import InvalidParameter, MalformedComplex, NonIntegral

SIDES = ("top", "bottom")
HALVES = ("lower", "upper")

BOUNDARY = "boundary"
HORIZONTAL = "horizontal"
VERTICAL = "vertical"
DIAGONAL = "diagonal"


@dataclass(frozen=True, order=True)
class Line:
    """A double line of the configuration, identified by its endpoint pair.

    Boundary lines are shared by both grids (side == "shared"); all other
    lines belong to one grid.
    """

    u: int
    v: int
    kind: str = field(compare=False)
    side: str = field(compare=False)

    def __post_init__(self):
        if not self.u < self.v:
            raise InvalidParameter(f"line endpoints must satisfy u < v, got ({self.u}, {self.v})")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)

    def meets(self, other: "Line") -> bool:
        return len({self.u, self.v} & {other.u, other.v}) > 0


@dataclass(frozen=True)
class Triangle:
    """One plane of the configuration: half of a grid cell."""

    vertices: tuple[int, int, int]
    side: str
    row: int
    col: int
    half: str

    def edge_pairs(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        a, b, c = self.vertices
        return ((a, b), (a, c), (b, c))

    @property
    def name(self) -> str:
        return f"{self.side}_r{self.row}_c{self.col}_{self.half}"

    def sort_key(self) -> tuple[int, int, int, int]:
        return (SIDES.index(self.side), self.row, self.col, HALVES.index(self.half))


@dataclass(frozen=True)
class PillowConfig:
    """The full plane configuration as a labeled simplicial complex."""

    a: int
    b: int
    vertices: tuple[int, ...]
    lines: tuple[Line, ...]
    triangles: tuple[Triangle, ...]
    grid_map: dict[tuple[str, int, int], int]

    @property
    def g(self) -> int:
        return 2 * self.a * self.b + 1

    @property
    def corner_ids(self) -> tuple[int, int, int, int]:
        a, b = self.a, self.b
        return (1, a + 1, a + b + 1, 2 * a + b + 1)

    @property
    def boundary_ids(self) -> range:
        return range(1, 2 * self.a + 2 * self.b + 1)

    def lines_by_pair(self) -> dict[tuple[int, int], Line]:
        return {line.pair: line for line in self.lines}

    def line_degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in self.vertices}
        for line in self.lines:
            deg[line.u] += 1
            deg[line.v] += 1
        return deg

    def triangle_degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in self.vertices}
        for tri in self.triangles:
            for v in tri.vertices:
                deg[v] += 1
        return deg

    def lines_at(self, vertex: int) -> list[Line]:
        return [ln for ln in self.lines if vertex in (ln.u, ln.v)]


def _boundary_label(a: int, b: int, i: int, j: int) -> int:
    """Clockwise boundary label of grid position (row i, column j)."""
    if i == 0:
        return 1 + j
    if j == a:
        return a + 1 + i
    if i == b:
        return 2 * a + b + 1 - j
    if j == 0:
        return 2 * a + 2 * b + 1 - i
    raise InvalidParameter(f"({i}, {j}) is not a boundary position")


def _make_grid_map(a: int, b: int) -> dict[tuple[str, int, int], int]:
    grid: dict[tuple[str, int, int], int] = {}
    for side_idx, side in enumerate(SIDES):
        interior_base = 2 * a + 2 * b if side == "top" else a * b + a + b + 1
        for i in range(b + 1):
            for j in range(a + 1):
                if i in (0, b) or j in (0, a):
                    grid[(side, i, j)] = _boundary_label(a, b, i, j)
                else:
                    grid[(side, i, j)] = interior_base + (i - 1) * (a - 1) + j
    return grid


def _sorted_pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def build_pillow(a: int, b: int) -> PillowConfig:
    """Construct the pillow configuration of bidegree (a, b)."""
    if a < 2 or b < 2:
        raise InvalidParameter(f"bidegree parameters must both be >= 2, got ({a}, {b})")

    grid = _make_grid_map(a, b)
    n_vertices = 2 * a * b + 2
    vertices = tuple(range(1, n_vertices + 1))

    line_map: dict[tuple[int, int], Line] = {}

    def add_line(u: int, v: int, kind: str, side: str) -> None:
        pair = _sorted_pair(u, v)
        if pair in line_map:
            raise MalformedComplex(f"duplicate line between vertices {pair}")
        line_map[pair] = Line(pair[0], pair[1], kind, side)

    # the shared boundary cycle of 2a + 2b lines
    cycle = list(range(1, 2 * a + 2 * b + 1))
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        add_line(u, v, BOUNDARY, "shared")

    for side in SIDES:
        def at(i: int, j: int) -> int:
            return grid[(side, i, j)]

        # interior horizontal lines (grid rows strictly between the boundary rows)
        for i in range(1, b):
            for j in range(a):
                add_line(at(i, j), at(i, j + 1), HORIZONTAL, side)
        # interior vertical lines
        for j in range(1, a):
            for i in range(b):
                add_line(at(i, j), at(i + 1, j), VERTICAL, side)
        # one diagonal per cell: rising on top, falling on bottom
        for i in range(1, b + 1):
            for j in range(1, a + 1):
                if side == "top":
                    add_line(at(i, j - 1), at(i - 1, j), DIAGONAL, side)
                else:
                    add_line(at(i - 1, j - 1), at(i, j), DIAGONAL, side)

    triangles: list[Triangle] = []
    for side in SIDES:
        for i in range(1, b + 1):
            for j in range(1, a + 1):
                nw = grid[(side, i - 1, j - 1)]
                ne = grid[(side, i - 1, j)]
                sw = grid[(side, i, j - 1)]
                se = grid[(side, i, j)]
                if side == "top":
                    # rising diagonal sw-ne
                    lower, upper = (sw, se, ne), (sw, nw, ne)
                else:
                    # falling diagonal nw-se
                    lower, upper = (nw, sw, se), (nw, ne, se)
                triangles.append(Triangle(tuple(sorted(lower)), side, i, j, "lower"))
                triangles.append(Triangle(tuple(sorted(upper)), side, i, j, "upper"))

    lines = tuple(sorted(line_map.values()))
    triangles_sorted = tuple(sorted(triangles, key=Triangle.sort_key))

    if len(lines) != 6 * a * b or len(triangles_sorted) != 4 * a * b:
        raise MalformedComplex(
            f"construction produced {len(lines)} lines / {len(triangles_sorted)} triangles, "
            f"expected {6 * a * b} / {4 * a * b}"
        )
    return PillowConfig(a, b, vertices, lines, triangles_sorted, grid)


# ---------------------------------------------------------------------------
# Verification.


def _line_incidence(c: PillowConfig) -> dict[tuple[int, int], list[int]]:
    """Map each line's endpoint pair to the indices of triangles containing it."""
    incidence: dict[tuple[int, int], list[int]] = {ln.pair: [] for ln in c.lines}
    for idx, tri in enumerate(c.triangles):
        for pair in tri.edge_pairs():
            if pair in incidence:
                incidence[pair].append(idx)
    return incidence


def _vertex_link_is_single_cycle(c: PillowConfig, vertex: int,
                                 incidence: dict[tuple[int, int], list[int]]) -> bool:
    """The triangles around a vertex, glued along shared lines through it,
    must form exactly one closed cycle (the closed-surface condition)."""
    tri_ids = [i for i, tri in enumerate(c.triangles) if vertex in tri.vertices]
    if not tri_ids:
        return False
    adjacency: dict[int, set[int]] = {i: set() for i in tri_ids}
    for i in tri_ids:
        for other in c.triangles[i].vertices:
            if other == vertex:
                continue
            incident = incidence.get(_sorted_pair(vertex, other), [])
            for j in incident:
                if j != i and j in adjacency:
                    adjacency[i].add(j)
    if any(len(neigh) != 2 for neigh in adjacency.values()):
        return False
    # connected + 2-regular => a single cycle
    seen = {tri_ids[0]}
    frontier = [tri_ids[0]]
    while frontier:
        cur = frontier.pop()
        for nxt in adjacency[cur]:
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return len(seen) == len(tri_ids)


def _face_components(c: PillowConfig, incidence: dict[tuple[int, int], list[int]]) -> int:
    n = len(c.triangles)
    if n == 0:
        return 0
    adjacency: dict[int, set[int]] = {i: set() for i in range(n)}
    for tris in incidence.values():
        if len(tris) == 2:
            adjacency[tris[0]].add(tris[1])
            adjacency[tris[1]].add(tris[0])
    seen: set[int] = set()
    components = 0
    for start in range(n):
        if start in seen:
            continue
        components += 1
        seen.add(start)
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for nxt in adjacency[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
    return components


def verify_sphere_triangulation(c: PillowConfig) -> Report:
    """Check that the configuration triangulates the 2-sphere.

    Reported checks: every line in exactly two triangles; every vertex
    link a single closed cycle; connected face-adjacency graph; Euler
    characteristic 2; and the vertex census (the four corners on exactly
    three lines and three triangles, every other vertex on six).
    """
    report = Report(f"sphere triangulation, bidegree ({c.a}, {c.b})")
    incidence = _line_incidence(c)

    bad_lines = sum(1 for tris in incidence.values() if len(tris) != 2)
    report.add("line_in_two_triangles", bad_lines, 0)

    bad_links = sum(
        1 for v in c.vertices if not _vertex_link_is_single_cycle(c, v, incidence)
    )
    report.add("vertex_link_single_cycle", bad_links, 0)

    report.add("face_adjacency_connected", _face_components(c, incidence), 1)

    euler = len(c.vertices) - len(c.lines) + len(c.triangles)
    report.add("euler_characteristic", euler, 2)

    tri_deg = c.triangle_degrees()
    degree_three = tuple(sorted(v for v, d in tri_deg.items() if d == 3))
    report.add("degree3_vertices_are_corners", degree_three, tuple(sorted(c.corner_ids)))
    census = tuple(sorted((d, sum(1 for x in tri_deg.values() if x == d))
                          for d in set(tri_deg.values())))
    report.add("triangle_degree_census", census,
               ((3, 4), (6, 2 * c.a * c.b - 2)))
    report.add("line_degrees_match_triangle_degrees",
               sum(1 for v, d in c.line_degrees().items() if d != tri_deg[v]), 0)
    return report


# ---------------------------------------------------------------------------
# Disjoint line pairs: three independent routes.


def count_disjoint_line_pairs(c: PillowConfig) -> int:
    """Unordered pairs of lines sharing no vertex, by exhaustive enumeration."""
    return pairs.count_disjoint_pairs([ln.pair for ln in c.lines])


def disjoint_pairs_via_degrees(c: PillowConfig) -> int:
    """Same count through the vertex degrees: all pairs minus the meeting
    pairs, which (since two lines share at most one vertex) number
    sum over vertices of C(degree, 2)."""
    degrees = c.line_degrees()
    return comb(len(c.lines), 2) - sum(comb(d, 2) for d in degrees.values())


def formula_disjoint_pairs(g: int) -> int:
    """Closed form (9g^2 - 51g + 78) / 2 for the number of disjoint line
    pairs in the pillow with g = 2ab + 1."""
    if g % 2 == 0 or g < 9:
        raise InvalidParameter(f"g must be odd and >= 9, got {g}")
    numerator = 9 * g * g - 51 * g + 78
    if numerator % 2 != 0:
        raise NonIntegral(f"9g^2 - 51g + 78 = {numerator} is odd at g = {g}")
    return numerator // 2


# ---------------------------------------------------------------------------
# Intermediate degeneration stages.


@dataclass(frozen=True)
class GridFace:
    """One whole a x b grid, viewed as a single face (two-surfaces stage)."""

    side: str
    vertices: tuple[int, ...]
    span_dim: int


@dataclass(frozen=True)
class QuadricFace:
    """One rectangle of the quadrics stage, with its 4-line boundary cycle."""

    side: str
    row: int
    col: int
    corners: tuple[int, int, int, int]  # nw, ne, se, sw
    boundary: tuple[Line, Line, Line, Line]  # north, east, south, west


@dataclass(frozen=True)
class SpanDims:
    """Span dimensions, computed as coordinate-point counts minus one."""

    top: int
    bottom: int
    intersection: int
    ambient: int


@dataclass(frozen=True)
class StageConfig:
    """A stage of the degeneration: two surfaces, 2ab quadrics, or 4ab planes."""

    stage: str  # "two_surfaces" | "quadrics" | "planes"
    a: int
    b: int
    cells: tuple
    lines: tuple[Line, ...]
    spans: SpanDims | None = None


def two_surface_stage(a: int, b: int) -> StageConfig:
    """First stage: the two grids as whole surfaces meeting along the
    boundary cycle of 2a + 2b lines."""
    c = build_pillow(a, b)
    boundary_lines = tuple(ln for ln in c.lines if ln.kind == BOUNDARY)
    side_vertices = {
        side: tuple(sorted({vid for (s, _, _), vid in c.grid_map.items() if s == side}))
        for side in SIDES
    }
    faces = tuple(
        GridFace(side, verts, len(verts) - 1) for side, verts in side_vertices.items()
    )
    shared = set(side_vertices["top"]) & set(side_vertices["bottom"])
    spans = SpanDims(
        top=faces[0].span_dim,
        bottom=faces[1].span_dim,
        intersection=len(shared) - 1,
        ambient=c.g,
    )
    if len(boundary_lines) != 2 * a + 2 * b or len(shared) != 2 * a + 2 * b:
        raise MalformedComplex(
            f"boundary cycle has {len(boundary_lines)} lines and {len(shared)} shared points"
        )
    return StageConfig("two_surfaces", a, b, faces, boundary_lines, spans)


def quadric_stage(a: int, b: int) -> StageConfig:
    """Second stage: remove the diagonals; 2ab rectangles remain, each
    bounded by a cycle of four lines (two horizontal, two vertical)."""
    c = build_pillow(a, b)
    by_pair = c.lines_by_pair()
    lines = tuple(ln for ln in c.lines if ln.kind != DIAGONAL)

    cells = []
    for side in SIDES:
        for i in range(1, b + 1):
            for j in range(1, a + 1):
                nw = c.grid_map[(side, i - 1, j - 1)]
                ne = c.grid_map[(side, i - 1, j)]
                se = c.grid_map[(side, i, j)]
                sw = c.grid_map[(side, i, j - 1)]
                north = by_pair[_sorted_pair(nw, ne)]
                east = by_pair[_sorted_pair(ne, se)]
                south = by_pair[_sorted_pair(sw, se)]
                west = by_pair[_sorted_pair(nw, sw)]
                corners = (nw, ne, se, sw)
                sides4 = (north, east, south, west)
                if len(set(corners)) != 4 or len(set(sides4)) != 4:
                    raise MalformedComplex(
                        f"rectangle ({side}, {i}, {j}) does not close into a 4-cycle"
                    )
                if any(ln.kind == DIAGONAL for ln in sides4):
                    raise MalformedComplex(
                        f"rectangle ({side}, {i}, {j}) is bounded by a diagonal"
                    )
                cells.append(QuadricFace(side, i, j, corners, sides4))

    if len(cells) != 2 * a * b or len(lines) != 4 * a * b:
        raise MalformedComplex(
            f"quadric stage has {len(cells)} rectangles / {len(lines)} lines, "
            f"expected {2 * a * b} / {4 * a * b}"
        )
    return StageConfig("quadrics", a, b, tuple(cells), lines)


def plane_stage(a: int, b: int) -> StageConfig:
    """Final stage: the full pillow of 4ab planes."""
    c = build_pillow(a, b)
    return StageConfig("planes", a, b, c.triangles, c.lines)


@dataclass(frozen=True)
class CupleReduction:
    """gcd bookkeeping for the re-embedding multiple: a bidegree (a, b)
    with c = gcd(a, b) > 1 is the c-fold re-embedding of (a/c, b/c)."""

    c: int
    reduced: tuple[int, int]
    primitive_multiple: int


def cuple_reduction(a: int, b: int) -> CupleReduction:
    if a < 2 or b < 2:
        raise InvalidParameter(f"bidegree parameters must both be >= 2, got ({a}, {b})")
    c = gcd(a, b)
    return CupleReduction(c, (a // c, b // c), c)


# ---------------------------------------------------------------------------
# Isomorphism of (a, b) and (b, a).


def transpose_map(c: PillowConfig, ct: PillowConfig) -> dict[int, int]:
    """Vertex bijection sending grid position (side, i, j) of ``c`` to
    (side, j, i) of ``ct``; requires ct to have the transposed bidegree."""
    if (ct.a, ct.b) != (c.b, c.a):
        raise InvalidParameter(
            f"expected bidegree ({c.b}, {c.a}) for the transpose, got ({ct.a}, {ct.b})"
        )
    mapping: dict[int, int] = {}
    for (side, i, j), vid in c.grid_map.items():
        image = ct.grid_map[(side, j, i)]
        if mapping.setdefault(vid, image) != image:
            raise MalformedComplex(f"transpose map is not well defined at vertex {vid}")
    return mapping


def is_complex_isomorphism(c: PillowConfig, other: PillowConfig,
                           vertex_map: dict[int, int]) -> bool:
    """True when the bijection carries lines to lines and triangles to triangles."""
    if sorted(vertex_map) != list(c.vertices) or sorted(vertex_map.values()) != list(other.vertices):
        return False
    other_lines = {ln.pair for ln in other.lines}
    for ln in c.lines:
        if _sorted_pair(vertex_map[ln.u], vertex_map[ln.v]) not in other_lines:
            return False
    other_tris = {tri.vertices for tri in other.triangles}
    for tri in c.triangles:
        image = tuple(sorted(vertex_map[v] for v in tri.vertices))
        if image not in other_tris:
            return False
    return True


# ---------------------------------------------------------------------------
# Exports.


def config_to_dict(c: PillowConfig) -> dict:
    """JSON-ready dict with stable ordering: vertices ascending, lines by
    endpoint pair, triangles by (side, row, col, half)."""
    return {
        "a": c.a,
        "b": c.b,
        "g": c.g,
        "vertices": list(c.vertices),
        "lines": [
            {"u": ln.u, "v": ln.v, "kind": ln.kind, "side": ln.side} for ln in c.lines
        ],
        "triangles": [
            {
                "v1": tri.vertices[0],
                "v2": tri.vertices[1],
                "v3": tri.vertices[2],
                "side": tri.side,
                "row": tri.row,
                "col": tri.col,
                "half": tri.half,
            }
            for tri in c.triangles
        ],
    }


def dot_face_adjacency(c: PillowConfig) -> str:
    """DOT graph: one node per triangle, one edge per line shared by two."""
    incidence = _line_incidence(c)
    out = ["graph face_adjacency {"]
    for tri in c.triangles:
        out.append(f'  "{tri.name}";')
    for pair in sorted(incidence):
        tris = incidence[pair]
        if len(tris) == 2:
            n1 = c.triangles[tris[0]].name
            n2 = c.triangles[tris[1]].name
            out.append(f'  "{n1}" -- "{n2}";')
    out.append("}")
    return "\n".join(out) + "\n"


def dot_line_intersection(c: PillowConfig) -> str:
    """DOT graph: one node per line, one edge per pair of lines meeting
    in a vertex."""
    out = ["graph line_intersection {"]
    for ln in c.lines:
        out.append(f'  "L{ln.u}_{ln.v}";')
    incident: dict[int, list[Line]] = {v: [] for v in c.vertices}
    for ln in c.lines:
        incident[ln.u].append(ln)
        incident[ln.v].append(ln)
    for v in c.vertices:
        at_v = sorted(incident[v])
        for idx, first in enumerate(at_v):
            for second in at_v[idx + 1:]:
                out.append(f'  "L{first.u}_{first.v}" -- "L{second.u}_{second.v}";')
    out.append("}")
    return "\n".join(out) + "\n"
