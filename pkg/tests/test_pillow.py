"""Pillow complex construction, labeling, verification, and exports."""

import pytest

from pillowdeg import (
    InvalidParameter,
    PillowConfig,
    build_pillow,
    config_to_dict,
    count_disjoint_line_pairs,
    disjoint_pairs_via_degrees,
    dot_face_adjacency,
    dot_line_intersection,
    formula_disjoint_pairs,
    is_complex_isomorphism,
    transpose_map,
    verify_sphere_triangulation,
)


class TestCounts:
    def test_2x2(self):
        c = build_pillow(2, 2)
        assert len(c.vertices) == 10
        assert len(c.lines) == 24
        assert len(c.triangles) == 16
        assert c.g == 9

    def test_2x3(self):
        c = build_pillow(2, 3)
        assert (len(c.vertices), len(c.lines), len(c.triangles)) == (14, 36, 24)
        assert c.g == 13

    @pytest.mark.parametrize("a,b", [(2, 2), (3, 2), (2, 4), (4, 4)])
    def test_count_formulas(self, a, b):
        c = build_pillow(a, b)
        g = 2 * a * b + 1
        assert len(c.vertices) == g + 1
        assert len(c.lines) == 3 * g - 3
        assert len(c.triangles) == 2 * g - 2
        # |E| = 3|F|/2 for a triangulation where every edge is in 2 faces
        assert 2 * len(c.lines) == 3 * len(c.triangles)

    def test_line_kind_counts(self):
        a, b = 3, 2
        c = build_pillow(a, b)
        kinds = {}
        for ln in c.lines:
            kinds[ln.kind] = kinds.get(ln.kind, 0) + 1
        assert kinds == {
            "boundary": 2 * a + 2 * b,
            "horizontal": 2 * a * (b - 1),
            "vertical": 2 * b * (a - 1),
            "diagonal": 2 * a * b,
        }

    @pytest.mark.parametrize("a,b", [(1, 5), (5, 1), (0, 0), (2, 1)])
    def test_rejects_small_parameters(self, a, b):
        with pytest.raises(InvalidParameter):
            build_pillow(a, b)


class TestLabeling:
    """The fixed conventions: clockwise boundary from the top-left corner,
    row-major interiors, rising diagonals on top and falling on bottom."""

    def test_boundary_corners(self):
        a, b = 3, 5
        c = build_pillow(a, b)
        grid = c.grid_map
        assert grid[("top", 0, 0)] == 1
        assert grid[("top", 0, a)] == a + 1
        assert grid[("top", b, a)] == a + b + 1
        assert grid[("top", b, 0)] == 2 * a + b + 1
        assert c.corner_ids == (1, a + 1, a + b + 1, 2 * a + b + 1)

    def test_boundary_is_clockwise_consecutive(self):
        a, b = 4, 3
        c = build_pillow(a, b)
        grid = c.grid_map
        # top edge left to right, then right edge downward
        assert [grid[("top", 0, j)] for j in range(a + 1)] == list(range(1, a + 2))
        assert [grid[("top", i, a)] for i in range(b + 1)] == list(range(a + 1, a + b + 2))
        # bottom edge right to left, then left edge upward ending just below 1
        assert [grid[("top", b, j)] for j in range(a, -1, -1)] == list(
            range(a + b + 1, 2 * a + b + 2)
        )
        assert grid[("top", 1, 0)] == 2 * a + 2 * b

    def test_interior_label_ranges(self):
        a, b = 3, 4
        c = build_pillow(a, b)
        top_interior = {
            vid for (side, i, j), vid in c.grid_map.items()
            if side == "top" and 0 < i < b and 0 < j < a
        }
        bottom_interior = {
            vid for (side, i, j), vid in c.grid_map.items()
            if side == "bottom" and 0 < i < b and 0 < j < a
        }
        assert len(top_interior) == (a - 1) * (b - 1)
        assert len(bottom_interior) == (a - 1) * (b - 1)
        assert top_interior == set(range(2 * a + 2 * b + 1, a * b + a + b + 2))
        assert bottom_interior == set(range(a * b + a + b + 2, 2 * a * b + 3))

    def test_interior_labels_row_major(self):
        a, b = 4, 3
        c = build_pillow(a, b)
        base = 2 * a + 2 * b
        assert c.grid_map[("top", 1, 1)] == base + 1
        assert c.grid_map[("top", 1, 2)] == base + 2
        assert c.grid_map[("top", 2, 1)] == base + (a - 1) + 1

    def test_boundary_shared_between_sides(self):
        c = build_pillow(3, 2)
        for (side, i, j), vid in c.grid_map.items():
            if i in (0, c.b) or j in (0, c.a):
                assert c.grid_map[("bottom" if side == "top" else "top", i, j)] == vid

    def test_diagonal_orientations(self):
        a, b = 3, 2
        c = build_pillow(a, b)
        pairs = {ln.pair for ln in c.lines if ln.kind == "diagonal" and ln.side == "top"}
        grid = c.grid_map
        rising = tuple(sorted((grid[("top", 1, 0)], grid[("top", 0, 1)])))
        assert rising in pairs
        pairs_bottom = {ln.pair for ln in c.lines if ln.kind == "diagonal" and ln.side == "bottom"}
        falling = tuple(sorted((grid[("bottom", 0, 0)], grid[("bottom", 1, 1)])))
        assert falling in pairs_bottom


class TestSphereTriangulation:
    @pytest.mark.parametrize("a,b", [(2, 2), (3, 3), (5, 4)])
    def test_all_checks_pass(self, a, b):
        report = verify_sphere_triangulation(build_pillow(a, b))
        assert report.all_passed, str(report)

    def test_degree_census_5x4(self):
        c = build_pillow(5, 4)
        degrees = c.line_degrees()
        assert sum(1 for d in degrees.values() if d == 3) == 4
        assert sum(1 for d in degrees.values() if d == 6) == 2 * 5 * 4 - 2
        assert sum(degrees.values()) == 2 * len(c.lines)

    def test_deleted_triangle_breaks_closure(self):
        c = build_pillow(2, 2)
        broken = PillowConfig(c.a, c.b, c.vertices, c.lines, c.triangles[:-1], c.grid_map)
        report = verify_sphere_triangulation(broken)
        assert not report["line_in_two_triangles"].passed
        assert not report["vertex_link_single_cycle"].passed
        assert not report["euler_characteristic"].passed
        # the remaining faces still hang together
        assert report["face_adjacency_connected"].passed

    def test_no_two_triangles_share_two_lines(self):
        c = build_pillow(3, 3)
        tris = [set(t.edge_pairs()) for t in c.triangles]
        for i in range(len(tris)):
            for j in range(i + 1, len(tris)):
                assert len(tris[i] & tris[j]) <= 1

    def test_lines_are_unique_vertex_pairs(self):
        c = build_pillow(4, 3)
        pairs = [ln.pair for ln in c.lines]
        assert len(pairs) == len(set(pairs)) == 6 * 4 * 3

    def test_sides_share_exactly_the_boundary(self):
        c = build_pillow(3, 2)
        boundary = set(c.boundary_ids)
        for ln in c.lines:
            assert (ln.side == "shared") == (ln.kind == "boundary")
            if ln.side == "shared":
                assert {ln.u, ln.v} <= boundary
        top_verts = {v for ln in c.lines if ln.side == "top" for v in (ln.u, ln.v)}
        bottom_verts = {v for ln in c.lines if ln.side == "bottom" for v in (ln.u, ln.v)}
        assert top_verts & bottom_verts <= boundary


class TestDisjointPairs:
    def test_g9_frozen(self):
        c = build_pillow(2, 2)
        assert count_disjoint_line_pairs(c) == 174
        assert disjoint_pairs_via_degrees(c) == 174
        assert formula_disjoint_pairs(9) == 174

    def test_g13_frozen(self):
        assert count_disjoint_line_pairs(build_pillow(2, 3)) == 468
        assert formula_disjoint_pairs(13) == 468

    @pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (3, 3), (2, 4), (4, 3)])
    def test_three_routes_agree(self, a, b):
        c = build_pillow(a, b)
        brute = count_disjoint_line_pairs(c)
        assert brute == formula_disjoint_pairs(c.g)
        assert brute == disjoint_pairs_via_degrees(c)

    def test_formula_rejects_bad_g(self):
        with pytest.raises(InvalidParameter):
            formula_disjoint_pairs(8)
        with pytest.raises(InvalidParameter):
            formula_disjoint_pairs(7)

    def test_formula_integral_for_odd_g(self):
        # 9g^2 - 51g + 78 is even for every odd g (indeed for every g)
        for g in range(9, 200, 2):
            assert (9 * g * g - 51 * g + 78) % 2 == 0
            assert formula_disjoint_pairs(g) == (9 * g * g - 51 * g + 78) // 2


class TestTransposeIsomorphism:
    @pytest.mark.parametrize("a,b", [(2, 3), (3, 2), (2, 2), (4, 2), (5, 3)])
    def test_transpose_is_isomorphism(self, a, b):
        c = build_pillow(a, b)
        ct = build_pillow(b, a)
        mapping = transpose_map(c, ct)
        assert is_complex_isomorphism(c, ct, mapping)

    def test_transpose_requires_matching_bidegree(self):
        with pytest.raises(InvalidParameter):
            transpose_map(build_pillow(2, 3), build_pillow(2, 3))

    def test_non_isomorphism_detected(self):
        c = build_pillow(2, 3)
        ct = build_pillow(3, 2)
        mapping = transpose_map(c, ct)
        # swap two images; lines no longer map to lines
        mapping[1], mapping[2] = mapping[2], mapping[1]
        assert not is_complex_isomorphism(c, ct, mapping)


class TestExports:
    def test_json_dict_schema_and_order(self):
        c = build_pillow(2, 2)
        doc = config_to_dict(c)
        assert list(doc) == ["a", "b", "g", "vertices", "lines", "triangles"]
        assert doc["vertices"] == sorted(doc["vertices"])
        line_pairs = [(ln["u"], ln["v"]) for ln in doc["lines"]]
        assert line_pairs == sorted(line_pairs)
        assert all(u < v for u, v in line_pairs)
        tri_keys = [
            (t["side"], t["row"], t["col"], t["half"]) for t in doc["triangles"]
        ]
        order = {"top": 0, "bottom": 1}
        half_order = {"lower": 0, "upper": 1}
        sort_keys = [(order[s], r, c_, half_order[h]) for s, r, c_, h in tri_keys]
        assert sort_keys == sorted(sort_keys)
        assert all(set(t) == {"v1", "v2", "v3", "side", "row", "col", "half"}
                   for t in doc["triangles"])

    def test_dot_face_adjacency_counts(self):
        c = build_pillow(3, 3)
        dot = dot_face_adjacency(c)
        lines = dot.splitlines()
        nodes = [ln for ln in lines if ln.endswith('";') and " -- " not in ln]
        edges = [ln for ln in lines if " -- " in ln]
        assert len(nodes) == 4 * 3 * 3
        assert len(edges) == 6 * 3 * 3
        assert '"top_r1_c1_lower"' in dot

    def test_dot_line_intersection_counts(self):
        c = build_pillow(2, 2)
        dot = dot_line_intersection(c)
        lines = dot.splitlines()
        nodes = [ln for ln in lines if ln.endswith('";') and " -- " not in ln]
        edges = [ln for ln in lines if " -- " in ln]
        assert len(nodes) == 24
        # meeting pairs: sum of C(deg, 2) = 4*C(3,2) + 6*C(6,2)
        assert len(edges) == 4 * 3 + 6 * 15

    def test_exports_deterministic(self):
        d1 = dot_face_adjacency(build_pillow(2, 3))
        d2 = dot_face_adjacency(build_pillow(2, 3))
        assert d1 == d2
        j1 = config_to_dict(build_pillow(2, 3))
        j2 = config_to_dict(build_pillow(2, 3))
        assert j1 == j2
