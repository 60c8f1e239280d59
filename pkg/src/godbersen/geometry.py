"""Exact rational polytopes and their primitive operations.

Everything here is exact: vertices are tuples of Fractions, facet normals are
unnormalized coprime integer vectors, and unit normals are never formed.  In
place of the Euclidean facet area we carry the scaled measure
``mu = area / |normal|``, which is rational for rational polytopes and is
exactly the weight that turns ``support * mu`` sums into surface-area-measure
integrals.

Hull facets of raw point sets are enumerated by brute force over d-subsets
with exact orientation tests (fine at input scale).  Minkowski sums avoid the
combinatorial blowup of hulling all pairwise vertex sums: every facet normal
of ``K + L`` is orthogonal to n-1 independent edge directions of the two
summands, so candidate normals are enumerated from edge-direction subsets and
verified exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import DegenerateInput, DimensionMismatch, SingularMatrix, ZeroDirection
from .linalg import (
    affine_rank,
    det,
    int_det,
    int_rank,
    normal_to_span,
    primitive,
    scale_to_integers,
    solve_linear,
)
from .rationals import Matrix, Point, Rat, as_rat, as_vector, dot, is_zero_vector


class Facet:
    """One facet: outward integer normal, offset, scaled measure, vertex ids.

    The facet lies in {x . normal = offset}; every polytope vertex satisfies
    x . normal <= offset.  ``measure`` is the Euclidean (n-1)-area divided by
    the Euclidean length of ``normal``.
    """

    __slots__ = ("normal", "offset", "measure", "vertex_ids")

    def __init__(self, normal: tuple[int, ...], offset: Fraction, measure: Fraction,
                 vertex_ids: tuple[int, ...]):
        self.normal = normal
        self.offset = offset
        self.measure = measure
        self.vertex_ids = vertex_ids

    def __repr__(self):
        return f"Facet(normal={self.normal}, offset={self.offset}, measure={self.measure})"

    def __eq__(self, other):
        return (isinstance(other, Facet)
                and self.normal == other.normal
                and self.offset == other.offset)

    def __hash__(self):
        return hash((self.normal, self.offset))


class Polytope:
    """Full-dimensional bounded rational polytope.

    Immutable after construction.  Vertices are sorted lexicographically and
    irredundant; facets are sorted lexicographically by normal.  Volume,
    centroid and an exact simplicial decomposition are precomputed so that
    downstream machinery (sections, mixed volumes) can reuse them.
    """

    __slots__ = ("dim", "vertices", "facets", "volume", "centroid",
                 "_simplices", "_int_vertices", "_int_scale", "_edge_cache")

    def __init__(self, dim, vertices, facets, volume, centroid, simplices,
                 int_vertices, int_scale):
        self.dim = dim
        self.vertices = vertices
        self.facets = facets
        self.volume = volume
        self.centroid = centroid
        self._simplices = simplices
        self._int_vertices = int_vertices
        self._int_scale = int_scale
        self._edge_cache = None

    def __repr__(self):
        return (f"Polytope(dim={self.dim}, vertices={len(self.vertices)}, "
                f"facets={len(self.facets)}, volume={self.volume})")

    def __eq__(self, other):
        return (isinstance(other, Polytope) and self.dim == other.dim
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def edges(self) -> list[tuple[int, int]]:
        """Vertex-index pairs forming 1-faces, from facet incidence."""
        if self._edge_cache is None:
            self._edge_cache = _edge_pairs(self)
        return self._edge_cache

    def edge_directions(self) -> list[tuple[int, ...]]:
        """Primitive integer edge directions, sign-normalized, deduplicated."""
        dirs = set()
        for i, j in self.edges():
            d = primitive(tuple(a - b for a, b in
                                zip(self._int_vertices[i], self._int_vertices[j])))
            dirs.add(_lex_positive(d))
        return sorted(dirs)


def _lex_positive(vec: tuple[int, ...]) -> tuple[int, ...]:
    for c in vec:
        if c > 0:
            return vec
        if c < 0:
            return tuple(-x for x in vec)
    return vec


def _idot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _hull_facets_int(pts: list[tuple[int, ...]], d: int):
    """Facets of conv(pts) in R^d as (normal, offset, ids of points on it).

    Brute force over d-subsets with exact orientation tests; coplanar subsets
    merge because facets are keyed by the coprime-integer normal and offset.
    Assumes the points affinely span R^d.
    """
    m = len(pts)
    if d == 1:
        xs = [p[0] for p in pts]
        lo, hi = min(xs), max(xs)
        if lo == hi:
            raise DegenerateInput("all points coincide")
        return [((-1,), -lo, tuple(i for i, x in enumerate(xs) if x == lo)),
                ((1,), hi, tuple(i for i, x in enumerate(xs) if x == hi))]
    tested: set = set()
    found: dict = {}
    for subset in combinations(range(m), d):
        base = pts[subset[0]]
        rows = [tuple(pts[i][c] - base[c] for c in range(d)) for i in subset[1:]]
        w = normal_to_span(rows, d)
        if all(c == 0 for c in w):
            continue
        b = _idot(w, base)
        key = (w, b) if _lex_positive(w) == w else (tuple(-c for c in w), -b)
        if key in tested:
            continue
        tested.add(key)
        above = below = False
        for p in pts:
            s = _idot(w, p) - b
            if s > 0:
                above = True
            elif s < 0:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if not above and not below:
            raise DegenerateInput("points do not span the ambient space")
        if above:
            w = tuple(-c for c in w)
            b = -b
        ids = tuple(i for i, p in enumerate(pts) if _idot(w, p) == b)
        found[(w, b)] = ids
    return sorted((w, b, ids) for (w, b), ids in found.items())


def _triangulate_points(pts: list[tuple[int, ...]], d: int) -> list[tuple[int, ...]]:
    """Exact simplicial decomposition of conv(pts), as point-index tuples.

    Pyramid fan from pts[0] over the facets not containing it; each facet is
    triangulated recursively in the coordinate projection that drops the
    largest normal component.
    """
    if d == 1:
        xs = [p[0] for p in pts]
        return [(xs.index(min(xs)), xs.index(max(xs)))]
    simplices = []
    for w, b, ids in _hull_facets_int(pts, d):
        if 0 in ids:
            continue
        k = max(range(d), key=lambda i: abs(w[i]))
        sub = [tuple(pts[i][c] for c in range(d) if c != k) for i in ids]
        for s in _triangulate_points(sub, d - 1):
            simplices.append((0,) + tuple(ids[i] for i in s))
    return simplices


def _simplex_int_volume(pts, simplex, d: int) -> int:
    base = pts[simplex[0]]
    rows = [[pts[i][c] - base[c] for c in range(d)] for i in simplex[1:]]
    return abs(int_det(rows))


def _assemble(dim: int, vertices: tuple[Point, ...],
              facet_specs: list[tuple[tuple[int, ...], Fraction, tuple[int, ...]]]) -> Polytope:
    """Build a Polytope from sorted vertices and facet (normal, offset, ids).

    Computes scaled facet measures, a fan triangulation, exact volume and
    centroid.  Callers guarantee the data describes a genuine full-dimensional
    polytope with irredundant vertices.
    """
    ipts, mult = scale_to_integers(vertices)
    facet_specs = sorted(facet_specs)
    facets = []
    fan: list[tuple[int, ...]] = []
    fact = factorial(dim - 1) if dim > 1 else 1
    for w, b, vids in facet_specs:
        if dim == 1:
            measure = Fraction(1)
        else:
            k = max(range(dim), key=lambda i: abs(w[i]))
            sub = [tuple(ipts[i][c] for c in range(dim) if c != k) for i in vids]
            tri = _triangulate_points(sub, dim - 1)
            raw = sum(_simplex_int_volume(sub, s, dim - 1) for s in tri)
            measure = Fraction(raw, fact * mult ** (dim - 1) * abs(w[k]))
            if 0 not in vids:
                fan.extend((0,) + tuple(vids[i] for i in s) for s in tri)
        facets.append(Facet(w, b, measure, vids))
    if dim == 1:
        fan = [(0, len(vertices) - 1)]
    total = Fraction(0)
    cx = [Fraction(0)] * dim
    nfact = factorial(dim)
    scale_pow = mult ** dim
    for s in fan:
        v = Fraction(_simplex_int_volume(ipts, s, dim), nfact * scale_pow)
        if v == 0:
            continue
        total += v
        for c in range(dim):
            cx[c] += v * sum(vertices[i][c] for i in s)
    if total <= 0:
        raise DegenerateInput("assembled polytope has zero volume")
    centroid = tuple(x / (total * (dim + 1)) for x in cx)
    return Polytope(dim, vertices, tuple(facets), total, centroid, tuple(fan),
                    ipts, mult)


def build_hull(points) -> Polytope:
    """Convex hull of rational points; must affinely span the ambient space.

    Redundant input points are dropped; the result carries the full facet
    structure with outward coprime-integer normals, exact offsets and scaled
    measures, facets ordered lexicographically by normal.
    """
    pts = [as_vector(p) for p in points]
    if not pts:
        raise DegenerateInput("no points given")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of mixed dimension")
    uniq: list[Point] = sorted(set(pts))
    if len(uniq) < n + 1 or affine_rank(uniq) < n:
        raise DegenerateInput(f"points do not span R^{n}")
    ipts, mult = scale_to_integers(uniq)
    raw_facets = _hull_facets_int(ipts, n)
    incident: list[list[int]] = [[] for _ in uniq]
    for fi, (w, b, ids) in enumerate(raw_facets):
        for i in ids:
            incident[i].append(fi)
    is_vertex = []
    for i in range(len(uniq)):
        if len(incident[i]) < n:
            is_vertex.append(False)
            continue
        normals = [raw_facets[fi][0] for fi in incident[i]]
        is_vertex.append(int_rank(normals) == n)
    old_to_new = {}
    vertices = []
    for i, keep in enumerate(is_vertex):
        if keep:
            old_to_new[i] = len(vertices)
            vertices.append(uniq[i])
    specs = []
    for w, b, ids in raw_facets:
        vids = tuple(sorted(old_to_new[i] for i in ids if i in old_to_new))
        specs.append((w, Fraction(b, mult), vids))
    return _assemble(n, tuple(vertices), specs)


def support(K: Polytope, w) -> Rat:
    """Support value max{x . w : x in K}; homogeneous of degree 1 in w."""
    v = as_vector(w)
    if len(v) != K.dim:
        raise DimensionMismatch(f"direction has length {len(v)}, body has dim {K.dim}")
    if is_zero_vector(v):
        raise ZeroDirection("support direction must be nonzero")
    return max(dot(v, p) for p in K.vertices)


def _argmax_face(K: Polytope, w) -> list[int]:
    vals = [dot(w, p) for p in K.vertices]
    best = max(vals)
    return [i for i, x in enumerate(vals) if x == best]


def _edge_pairs(K: Polytope) -> list[tuple[int, int]]:
    n = K.dim
    incident = [set() for _ in K.vertices]
    for fi, f in enumerate(K.facets):
        for v in f.vertex_ids:
            incident[v].add(fi)
    pairs = []
    for i, j in combinations(range(len(K.vertices)), 2):
        common = incident[i] & incident[j]
        if len(common) < n - 1:
            continue
        normals = [K.facets[fi].normal for fi in common]
        if int_rank(normals) == n - 1:
            pairs.append((i, j))
    return pairs


def transform(K: Polytope, mat=None, shift=None) -> Polytope:
    """Image of K under x -> A x + t for invertible rational A.

    Positive multiples of the identity take a fast path that reuses all the
    cached structure; any other invertible map remaps vertices and facet
    normals (inverse-transpose rule) and reassembles measures exactly.
    """
    n = K.dim
    a: Matrix | None = None
    if mat is not None:
        a = tuple(tuple(as_rat(c) for c in row) for row in mat)
        if len(a) != n or any(len(r) != n for r in a):
            raise DimensionMismatch("matrix shape does not match the body")
    t = tuple(as_rat(c) for c in shift) if shift is not None else (Fraction(0),) * n
    if len(t) != n:
        raise DimensionMismatch("translation length does not match the body")

    c = _positive_scalar_matrix(a, n)
    if c is not None:
        vertices = tuple(tuple(c * x + s for x, s in zip(p, t)) for p in K.vertices)
        ipts, mult = scale_to_integers(vertices)
        facets = tuple(
            Facet(f.normal, c * f.offset + dot(f.normal, t),
                  f.measure * c ** (n - 1), f.vertex_ids)
            for f in K.facets)
        volume = K.volume * c ** n
        centroid = tuple(c * x + s for x, s in zip(K.centroid, t))
        return Polytope(n, vertices, facets, volume, centroid, K._simplices,
                        ipts, mult)

    if a is None:
        a = tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))
    if det(a) == 0:
        raise SingularMatrix("transform matrix is singular")
    at = tuple(tuple(a[r][col] for r in range(n)) for col in range(n))
    mapped = [tuple(sum(a[r][col] * p[col] for col in range(n)) + t[r] for r in range(n))
              for p in K.vertices]
    order = sorted(range(len(mapped)), key=lambda i: mapped[i])
    new_index = {old: new for new, old in enumerate(order)}
    vertices = tuple(mapped[i] for i in order)
    specs = []
    for f in K.facets:
        wprime = solve_linear(at, f.normal)
        w_int, _ = scale_to_integers([wprime])
        w = primitive(w_int[0])
        vids = tuple(sorted(new_index[i] for i in f.vertex_ids))
        offset = dot(w, vertices[vids[0]])
        specs.append((w, offset, vids))
    return _assemble(n, vertices, specs)


def _positive_scalar_matrix(a, n: int):
    """Return c when the matrix is c*I with c > 0 (None matrix means I)."""
    if a is None:
        return Fraction(1)
    c = a[0][0]
    if c <= 0:
        return None
    for i in range(n):
        for j in range(n):
            if a[i][j] != (c if i == j else 0):
                return None
    return c


def translate(K: Polytope, t) -> Polytope:
    return transform(K, None, t)


def scale(K: Polytope, c) -> Polytope:
    n = K.dim
    cc = as_rat(c)
    mat = tuple(tuple(cc if i == j else Fraction(0) for j in range(n)) for i in range(n))
    return transform(K, mat, None)


def reflect(K: Polytope) -> Polytope:
    return scale(K, -1)


def minkowski_sum(K: Polytope, L) -> Polytope:
    """Minkowski sum; the second argument may be a polytope or a single point.

    Equals the hull of all pairwise vertex sums.  Facet normals are found from
    (n-1)-subsets of the summands' edge directions (every facet of a sum is
    spanned by edges of the summands), which sidesteps hulling the quadratic
    point cloud; each candidate is verified exactly.
    """
    if not isinstance(L, Polytope):
        return translate(K, as_vector(L, K.dim))
    n = K.dim
    if L.dim != n:
        raise DimensionMismatch(f"cannot add bodies of dim {K.dim} and {L.dim}")
    if n == 1:
        return build_hull([(u[0] + v[0],) for u in K.vertices for v in L.vertices])

    dirs = sorted(set(K.edge_directions()) | set(L.edge_directions()))
    seen_lines: set = set()
    facets: dict[tuple[int, ...], tuple[Fraction, list[Point]]] = {}
    for combo in combinations(dirs, n - 1):
        w = normal_to_span(list(combo), n)
        if all(c == 0 for c in w):
            continue
        line = _lex_positive(w)
        if line in seen_lines:
            continue
        seen_lines.add(line)
        for cand in (line, tuple(-c for c in line)):
            face_k = _argmax_face(K, cand)
            face_l = _argmax_face(L, cand)
            rows = [tuple(a - b for a, b in zip(K._int_vertices[i], K._int_vertices[face_k[0]]))
                    for i in face_k[1:]]
            rows += [tuple(a - b for a, b in zip(L._int_vertices[i], L._int_vertices[face_l[0]]))
                     for i in face_l[1:]]
            if int_rank(rows) != n - 1:
                continue
            offset = dot(cand, K.vertices[face_k[0]]) + dot(cand, L.vertices[face_l[0]])
            pts = {tuple(x + y for x, y in zip(K.vertices[i], L.vertices[j]))
                   for i in face_k for j in face_l}
            facets[cand] = (offset, sorted(pts))

    sums = sorted({tuple(x + y for x, y in zip(u, v))
                   for u in K.vertices for v in L.vertices})
    facet_list = sorted(facets.items())
    incident: list[list[int]] = [[] for _ in sums]
    for fi, (w, (offset, _)) in enumerate(facet_list):
        for i, p in enumerate(sums):
            val = dot(w, p)
            if val > offset:
                raise DegenerateInput("sum point escapes a claimed facet")
            if val == offset:
                incident[i].append(fi)
    old_to_new = {}
    vertices: list[Point] = []
    for i, p in enumerate(sums):
        if len(incident[i]) < n:
            continue
        normals = [facet_list[fi][0] for fi in incident[i]]
        if int_rank(normals) == n:
            old_to_new[i] = len(vertices)
            vertices.append(p)
    specs = []
    for fi, (w, (offset, _)) in enumerate(facet_list):
        vids = tuple(sorted(old_to_new[i] for i in range(len(sums))
                            if fi in incident[i] and i in old_to_new))
        specs.append((w, offset, vids))
    return _assemble(n, tuple(vertices), specs)


def volume(K: Polytope) -> Rat:
    """Exact n-volume (precomputed from the simplicial decomposition)."""
    return K.volume


def centroid(K: Polytope) -> Point:
    """Exact volume-weighted centroid."""
    return K.centroid


def includes(outer: Polytope, inner: Polytope) -> bool:
    """True iff every vertex of inner satisfies every facet inequality of outer."""
    if outer.dim != inner.dim:
        raise DimensionMismatch("bodies live in different dimensions")
    return all(dot(f.normal, p) <= f.offset
               for f in outer.facets for p in inner.vertices)


def contains_point(K: Polytope, p) -> bool:
    """Exact membership test for a single point."""
    v = as_vector(p, K.dim)
    return all(dot(f.normal, v) <= f.offset for f in K.facets)
