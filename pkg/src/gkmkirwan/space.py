"""Hamiltonian torus spaces presented by fixed-point (GKM) data, and moment polytope geometry.

A space is a list of isolated fixed points, each with its moment image and the
isotropy weights of its tangent space, together with the edges of the GKM
1-skeleton.  Weights and moment images are written in one chosen basis of the
torus Lie algebra and its dual.

Spaces whose weights are not pairwise independent (diagonal actions on
products, restrictions to a circle, ...) are not GKM: edge divisibility alone
over-counts their equivariant cohomology.  Such a space may carry a ``lift``:
the same fixed points and edges under a larger torus for which the data *is*
GKM, plus the inclusion of the smaller torus.  Classes are then obtained by
restricting the lifted ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import (
    LinalgError,
    canonical_sign,
    dot,
    in_convex_hull,
    integer_normal,
    primitive,
    rank as matrix_rank,
    to_fraction,
)

IntVec = Tuple[int, ...]
RatVec = Tuple[Fraction, ...]


class SpaceError(ValueError):
    """Malformed or inconsistent space data."""


@dataclass(frozen=True)
class TorusAction:
    rank: int
    names: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise SpaceError("torus rank must be at least 1")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(self.rank)))
        if len(self.names) != self.rank:
            raise SpaceError("need one variable name per torus coordinate")


@dataclass(frozen=True)
class FixedPoint:
    name: str
    moment: RatVec
    weights: Tuple[IntVec, ...]

    def __post_init__(self):
        object.__setattr__(self, "moment", tuple(to_fraction(v) for v in self.moment))
        object.__setattr__(self, "weights", tuple(tuple(int(x) for x in w) for w in self.weights))


@dataclass(frozen=True)
class GKMEdge:
    source: str
    target: str
    weight: IntVec

    def __post_init__(self):
        object.__setattr__(self, "weight", tuple(int(x) for x in self.weight))


@dataclass(frozen=True)
class Subtorus:
    """A subtorus T of G, given by a d x r integer matrix whose columns span t inside g."""

    inclusion: Tuple[IntVec, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.inclusion)
        object.__setattr__(self, "inclusion", rows)
        if not rows or not rows[0]:
            raise SpaceError("empty inclusion matrix")
        if len({len(r) for r in rows}) != 1:
            raise SpaceError("ragged inclusion matrix")
        if self.rank > self.ambient_rank:
            raise SpaceError("subtorus rank exceeds torus rank")
        cols = [[rows[i][j] for i in range(len(rows))] for j in range(len(rows[0]))]
        if matrix_rank(cols) != len(cols):
            raise SpaceError("inclusion matrix must have full column rank")

    @classmethod
    def full(cls, d: int) -> "Subtorus":
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @classmethod
    def circle(cls, direction: Sequence[int]) -> "Subtorus":
        return cls(tuple((int(v),) for v in direction))

    @property
    def ambient_rank(self) -> int:
        return len(self.inclusion)

    @property
    def rank(self) -> int:
        return len(self.inclusion[0])

    @property
    def is_full(self) -> bool:
        return self.rank == self.ambient_rank

    @property
    def is_identity(self) -> bool:
        return self == Subtorus.full(self.ambient_rank)

    def push(self, xi: Sequence) -> RatVec:
        """Image in g of a vector in t."""
        if len(xi) != self.rank:
            raise SpaceError(f"direction has length {len(xi)}, subtorus rank is {self.rank}")
        return tuple(dot(row, xi) for row in self.inclusion)

    def project(self, y: Sequence) -> RatVec:
        """Image in t* of a vector in g* (transpose of the inclusion)."""
        if len(y) != self.ambient_rank:
            raise SpaceError(f"vector has length {len(y)}, torus rank is {self.ambient_rank}")
        return tuple(
            sum((to_fraction(y[i]) * self.inclusion[i][j] for i in range(len(y))), Fraction(0))
            for j in range(self.rank)
        )


@dataclass(frozen=True)
class Lift:
    space: "GKMSpace"
    inclusion: Tuple[IntVec, ...]

    def __post_init__(self):
        object.__setattr__(self, "inclusion", tuple(tuple(int(x) for x in r) for r in self.inclusion))


@dataclass(frozen=True)
class ProductInfo:
    """Provenance of a product space: its two factors and the point pairing."""

    left: "GKMSpace"
    right: "GKMSpace"
    dilation: Fraction
    pairs: Tuple[Tuple[str, str], ...]


@dataclass(frozen=True, eq=False)
class GKMSpace:
    action: TorusAction
    points: Tuple[FixedPoint, ...]
    edges: Tuple[GKMEdge, ...]
    complex_dim: int
    lift: Optional[Lift] = None
    factors: Optional[ProductInfo] = None
    label: str = ""
    _memo: Dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "edges", tuple(self.edges))
        names = [p.name for p in self.points]
        if len(set(names)) != len(names):
            raise SpaceError("fixed point names must be unique")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    # lookups ---------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.action.rank

    @property
    def real_dim(self) -> int:
        return 2 * self.complex_dim

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(p.name for p in self.points)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SpaceError(f"unknown fixed point {name!r}") from None

    def point(self, name: str) -> FixedPoint:
        return self.points[self.index(name)]

    def moment_value(self, name: str, xi: Sequence) -> Fraction:
        return dot(self.point(name).moment, xi)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, GKMSpace):
            return NotImplemented
        return (
            self.action == other.action
            and self.points == other.points
            and self.edges == other.edges
            and self.complex_dim == other.complex_dim
            and self.lift == other.lift
        )

    def __hash__(self) -> int:
        return hash((self.action, self.points, self.edges, self.complex_dim))

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"<GKMSpace{tag} rank={self.rank} points={len(self.points)} edges={len(self.edges)}>"


@dataclass(frozen=True)
class Wall:
    normal: IntVec
    offset: Fraction
    support: Tuple[str, ...]


# --------------------------------------------------------------------------
# validation


def _parallel(u: Sequence, v: Sequence) -> bool:
    return matrix_rank([list(u), list(v)], len(u)) <= 1


def _positive_multiple(u: Sequence, v: Sequence) -> Optional[Fraction]:
    """c with u = c*v (v nonzero), or None."""
    if not _parallel(u, v):
        return None
    for a, b in zip(u, v):
        if b != 0:
            return Fraction(a) / b
    return None


def validate(space: GKMSpace) -> List[str]:
    """Every violated invariant, one message per violation; empty when the data is consistent."""
    out: List[str] = []
    d = space.rank
    n = space.complex_dim
    if n < 0:
        out.append("complex_dim must be non-negative")
    for p in space.points:
        if len(p.moment) != d:
            out.append(f"moment image of {p.name} has length {len(p.moment)}, expected {d}")
        if len(p.weights) != n:
            out.append(f"{p.name} has {len(p.weights)} weights, expected {n}")
        for w in p.weights:
            if len(w) != d:
                out.append(f"weight {w} at {p.name} has length {len(w)}, expected {d}")
            elif all(x == 0 for x in w):
                out.append(f"zero weight at {p.name}")
    seen = set()
    for e in space.edges:
        tag = f"edge {e.source}-{e.target}"
        if e.source not in space._index or e.target not in space._index:
            out.append(f"{tag}: unknown endpoint")
            continue
        if e.source == e.target:
            out.append(f"{tag}: loop")
            continue
        key = frozenset((e.source, e.target))
        if key in seen:
            out.append(f"{tag}: duplicate edge")
        seen.add(key)
        if len(e.weight) != d or all(x == 0 for x in e.weight):
            out.append(f"{tag}: weight {e.weight} is zero or has the wrong length")
            continue
        try:
            if primitive(e.weight) != e.weight:
                out.append(f"{tag}: weight {e.weight} is not primitive")
        except LinalgError:
            pass
        p, q = space.point(e.source), space.point(e.target)
        for end in (p, q):
            if not any(len(w) == d and any(w) and _parallel(w, e.weight) for w in end.weights):
                out.append(f"{tag}: weight {e.weight} does not occur (up to sign) at {end.name}")
        if len(p.moment) == d and len(q.moment) == d:
            seg = [b - a for a, b in zip(p.moment, q.moment)]
            if all(v == 0 for v in seg):
                out.append(f"{tag}: endpoints have the same moment image")
            elif not _parallel(seg, e.weight):
                out.append(f"{tag}: moment segment {tuple(map(str, seg))} is not parallel to weight {e.weight}")
            else:
                # the weight at an endpoint along the edge points into the edge
                for end, direction in ((p, seg), (q, [-v for v in seg])):
                    along = [w for w in end.weights if any(w) and len(w) == d and _parallel(w, e.weight)]
                    if along and not any(_positive_multiple(direction, w) > 0 for w in along):
                        out.append(f"{tag}: no weight at {end.name} points along the edge")
    if space.lift is not None:
        out.extend(_validate_lift(space))
    return out


def _validate_lift(space: GKMSpace) -> List[str]:
    out = []
    lift = space.lift
    big = lift.space
    try:
        sub = Subtorus(lift.inclusion)
    except SpaceError as exc:
        return [f"lift: {exc}"]
    if sub.ambient_rank != big.rank or sub.rank != space.rank:
        return ["lift: inclusion matrix shape does not match the ranks"]
    if big.names != space.names:
        return ["lift: fixed points differ from the space's"]
    for p, P in zip(space.points, big.points):
        if sub.project(P.moment) != p.moment:
            out.append(f"lift: moment image of {p.name} is not the projection of the lifted one")
        if sorted(tuple(sub.project(w)) for w in P.weights) != sorted(tuple(map(Fraction, w)) for w in p.weights):
            out.append(f"lift: weights at {p.name} are not the projections of the lifted ones")
    out.extend(f"lift: {msg}" for msg in validate(big))
    return out


def space_warnings(space: GKMSpace) -> List[str]:
    """Non-fatal observations: valence and pairwise independence of weights."""
    out = []
    n = space.complex_dim
    deg = {p.name: 0 for p in space.points}
    for e in space.edges:
        if e.source in deg and e.target in deg:
            deg[e.source] += 1
            deg[e.target] += 1
    for name, k in deg.items():
        if k != n and len(space.points) > 1:
            out.append(f"{name} has {k} incident edges; a GKM graph is {n}-valent")
    if space.lift is None and not is_gkm(space):
        out.append("weights are not pairwise independent and no lift is given; "
                   "edge conditions may over-count equivariant cohomology")
    return out


def is_gkm(space: GKMSpace) -> bool:
    """Weights at every fixed point pairwise linearly independent."""
    for p in space.points:
        for a, b in combinations(p.weights, 2):
            if _parallel(a, b):
                return False
    return True


# --------------------------------------------------------------------------
# constructors


def translate(space: GKMSpace, shift: Sequence, scale=1) -> GKMSpace:
    """Affine change of moment map: Phi -> scale*Phi + shift (scale > 0)."""
    scale = to_fraction(scale)
    if scale <= 0:
        raise SpaceError("dilation must be positive")
    shift = tuple(to_fraction(v) for v in shift)
    if len(shift) != space.rank:
        raise SpaceError("shift has the wrong length")
    pts = tuple(
        replace(p, moment=tuple(scale * m + s for m, s in zip(p.moment, shift))) for p in space.points
    )
    lift = space.lift
    if lift is not None:
        big_shift = _preimage(shift, lift.inclusion)
        lift = Lift(translate(lift.space, big_shift, scale), lift.inclusion)
    return replace(space, points=pts, lift=lift, _memo={})


def _preimage(y: Sequence[Fraction], inclusion: Sequence[Sequence[int]]) -> RatVec:
    """Some z in g* with transpose(inclusion) z = y."""
    from .linalg import solve_linear

    cols = [[inclusion[i][j] for i in range(len(inclusion))] for j in range(len(inclusion[0]))]
    sol = solve_linear(cols, list(y))
    if sol is None:
        raise SpaceError("shift cannot be lifted")
    return sol


def _single_point(space: GKMSpace) -> bool:
    return len(space.points) == 1 and space.complex_dim == 0


def external_product(a: GKMSpace, b: GKMSpace, dilation=1) -> GKMSpace:
    """X1 x X2 under the product torus G1 x G2 (rank d1 + d2); GKM if both factors are."""
    k = to_fraction(dilation)
    if k <= 0:
        raise SpaceError("dilation must be positive")
    da, db = a.rank, b.rank
    pts = []
    for p in a.points:
        for q in b.points:
            weights = [tuple(w) + (0,) * db for w in p.weights]
            weights += [(0,) * da + tuple(w) for w in q.weights]
            pts.append(FixedPoint(_pair_name(p.name, q.name), tuple(p.moment) + tuple(k * m for m in q.moment), tuple(weights)))
    edges = []
    for e in a.edges:
        for q in b.points:
            edges.append(GKMEdge(_pair_name(e.source, q.name), _pair_name(e.target, q.name), tuple(e.weight) + (0,) * db))
    for p in a.points:
        for e in b.edges:
            edges.append(GKMEdge(_pair_name(p.name, e.source), _pair_name(p.name, e.target), (0,) * da + tuple(e.weight)))
    action = TorusAction(da + db, tuple(f"{n}'" for n in a.action.names) + tuple(f"{n}''" for n in b.action.names))
    lift = None
    if a.lift is not None or b.lift is not None:
        la = a.lift or Lift(a, Subtorus.full(da).inclusion)
        lb = b.lift or Lift(b, Subtorus.full(db).inclusion)
        big = external_product(la.space, lb.space, k)
        inc = _block_diag(la.inclusion, lb.inclusion)
        lift = Lift(big, inc)
    return GKMSpace(action, tuple(pts), tuple(edges), a.complex_dim + b.complex_dim, lift=lift,
                    label=f"{a.label or 'X'}x{b.label or 'Y'}")


def _block_diag(A, B):
    ra, ca = len(A), len(A[0])
    rb, cb = len(B), len(B[0])
    rows = [tuple(A[i]) + (0,) * cb for i in range(ra)]
    rows += [(0,) * ca + tuple(B[i]) for i in range(rb)]
    return tuple(rows)


def _pair_name(p: str, q: str) -> str:
    return f"{p},{q}"


def product(a: GKMSpace, b: GKMSpace, dilation=1) -> GKMSpace:
    """X1 x X2 with the diagonal action of the common torus.

    The moment image of (p, q) is Phi(p) + dilation*Phi(q).  Because weights
    repeat at every fixed point, the result carries a lift to the external
    product under G x G.
    """
    if a.rank != b.rank:
        raise SpaceError(f"rank mismatch: {a.rank} vs {b.rank}")
    k = to_fraction(dilation)
    if k <= 0:
        raise SpaceError("dilation must be positive")
    d = a.rank
    if _single_point(b):
        return translate(a, tuple(k * m for m in b.points[0].moment))
    if _single_point(a):
        return translate(b, a.points[0].moment, k)
    ext = external_product(a, b, k)
    diag = tuple(tuple(int(i == j) for j in range(d)) for i in range(d)) * 2
    sub = Subtorus(diag)
    pts = tuple(
        FixedPoint(P.name, sub.project(P.moment), tuple(tuple(int(x) for x in sub.project(w)) for w in P.weights))
        for P in ext.points
    )
    edges = tuple(GKMEdge(e.source, e.target, tuple(int(x) for x in sub.project(e.weight))) for e in ext.edges)
    lift = _compose_lift(ext, sub)
    pairs = tuple((p.name, q.name) for p in a.points for q in b.points)
    info = ProductInfo(a, b, k, pairs)
    return GKMSpace(a.action, pts, edges, a.complex_dim + b.complex_dim, lift=lift, factors=info,
                    label=f"{a.label or 'X'}x{b.label or 'Y'}")


def _compose_lift(space: GKMSpace, sub: Subtorus) -> Lift:
    if space.lift is None:
        return Lift(space, sub.inclusion)
    inner = space.lift
    m = [
        tuple(sum(inner.inclusion[i][l] * sub.inclusion[l][j] for l in range(len(sub.inclusion)))
              for j in range(sub.rank))
        for i in range(len(inner.inclusion))
    ]
    return Lift(inner.space, tuple(m))


# --------------------------------------------------------------------------
# subtorus projection


def projection_flags(space: GKMSpace, subtorus: Subtorus) -> List[str]:
    """Reasons the restricted action fails to have M^T = M^G (empty when generic)."""
    if subtorus.ambient_rank != space.rank:
        raise SpaceError("subtorus does not live in this torus")
    flags = []
    for p in space.points:
        for w in p.weights:
            if all(v == 0 for v in subtorus.project(w)):
                flags.append(f"weight {w} at {p.name} vanishes on the subtorus (non-generic)")
    return flags


def is_generic(space: GKMSpace, subtorus: Subtorus) -> bool:
    return not projection_flags(space, subtorus)


def _primitive_or_zero(vec: Sequence) -> IntVec:
    return primitive(vec) if any(vec) else tuple(0 for _ in vec)


def project_moment(space: GKMSpace, subtorus: Subtorus) -> GKMSpace:
    """The same fixed points seen by the subtorus: Phi_T = pi o Phi_G, weights projected.

    Zero projected weights are kept (they mark non-isolated T-fixed sets);
    see :func:`projection_flags`.
    """
    if subtorus.ambient_rank != space.rank:
        raise SpaceError(f"subtorus lives in rank {subtorus.ambient_rank}, space has rank {space.rank}")
    if subtorus.is_identity:
        return space
    pts = tuple(
        FixedPoint(p.name, subtorus.project(p.moment),
                   tuple(tuple(int(v) for v in subtorus.project(w)) for w in p.weights))
        for p in space.points
    )
    edges = tuple(GKMEdge(e.source, e.target, _primitive_or_zero(subtorus.project(e.weight))) for e in space.edges)
    action = TorusAction(subtorus.rank, tuple(f"s{i + 1}" for i in range(subtorus.rank)))
    return GKMSpace(action, pts, edges, space.complex_dim, lift=_compose_lift(space, subtorus),
                    label=f"{space.label or 'X'}|T")


# --------------------------------------------------------------------------
# walls


def walls(space: GKMSpace) -> List[Wall]:
    """Hyperplanes spanned by edges of the 1-skeleton, one per (normal, offset).

    A hyperplane qualifies when the edges lying in it have directions spanning
    it; its support is the set of endpoints of those edges.  In rank 1 the
    walls are the fixed-point images themselves.
    """
    d = space.rank
    live_edges = [e for e in space.edges if any(e.weight)]
    incident: Dict[str, List[IntVec]] = {p.name: [] for p in space.points}
    for e in live_edges:
        incident[e.source].append(e.weight)
        incident[e.target].append(e.weight)

    candidates = set()
    for p in space.points:
        dirs = sorted({canonical_sign(primitive(w)) for w in incident[p.name]})
        for subset in combinations(dirs, d - 1):
            normal = integer_normal(list(subset), d)
            if normal is None:
                continue
            candidates.add((normal, dot(p.moment, normal)))

    out = []
    for normal, offset in sorted(candidates):
        on = {p.name for p in space.points if dot(p.moment, normal) == offset}
        inside = [e for e in live_edges if e.source in on and e.target in on and dot(e.weight, normal) == 0]
        if d == 1:
            support = sorted(on, key=space.index)
        else:
            if matrix_rank([list(e.weight) for e in inside], d) != d - 1:
                continue
            ends = {e.source for e in inside} | {e.target for e in inside}
            support = sorted(ends, key=space.index)
        out.append(Wall(normal, offset, tuple(support)))
    return out


def is_boundary_wall(space: GKMSpace, wall: Wall) -> bool:
    """True if every fixed-point image lies weakly on one side of the wall."""
    vals = [dot(p.moment, wall.normal) - wall.offset for p in space.points]
    return all(v >= 0 for v in vals) or all(v <= 0 for v in vals)


def wall_normals(space: GKMSpace) -> List[IntVec]:
    """Primitive normals of all walls, each with both orientations."""
    normals = sorted({w.normal for w in walls(space)})
    out = []
    for n in normals:
        out.append(n)
        out.append(tuple(-v for v in n))
    return out


def is_regular_value(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus] = None) -> bool:
    """mu (in t*) avoids the image of every wall, computed from the T-projected data."""
    if subtorus is None:
        subtorus = Subtorus.full(space.rank)
    mu = tuple(to_fraction(v) for v in mu)
    if len(mu) != subtorus.rank:
        raise SpaceError(f"mu has length {len(mu)}, subtorus rank is {subtorus.rank}")
    proj = project_moment(space, subtorus)
    if any(p.moment == mu for p in proj.points):
        return False
    for w in walls(proj):
        if dot(mu, w.normal) != w.offset:
            continue
        if in_convex_hull(mu, [proj.point(n).moment for n in w.support]):
            return False
    return True


def in_moment_image(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus] = None) -> bool:
    if subtorus is None:
        subtorus = Subtorus.full(space.rank)
    proj = project_moment(space, subtorus)
    return in_convex_hull(mu, [p.moment for p in proj.points])
