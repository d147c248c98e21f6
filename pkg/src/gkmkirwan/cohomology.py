"""Equivariant cohomology classes as tuples of fixed-point restrictions.

A homogeneous class of degree 2k is one polynomial of degree k per fixed
point, subject to the GKM condition: across every edge the two restrictions
differ by a multiple of the edge weight.  Vectors of such classes are
flattened point-major over :func:`gkmkirwan.linalg.monomials`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

from .linalg import (
    Echelon,
    LinalgError,
    MultiPoly,
    Subspace,
    count_monomials,
    dot,
    monomials,
    poly_divides,
    remainder_matrix,
    solve_linear,
    to_fraction,
)
from .space import FixedPoint, GKMSpace, SpaceError, Subtorus, project_moment


class CohomologyError(ValueError):
    pass


class NonGenericDirection(CohomologyError):
    """A direction pairs to zero with some weight, or fails to separate fixed points."""


class EquivariantClass:
    """A homogeneous class in H_G^degree(M), stored by its restrictions to fixed points."""

    __slots__ = ("space", "restrictions", "degree")

    def __init__(self, space: GKMSpace, restrictions, degree: int):
        if isinstance(restrictions, Mapping):
            missing = [n for n in space.names if n not in restrictions]
            if missing:
                raise CohomologyError(f"missing restriction at {', '.join(missing)}")
            restrictions = [restrictions[n] for n in space.names]
        restrictions = tuple(restrictions)
        if len(restrictions) != len(space.points):
            raise CohomologyError("need one restriction per fixed point")
        if degree % 2 or degree < 0:
            raise CohomologyError(f"degree must be even and non-negative, got {degree}")
        for name, r in zip(space.names, restrictions):
            if r.rank != space.rank:
                raise CohomologyError(f"restriction at {name} has rank {r.rank}, space has rank {space.rank}")
            if r.terms and r.degrees() != {degree // 2}:
                raise CohomologyError(f"restriction at {name} is not homogeneous of degree {degree}")
        self.space = space
        self.restrictions = restrictions
        self.degree = degree

    def at(self, name: str) -> MultiPoly:
        return self.restrictions[self.space.index(name)]

    def as_dict(self) -> Dict[str, MultiPoly]:
        return dict(zip(self.space.names, self.restrictions))

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self.restrictions)

    def vector(self) -> Tuple[Fraction, ...]:
        k = self.degree // 2
        out: List[Fraction] = []
        for r in self.restrictions:
            out.extend(r.coefficient_vector(k))
        return tuple(out)

    @classmethod
    def from_vector(cls, space: GKMSpace, degree: int, vec: Sequence) -> "EquivariantClass":
        k = degree // 2
        m = count_monomials(space.rank, k)
        if len(vec) != m * len(space.points):
            raise CohomologyError("vector length does not match the space and degree")
        polys = [MultiPoly.from_vector(space.rank, k, vec[i * m:(i + 1) * m]) for i in range(len(space.points))]
        return cls(space, polys, degree)

    def _same(self, other: "EquivariantClass") -> None:
        if not isinstance(other, EquivariantClass):
            raise CohomologyError(f"expected EquivariantClass, got {type(other).__name__}")
        if other.space is not self.space and other.space != self.space:
            raise CohomologyError("classes live on different spaces")

    def __add__(self, other: "EquivariantClass") -> "EquivariantClass":
        self._same(other)
        if other.degree != self.degree:
            if other.is_zero():
                return self
            if self.is_zero():
                return other
            raise CohomologyError("cannot add classes of different degrees")
        return EquivariantClass(self.space, [a + b for a, b in zip(self.restrictions, other.restrictions)], self.degree)

    def __neg__(self) -> "EquivariantClass":
        return EquivariantClass(self.space, [-a for a in self.restrictions], self.degree)

    def __sub__(self, other: "EquivariantClass") -> "EquivariantClass":
        return self + (-other)

    def __mul__(self, other) -> "EquivariantClass":
        if isinstance(other, EquivariantClass):
            return class_mul(self, other)
        if isinstance(other, MultiPoly):
            return module_action(other, self)
        c = to_fraction(other)
        return EquivariantClass(self.space, [a * c for a in self.restrictions], self.degree)

    def __rmul__(self, other) -> "EquivariantClass":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "EquivariantClass":
        out = unit(self.space)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquivariantClass):
            return NotImplemented
        if other.space != self.space:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.restrictions == other.restrictions

    def __hash__(self):
        return hash((self.degree, self.restrictions))

    def __repr__(self) -> str:
        names = self.space.action.names
        body = ", ".join(f"{n}: {r.to_string(names)}" for n, r in zip(self.space.names, self.restrictions))
        return f"EquivariantClass(deg={self.degree}; {body})"


# --------------------------------------------------------------------------
# GKM condition and bases


def gkm_check(c: EquivariantClass) -> bool:
    """True iff the restrictions across every edge differ by a multiple of its weight."""
    for e in c.space.edges:
        if not any(e.weight):
            continue
        diff = c.at(e.source) - c.at(e.target)
        ok, _ = poly_divides(MultiPoly.linear_form(e.weight), diff)
        if not ok:
            return False
    return True


@dataclass(frozen=True)
class DegreeBasis:
    """A basis of H_G^degree(M) in reduced echelon form.

    ``rows[i]`` is the flattened vector of ``classes[i]``; the coordinates of a
    class are its entries at ``pivots``.
    """

    space: GKMSpace
    degree: int
    classes: Tuple[EquivariantClass, ...]
    rows: Tuple[Tuple[Fraction, ...], ...]
    pivots: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.classes)

    def subspace(self) -> Subspace:
        return Subspace(len(self.rows[0]) if self.rows else 0, self.rows, self.pivots)

    def coordinates(self, c: EquivariantClass) -> Tuple[Fraction, ...]:
        """Coordinates of ``c`` in this basis; raises if ``c`` is not a class of this degree."""
        if c.space != self.space:
            raise CohomologyError("class lives on a different space")
        if c.is_zero():
            return (Fraction(0),) * self.dim
        if c.degree != self.degree:
            raise CohomologyError(f"class has degree {c.degree}, basis has degree {self.degree}")
        v = c.vector()
        coords = self.subspace().coordinates(v) if self.rows else None
        if coords is None:
            raise CohomologyError("vector is not in the span of the basis (not a GKM class?)")
        return coords

    def combine(self, coords: Sequence) -> EquivariantClass:
        if len(coords) != self.dim:
            raise CohomologyError("coordinate vector has the wrong length")
        n = len(self.space.points) * count_monomials(self.space.rank, self.degree // 2)
        vec = [Fraction(0)] * n
        for c, row in zip(coords, self.rows):
            c = to_fraction(c)
            if c:
                for j, x in enumerate(row):
                    if x:
                        vec[j] += c * x
        return EquivariantClass.from_vector(self.space, self.degree, vec)


def _edge_system(space: GKMSpace, k: int):
    """Sparse constraint rows for degree-2k tuples (edge divisibility only)."""
    m = count_monomials(space.rank, k)
    rows = []
    for e in space.edges:
        if not any(e.weight):
            continue
        R = remainder_matrix(tuple(e.weight), k)
        ip, iq = space.index(e.source) * m, space.index(e.target) * m
        by_rem: Dict[int, Dict[int, Fraction]] = {}
        for mon, entries in enumerate(R):
            for r, coef in entries:
                row = by_rem.setdefault(r, {})
                row[ip + mon] = row.get(ip + mon, 0) + coef
                row[iq + mon] = row.get(iq + mon, 0) - coef
        for r in sorted(by_rem):
            row = {c: v for c, v in by_rem[r].items() if v}
            if row:
                rows.append(row)
    return rows


def _check_degree(degree: int) -> int:
    if not isinstance(degree, int) or degree < 0 or degree % 2:
        raise CohomologyError(f"degree must be a non-negative even integer, got {degree!r}")
    return degree // 2


def basis(space: GKMSpace, degree: int) -> DegreeBasis:
    """Basis of H_G^degree(M).

    Without a lift: the solution space of the edge-divisibility system.
    With a lift: restrictions of the lifted classes, which span by
    equivariant formality.
    """
    k = _check_degree(degree)
    key = ("basis", degree)
    if key in space._memo:
        return space._memo[key]
    n = len(space.points) * count_monomials(space.rank, k)
    ech = Echelon(n)
    if space.lift is not None:
        big = basis(space.lift.space, degree)
        for c in big.classes:
            v = restrict_class(c, space.lift.inclusion, space).vector()
            ech.add({i: x for i, x in enumerate(v) if x})
    else:
        null = Echelon(n)
        for row in _edge_system(space, k):
            null.add(row)
        for v in null.nullspace():
            ech.add({i: x for i, x in enumerate(v) if x})
    rows = tuple(ech.basis())
    classes = tuple(EquivariantClass.from_vector(space, degree, r) for r in rows)
    out = DegreeBasis(space, degree, classes, rows, tuple(ech.pivots))
    space._memo[key] = out
    return out


def betti_series(space: GKMSpace, degree_bound: int) -> List[int]:
    """dim H_G^k(M) for k = 0, 2, ..., degree_bound."""
    return [basis(space, k).dim for k in range(0, degree_bound + 1, 2)]


def restrict_class(c: EquivariantClass, inclusion: Sequence[Sequence[int]], target: GKMSpace) -> EquivariantClass:
    """Pull restrictions back along t -> g: x_i -> sum_j inclusion[i][j] s_j."""
    if target.names != c.space.names:
        raise CohomologyError("target space has different fixed points")
    polys = [r.substitute_linear(inclusion) for r in c.restrictions]
    return EquivariantClass(target, polys, c.degree)


# --------------------------------------------------------------------------
# ring structure


def unit(space: GKMSpace) -> EquivariantClass:
    return EquivariantClass(space, [MultiPoly.constant(space.rank, 1)] * len(space.points), 0)


def zero_class(space: GKMSpace, degree: int) -> EquivariantClass:
    return EquivariantClass(space, [MultiPoly.zero(space.rank)] * len(space.points), degree)


def class_mul(a: EquivariantClass, b: EquivariantClass) -> EquivariantClass:
    a._same(b)
    return EquivariantClass(a.space, [x * y for x, y in zip(a.restrictions, b.restrictions)], a.degree + b.degree)


def module_action(h: MultiPoly, a: EquivariantClass) -> EquivariantClass:
    """h . a for h in H_G(pt); h must be homogeneous."""
    if h.rank != a.space.rank:
        raise CohomologyError(f"rank mismatch: {h.rank} vs {a.space.rank}")
    if h.is_zero():
        return zero_class(a.space, a.degree)
    return EquivariantClass(a.space, [h * r for r in a.restrictions], a.degree + h.cohomological_degree)


def module_class(space: GKMSpace, i: int) -> EquivariantClass:
    """u_i: the i-th coordinate of H_G^2(pt), restricting to x_i everywhere."""
    if not 0 <= i < space.rank:
        raise CohomologyError(f"no variable {i + 1} in rank {space.rank}")
    return module_action(MultiPoly.variable(space.rank, i), unit(space))


def symplectic_class(space: GKMSpace) -> EquivariantClass:
    """The equivariant symplectic class, restricting to <Phi(p), x> at p.

    On CP^2 this is the class x with restrictions (0, x1, x2).
    """
    polys = [MultiPoly.linear_form(p.moment) for p in space.points]
    return EquivariantClass(space, polys, 2)


def kunneth(a: EquivariantClass, b: EquivariantClass, product_space: GKMSpace) -> EquivariantClass:
    """a (x) b on the product: restriction at (p, q) is a|_p * b|_q."""
    info = product_space.factors
    if info is None:
        raise CohomologyError("space was not built as a product")
    if a.space != info.left or b.space != info.right:
        raise CohomologyError("classes do not live on the factors of this product")
    polys = [a.at(p) * b.at(q) for p, q in info.pairs]
    return EquivariantClass(product_space, polys, a.degree + b.degree)


# --------------------------------------------------------------------------
# Morse data


def _pairing(weight, xi) -> Fraction:
    return dot(weight, xi)


def morse_index(p: FixedPoint, xi: Sequence) -> int:
    """Twice the number of weights at p pairing negatively with xi."""
    neg = 0
    for w in p.weights:
        v = _pairing(w, xi)
        if v == 0:
            raise NonGenericDirection(f"xi={tuple(xi)} is orthogonal to weight {w} at {p.name}")
        neg += v < 0
    return 2 * neg


def negative_euler_class(p: FixedPoint, xi: Sequence) -> MultiPoly:
    """Product of the linear forms of the weights at p that pair negatively with xi."""
    rank = len(xi)
    out = MultiPoly.constant(rank, 1)
    for w in p.weights:
        v = _pairing(w, xi)
        if v == 0:
            raise NonGenericDirection(f"xi={tuple(xi)} is orthogonal to weight {w} at {p.name}")
        if v < 0:
            out = out * MultiPoly.linear_form(w)
    return out


def check_separating(space: GKMSpace, xi: Sequence) -> None:
    vals = [dot(p.moment, xi) for p in space.points]
    if len(set(vals)) != len(vals):
        raise NonGenericDirection(f"xi={tuple(xi)} does not separate the fixed points; pick another")
    for p in space.points:
        morse_index(p, xi)


def morse_counts(space: GKMSpace, xi: Sequence, degree_bound: int) -> List[int]:
    """sum_p #monomials of degree (k - lambda_p)/2, for k = 0, 2, ..., degree_bound."""
    lams = [morse_index(p, xi) for p in space.points]
    return [
        sum(count_monomials(space.rank, (k - lam) // 2) for lam in lams if lam <= k)
        for k in range(0, degree_bound + 1, 2)
    ]


def upward_reachable(space: GKMSpace, name: str, xi: Sequence) -> Set[str]:
    """Fixed points reached from ``name`` by edge walks along which Phi^xi strictly increases."""
    value = {p.name: dot(p.moment, xi) for p in space.points}
    adj: Dict[str, List[str]] = {n: [] for n in space.names}
    for e in space.edges:
        adj[e.source].append(e.target)
        adj[e.target].append(e.source)
    seen = {name}
    queue = deque([name])
    while queue:
        cur = queue.popleft()
        for nb in adj[cur]:
            if nb not in seen and value[nb] > value[cur]:
                seen.add(nb)
                queue.append(nb)
    return seen


def flow_up_class(space: GKMSpace, name: str, xi: Sequence) -> EquivariantClass:
    """A class equal to e(nu^- p) at p and zero off the upward-reachable set of p.

    Any solution of the linear conditions is returned; such classes are not
    unique.
    """
    check_separating(space, xi)
    p = space.point(name)
    lam = morse_index(p, xi)
    target = negative_euler_class(p, xi)
    reach = upward_reachable(space, name, xi)
    B = basis(space, lam)
    k = lam // 2
    m = count_monomials(space.rank, k)
    cols: List[int] = []
    rhs: List[Fraction] = []
    ip = space.index(name)
    tv = target.coefficient_vector(k)
    for j in range(m):
        cols.append(ip * m + j)
        rhs.append(tv[j])
    for q in space.names:
        if q not in reach:
            iq = space.index(q)
            for j in range(m):
                cols.append(iq * m + j)
                rhs.append(Fraction(0))
    A = [[row[c] for row in B.rows] for c in cols]
    sol = solve_linear(A, rhs) if B.dim else None
    if sol is None:
        raise CohomologyError(
            f"no class of degree {lam} restricts to e(nu^-) at {name} and vanishes off its upward-reachable set"
        )
    return B.combine(sol)
