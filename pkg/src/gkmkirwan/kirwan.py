"""Kernels of the (equivariant) Kirwan map and the cohomology of symplectic reductions.

For a regular value mu of the T-moment map and a direction xi in t, the
half-space slice K^xi(mu) in degree k is the subspace of H_G^k(M) of classes
vanishing at every fixed point p with <Phi(p), xi> > <mu, xi>.  Each such
slice is closed under multiplication by H_G(M), so the ideal generated by a
family of slices is, degree by degree, just the span of the slices.  Directions
default to the normals of the codimension-1 walls of the T-moment polytope.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cohomology import (
    CohomologyError,
    DegreeBasis,
    EquivariantClass,
    basis,
    class_mul,
    restrict_class,
)
from .linalg import (
    Subspace,
    count_monomials,
    dot,
    format_fraction,
    nullspace,
    to_fraction,
)
from .space import (
    GKMSpace,
    SpaceError,
    Subtorus,
    in_moment_image,
    is_regular_value,
    project_moment,
    projection_flags,
    wall_normals,
)

IntVec = Tuple[int, ...]


class DomainError(ValueError):
    """Mathematically invalid request: non-regular mu, zero direction, non-generic subtorus."""


@dataclass(frozen=True)
class HalfSpaceCondition:
    xi: Tuple[Fraction, ...]
    mu: Tuple[Fraction, ...]
    positive_points: Tuple[str, ...]


@dataclass(frozen=True)
class KernelSlice:
    degree: int
    subspace: Subspace
    condition: Optional[HalfSpaceCondition] = None

    @property
    def dim(self) -> int:
        return self.subspace.dim


def _subtorus(space: GKMSpace, subtorus: Optional[Subtorus]) -> Subtorus:
    if subtorus is None:
        return Subtorus.full(space.rank)
    if subtorus.ambient_rank != space.rank:
        raise SpaceError(f"subtorus lives in rank {subtorus.ambient_rank}, space has rank {space.rank}")
    return subtorus


def _mu(mu: Sequence, subtorus: Subtorus) -> Tuple[Fraction, ...]:
    mu = tuple(to_fraction(v) for v in mu)
    if len(mu) != subtorus.rank:
        raise SpaceError(f"mu has length {len(mu)}, subtorus rank is {subtorus.rank}")
    return mu


def require_regular(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus] = None) -> None:
    sub = _subtorus(space, subtorus)
    mu = _mu(mu, sub)
    key = ("regular", mu, sub.inclusion)
    if key not in space._memo:
        space._memo[key] = is_regular_value(space, mu, sub)
    if not space._memo[key]:
        raise DomainError("mu is not a regular value")


def default_bound(space: GKMSpace) -> int:
    return space.real_dim


def default_directions(space: GKMSpace, subtorus: Optional[Subtorus] = None) -> List[IntVec]:
    """Wall normals (both signs) of the moment polytope of the T-action."""
    sub = _subtorus(space, subtorus)
    key = ("directions", sub.inclusion)
    if key not in space._memo:
        space._memo[key] = wall_normals(project_moment(space, sub))
    return list(space._memo[key])


def half_space_condition(space: GKMSpace, xi: Sequence, mu: Sequence, subtorus: Optional[Subtorus] = None) -> HalfSpaceCondition:
    sub = _subtorus(space, subtorus)
    mu = _mu(mu, sub)
    xi_t = tuple(to_fraction(v) for v in xi)
    if not any(xi_t):
        raise DomainError("direction xi must be nonzero")
    xi_g = sub.push(xi_t)
    level = dot(mu, xi_t)
    pos = []
    for p in space.points:
        v = dot(p.moment, xi_g)
        if v == level:
            raise DomainError(f"fixed point {p.name} lies on the hyperplane <y, xi> = <mu, xi> for xi={tuple(map(format_fraction, xi_t))}")
        if v > level:
            pos.append(p.name)
    return HalfSpaceCondition(xi_t, mu, tuple(pos))


def _vanishing_subspace(B: DegreeBasis, names: Sequence[str]) -> Subspace:
    """Coordinates of classes in B that vanish at the given fixed points."""
    h = B.dim
    if h == 0:
        return Subspace.zero(0)
    space = B.space
    m = count_monomials(space.rank, B.degree // 2)
    cols = []
    for n in names:
        i = space.index(n)
        cols.extend(range(i * m, (i + 1) * m))
    rows = [[r[c] for r in B.rows] for c in cols]
    rows = [r for r in rows if any(r)]
    if not rows:
        return Subspace.full(h)
    return Subspace.span(nullspace(rows, h), h)


def half_space_kernel(space: GKMSpace, xi: Sequence, mu: Sequence, subtorus: Optional[Subtorus] = None,
                      degree: int = 0) -> KernelSlice:
    """K_G^xi(mu) in the given degree, in coordinates of :func:`basis`."""
    sub = _subtorus(space, subtorus)
    require_regular(space, mu, sub)
    cond = half_space_condition(space, xi, mu, sub)
    key = ("slice", cond.positive_points, degree)
    if key not in space._memo:
        space._memo[key] = _vanishing_subspace(basis(space, degree), cond.positive_points)
    return KernelSlice(degree, space._memo[key], cond)


def _directions(space, sub, directions):
    dirs = default_directions(space, sub) if directions is None else [tuple(d) for d in directions]
    if not dirs:
        raise DomainError("no directions to generate the kernel from")
    for d in dirs:
        if len(d) != sub.rank:
            raise SpaceError(f"direction {d} does not lie in t (rank {sub.rank})")
    return dirs


def kernel_slice(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus], directions, degree: int) -> KernelSlice:
    sub = _subtorus(space, subtorus)
    B = basis(space, degree)
    total = Subspace.zero(B.dim)
    for xi in _directions(space, sub, directions):
        total = total + half_space_kernel(space, xi, mu, sub, degree).subspace
    return KernelSlice(degree, total)


def kernel_ideal(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus] = None,
                 directions: Optional[Sequence[Sequence]] = None,
                 degree_bound: Optional[int] = None) -> List[KernelSlice]:
    """Degree pieces 0, 2, ..., degree_bound of the ideal generated by the slices K^xi(mu)."""
    sub = _subtorus(space, subtorus)
    require_regular(space, mu, sub)
    bound = default_bound(space) if degree_bound is None else degree_bound
    return [kernel_slice(space, mu, sub, directions, k) for k in range(0, bound + 1, 2)]


def kernel_generators(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus], degree: int,
                      directions: Optional[Sequence[Sequence]] = None) -> List[Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]]:
    """A basis of the kernel in one degree, each element taken from a single slice.

    Returns ``(coordinates, witnessing direction)`` pairs.
    """
    sub = _subtorus(space, subtorus)
    require_regular(space, mu, sub)
    B = basis(space, degree)
    acc = Subspace.zero(B.dim)
    out = []
    for xi in _directions(space, sub, directions):
        sl = half_space_kernel(space, xi, mu, sub, degree)
        for v in sl.subspace.basis:
            if not acc.contains(v):
                acc = acc + Subspace.span([v], B.dim)
                out.append((v, sl.condition.xi))
    return out


# --------------------------------------------------------------------------
# reductions


def _series_times(series: Sequence[int], factor: Sequence[int]) -> List[int]:
    out = []
    for k in range(len(series)):
        out.append(sum(factor[j] * series[k - j] for j in range(min(k, len(factor) - 1) + 1)))
    return out


def _one_minus_t2_power(n: int, length: int) -> List[int]:
    from math import comb

    return [(-1) ** j * comb(n, j) if j <= n else 0 for j in range(length)]


@dataclass
class ReductionReport:
    space: str
    mu: Tuple[Fraction, ...]
    subtorus: Tuple[IntVec, ...]
    degree_bound: int
    degrees: List[int]
    dim_equivariant: List[int]
    kernel_dims: List[int]
    quotient_dims: List[int]
    betti: List[int]
    directions: List[Tuple[Fraction, ...]]
    reduced_dim: int
    structure: Optional["StructureTable"] = None
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "space": self.space,
            "mu": [format_fraction(v) for v in self.mu],
            "subtorus": [list(r) for r in self.subtorus],
            "degree_bound": self.degree_bound,
            "reduced_dim": self.reduced_dim,
            "degrees": self.degrees,
            "dim_equivariant": self.dim_equivariant,
            "kernel_dims": self.kernel_dims,
            "quotient_dims": self.quotient_dims,
            "betti": self.betti,
            "directions": [[format_fraction(v) for v in d] for d in self.directions],
            "notes": self.notes,
        }
        if self.structure is not None:
            out["structure"] = self.structure.to_json()
        return out

    def to_text(self) -> str:
        lines = [
            f"space: {self.space}",
            f"mu: ({', '.join(format_fraction(v) for v in self.mu)})",
            f"subtorus: {[list(r) for r in self.subtorus]}",
            f"reduced dimension: {self.reduced_dim}",
            f"directions: {', '.join('(' + ','.join(format_fraction(v) for v in d) + ')' for d in self.directions)}",
            "",
            f"{'deg':>4} {'dim H_G':>8} {'ker':>6} {'H_G/T(M//T)':>12} {'betti':>6}",
        ]
        for row in zip(self.degrees, self.dim_equivariant, self.kernel_dims, self.quotient_dims, self.betti):
            lines.append(f"{row[0]:>4} {row[1]:>8} {row[2]:>6} {row[3]:>12} {row[4]:>6}")
        for n in self.notes:
            lines.append(f"note: {n}")
        if self.structure is not None:
            lines.append("")
            lines.append(self.structure.to_text())
        return "\n".join(lines)


def reduce(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus] = None,
           degree_bound: Optional[int] = None, directions: Optional[Sequence[Sequence]] = None,
           structure: bool = False) -> ReductionReport:
    """Cohomology of M//T(mu) from the kernel of the equivariant Kirwan map.

    ``quotient_dims`` are the dimensions of H_{G/T}(M//T(mu)) = H_G(M)/ker;
    ``betti`` are the ordinary Betti numbers of M//T(mu), obtained by dividing
    out H_{G/T}(pt) (equivariant formality).  For T = G the two agree.
    """
    sub = _subtorus(space, subtorus)
    mu = _mu(mu, sub)
    require_regular(space, mu, sub)
    if not in_moment_image(space, mu, sub):
        raise DomainError("mu lies outside the moment image; the reduction is empty")
    bound = default_bound(space) if degree_bound is None else degree_bound
    dirs = _directions(space, sub, directions)
    slices = kernel_ideal(space, mu, sub, dirs, bound)
    degrees = [s.degree for s in slices]
    dims = [basis(space, k).dim for k in degrees]
    kers = [s.dim for s in slices]
    quot = [a - b for a, b in zip(dims, kers)]
    betti = _series_times(quot, _one_minus_t2_power(space.rank - sub.rank, len(quot)))
    notes = []
    if sub.rank < space.rank and any(mu):
        notes.append("mu != 0 with a proper subtorus: the stage-dimension identity is only proved at mu = 0")
    flags = projection_flags(space, sub)
    if flags:
        notes.append("subtorus is not generic (M^T != M^G)")
    report = ReductionReport(
        space=space.label or "space",
        mu=mu,
        subtorus=sub.inclusion,
        degree_bound=bound,
        degrees=degrees,
        dim_equivariant=dims,
        kernel_dims=kers,
        quotient_dims=quot,
        betti=betti,
        directions=[tuple(to_fraction(v) for v in d) for d in dirs],
        reduced_dim=space.real_dim - 2 * sub.rank,
        notes=notes,
    )
    if structure:
        report.structure = structure_constants(space, mu, sub, bound)
    return report


def verify_class_in_kernel(space: GKMSpace, c: EquivariantClass, mu: Sequence,
                           subtorus: Optional[Subtorus] = None,
                           directions: Optional[Sequence[Sequence]] = None,
                           degree_bound: Optional[int] = None) -> Tuple[bool, Optional[Tuple[Fraction, ...]]]:
    """Whether ``c`` lies in the kernel ideal, and a direction xi with c in K^xi(mu) if one exists."""
    sub = _subtorus(space, subtorus)
    bound = default_bound(space) if degree_bound is None else degree_bound
    if c.degree > bound:
        raise DomainError(f"class degree {c.degree} exceeds the degree bound {bound}")
    require_regular(space, mu, sub)
    B = basis(space, c.degree)
    coords = B.coordinates(c)
    dirs = _directions(space, sub, directions)
    witness = None
    for xi in dirs:
        if half_space_kernel(space, xi, mu, sub, c.degree).subspace.contains(coords):
            witness = tuple(to_fraction(v) for v in xi)
            break
    inside = witness is not None or kernel_slice(space, mu, sub, dirs, c.degree).subspace.contains(coords)
    return inside, witness


def sample_directions(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus], count: int, seed: int) -> List[IntVec]:
    """``count`` seeded directions in t with coordinates in [-9, 9] \\ {0}, avoiding ties with mu."""
    sub = _subtorus(space, subtorus)
    rng = random.Random(seed)
    choices = [v for v in range(-9, 10) if v]
    out: List[IntVec] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * (count + 1):
            raise DomainError("could not sample directions in general position")
        xi = tuple(rng.choice(choices) for _ in range(sub.rank))
        try:
            half_space_condition(space, xi, mu, sub)
        except DomainError:
            continue
        out.append(xi)
    return out


@dataclass(frozen=True)
class SufficiencyResult:
    ok: bool
    walls_only: Tuple[int, ...]
    with_samples: Tuple[int, ...]
    samples: Tuple[IntVec, ...]


def wall_sufficiency(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus] = None,
                     sample_directions_count: int = 50, seed: int = 0,
                     degree_bound: Optional[int] = None) -> SufficiencyResult:
    sub = _subtorus(space, subtorus)
    walls_dirs = default_directions(space, sub)
    extra = sample_directions(space, mu, sub, sample_directions_count, seed)
    a = tuple(s.dim for s in kernel_ideal(space, mu, sub, walls_dirs, degree_bound))
    b = tuple(s.dim for s in kernel_ideal(space, mu, sub, walls_dirs + extra, degree_bound))
    return SufficiencyResult(a == b, a, b, tuple(extra))


def wall_sufficiency_check(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus] = None,
                           sample_directions: int = 50, seed: int = 0,
                           degree_bound: Optional[int] = None) -> bool:
    """Kernel dims from wall normals equal those from wall normals plus random directions."""
    return wall_sufficiency(space, mu, subtorus, sample_directions, seed, degree_bound).ok


# --------------------------------------------------------------------------
# reduction in stages


def forget_to_subtorus(c: EquivariantClass, subtorus: Subtorus) -> EquivariantClass:
    """The forgetful map H_G -> H_T: pull restrictions back along t -> g."""
    target = project_moment(c.space, subtorus)
    if target is c.space:
        return c
    return restrict_class(c, subtorus.inclusion, target)


@dataclass(frozen=True)
class StageCheck:
    ok: bool
    degrees: Tuple[int, ...]
    kernel_G: Tuple[int, ...]
    kernel_T: Tuple[int, ...]
    predicted: Tuple[int, ...]


def stage_dimensions(space: GKMSpace, mu: Sequence, subtorus: Subtorus,
                     degree_bound: Optional[int] = None) -> StageCheck:
    """Compare dim <K_G^t>_k with sum_{l+m=k} dim H_{G/T}^l(pt) * dim <K_T^t>_m."""
    sub = _subtorus(space, subtorus)
    flags = projection_flags(space, sub)
    if flags:
        raise DomainError("subtorus is not generic: " + "; ".join(flags))
    bound = default_bound(space) if degree_bound is None else degree_bound
    kg = [s.dim for s in kernel_ideal(space, mu, sub, None, bound)]
    proj = project_moment(space, sub)
    kt = [s.dim for s in kernel_ideal(proj, mu, None, None, bound)]
    free = space.rank - sub.rank
    pred = []
    for i in range(len(kg)):
        pred.append(sum(count_monomials(free, l) * kt[i - l] for l in range(i + 1)))
    return StageCheck(kg == pred, tuple(range(0, bound + 1, 2)), tuple(kg), tuple(kt), tuple(pred))


def check_stage_dimensions(space: GKMSpace, mu: Sequence, subtorus: Subtorus,
                           degree_bound: Optional[int] = None) -> bool:
    return stage_dimensions(space, mu, subtorus, degree_bound).ok


# --------------------------------------------------------------------------
# structure constants


@dataclass
class StructureTable:
    """Multiplication in H^*(M//T(mu)) on coset representatives.

    ``reps[k]`` lists basis indices (into :func:`basis` of the ring's space)
    whose classes represent a basis of the degree-k quotient.
    ``products[(k1, i, k2, j)]`` holds the coefficients of rep_i * rep_j on
    ``reps[k1 + k2]``.
    """

    space: GKMSpace
    reps: Dict[int, List[int]]
    products: Dict[Tuple[int, int, int, int], List[Fraction]]
    truncated: List[Tuple[int, int, int, int]]

    def representative(self, degree: int, i: int) -> EquivariantClass:
        return basis(self.space, degree).classes[self.reps[degree][i]]

    def matrix(self, k1: int, k2: int, target: int = 0) -> List[List[Fraction]]:
        """Coefficient of the ``target``-th rep of degree k1+k2 in rep_i * rep_j."""
        n1, n2 = len(self.reps.get(k1, [])), len(self.reps.get(k2, []))
        out = []
        for i in range(n1):
            row = []
            for j in range(n2):
                key = (k1, i, k2, j) if (k1, i) <= (k2, j) else (k2, j, k1, i)
                row.append(self.products[key][target])
            out.append(row)
        return out

    def to_json(self) -> dict:
        names = self.space.action.names
        return {
            "representatives": {
                str(k): [
                    {n: r.to_string(names) for n, r in zip(self.space.names, basis(self.space, k).classes[i].restrictions)}
                    for i in idx
                ]
                for k, idx in sorted(self.reps.items())
            },
            "products": [
                {"left": [k1, i], "right": [k2, j], "coefficients": [format_fraction(c) for c in coeffs]}
                for (k1, i, k2, j), coeffs in sorted(self.products.items())
            ],
            "truncated": [[k1, i, k2, j] for (k1, i, k2, j) in self.truncated],
        }

    def to_text(self) -> str:
        lines = ["structure constants (rep_i * rep_j = sum c_l rep_l):"]
        for k, idx in sorted(self.reps.items()):
            lines.append(f"  degree {k}: {len(idx)} representative(s)")
        for (k1, i, k2, j), coeffs in sorted(self.products.items()):
            if k1 == 0 or k2 == 0:
                continue
            if not coeffs:
                lines.append(f"  e{k1}_{i} * e{k2}_{j} = 0 (degree {k1 + k2} is empty)")
                continue
            cs = ", ".join(format_fraction(c) for c in coeffs)
            lines.append(f"  e{k1}_{i} * e{k2}_{j} = [{cs}] in degree {k1 + k2}")
        if self.truncated:
            lines.append(f"  {len(self.truncated)} product(s) truncated by the degree bound")
        return "\n".join(lines)


def structure_constants(space: GKMSpace, mu: Sequence, subtorus: Optional[Subtorus] = None,
                        degree_bound: Optional[int] = None) -> StructureTable:
    """Multiplication table of H^*(M//T(mu)) up to the degree bound.

    For a proper subtorus the ordinary ring is computed on the T-projected
    space, where the Kirwan map lands in H^*(M//T).
    """
    sub = _subtorus(space, subtorus)
    require_regular(space, mu, sub)
    ring_space = project_moment(space, sub)
    mu = _mu(mu, sub)
    bound = default_bound(space) if degree_bound is None else degree_bound
    slices = {s.degree: s.subspace for s in kernel_ideal(ring_space, mu, None, None, bound)}
    reps: Dict[int, List[int]] = {}
    for k, K in slices.items():
        h = basis(ring_space, k).dim
        reps[k] = [i for i in range(h) if i not in K.pivots]

    def quotient_coords(c: EquivariantClass) -> List[Fraction]:
        k = c.degree
        coords = basis(ring_space, k).coordinates(c)
        res = slices[k].residue(coords)
        return [res[i] for i in reps[k]]

    products: Dict[Tuple[int, int, int, int], List[Fraction]] = {}
    truncated = []
    keys = [(k, i) for k in sorted(reps) for i in range(len(reps[k]))]
    for a_idx, (k1, i) in enumerate(keys):
        for (k2, j) in keys[a_idx:]:
            if k1 + k2 > bound:
                truncated.append((k1, i, k2, j))
                continue
            a = basis(ring_space, k1).classes[reps[k1][i]]
            b = basis(ring_space, k2).classes[reps[k2][j]]
            products[(k1, i, k2, j)] = quotient_coords(class_mul(a, b))
    return StructureTable(ring_space, reps, products, truncated)
