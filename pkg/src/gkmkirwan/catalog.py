"""Built-in example spaces."""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import permutations
from typing import Callable, Dict, List

from .linalg import primitive
from .space import FixedPoint, GKMEdge, GKMSpace, SpaceError, TorusAction, product


def point(rank: int = 2) -> GKMSpace:
    """A single fixed point; its equivariant cohomology is H_T(pt)."""
    return GKMSpace(TorusAction(rank), (FixedPoint("pt", (0,) * rank, ()),), (), 0, label="point")


def cpn(n: int) -> GKMSpace:
    """CP^n with T^n acting by [z0 : t1 z1 : ... : tn zn].

    Fixed point p_i is the i-th coordinate line, with moment image e_i
    (p_0 at the origin) and weights e_j - e_i.
    """
    if n < 1:
        raise SpaceError("CP^n needs n >= 1")

    def e(i):
        return tuple(int(i == j + 1) for j in range(n))

    pts = []
    for i in range(n + 1):
        ws = tuple(tuple(a - b for a, b in zip(e(j), e(i))) for j in range(n + 1) if j != i)
        pts.append(FixedPoint(f"p{i}", e(i), ws))
    edges = [
        GKMEdge(f"p{i}", f"p{j}", tuple(a - b for a, b in zip(e(j), e(i))))
        for i in range(n + 1)
        for j in range(i + 1, n + 1)
    ]
    return GKMSpace(TorusAction(n), tuple(pts), tuple(edges), n, label=f"cp{n}")


def cp2xcp2(dilation=3) -> GKMSpace:
    """CP^2 x CP^2 with the diagonal T^2 action, second factor dilated."""
    space = product(cpn(2), cpn(2), dilation)
    return _relabel(space, f"cp2xcp2-k{dilation}")


def su3_hexagon(eigenvalues=(2, 1, 0)) -> GKMSpace:
    """Generic SU(3) coadjoint orbit (full flag manifold) under the maximal torus.

    T^2 is parametrised by (t1, t2) with t3 = -t1 - t2; the fixed point for a
    permutation w of the eigenvalues has moment image
    (lam_w1 - lam_w3, lam_w2 - lam_w3).  Weights are the root directions
    pointing along the three edges.
    """
    lam = tuple(Fraction(v) for v in eigenvalues)
    if len(set(lam)) != 3:
        raise SpaceError("eigenvalues must be distinct for a generic orbit")

    def image(w):
        return (w[0] - w[2], w[1] - w[2])

    perms = list(permutations(range(3)))
    name = {w: "".join(str(i + 1) for i in w) for w in perms}
    swaps = [(0, 1), (0, 2), (1, 2)]

    def swap(w, s):
        w = list(w)
        w[s[0]], w[s[1]] = w[s[1]], w[s[0]]
        return tuple(w)

    def moment(w):
        return image([lam[i] for i in w])

    pts, edges = [], []
    for w in perms:
        ws = []
        for s in swaps:
            v = swap(w, s)
            diff = [b - a for a, b in zip(moment(w), moment(v))]
            ws.append(primitive(diff))
        pts.append(FixedPoint(name[w], moment(w), tuple(ws)))
    for i, w in enumerate(perms):
        for s in swaps:
            v = swap(w, s)
            if perms.index(v) > i:
                diff = [b - a for a, b in zip(moment(w), moment(v))]
                edges.append(GKMEdge(name[w], name[v], primitive(diff)))
    return GKMSpace(TorusAction(2), tuple(pts), tuple(edges), 3, label="su3-hexagon")


def _relabel(space: GKMSpace, label: str) -> GKMSpace:
    from dataclasses import replace

    return replace(space, label=label, _memo={})


_FIXED: Dict[str, Callable[[], GKMSpace]] = {
    "point": lambda: point(2),
    "cp1": lambda: cpn(1),
    "cp2": lambda: cpn(2),
    "cp2xcp2-k3": lambda: cp2xcp2(3),
    "su3-hexagon": su3_hexagon,
}

_CACHE: Dict[str, GKMSpace] = {}


def catalog_names() -> List[str]:
    return sorted(_FIXED) + ["cp<n>", "point<d>", "cp2xcp2-k<k>"]


def build(name: str) -> GKMSpace:
    """Construct a built-in space afresh (no shared cache)."""
    if name in _FIXED:
        space = _FIXED[name]()
    elif re.fullmatch(r"cp\d+", name):
        space = cpn(int(name[2:]))
    elif re.fullmatch(r"point\d+", name):
        space = point(int(name[5:]))
    elif re.fullmatch(r"cp2xcp2-k\d+(/\d+)?", name):
        space = cp2xcp2(Fraction(name.split("-k", 1)[1]))
    else:
        raise SpaceError(f"unknown built-in space {name!r}; known: {', '.join(catalog_names())}")
    return _relabel(space, name)


def builtin(name: str) -> GKMSpace:
    """Look up a built-in space; also accepts ``cp<n>``, ``point<d>`` and ``cp2xcp2-k<k>``.

    Results are cached, so repeated lookups share computed bases.
    """
    if name not in _CACHE:
        _CACHE[name] = build(name)
    return _CACHE[name]
