"""Exact rational arithmetic: multivariate polynomials and linear algebra over Q.

Polynomials are stored as maps from exponent tuples to :class:`fractions.Fraction`
coefficients; every variable carries cohomological degree 2.  Matrices are
plain lists of rows.  Row reduction works on sparse rows (``dict`` column ->
coefficient) because the GKM systems we feed it are very sparse.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Exponent = Tuple[int, ...]
Vector = Tuple[Fraction, ...]


class LinalgError(ValueError):
    """Raised on rank/dimension mismatches and other malformed input."""


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` to a Fraction.

    Floats are refused: exactness is the whole point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise LinalgError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(ch in text for ch in ".eE") and not text.lstrip("-+").isdigit():
            raise LinalgError(f"decimal/float literals are not accepted: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise LinalgError(f"not a rational: {value!r}") from exc
    raise LinalgError(f"not a rational: {value!r}")


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def primitive(vec: Sequence) -> Tuple[int, ...]:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    fr = [to_fraction(v) for v in vec]
    if all(v == 0 for v in fr):
        raise LinalgError("zero vector has no primitive representative")
    lcm = 1
    for v in fr:
        lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in fr]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)


def canonical_sign(vec: Tuple[int, ...]) -> Tuple[int, ...]:
    """Flip so that the leading nonzero entry is positive."""
    for v in vec:
        if v != 0:
            return vec if v > 0 else tuple(-x for x in vec)
    return vec


def dot(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise LinalgError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


# --------------------------------------------------------------------------
# monomials


@lru_cache(maxsize=None)
def monomials(rank: int, k: int) -> Tuple[Exponent, ...]:
    """All exponent vectors of total degree ``k`` in ``rank`` variables.

    Ordered by graded lex (x1 > x2 > ...), largest first.
    """
    if k < 0:
        return ()
    if rank == 0:
        return ((),) if k == 0 else ()
    out = []
    for combo in combinations_with_replacement(range(rank), k):
        e = [0] * rank
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(rank: int, k: int) -> Dict[Exponent, int]:
    return {e: i for i, e in enumerate(monomials(rank, k))}


def count_monomials(rank: int, k: int) -> int:
    """Number of degree-k monomials in ``rank`` variables (= dim H^{2k}_T(pt))."""
    if k < 0:
        return 0
    if rank == 0:
        return 1 if k == 0 else 0
    return comb(k + rank - 1, rank - 1)


# --------------------------------------------------------------------------
# polynomials


class MultiPoly:
    """A polynomial over Q in ``rank`` variables.

    Immutable by convention; zero coefficients are never stored.
    """

    __slots__ = ("rank", "terms", "_hash")

    def __init__(self, rank: int, terms: Optional[Mapping[Exponent, object]] = None):
        if rank < 0:
            raise LinalgError("rank must be non-negative")
        clean: Dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != rank or any(x < 0 for x in e):
                raise LinalgError(f"bad exponent {e} for rank {rank}")
            c = to_fraction(c)
            if c != 0:
                clean[e] = clean.get(e, Fraction(0)) + c
                if clean[e] == 0:
                    del clean[e]
        self.rank = rank
        self.terms = clean
        self._hash = None

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> "MultiPoly":
        return cls(rank)

    @classmethod
    def constant(cls, rank: int, c) -> "MultiPoly":
        return cls(rank, {(0,) * rank: c})

    @classmethod
    def variable(cls, rank: int, i: int) -> "MultiPoly":
        e = [0] * rank
        e[i] = 1
        return cls(rank, {tuple(e): 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "MultiPoly":
        """The form sum_i coeffs[i] * x_i."""
        rank = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * rank
            e[i] = 1
            terms[tuple(e)] = c
        return cls(rank, terms)

    @classmethod
    def _raw(cls, rank: int, terms: Dict[Exponent, Fraction]) -> "MultiPoly":
        p = cls.__new__(cls)
        p.rank = rank
        p.terms = terms
        p._hash = None
        return p

    # basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        """Set of polynomial (not cohomological) degrees present."""
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def cohomological_degree(self) -> Optional[int]:
        """2 * total degree for a homogeneous nonzero polynomial; None for 0."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise LinalgError("polynomial is not homogeneous")
        return 2 * degs.pop()

    def homogeneous_part(self, k: int) -> "MultiPoly":
        return MultiPoly._raw(self.rank, {e: c for e, c in self.terms.items() if sum(e) == k})

    def coefficient(self, e: Exponent) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def coefficient_vector(self, k: int) -> List[Fraction]:
        """Coefficients over :func:`monomials` (rank, k); must be homogeneous of degree k."""
        idx = monomial_index(self.rank, k)
        out = [Fraction(0)] * len(idx)
        for e, c in self.terms.items():
            if e not in idx:
                raise LinalgError(f"term {e} is not of degree {k}")
            out[idx[e]] = c
        return out

    @classmethod
    def from_vector(cls, rank: int, k: int, vec: Sequence) -> "MultiPoly":
        mons = monomials(rank, k)
        if len(vec) != len(mons):
            raise LinalgError("coefficient vector has the wrong length")
        return cls._raw(rank, {e: Fraction(c) for e, c in zip(mons, vec) if c != 0})

    # arithmetic ---------------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if not isinstance(other, MultiPoly):
            raise LinalgError(f"expected MultiPoly, got {type(other).__name__}")
        if other.rank != self.rank:
            raise LinalgError(f"rank mismatch: {self.rank} vs {other.rank}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.rank, other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return MultiPoly._raw(self.rank, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = to_fraction(other)
            if c == 0:
                return MultiPoly.zero(self.rank)
            return MultiPoly._raw(self.rank, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    terms.pop(e, None)
        return MultiPoly._raw(self.rank, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise LinalgError("only non-negative integer powers")
        out = MultiPoly.constant(self.rank, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.rank == other.rank and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.rank, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    # substitution -------------------------------------------------------

    def substitute_linear(self, matrix: Sequence[Sequence]) -> "MultiPoly":
        """Replace x_i by sum_j matrix[i][j] * y_j (pullback along a linear map).

        ``matrix`` has ``self.rank`` rows; the result has ``len(matrix[0])``
        variables.
        """
        if len(matrix) != self.rank:
            raise LinalgError("substitution matrix has the wrong number of rows")
        new_rank = len(matrix[0]) if matrix else 0
        images = [MultiPoly.linear_form(row) for row in matrix]
        out = MultiPoly.zero(new_rank)
        cache: Dict[Tuple[int, int], MultiPoly] = {}
        for e, c in self.terms.items():
            term = MultiPoly.constant(new_rank, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    term = term * cache[key]
            out = out + term
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        pt = [to_fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                v *= x ** k
            total += v
        return total

    # display ------------------------------------------------------------

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        names = list(names) if names else [f"x{i + 1}" for i in range(self.rank)]
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(format_fraction(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_fraction(c)}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_string()})"

    __str__ = to_string


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    a._check(b)
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    a._check(b)
    return a * b


def leading_variable(linear: MultiPoly) -> int:
    """Index of the graded-lex leading variable of a nonzero linear form."""
    if linear.is_zero():
        raise LinalgError("division by the zero polynomial")
    if linear.degrees() != {1}:
        raise LinalgError("divisor must be a linear form")
    for i in range(linear.rank):
        e = tuple(1 if j == i else 0 for j in range(linear.rank))
        if e in linear.terms:
            return i
    raise AssertionError("unreachable")


def divmod_linear(dividend: MultiPoly, divisor: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    """Multivariate division by a single linear form under graded lex.

    Returns ``(q, r)`` with ``dividend = q*divisor + r`` and no monomial of
    ``r`` divisible by the leading variable of ``divisor``.
    """
    dividend._check(divisor)
    j = leading_variable(divisor)
    lead = divisor.terms[tuple(1 if i == j else 0 for i in range(divisor.rank))]
    rest = {e: c for e, c in divisor.terms.items() if e[j] == 0}
    work = dict(dividend.terms)
    quotient: Dict[Exponent, Fraction] = {}
    remainder: Dict[Exponent, Fraction] = {}
    # peel off the highest power of x_j first; each step lowers it by one
    while work:
        e = max(work, key=lambda e: (e[j], e))
        c = work.pop(e)
        if e[j] == 0:
            remainder[e] = remainder.get(e, 0) + c
            continue
        qe = tuple(v - 1 if i == j else v for i, v in enumerate(e))
        qc = c / lead
        quotient[qe] = quotient.get(qe, 0) + qc
        for re_, rc in rest.items():
            t = tuple(a + b for a, b in zip(qe, re_))
            v = work.get(t, 0) - qc * rc
            if v:
                work[t] = v
            else:
                work.pop(t, None)
    quotient = {e: c for e, c in quotient.items() if c}
    remainder = {e: c for e, c in remainder.items() if c}
    return MultiPoly._raw(dividend.rank, quotient), MultiPoly._raw(dividend.rank, remainder)


def poly_divides(divisor: MultiPoly, dividend: MultiPoly) -> Tuple[bool, Optional[MultiPoly]]:
    """``(True, q)`` if ``dividend == divisor * q``, else ``(False, None)``."""
    q, r = divmod_linear(dividend, divisor)
    if r.is_zero():
        return True, q
    return False, None


@lru_cache(maxsize=None)
def remainder_matrix(weight: Tuple[int, ...], k: int) -> Tuple[Tuple[Tuple[int, Fraction], ...], ...]:
    """Sparse matrix of ``f -> remainder(f, <weight, x>)`` on degree-k polynomials.

    Row ``i`` lists ``(remainder monomial index, coefficient)`` pairs for the
    i-th monomial of :func:`monomials`.  Remainder monomials are indexed in the
    full degree-k monomial list.
    """
    rank = len(weight)
    ell = MultiPoly.linear_form(weight)
    idx = monomial_index(rank, k)
    rows = []
    for e in monomials(rank, k):
        _, r = divmod_linear(MultiPoly._raw(rank, {e: Fraction(1)}), ell)
        rows.append(tuple(sorted((idx[m], c) for m, c in r.terms.items())))
    return tuple(rows)


# --------------------------------------------------------------------------
# dense/sparse linear algebra

SparseRow = Dict[int, Fraction]


def _to_sparse(row: Sequence) -> SparseRow:
    return {i: to_fraction(v) for i, v in enumerate(row) if v != 0}


def _to_dense(row: SparseRow, n: int) -> Vector:
    out = [Fraction(0)] * n
    for i, v in row.items():
        out[i] = v
    return tuple(out)


class Echelon:
    """Incrementally maintained reduced row echelon form of a set of rows.

    Pivot rows are normalised (pivot entry 1) and every pivot column is zero
    in all other rows.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: Dict[int, SparseRow] = {}  # pivot column -> row

    def reduce(self, row: SparseRow) -> SparseRow:
        row = dict(row)
        for col in sorted(c for c in row if c in self.rows):
            v = row.get(col)
            if not v:
                continue
            for c, x in self.rows[col].items():
                nv = row.get(c, 0) - v * x
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row: SparseRow) -> bool:
        """Insert a row; returns True if it increased the rank."""
        # stored rows vanish on each other's pivots, so one reduction pass suffices
        r = self.reduce(row)
        if not r:
            return False
        piv = min(r)
        inv = 1 / r[piv]
        r = {c: v * inv for c, v in r.items()}
        for prow in self.rows.values():
            v = prow.get(piv)
            if v:
                for c, x in r.items():
                    nv = prow.get(c, 0) - v * x
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
        self.rows[piv] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def basis(self) -> List[Vector]:
        return [_to_dense(self.rows[p], self.ncols) for p in self.pivots]

    def nullspace(self) -> List[Vector]:
        """Basis of {v : row . v = 0 for every row}."""
        free = [c for c in range(self.ncols) if c not in self.rows]
        out = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for p, row in self.rows.items():
                x = row.get(f)
                if x:
                    v[p] = -x
            out.append(tuple(v))
        return out


def rref(rows: Sequence[Sequence], ncols: Optional[int] = None) -> Tuple[List[Vector], List[int]]:
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    if ncols is None:
        if not rows:
            raise LinalgError("cannot infer column count of an empty matrix")
        ncols = len(rows[0])
    ech = Echelon(ncols)
    for r in rows:
        if len(r) != ncols:
            raise LinalgError("ragged matrix")
        ech.add(_to_sparse(r))
    return ech.basis(), ech.pivots


def rank(rows: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols)[0])


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[Vector]:
    """Right kernel of the matrix with the given rows."""
    ech = Echelon(ncols)
    for r in rows:
        if len(r) != ncols:
            raise LinalgError("ragged matrix")
        ech.add(_to_sparse(r))
    return ech.nullspace()


def sparse_nullspace(rows: Iterable[SparseRow], ncols: int) -> List[Vector]:
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return ech.nullspace()


def solve_linear(A: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """One exact solution x of A x = b, or None if the system is inconsistent."""
    if len(A) != len(b):
        raise LinalgError("dimension mismatch between A and b")
    if not A:
        return ()
    n = len(A[0])
    ech = Echelon(n + 1)
    for row, rhs in zip(A, b):
        if len(row) != n:
            raise LinalgError("ragged matrix")
        ech.add(_to_sparse(list(row) + [rhs]))
    if n in ech.rows:
        return None
    x = [Fraction(0)] * n
    for p, row in ech.rows.items():
        x[p] = row.get(n, Fraction(0))
    return tuple(x)


def mat_vec(A: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in A)


def vec_mat(v: Sequence, A: Sequence[Sequence]) -> Vector:
    """Row vector times matrix."""
    if len(v) != len(A):
        raise LinalgError("dimension mismatch")
    if not A:
        return ()
    out = [Fraction(0)] * len(A[0])
    for c, row in zip(v, A):
        if c:
            for j, x in enumerate(row):
                if x:
                    out[j] += c * x
    return tuple(out)


class Subspace:
    """A subspace of Q^n, stored by a reduced echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Sequence[Vector] = (), pivots: Sequence[int] = ()):
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(b) for b in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, vectors: Sequence[Sequence], ambient_dim: Optional[int] = None) -> "Subspace":
        if ambient_dim is None:
            if not vectors:
                raise LinalgError("ambient dimension needed for an empty span")
            ambient_dim = len(vectors[0])
        for v in vectors:
            if len(v) != ambient_dim:
                raise LinalgError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        ech = Echelon(ambient_dim)
        for v in vectors:
            ech.add(_to_sparse(v))
        return cls(ambient_dim, ech.basis(), ech.pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(
            [tuple(Fraction(int(i == j)) for j in range(ambient_dim)) for i in range(ambient_dim)],
            ambient_dim,
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim)
        for p, b in zip(self.pivots, self.basis):
            ech.rows[p] = _to_sparse(b)
        return ech

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise LinalgError("dimension mismatch")
        return not self._echelon().reduce(_to_sparse(v))

    __contains__ = contains

    def residue(self, v: Sequence) -> Vector:
        """v reduced modulo the subspace; zero exactly on pivot columns."""
        return _to_dense(self._echelon().reduce(_to_sparse(v)), self.ambient_dim)

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coefficients of v in ``self.basis``, or None if v is not in the span."""
        if not self.contains(v):
            return None
        return tuple(to_fraction(v[p]) for p in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def intersection(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise LinalgError("dimension mismatch")
        # v = sum a_i s_i = sum b_j o_j  ->  nullspace of [S; -O]^T
        rows_s, rows_o = list(self.basis), list(other.basis)
        m = len(rows_s) + len(rows_o)
        if not rows_s or not rows_o:
            return Subspace.zero(self.ambient_dim)
        cols = [
            [rows_s[i][c] for i in range(len(rows_s))] + [-rows_o[j][c] for j in range(len(rows_o))]
            for c in range(self.ambient_dim)
        ]
        sols = nullspace(cols, m)
        vecs = [vec_mat(s[: len(rows_s)], rows_s) for s in sols]
        return Subspace.span(vecs, self.ambient_dim)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def subspace_span(vectors: Sequence[Sequence], ambient_dim: Optional[int] = None) -> Subspace:
    return Subspace.span(vectors, ambient_dim)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise LinalgError(f"dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")
    return Subspace.span(list(a.basis) + list(b.basis), a.ambient_dim)


def subspace_member(v: Sequence, s: Subspace) -> bool:
    return s.contains(v)


def integer_normal(vectors: Sequence[Sequence], dim: int) -> Optional[Tuple[int, ...]]:
    """Primitive integer vector orthogonal to ``vectors`` if their span has codimension 1."""
    ns = nullspace(vectors, dim) if vectors else [
        tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)
    ]
    if len(ns) != 1:
        return None
    return canonical_sign(primitive(ns[0]))


def in_convex_hull(point: Sequence, points: Sequence[Sequence]) -> bool:
    """Exact test of ``point`` in conv(points), via Carathéodory over affinely independent subsets."""
    from itertools import combinations

    pt = tuple(to_fraction(v) for v in point)
    pts = sorted({tuple(to_fraction(v) for v in p) for p in points})
    if not pts:
        return False
    n = len(pt)
    for size in range(1, min(len(pts), n + 1) + 1):
        for subset in combinations(pts, size):
            base = subset[0]
            if size == 1:
                if base == pt:
                    return True
                continue
            diffs = [tuple(a - b for a, b in zip(s, base)) for s in subset[1:]]
            if rank(diffs, n) != size - 1:
                continue
            # solve sum c_i diffs_i = pt - base
            A = [[diffs[i][r] for i in range(size - 1)] for r in range(n)]
            rhs = [a - b for a, b in zip(pt, base)]
            sol = solve_linear(A, rhs)
            if sol is not None and all(c >= 0 for c in sol) and sum(sol) <= 1:
                return True
    return False
