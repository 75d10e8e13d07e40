"""Lattices with integer Gram matrices and their Coxeter elements.

A Lattice is an ordered labelled basis together with the symmetric matrix
of pairings <e_i, e_j>.  Basis vectors squaring to -2 are roots; the
reflection in a root e is s_e(x) = x + <x,e> e.  The Coxeter element of
the basis is the product of the reflections in basis order, rightmost
factor acting first.  All matrices act on column coordinate vectors and
everything is exact integer arithmetic on plain lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotARoot, NotUnitriangular

Matrix = list  # list[list[int]], rows
Vector = list  # list[int]


# ---------------------------------------------------------------------------
# small exact matrix helpers


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(m: Matrix, v: Sequence[int]) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def mat_transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_det(m: Matrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class Lattice:
    """Ordered labelled basis plus symmetric integer Gram matrix."""

    labels: tuple
    gram: tuple  # tuple of tuples, rows of the pairing matrix

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "gram", tuple(tuple(row) for row in self.gram))
        n = len(self.gram)
        if len(self.labels) != n:
            raise ValueError("label count does not match Gram size")
        for i, row in enumerate(self.gram):
            if len(row) != n:
                raise ValueError("Gram matrix is not square")
            for j in range(i):
                if row[j] != self.gram[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i},{j})")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, i: int, j: int) -> int:
        return self.gram[i][j]

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        """<x, y> for coordinate vectors x, y."""
        return sum(xi * sum(g * yj for g, yj in zip(row, y)) for xi, row in zip(x, self.gram))

    def is_root(self, i: int) -> bool:
        return self.gram[i][i] == -2

    def require_root(self, i: int):
        if not self.is_root(i):
            raise NotARoot(f"basis vector {self.labels[i]!r} has self-pairing {self.gram[i][i]}, not -2")

    def gram_rows(self) -> Matrix:
        return [list(row) for row in self.gram]

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "gram": [list(row) for row in self.gram]}

    @classmethod
    def from_json(cls, obj: dict) -> "Lattice":
        if not isinstance(obj, dict) or "gram" not in obj:
            raise ValueError("expected an object with a 'gram' field")
        gram = obj["gram"]
        labels = obj.get("labels") or [f"e{i + 1}" for i in range(len(gram))]
        return cls(tuple(labels), tuple(tuple(int(x) for x in row) for row in gram))


# ---------------------------------------------------------------------------
# reflections and Coxeter elements


def reflection_matrix(lat: Lattice, i: int) -> Matrix:
    """Matrix of s_{e_i}(x) = x + <x, e_i> e_i on column coordinates.

    Only row i differs from the identity: S[i][j] = delta_ij + <e_i, e_j>.
    """
    lat.require_root(i)
    n = lat.rank
    out = identity_matrix(n)
    row = out[i]
    for j, g in enumerate(lat.gram[i]):
        row[j] += g
    return out


def reflection_product(lat: Lattice, indices: Sequence[int]) -> Matrix:
    """Product s_{e_{i1}} ... s_{e_{ik}}, rightmost reflection acting first.

    Left-multiplying an accumulator by s_{e_i} only rewrites its row i,
    so the whole product costs O(k n^2).
    """
    n = lat.rank
    out = identity_matrix(n)
    for i in reversed(indices):
        lat.require_root(i)
        grow = lat.gram[i]
        new_row = out[i][:]
        for j, g in enumerate(grow):
            if g:
                row_j = out[j]
                for c in range(n):
                    new_row[c] += g * row_j[c]
        out[i] = new_row
    return out


def coxeter_matrix(lat: Lattice, basis: Sequence[int] | None = None) -> Matrix:
    """Coxeter element of the (full) root basis, rightmost factor first."""
    order = list(basis) if basis is not None else list(range(lat.rank))
    if sorted(order) != list(range(lat.rank)):
        raise ValueError("basis must cover all basis elements exactly once")
    return reflection_product(lat, order)


def coxeter_inverse_matrix(lat: Lattice, basis: Sequence[int] | None = None) -> Matrix:
    """Inverse Coxeter element: the same reflections in reversed order."""
    order = list(basis) if basis is not None else list(range(lat.rank))
    if sorted(order) != list(range(lat.rank)):
        raise ValueError("basis must cover all basis elements exactly once")
    return reflection_product(lat, order[::-1])


def asym_form_matrix(lat: Lattice) -> Matrix:
    """Upper-triangular form A with (e_i,e_j) = -<e_i,e_j> for i<j, 1 on the
    diagonal and 0 below; satisfies A + A^t = -gram."""
    n = lat.rank
    out = []
    for i in range(n):
        lat.require_root(i)
        row = [0] * n
        row[i] = 1
        grow = lat.gram[i]
        for j in range(i + 1, n):
            row[j] = -grow[j]
        out.append(row)
    return out


def unitriangular_inverse(a: Matrix) -> Matrix:
    """Exact inverse of an upper-triangular matrix with unit diagonal."""
    n = len(a)
    for i in range(n):
        if a[i][i] != 1 or any(a[i][j] for j in range(i)):
            raise NotUnitriangular("matrix is not upper-triangular with unit diagonal")
    inv = identity_matrix(n)
    # back substitution, one column of the inverse at a time
    for c in range(n):
        for r in range(c - 1, -1, -1):
            inv[r][c] = -sum(a[r][k] * inv[k][c] for k in range(r + 1, c + 1))
    return inv


def coxeter_via_form(a: Matrix) -> Matrix:
    """The Coxeter element as -A^{-1} A^t for the upper-triangular form A."""
    inv = unitriangular_inverse(a)
    at = mat_transpose(a)
    return [[-x for x in row] for row in mat_mul(inv, at)]


# ---------------------------------------------------------------------------
# characteristic polynomial and orders


def char_poly(m: Matrix) -> list:
    """Monic characteristic polynomial det(t*I - m), ascending coefficients.

    Division-free Berkowitz method: p_{k+1} = T_{k+1} p_k where the Toeplitz
    column is (1, -a, -R C, -R M C, -R M^2 C, ...) built from the k-th
    principal block M, row R, column C and corner a.  Exact over the
    integers, no pivoting.
    """
    n = len(m)
    p = [1]  # char poly of the 0x0 block, highest degree first
    for k in range(n):
        row = m[k]
        a = row[k]
        r = row[:k]
        c = [m[i][k] for i in range(k)]
        block = [mi[:k] for mi in m[:k]]
        toep = [1, -a]
        v = c
        for j in range(k):
            toep.append(-sum(x * y for x, y in zip(r, v)))
            if j + 1 < k:
                v = [sum(x * y for x, y in zip(bi, v)) for bi in block]
        out = [0] * (k + 2)
        for i, ti in enumerate(toep):
            if ti:
                jmax = min(len(p), k + 2 - i)
                for j in range(jmax):
                    out[i + j] += ti * p[j]
        p = out
    p.reverse()
    return p


def matrix_order(m: Matrix, cap: int = 1000):
    """Least k <= cap with m^k = I, or None if the cap is exceeded.

    The cap keeps infinite-order (hyperbolic) Coxeter elements from
    looping forever.
    """
    n = len(m)
    ident = identity_matrix(n)
    power = [row[:] for row in m]
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = mat_mul(m, power)
    return None


# ---------------------------------------------------------------------------
# radical and quotient


def _kernel_transform(gram: Matrix):
    """Column-reduce gram by unimodular operations.

    Returns (u, uinv, rank): gram @ u has exactly its last n-rank columns
    zero, u is unimodular and uinv its exact inverse.
    """
    n = len(gram)
    h = [row[:] for row in gram]
    u = identity_matrix(n)
    uinv = identity_matrix(n)

    def swap_cols(i, j):
        if i == j:
            return
        for row in h:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]
        uinv[i], uinv[j] = uinv[j], uinv[i]

    def add_col(dst, src, q):
        # column dst -= q * column src; inverse tracks row src += q * row dst
        if q == 0:
            return
        for row in h:
            row[dst] -= q * row[src]
        for row in u:
            row[dst] -= q * row[src]
        uinv[src] = [x + q * y for x, y in zip(uinv[src], uinv[dst])]

    col = 0
    for row in range(n):
        if all(h[row][c] == 0 for c in range(col, n)):
            continue
        while True:
            pivot_col = min(
                (c for c in range(col, n) if h[row][c] != 0),
                key=lambda c: abs(h[row][c]),
            )
            swap_cols(col, pivot_col)
            pivot = h[row][col]
            clean = True
            for c in range(col + 1, n):
                if h[row][c]:
                    add_col(c, col, h[row][c] // pivot)
                    if h[row][c]:
                        clean = False
            if clean:
                break
        col += 1
    return u, uinv, col


def radical_basis(lat: Lattice) -> list:
    """Basis of {x : <x,y> = 0 for all y}, as primitive coordinate vectors.

    Computed as the integer kernel of the Gram matrix; the generators come
    out as columns of a unimodular matrix, hence content 1.  Each is
    normalised so its first nonzero entry is positive.
    """
    n = lat.rank
    u, _, rank = _kernel_transform(lat.gram_rows())
    out = []
    for c in range(rank, n):
        vec = [u[r][c] for r in range(n)]
        lead = next(x for x in vec if x != 0)
        if lead < 0:
            vec = [-x for x in vec]
        out.append(vec)
    return out


@dataclass(frozen=True)
class RadicalQuotient:
    """Quotient of a lattice by its radical.

    ``projection`` (q x n) sends coordinates to quotient coordinates, and
    ``lift`` (n x q) picks coordinates of lifted basis vectors; any
    Gram-preserving map M descends to projection @ M @ lift.
    """

    lattice: Lattice
    projection: tuple
    lift: tuple

    def induced(self, m: Matrix) -> Matrix:
        proj = [list(row) for row in self.projection]
        lift = [list(row) for row in self.lift]
        return mat_mul(mat_mul(proj, m), lift)

    def project(self, v: Sequence[int]) -> Vector:
        return mat_vec([list(row) for row in self.projection], v)


def quotient_by_radical(lat: Lattice) -> RadicalQuotient:
    """Quotient lattice with the induced (nondegenerate) form.

    For a nondegenerate input this is the identity projection on the same
    lattice.
    """
    n = lat.rank
    u, uinv, rank = _kernel_transform(lat.gram_rows())
    if rank == n:
        ident = tuple(tuple(row) for row in identity_matrix(n))
        return RadicalQuotient(lat, ident, ident)
    lift = [[u[r][c] for c in range(rank)] for r in range(n)]
    projection = [uinv[r][:] for r in range(rank)]
    gram = [
        [lat.pairing([row[i] for row in lift], [row[j] for row in lift]) for j in range(rank)]
        for i in range(rank)
    ]
    labels = tuple(f"q{i + 1}" for i in range(rank))
    quot = Lattice(labels, tuple(tuple(row) for row in gram))
    return RadicalQuotient(quot, tuple(tuple(r) for r in projection), tuple(tuple(r) for r in lift))
