"""Exact linear algebra over the integers.

Sparse integer matrices, Smith normal form, cokernels and homology of
two-step chain complexes.  All arithmetic uses Python's arbitrary-precision
integers; nothing is ever done in floating point or modular shortcut.

The Smith normal form routine works sparsely while the matrix is large and
sparse (peeling unit pivots, then compressing the column lattice) and falls
back to a classical dense elimination once the remaining block is small or
dense.  Pivots are chosen by minimal absolute value with a fewest-nonzeros
tie-break, so runs are deterministic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd, prod

# Remaining blocks at or below this dimension (or above this density) are
# handled by the dense elimination.
_DENSE_DIM = 64
_DENSE_DENSITY = 0.2


class NotAComplex(ValueError):
    """Raised when two maps that should compose to zero do not."""

    def __init__(self, column, image):
        self.column = column
        self.image = image
        super().__init__(
            f"boundary composite is nonzero on basis column {column}: {image}"
        )


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """A finitely generated abelian group Z^free + Z/d1 + ... with d1 | d2 | ...

    Torsion entries are the invariant factors, each >= 2, in divisibility
    order.  The trivial group is (0, ()).
    """

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion invariant {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors not a divisibility chain: {a}, {b}")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self):
        """Number of elements, or None when the group is infinite."""
        if self.free_rank:
            return None
        return prod(self.torsion) if self.torsion else 1

    def annihilated_by(self, n: int) -> bool:
        """True when n * G = 0."""
        return self.free_rank == 0 and all(n % d == 0 for d in self.torsion)

    def torsion_annihilated_by(self, n: int) -> bool:
        return all(n % d == 0 for d in self.torsion)

    def torsion_divides_power_of(self, t: int) -> bool:
        """True when every torsion invariant divides some power of t."""
        for d in self.torsion:
            while True:
                g = gcd(d, t)
                if g == 1:
                    break
                while d % g == 0:
                    d //= g
            if d != 1:
                return False
        return True

    def torsion_prime_power(self, p: int) -> bool:
        """True when every torsion invariant is a power of the prime p."""
        for d in self.torsion:
            while d % p == 0:
                d //= p
            if d != 1:
                return False
        return True

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


class SparseIntMatrix:
    """An integer matrix stored as a dict of nonzero entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        self.rows = rows
        self.cols = cols
        self._data: dict[tuple[int, int], int] = {}
        if data:
            for (r, c), v in (data.items() if isinstance(data, dict) else data):
                self.set(r, c, v)

    @classmethod
    def from_dense(cls, dense) -> "SparseIntMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        m = cls(rows, cols)
        for r, row in enumerate(dense):
            if len(row) != cols:
                raise ValueError("ragged dense matrix")
            for c, v in enumerate(row):
                if v:
                    m._data[(r, c)] = int(v)
        return m

    @classmethod
    def from_triples(cls, rows: int, cols: int, triples) -> "SparseIntMatrix":
        m = cls(rows, cols)
        for r, c, v in triples:
            m.add(r, c, v)
        return m

    def set(self, r: int, c: int, v: int):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError((r, c))
        if v:
            self._data[(r, c)] = int(v)
        else:
            self._data.pop((r, c), None)

    def add(self, r: int, c: int, v: int):
        """Accumulate v into entry (r, c)."""
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError((r, c))
        w = self._data.get((r, c), 0) + v
        if w:
            self._data[(r, c)] = w
        else:
            self._data.pop((r, c), None)

    def get(self, r: int, c: int) -> int:
        return self._data.get((r, c), 0)

    @property
    def nnz(self) -> int:
        return len(self._data)

    def entries(self) -> list[tuple[int, int, int]]:
        """Nonzero entries as sorted (row, col, value) triples."""
        return [(r, c, self._data[(r, c)]) for r, c in sorted(self._data)]

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._data.items():
            dense[r][c] = v
        return dense

    def columns(self) -> dict[int, dict[int, int]]:
        """Column-major view {c: {r: v}}."""
        cols: dict[int, dict[int, int]] = {}
        for (r, c), v in self._data.items():
            cols.setdefault(c, {})[r] = v
        return cols

    def is_zero(self) -> bool:
        return not self._data

    def __eq__(self, other):
        return (
            isinstance(other, SparseIntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __repr__(self):
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def dump_matrix(m: SparseIntMatrix) -> str:
    """Serialize in the 'rows cols nnz' header + one 'r c v' line per entry format."""
    lines = [f"{m.rows} {m.cols} {m.nnz}"]
    lines.extend(f"{r} {c} {v}" for r, c, v in m.entries())
    return "\n".join(lines) + "\n"


def load_matrix(text: str) -> SparseIntMatrix:
    """Parse the dump_matrix format; '#' starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError(f"bad header {lines[0]!r}, expected 'rows cols nnz'")
    rows, cols, nnz = (int(t) for t in head)
    if len(lines) - 1 != nnz:
        raise ValueError(f"header announces {nnz} entries, found {len(lines) - 1}")
    m = SparseIntMatrix(rows, cols)
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"bad entry line {line!r}")
        r, c, v = (int(t) for t in parts)
        if v == 0:
            raise ValueError(f"explicit zero entry at ({r}, {c})")
        m.set(r, c, v)
    return m


# ---------------------------------------------------------------------------
# dense Smith normal form


def _dense_snf(a: list[list[int]], want_transforms: bool):
    """In-place Smith normal form of a dense matrix.

    Returns (diag, U, V) with U*A*V diagonal; diag lists the nonzero
    diagonal entries in divisibility order.  U and V are None unless
    requested.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)] if want_transforms else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if want_transforms else None

    def row_op(i, j, q):  # row_i -= q * row_j
        ai, aj = a[i], a[j]
        for k in range(n):
            if aj[k]:
                ai[k] -= q * aj[k]
        if U is not None:
            ui, uj = U[i], U[j]
            for k in range(m):
                if uj[k]:
                    ui[k] -= q * uj[k]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in a:
            if row[j]:
                row[i] -= q * row[j]
        if V is not None:
            for row in V:
                if row[j]:
                    row[i] -= q * row[j]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            if U is not None:
                U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            if V is not None:
                for row in V:
                    row[i], row[j] = row[j], row[i]

    def negate_row(i):
        a[i] = [-v for v in a[i]]
        if U is not None:
            U[i] = [-v for v in U[i]]

    t = 0
    while t < min(m, n):
        # pivot: minimal |value|, then fewest nonzeros in its row+column,
        # then smallest (row, col)
        best = None
        for i in range(t, m):
            ai = a[i]
            for j in range(t, n):
                v = ai[j]
                if v:
                    key0 = abs(v)
                    if best is not None and key0 > best[0]:
                        continue
                    nz = sum(1 for k in range(t, n) if ai[k]) + sum(
                        1 for k in range(t, m) if a[k][j]
                    )
                    key = (key0, nz, i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, m):
                v = a[i][t]
                if v:
                    q = v // a[t][t]
                    if q:
                        row_op(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # clear the pivot row
            for j in range(t + 1, n):
                v = a[t][j]
                if v:
                    q = v // a[t][t]
                    if q:
                        col_op(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide every remaining entry
            p = a[t][t]
            offender = None
            for i in range(t + 1, m):
                ai = a[i]
                for j in range(t + 1, n):
                    if ai[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)  # add offending row into pivot row
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    diag = [a[i][i] for i in range(t)]
    return diag, U, V


# ---------------------------------------------------------------------------
# sparse reduction helpers


def _combine(dst: dict, src: dict, mult: int):
    """dst += mult * src for sparse vectors as dicts."""
    if not mult:
        return
    for k, v in src.items():
        w = dst.get(k, 0) + mult * v
        if w:
            dst[k] = w
        else:
            del dst[k]


def _column_lattice(columns) -> list[dict[int, int]]:
    """Reduce a stream of sparse columns to a triangular generating set.

    Each returned vector owns its minimal support row; the set spans the
    same column lattice as the input.  Exact (xgcd combinations only).
    """
    basis: dict[int, dict[int, int]] = {}
    for col in columns:
        w = dict(col)
        while w:
            r = min(w)
            pivot = basis.get(r)
            if pivot is None:
                basis[r] = w
                break
            A = pivot[r]
            b = w[r]
            if b % A == 0:
                _combine(w, pivot, -(b // A))
            else:
                g, s, t = _xgcd(A, b)
                new_pivot = {}
                for k in set(pivot) | set(w):
                    v = s * pivot.get(k, 0) + t * w.get(k, 0)
                    if v:
                        new_pivot[k] = v
                new_w = {}
                for k in set(pivot) | set(w):
                    v = (A // g) * w.get(k, 0) - (b // g) * pivot.get(k, 0)
                    if v:
                        new_w[k] = v
                basis[r] = new_pivot
                w = new_w
    return [basis[r] for r in sorted(basis)]


def _xgcd(a: int, b: int):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _snf_diagonal_sparse(m: SparseIntMatrix) -> list[int]:
    """Nonzero Smith diagonal of m, computed without transform matrices."""
    rows: dict[int, dict[int, int]] = {}
    colrows: dict[int, set[int]] = {}
    for (r, c), v in m._data.items():
        rows.setdefault(r, {})[c] = v
        colrows.setdefault(c, set()).add(r)

    ones = 0
    # heap of (row nnz at push time, row index); stale entries are re-checked
    heap = [(len(cs), r) for r, cs in rows.items()]
    heapq.heapify(heap)

    def active_dims():
        return len(rows), len(colrows)

    def density():
        nr, nc = active_dims()
        if not nr or not nc:
            return 0.0
        return sum(len(cs) for cs in rows.values()) / (nr * nc)

    while rows:
        nr, nc = active_dims()
        if min(nr, nc) <= _DENSE_DIM or density() > _DENSE_DENSITY:
            break
        # pick a unit pivot from the sparsest available row
        pivot = None
        while heap:
            nnz, r = heapq.heappop(heap)
            cur = rows.get(r)
            if cur is None:
                continue
            if len(cur) != nnz:
                heapq.heappush(heap, (len(cur), r))
                continue
            units = [(len(colrows[c]), c) for c, v in cur.items() if v in (1, -1)]
            if units:
                pivot = (r, min(units)[1])
                heapq.heappush(heap, (nnz, r))  # keep row discoverable
            else:
                # no unit entry in the sparsest row: scan everything once
                for r2 in sorted(rows):
                    cur2 = rows[r2]
                    units = [
                        (len(colrows[c]), c) for c, v in cur2.items() if v in (1, -1)
                    ]
                    if units:
                        pivot = (r2, min(units)[1])
                        break
                heapq.heappush(heap, (nnz, r))
            break
        if pivot is None:
            break
        pr, pc = pivot
        prow = rows[pr]
        pval = prow[pc]
        # clear column pc using the unit pivot row
        for r2 in sorted(colrows[pc]):
            if r2 == pr:
                continue
            row2 = rows[r2]
            q = row2[pc] * pval  # row2 -= q * prow since pval is +-1
            for c, v in prow.items():
                w = row2.get(c, 0) - q * v
                if w:
                    row2[c] = w
                    colrows.setdefault(c, set()).add(r2)
                else:
                    row2.pop(c, None)
                    cs = colrows.get(c)
                    if cs is not None:
                        cs.discard(r2)
                        if not cs:
                            del colrows[c]
            if not row2:
                del rows[r2]
            else:
                heapq.heappush(heap, (len(row2), r2))
        # delete pivot row and column
        for c in prow:
            cs = colrows.get(c)
            if cs is not None:
                cs.discard(pr)
                if not cs:
                    del colrows[c]
        del rows[pr]
        ones += 1

    if not rows:
        return [1] * ones

    # compress the residual column lattice, then finish densely
    residual_cols: dict[int, dict[int, int]] = {}
    for r, cs in rows.items():
        for c, v in cs.items():
            residual_cols.setdefault(c, {})[r] = v
    lattice = _column_lattice(residual_cols[c] for c in sorted(residual_cols))
    if not lattice:
        return [1] * ones
    row_ids = sorted({r for vec in lattice for r in vec})
    ridx = {r: i for i, r in enumerate(row_ids)}
    dense = [[0] * len(lattice) for _ in row_ids]
    for j, vec in enumerate(lattice):
        for r, v in vec.items():
            dense[ridx[r]][j] = v
    diag, _, _ = _dense_snf(dense, want_transforms=False)
    return [1] * ones + diag


def smith_normal_form(m: SparseIntMatrix, transforms: bool = False):
    """Smith normal form of m.

    Without transforms, returns the list of nonzero diagonal entries
    d1 | d2 | ... With transforms=True, returns (diag, U, V) where U and V
    are unimodular dense matrices with U * m * V diagonal.
    """
    if transforms:
        diag, U, V = _dense_snf(m.to_dense(), want_transforms=True)
        return diag, U, V
    return _snf_diagonal_sparse(m)


def rank(m: SparseIntMatrix) -> int:
    """Rank over Z (equivalently over Q), computed exactly."""
    lattice = _column_lattice(col for _, col in sorted(m.columns().items()))
    return len(lattice)


def cokernel(m: SparseIntMatrix) -> AbelianGroupInvariants:
    """Invariants of Z^rows / (column span of m)."""
    diag = _snf_diagonal_sparse(m)
    torsion = tuple(d for d in diag if d > 1)
    return AbelianGroupInvariants(m.rows - len(diag), torsion)


def kernel_rank(m: SparseIntMatrix) -> int:
    return m.cols - rank(m)


def compose_is_zero(outer: SparseIntMatrix, inner: SparseIntMatrix):
    """Check outer * inner == 0; returns None or (column, image dict)."""
    if inner.rows != outer.cols:
        raise ValueError("dimension mismatch in composite")
    outer_cols = outer.columns()
    for c, col in sorted(inner.columns().items()):
        acc: dict[int, int] = {}
        for k, v in col.items():
            oc = outer_cols.get(k)
            if oc:
                _combine(acc, oc, v)
        if acc:
            return c, acc
    return None


def homology_at(
    boundary_in: SparseIntMatrix, boundary_out: SparseIntMatrix
) -> AbelianGroupInvariants:
    """Invariants of ker(boundary_out) / im(boundary_in).

    boundary_in maps C_{k+1} -> C_k and boundary_out maps C_k -> C_{k-1};
    the carrier C_k must match (boundary_in.rows == boundary_out.cols) and
    the composite must vanish.

    Since ker(boundary_out) is a pure submodule of the carrier containing
    im(boundary_in), the torsion of the quotient equals the torsion of
    coker(boundary_in) and the free rank is dim C_k - rank(out) - rank(in).
    """
    if boundary_in.rows != boundary_out.cols:
        raise ValueError(
            f"carrier mismatch: in has {boundary_in.rows} rows, "
            f"out has {boundary_out.cols} cols"
        )
    bad = compose_is_zero(boundary_out, boundary_in)
    if bad is not None:
        raise NotAComplex(bad[0], bad[1])
    diag_in = _snf_diagonal_sparse(boundary_in)
    rank_out = rank(boundary_out)
    free = boundary_in.rows - rank_out - len(diag_in)
    torsion = tuple(d for d in diag_in if d > 1)
    return AbelianGroupInvariants(free, torsion)


def det(a: list[list[int]]) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
