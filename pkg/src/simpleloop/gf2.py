"""Dense linear algebra over GF(2) with rows stored as integer bitmasks.

Bit i of a row integer is the entry in column i.  All operations are
deterministic: pivots are always chosen as the first nonzero entry in
column order, so echelon forms, kernels and quotient coordinates come
out identical from run to run.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "GF2Matrix",
    "dot",
    "rank",
    "rref",
    "kernel_basis",
    "matmul",
    "QuotientMap",
    "quotient_coordinates",
]


def dot(x: int, y: int) -> int:
    """Parity of the overlap of two bitmask vectors."""
    return (x & y).bit_count() & 1


@dataclass(frozen=True)
class GF2Matrix:
    """Matrix over GF(2); rows[i] is an integer bitmask of width cols."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows != len(self.data):
            raise ValueError("row count does not match data")
        mask = (1 << self.cols) - 1
        for r in self.data:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the column range")

    def row(self, i: int) -> int:
        return self.data[i]

    def column(self, j: int) -> int:
        out = 0
        for i, r in enumerate(self.data):
            if (r >> j) & 1:
                out |= 1 << i
        return out

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))


def rref(rows: list[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column per row), pivots in
    increasing column order.
    """
    rows = [r for r in rows]
    out: list[int] = []
    pivots: list[int] = []
    for col in range(n_cols):
        bit = 1 << col
        src = None
        for i, r in enumerate(rows):
            if r & bit:
                src = i
                break
        if src is None:
            continue
        piv = rows.pop(src)
        rows = [r ^ piv if r & bit else r for r in rows]
        out = [r ^ piv if r & bit else r for r in out]
        out.append(piv)
        pivots.append(col)
        if not rows:
            break
    return out, pivots


def rank(m: GF2Matrix) -> int:
    """Rank of the matrix."""
    return len(rref(list(m.data), m.cols)[0])


def kernel_basis(m: GF2Matrix) -> list[int]:
    """Basis of the right kernel {x : M x = 0}, as column bitmasks.

    One basis vector per free column, in increasing column order;
    empty list when the kernel is trivial.
    """
    reduced, pivots = rref(list(m.data), m.cols)
    pivot_set = set(pivots)
    basis: list[int] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, piv in zip(reduced, pivots):
            if (row >> free) & 1:
                v |= 1 << piv
        basis.append(v)
    return basis


def matmul(a: GF2Matrix, b: GF2Matrix) -> GF2Matrix:
    """Matrix product over GF(2)."""
    if a.cols != b.rows:
        raise ValueError("inner dimensions do not match")
    bcols = [b.column(j) for j in range(b.cols)]
    data = []
    for i in range(a.rows):
        r = a.data[i]
        out = 0
        for j, c in enumerate(bcols):
            if dot(r, c):
                out |= 1 << j
        data.append(out)
    return GF2Matrix(a.rows, b.cols, tuple(data))


class QuotientMap:
    """Coordinates on a quotient space cycles/boundaries over GF(2).

    Holds an echelon structure built from a spanning set of the
    boundary subspace followed by the cycle basis; each echelon row
    carries a tag recording which quotient coordinates it contributes.
    Mapping a vector reduces it against the echelon and XORs the tags,
    so the map vanishes exactly on the boundary span and is a bijection
    from the quotient onto bitmasks of width ``dim``.
    """

    def __init__(self, cycles: list[int], boundaries: list[int], n_cols: int):
        self.n_cols = n_cols
        cyc_ech, _ = rref([c for c in cycles if c], n_cols)
        for b in boundaries:
            if _reduce(b, [(r, 0) for r in cyc_ech])[0]:
                raise ValueError("boundary vector outside the cycle span")
        # entries: (vector, tag) kept sorted by pivot = lowest set bit
        self._entries: list[tuple[int, int]] = []
        for b in boundaries:
            self._insert(b, 0)
        self.dim = 0
        for z in cycles:
            if self._insert(z, 1 << self.dim):
                self.dim += 1
        self._basis: list[int] | None = None

    def _insert(self, vec: int, tag: int) -> bool:
        rem, t = _reduce(vec, self._entries)
        if t:
            tag ^= t
        if rem == 0:
            return False
        self._entries.append((rem, tag))
        self._entries.sort(key=lambda e: e[0] & -e[0])
        return True

    def coords(self, vec: int) -> int:
        """Quotient coordinates of a cycle vector; rejects non-cycles."""
        rem, tag = _reduce(vec, self._entries)
        if rem:
            raise ValueError("vector is not in the cycle span")
        return tag

    def basis_cycles(self) -> list[int]:
        """Representative cycles c_j with coords(c_j) == 1 << j."""
        if self._basis is None:
            rows = [(e, t) for e, t in self._entries if t]
            rows.sort(key=lambda et: et[1].bit_length())
            basis: list[int] = []
            for j, (vec, tag) in enumerate(rows):
                for k in range(tag.bit_length() - 1):
                    if (tag >> k) & 1:
                        vec ^= basis[k]
                basis.append(vec)
            self._basis = basis
        return self._basis


def _reduce(vec: int, entries: list[tuple[int, int]]) -> tuple[int, int]:
    """Reduce vec against echelon entries; returns (remainder, tag sum)."""
    tag = 0
    for row, t in entries:
        if vec & (row & -row):
            vec ^= row
            tag ^= t
    return vec, tag


def quotient_coordinates(cycles: list[int], boundaries: list[int], n_cols: int) -> QuotientMap:
    """Build the coordinate map on cycles modulo boundaries.

    Args:
        cycles: basis of the cycle subspace, as bitmask vectors.
        boundaries: spanning set of the boundary subspace; must lie in
            the span of ``cycles``.
        n_cols: ambient dimension.

    Returns:
        A QuotientMap of dimension dim(cycles) - dim(boundaries).
    """
    return QuotientMap(cycles, boundaries, n_cols)
