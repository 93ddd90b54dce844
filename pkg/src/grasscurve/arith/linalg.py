"""Exact linear algebra on dense scalar matrices (lists of rows of mpq)."""

from __future__ import annotations

from .scalar import ONE, ZERO, Q


def identity(n: int) -> list[list]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> list[list]:
    return [[ZERO] * c for _ in range(r)]


def matmul(a, b) -> list[list]:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in bt] for row in a]


def matadd(a, b) -> list[list]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a, b) -> list[list]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(a, c) -> list[list]:
    c = Q(c)
    return [[x * c for x in row] for row in a]


def transpose(a) -> list[list]:
    return [list(col) for col in zip(*a)]


def rref(rows) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = ONE / m[r][c]
        pivot_row = [x * inv for x in m[r]]
        m[r] = pivot_row
        nz = [j for j in range(c, ncols) if pivot_row[j]]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    for j in nz:
                        row[j] -= f * pivot_row[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None) -> list[list]:
    """Basis of {v : rows . v = 0}, one vector per free column, in RREF order."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return identity(ncols)
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def det(a) -> object:
    m = [list(r) for r in a]
    n = len(m)
    result = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        piv = m[c][c]
        result *= piv
        inv = ONE / piv
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                f *= inv
                row, prow = m[i], m[c]
                for j in range(c + 1, n):
                    row[j] -= f * prow[j]
    return result


def inverse(a) -> list[list]:
    n = len(a)
    aug = [list(r) + e for r, e in zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


class EchelonBasis:
    """Incrementally maintained echelon basis for testing linear independence."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[tuple[int, list]] = []

    def reduce(self, v) -> list:
        v = list(v)
        for pc, row in self.rows:
            f = v[pc]
            if f:
                for j in range(pc, self.ncols):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def add(self, v) -> bool:
        """Insert v; return False (and change nothing) if v is already in the span."""
        w = self.reduce(v)
        pc = next((j for j, x in enumerate(w) if x), None)
        if pc is None:
            return False
        inv = ONE / w[pc]
        w = [x * inv for x in w]
        self.rows.append((pc, w))
        return True

    def __len__(self):
        return len(self.rows)
