"""Elements of GL(2d, Q) in d x d block form, and GL(2, Q) acting on the line."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import ONE, Q, linalg, rational, to_str


def _square(block) -> tuple:
    return tuple(tuple(rational(v) for v in row) for row in block)


@dataclass(frozen=True)
class GroupElement:
    """The 2d x 2d matrix [[A, B], [C, D]]; acts on charts by y -> (Ay+B)(Cy+D)^-1."""

    A: tuple
    B: tuple
    C: tuple
    D: tuple

    def __post_init__(self):
        for name in "ABCD":
            object.__setattr__(self, name, _square(getattr(self, name)))
        d = len(self.A)
        if any(len(getattr(self, n)) != d or any(len(r) != d for r in getattr(self, n)) for n in "ABCD"):
            raise ValueError("blocks must all be d x d")
        if not linalg.det(self.matrix):
            raise ValueError("not a group element")

    @property
    def d(self) -> int:
        return len(self.A)

    @property
    def matrix(self) -> list[list]:
        top = [list(a) + list(b) for a, b in zip(self.A, self.B)]
        bottom = [list(c) + list(dd) for c, dd in zip(self.C, self.D)]
        return top + bottom

    @classmethod
    def from_matrix(cls, m) -> "GroupElement":
        n = len(m)
        if n % 2 or any(len(r) != n for r in m):
            raise ValueError("group element must be an even-size square matrix")
        d = n // 2
        return cls(
            [r[:d] for r in m[:d]],
            [r[d:] for r in m[:d]],
            [r[:d] for r in m[d:]],
            [r[d:] for r in m[d:]],
        )

    @classmethod
    def identity(cls, d: int) -> "GroupElement":
        return cls.from_matrix(linalg.identity(2 * d))

    @classmethod
    def permutation(cls, perm) -> "GroupElement":
        """The matrix P with (P v)[i] = v[perm[i]]."""
        n = len(perm)
        return cls.from_matrix([[ONE if j == perm[i] else Q(0) for j in range(n)] for i in range(n)])

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement.from_matrix(linalg.matmul(self.matrix, other.matrix))

    def inverse(self) -> "GroupElement":
        return GroupElement.from_matrix(linalg.inverse(self.matrix))

    def normalized(self) -> "GroupElement":
        """Scaled so that the first nonzero entry in row-major order is 1."""
        m = self.matrix
        first = next(v for row in m for v in row if v)
        return GroupElement.from_matrix(linalg.matscale(m, ONE / first))

    def is_proportional(self, other: "GroupElement") -> bool:
        return self.normalized() == other.normalized()

    def to_json(self) -> dict:
        return {name: [[to_str(v) for v in row] for row in getattr(self, name)] for name in "ABCD"}

    @classmethod
    def from_json(cls, doc: dict) -> "GroupElement":
        return cls(*(doc[name] for name in "ABCD"))


@dataclass(frozen=True)
class Moebius2:
    """x -> (alpha x + beta) / (gamma x + delta)."""

    alpha: object
    beta: object
    gamma: object
    delta: object

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, rational(getattr(self, name)))
        if not self.alpha * self.delta - self.beta * self.gamma:
            raise ValueError("Moebius transformation must have nonzero determinant")

    @property
    def coefficients(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.delta)

    @property
    def det(self):
        return self.alpha * self.delta - self.beta * self.gamma

    def to_json(self) -> list:
        return [to_str(v) for v in self.coefficients]
