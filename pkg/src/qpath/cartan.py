"""Cartan data for the symplectic series C_n and the A-variables.

Nodes are numbered 1..n along the Dynkin diagram; node n carries the long
root (d_n = 2) and the double bond sits between n-1 and n, oriented so that
a(n-1, n) = -2 and a(n, n-1) = -1.  Levels k index spectral parameters q^k
and are unrestricted integers; finiteness is the caller's concern.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentMonomial, YIndex


@dataclass(frozen=True)
class CartanC:
    """Type-C_n Cartan matrix with its symmetrizing lengths d_i.

    For n = 1 this degenerates to the 1x1 matrix (2) with the single
    (long) root of length d_1 = 2.
    """

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"rank must be a positive integer, got {self.n}")

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"node {i} out of range 1..{self.n}")

    def a(self, i: int, j: int) -> int:
        """Cartan entry a(i, j)."""
        self._check_node(i)
        self._check_node(j)
        if i == j:
            return 2
        if abs(i - j) != 1:
            return 0
        if i == self.n - 1 and j == self.n:
            return -2
        return -1

    def d(self, i: int) -> int:
        """Root-length normalizer: 1 on short nodes, 2 on node n."""
        self._check_node(i)
        return 2 if i == self.n else 1


def cartan_c(n: int) -> CartanC:
    """Construct the type-C_n Cartan datum, rejecting nonpositive ranks."""
    return CartanC(n)


def _neighbor_factors(a_ji: int, j: int, k: int) -> list[tuple[YIndex, int]]:
    """Y-factors a neighbor j with column entry a_ji contributes to A[i, k].

    The -3 branch exists only for a triple bond; no type-C matrix produces
    it, and a_variable() refuses to reach it.
    """
    if a_ji == -1:
        return [(YIndex(j, k), -1)]
    if a_ji == -2:
        return [(YIndex(j, k - 1), -1), (YIndex(j, k + 1), -1)]
    if a_ji == -3:
        return [(YIndex(j, k - 2), 1), (YIndex(j, k), 1), (YIndex(j, k + 2), 1)]
    raise ValueError(f"unsupported off-diagonal Cartan entry {a_ji}")


def a_variable(c: CartanC, i: int, k: int) -> LaurentMonomial:
    """Expansion of A[i, k] (the multiplicative simple root) in Y-variables.

    A[i,k] = Y[i,k-d_i] * Y[i,k+d_i] times, for every neighbor j,
    Y[j,k]^-1 when a(j,i) = -1, or Y[j,k-1]^-1 * Y[j,k+1]^-1 when
    a(j,i) = -2.
    """
    c._check_node(i)
    di = c.d(i)
    factors: list[tuple[YIndex, int]] = [
        (YIndex(i, k - di), 1),
        (YIndex(i, k + di), 1),
    ]
    for j in c.nodes:
        if j == i:
            continue
        a_ji = c.a(j, i)
        if a_ji == 0:
            continue
        assert a_ji != -3, "triple bond is unreachable for a type-C Cartan matrix"
        factors.extend(_neighbor_factors(a_ji, j, k))
    return LaurentMonomial(factors)
