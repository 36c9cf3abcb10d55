"""
Index conventions for the quadrant lattice and its even sublattice.

A lattice point (n, m) with n+m even is the centre of a circle labelled by
the sublattice point z = N + iM with N = (n-m)/2, M = (n+m)/2. Points with
n+m odd are circle intersection points.
"""

from dataclasses import dataclass
from typing import Iterator, Tuple


@dataclass(frozen=True, order=True)
class LatticeIndex:
    """Point (n, m) of the quadrant lattice Z^2_+."""
    n: int
    m: int

    @property
    def is_center(self) -> bool:
        """True for even parity (circle centres)."""
        return (self.n + self.m) % 2 == 0

    def to_sublattice(self) -> 'SublatticeIndex':
        return SublatticeIndex(*to_sublattice(self.n, self.m))


@dataclass(frozen=True, order=True)
class SublatticeIndex:
    """Label z = N + iM of a circle on the even sublattice."""
    N: int
    M: int

    @property
    def z(self) -> complex:
        return complex(self.N, self.M)

    def shift(self, dN: int, dM: int) -> 'SublatticeIndex':
        return SublatticeIndex(self.N + dN, self.M + dM)

    def to_lattice(self) -> LatticeIndex:
        return LatticeIndex(*to_lattice(self.N, self.M))

    def in_V(self) -> bool:
        return in_V(self.N, self.M)

    def in_Vl(self) -> bool:
        return in_Vl(self.N, self.M)

    def in_Vint(self) -> bool:
        return in_Vint(self.N, self.M)

    def in_Vrint(self) -> bool:
        return in_Vrint(self.N, self.M)


def to_sublattice(n: int, m: int) -> Tuple[int, int]:
    """Map an even-parity (n, m) to (N, M)."""
    if (n + m) % 2:
        raise ValueError(f"({n}, {m}) has odd parity and carries no circle")
    return (n - m) // 2, (n + m) // 2


def to_lattice(N: int, M: int) -> Tuple[int, int]:
    """Inverse of to_sublattice."""
    return N + M, M - N


def in_V(N: int, M: int) -> bool:
    """Quadrant V = {M >= |N|}."""
    return M >= abs(N)


def in_Vl(N: int, M: int) -> bool:
    """V extended by the points -K + i(K-1) just left of the left diagonal."""
    return in_V(N, M) or (N <= -1 and M == -N - 1)


def in_Vrint(N: int, M: int) -> bool:
    """V without both diagonals +-K + iK."""
    return M > abs(N)


def in_Vint(N: int, M: int) -> bool:
    """Interior of V (same point set as in_Vrint)."""
    return abs(N) < M


def iter_V(M_max: int) -> Iterator[Tuple[int, int]]:
    """All (N, M) in V with M <= M_max, ordered by M then N."""
    for M in range(M_max + 1):
        for N in range(-M, M + 1):
            yield N, M


def iter_centers(size: int) -> Iterator[Tuple[int, int]]:
    """Even-parity (n, m) with n+m <= size, row-major."""
    for n in range(size + 1):
        for m in range(size + 1 - n):
            if (n + m) % 2 == 0:
                yield n, m
