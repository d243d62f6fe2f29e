"""Exact root-system arithmetic for split semisimple Lie algebras.

Everything is plain Python integers, so arithmetic is exact by construction.
Node indices (simple roots, fundamental weights, reflections) are 1-based,
matching the usual Dynkin-diagram numbering.

Type A is the fully supported case; the B/C/D constructors are provided as
extensions and go through the same generic machinery (root enumeration by
root chains, pairings via the symmetrized Cartan matrix).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd


@dataclass(frozen=True)
class Root:
    """A root in simple-root coordinates.

    Coefficients are all >= 0 (positive root) or all <= 0 (negative root);
    mixed signs are rejected.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c > 0 for c in self.coeffs) and any(c < 0 for c in self.coeffs):
            raise ValueError(f"mixed-sign coefficients do not form a root: {self.coeffs}")

    @property
    def is_positive(self) -> bool:
        return any(c > 0 for c in self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def support(self) -> tuple[int, ...]:
        """1-based indices of the nonzero coefficients."""
        return tuple(i + 1 for i, c in enumerate(self.coeffs) if c != 0)

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coeffs))


@dataclass(frozen=True)
class Weight:
    """A weight in fundamental-weight coordinates."""

    coeffs: tuple[int, ...]

    def __add__(self, other: Weight) -> Weight:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("weight length mismatch")
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Weight) -> Weight:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("weight length mismatch")
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-c for c in self.coeffs))


@dataclass(frozen=True)
class RootSystem:
    """A root system given by its Cartan matrix.

    ``cartan[i][j]`` is the pairing of the j-th simple root against the i-th
    simple coroot (0-based storage for 1-based nodes).  ``rho`` is the
    half-sum of the positive roots, i.e. the all-ones weight.
    """

    type_tag: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    rho: Weight

    @cached_property
    def _root_coeff_set(self) -> frozenset[tuple[int, ...]]:
        pos = {r.coeffs for r in self.positive_roots}
        neg = {tuple(-c for c in cs) for cs in pos}
        return frozenset(pos | neg)

    def is_root(self, coeffs: tuple[int, ...]) -> bool:
        return coeffs in self._root_coeff_set

    def simple_root(self, i: int) -> Root:
        """The i-th simple root (1-based)."""
        self._check_node(i)
        return Root(tuple(1 if j == i - 1 else 0 for j in range(self.rank)))

    @property
    def dim(self) -> int:
        """Dimension of the Lie algebra: all root spaces plus the Cartan."""
        return 2 * len(self.positive_roots) + self.rank

    @cached_property
    def symmetrizer(self) -> tuple[int, ...]:
        """Minimal positive integers d with d[i]*C[i][j] == d[j]*C[j][i].

        d[i] is proportional to the squared length of the i-th simple root;
        all ones in the simply-laced case.
        """
        r = self.rank
        d: list[Fraction | None] = [None] * r
        for seed in range(r):
            if d[seed] is not None:
                continue
            d[seed] = Fraction(1)
            stack = [seed]
            while stack:
                i = stack.pop()
                for j in range(r):
                    if self.cartan[i][j] != 0 and i != j and d[j] is None:
                        # d_j = d_i * C[i][j] / C[j][i] along a diagram edge
                        d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                        stack.append(j)
        denom = 1
        for x in d:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in d]
        g = 0
        for x in ints:
            g = gcd(g, x)
        return tuple(x // g for x in ints)

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"node index {i} out of range 1..{self.rank}")


def _cartan_matrix(type_tag: str, rank: int) -> tuple[tuple[int, ...], ...]:
    if rank < 1:
        raise ValueError("rank must be >= 1")
    if type_tag == "A":
        pass
    elif type_tag in ("B", "C"):
        if rank < 2:
            raise ValueError(f"type {type_tag} needs rank >= 2")
    elif type_tag == "D":
        if rank < 3:
            raise ValueError("type D needs rank >= 3")
    else:
        raise ValueError(f"unsupported type tag {type_tag!r}")

    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def join(i: int, j: int) -> None:
        c[i][j] = -1
        c[j][i] = -1

    if type_tag == "D":
        for i in range(rank - 3):
            join(i, i + 1)
        join(rank - 3, rank - 2)
        join(rank - 3, rank - 1)
    else:
        for i in range(rank - 1):
            join(i, i + 1)
        if type_tag == "B" and rank >= 2:
            c[rank - 1][rank - 2] = -2  # last simple root short
        if type_tag == "C" and rank >= 2:
            c[rank - 2][rank - 1] = -2  # last simple root long
    return tuple(tuple(row) for row in c)


def _enumerate_positive_roots(cartan: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    """All positive roots by closure under simple-root addition.

    Root-chain criterion: beta + alpha_i is a root iff p > <beta, alpha_i^vee>
    where p is the number of times alpha_i can be subtracted from beta.
    Processing level-by-level in height keeps every chain fully known.
    """
    rank = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    found: set[tuple[int, ...]] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(rank):
                pair = sum(cartan[i][j] * c[j] for j in range(rank))
                p = 0
                probe = list(c)
                probe[i] -= 1
                while tuple(probe) in found:
                    p += 1
                    probe[i] -= 1
                if p - pair > 0:
                    up = list(c)
                    up[i] += 1
                    t = tuple(up)
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        frontier = nxt
    return sorted(found, key=lambda t: (sum(t), t))


def build_root_system(type_tag: str, rank: int) -> RootSystem:
    """Construct a root system of the given type and rank.

    Type A is the primary supported family; B, C and D are accepted
    extensions (B/C need rank >= 2, D needs rank >= 3).
    """
    cartan = _cartan_matrix(type_tag, rank)
    positive = tuple(Root(c) for c in _enumerate_positive_roots(cartan))
    return RootSystem(
        type_tag=type_tag,
        rank=rank,
        cartan=cartan,
        positive_roots=positive,
        rho=Weight((1,) * rank),
    )


def root_to_weight(rs: RootSystem, root: Root) -> Weight:
    """Rewrite a root in fundamental-weight coordinates (alpha_i = sum_j C[j][i] omega_j)."""
    if len(root.coeffs) != rs.rank:
        raise ValueError("root length does not match rank")
    return Weight(
        tuple(
            sum(root.coeffs[i] * rs.cartan[j][i] for i in range(rs.rank))
            for j in range(rs.rank)
        )
    )


def reflect(rs: RootSystem, i: int, w: Weight) -> Weight:
    """Simple reflection s_i acting on a weight: w - w[i] * alpha_i."""
    rs._check_node(i)
    if len(w.coeffs) != rs.rank:
        raise ValueError("weight length does not match rank")
    k = w.coeffs[i - 1]
    return Weight(tuple(w.coeffs[j] - k * rs.cartan[j][i - 1] for j in range(rs.rank)))


def pairing(w: Weight, root: Root, rs: RootSystem) -> int:
    """Pairing <w, beta^vee> of a weight against the coroot of a positive root.

    Computed as sum_i w[i]*c[i]*d[i] divided by the half squared length of
    beta; in type A this reduces to the sum of w over the support of beta.
    """
    if len(w.coeffs) != rs.rank or len(root.coeffs) != rs.rank:
        raise ValueError("length does not match rank")
    if not root.is_positive or not rs.is_root(root.coeffs):
        raise ValueError(f"{root.coeffs} is not a positive root of {rs.type_tag}{rs.rank}")
    d = rs.symmetrizer
    c = root.coeffs
    num = sum(w.coeffs[i] * c[i] * d[i] for i in range(rs.rank))
    twice_len = sum(
        c[i] * d[i] * sum(rs.cartan[i][j] * c[j] for j in range(rs.rank))
        for i in range(rs.rank)
    )
    if twice_len <= 0 or twice_len % 2:
        raise ArithmeticError(f"bad squared length {twice_len} for root {c}")
    half = twice_len // 2
    q, r = divmod(num, half)
    if r:
        raise ArithmeticError(f"non-integral coroot pairing for root {c}")
    return q
