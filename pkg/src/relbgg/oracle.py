"""Brute-force verification of the bigrading through sl(m) matrices.

The combinatorial bidegree assignment is cross-checked against the concrete
realization of sl(m) by elementary matrices: sigma_q cuts {1..m} into
blocks, each matrix position inherits a block bidegree, and every claim
about the grading becomes a statement about explicit integer commutators.

All arithmetic is exact: int64 entries stay tiny (products of values
bounded by 2 summed over at most m terms), guarded by an explicit bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grading import Bidegree, Bigrading, ParabolicPair

_ENTRY_BOUND = 1 << 40  # far below int64 wraparound; exceeding it is a hard error


@dataclass(frozen=True)
class BlockStructure:
    """Block decomposition of sl(m) induced by a nested pair on type A."""

    block_sizes: tuple[int, ...]
    bidegree_of_block: dict[tuple[int, int], Bidegree]

    @property
    def m(self) -> int:
        return sum(self.block_sizes)

    @property
    def num_blocks(self) -> int:
        return len(self.block_sizes)

    def block_of_index(self, u: int) -> int:
        """1-based block containing the 1-based matrix index u."""
        total = 0
        for a, size in enumerate(self.block_sizes, start=1):
            total += size
            if u <= total:
                return a
        raise ValueError(f"index {u} out of range 1..{self.m}")


def block_structure_from_pair(pair: ParabolicPair) -> BlockStructure:
    """Blocks from the sigma_q cuts, bidegrees from the block indices.

    A cut at node k separates matrix positions k and k+1.  For the entry
    at row block a, column block b the first index is the difference of
    the enclosing sigma_p blocks and the second the remaining part of the
    sigma_q block difference.
    """
    rs = pair.rs
    if rs.type_tag != "A":
        raise ValueError("matrix realization is only available for type A")
    m = rs.rank + 1
    cuts = sorted(pair.sigma_q)
    starts = [1] + [k + 1 for k in cuts]
    ends = [k for k in cuts] + [m]
    sizes = tuple(e - s + 1 for s, e in zip(starts, ends))
    # p-block index of each q-block: count the sigma_p cuts before its start
    p_of = [1 + sum(1 for k in pair.sigma_p if k < s) for s in starts]
    bidegs = {}
    n = len(sizes)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            ip = p_of[b - 1] - p_of[a - 1]
            bidegs[(a, b)] = Bidegree(ip, (b - a) - ip)
    return BlockStructure(block_sizes=sizes, bidegree_of_block=bidegs)


def basis_with_bidegrees(bs: BlockStructure) -> tuple[np.ndarray, np.ndarray, list[str]]:
    """Basis of sl(m): elementary matrices E_uv plus traceless diagonals.

    Returns the (N, m, m) stack, the (N, 2) bidegrees, and display names.
    The Cartan part uses H_i = E_ii - E_{i+1,i+1} at bidegree (0, 0).
    """
    m = bs.m
    mats, bidegs, names = [], [], []
    for u in range(1, m + 1):
        for v in range(1, m + 1):
            if u == v:
                continue
            e = np.zeros((m, m), dtype=np.int64)
            e[u - 1, v - 1] = 1
            mats.append(e)
            bidegs.append(bs.bidegree_of_block[(bs.block_of_index(u), bs.block_of_index(v))])
            names.append(f"E[{u},{v}]")
    for i in range(1, m):
        h = np.zeros((m, m), dtype=np.int64)
        h[i - 1, i - 1] = 1
        h[i, i] = -1
        mats.append(h)
        bidegs.append(Bidegree(0, 0))
        names.append(f"H[{i}]")
    return np.stack(mats), np.array(bidegs, dtype=np.int64), names


def _all_commutators(x: np.ndarray) -> np.ndarray:
    prod = np.einsum("aij,bjk->abik", x, x)
    comm = prod - prod.transpose(1, 0, 2, 3)
    if np.abs(comm).max(initial=0) >= _ENTRY_BOUND:
        raise OverflowError("commutator entries exceeded the exactness bound")
    return comm


def _entry_bidegrees(bs: BlockStructure) -> np.ndarray:
    m = bs.m
    grid = np.zeros((m, m, 2), dtype=np.int64)
    blocks = [bs.block_of_index(u) for u in range(1, m + 1)]
    for u in range(m):
        for v in range(m):
            grid[u, v] = bs.bidegree_of_block[(blocks[u], blocks[v])]
    return grid


@dataclass(frozen=True)
class OracleReport:
    ok: bool
    violations: tuple[str, ...]
    pairs_checked: int
    dim_mismatches: tuple[str, ...] = ()


def commutator_audit(bs: BlockStructure, bg: Bigrading) -> OracleReport:
    """Exhaustively check [X, Y] against the summed bidegree for all basis pairs.

    Every nonzero off-diagonal entry of a commutator must sit at the block
    bidegree equal to the sum of the inputs' bidegrees, and a nonzero
    diagonal part may only appear at summed bidegree (0, 0).  Component
    dimensions of the root picture are compared with block counts as well.
    """
    x, bidegs, names = basis_with_bidegrees(bs)
    comm = _all_commutators(x)
    m = bs.m
    required = bidegs[:, None, :] + bidegs[None, :, :]
    grid = _entry_bidegrees(bs)
    nonzero = comm != 0
    offdiag = ~np.eye(m, dtype=bool)
    bad_entry = (grid[None, None] != required[:, :, None, None, :]).any(-1)
    entry_viol = (nonzero & offdiag[None, None] & bad_entry).any((2, 3))
    diag_viol = (nonzero & np.eye(m, dtype=bool)[None, None]).any((2, 3)) & (
        required != 0
    ).any(-1)
    violations = [
        f"[{names[a]},{names[b]}]" for a, b in np.argwhere(entry_viol | diag_viol)
    ]

    mismatches = []
    block_counts: dict[Bidegree, int] = {}
    for u in range(m):
        for v in range(m):
            if u != v:
                bd = Bidegree(int(grid[u, v, 0]), int(grid[u, v, 1]))
                block_counts[bd] = block_counts.get(bd, 0) + 1
    block_counts[Bidegree(0, 0)] = block_counts.get(Bidegree(0, 0), 0) + (m - 1)
    for bd in sorted(set(block_counts) | set(bg.components)):
        left = block_counts.get(bd, 0)
        right = bg.dim_component(bd)
        if left != right:
            mismatches.append(f"{tuple(bd)}: block dim {left} vs root dim {right}")

    return OracleReport(
        ok=not violations and not mismatches,
        violations=tuple(violations),
        pairs_checked=len(names) ** 2,
        dim_mismatches=tuple(mismatches),
    )


def p_plus_action_audit(bs: BlockStructure, i_prime: int) -> OracleReport:
    """Check that bracketing with the nilradical raises the first index.

    For every basis element X with first index > 0 and Y with first index
    >= i_prime (including the Cartan when i_prime <= 0), each nonzero entry
    of [X, Y] must have first index >= i_prime + 1; a vacuous pass when the
    bound exceeds every block index.
    """
    x, bidegs, names = basis_with_bidegrees(bs)
    left = np.flatnonzero(bidegs[:, 0] > 0)
    right = np.flatnonzero(bidegs[:, 0] >= i_prime)
    if left.size == 0 or right.size == 0:
        return OracleReport(ok=True, violations=(), pairs_checked=0)
    prod = np.einsum("aij,bjk->abik", x[left], x[right])
    back = np.einsum("aij,bjk->abik", x[right], x[left])
    comm = prod - back.transpose(1, 0, 2, 3)
    if np.abs(comm).max(initial=0) >= _ENTRY_BOUND:
        raise OverflowError("commutator entries exceeded the exactness bound")
    m = bs.m
    grid = _entry_bidegrees(bs)
    low_entry = grid[:, :, 0] < i_prime + 1
    offdiag = ~np.eye(m, dtype=bool)
    bad = (comm != 0) & (low_entry & offdiag)[None, None]
    if i_prime + 1 > 0:
        bad |= (comm != 0) & np.eye(m, dtype=bool)[None, None]
    pairs = np.argwhere(bad.any((2, 3)))
    violations = tuple(f"[{names[left[a]]},{names[right[b]]}]" for a, b in pairs)
    return OracleReport(
        ok=not violations,
        violations=violations,
        pairs_checked=left.size * right.size,
    )


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact commutator of two integer matrices."""
    return a @ b - b @ a
