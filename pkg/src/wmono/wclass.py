"""Generalized W-class states, partitions, and partitioned reductions.

A W-class state over n sites with d excitation levels puts amplitude
``a[j, i-1]`` on the basis vector where site j sits in level i (1..d) and
every other site sits in level 0; each site therefore has d+1 levels.
There is no amplitude on |00...0>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .qudit import (
    STRUCTURAL_TOL,
    DensityMatrix,
    PureState,
    SystemShape,
    flatten_index,
    partial_trace,
    to_density,
    unflatten_index,
)

# Reserved name the CLI resolves to the built-in three-qubit example state.
EXAMPLE_STATE_NAME = "example-3.3"

SUPPORT_TOL = 1e-12


@dataclass(frozen=True)
class WCoefficients:
    """Amplitude matrix a[j, i] for site j excited to level i+1."""

    n: int
    d: int
    a: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need at least 2 parties, got {self.n}")
        if self.d < 1:
            raise ValueError(f"need at least 1 excitation level, got {self.d}")
        a = np.asarray(self.a, dtype=complex).reshape(self.n, self.d)
        nrm2 = float(np.vdot(a, a).real)
        if abs(nrm2 - 1.0) > STRUCTURAL_TOL:
            raise ValueError(f"coefficients not normalized: sum |a|^2 = {nrm2!r}")
        a.flags.writeable = False
        object.__setattr__(self, "a", a)


@dataclass(frozen=True)
class Partition:
    """Ordered disjoint blocks of site labels; needs not cover every site."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(int(s) for s in b)) for b in self.blocks)
        if len(blocks) < 2:
            raise ValueError("a partition needs at least 2 blocks")
        if any(len(b) == 0 for b in blocks):
            raise ValueError("partition blocks must be non-empty")
        seen: set[int] = set()
        for b in blocks:
            if len(set(b)) != len(b) or seen & set(b):
                raise ValueError(f"partition blocks are not disjoint: {blocks}")
            seen |= set(b)
        object.__setattr__(self, "blocks", blocks)

    @property
    def m(self) -> int:
        return len(self.blocks)

    def covered_sites(self) -> tuple[int, ...]:
        return tuple(sorted(s for b in self.blocks for s in b))

    def covers(self, shape: SystemShape) -> bool:
        return self.covered_sites() == shape.sites()


@dataclass(frozen=True)
class PartitionedState:
    """Density matrix with one composite site per partition block."""

    density: DensityMatrix
    partition: Partition
    block_dims: tuple[int, ...]


def build_wclass_state(coeffs: WCoefficients) -> PureState:
    """Assemble the pure state defined by a W-class coefficient matrix."""
    n, d = coeffs.n, coeffs.d
    shape = SystemShape((d + 1,) * n)
    amps = np.zeros(shape.total_dim, dtype=complex)
    for j in range(n):
        for i in range(1, d + 1):
            multi = [0] * n
            multi[j] = i
            amps[flatten_index(multi, shape)] = coeffs.a[j, i - 1]
    return PureState(shape, amps)


def random_wclass(n: int, d: int, seed: int) -> WCoefficients:
    """Seeded i.i.d. standard complex normal coefficients, normalized."""
    if n < 2 or d < 1:
        raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
    return WCoefficients(n, d, a / np.linalg.norm(a))


def example_coefficients() -> WCoefficients:
    """The built-in three-qubit example state (2|100> + |010> + |001>)/sqrt(6)."""
    s6 = math.sqrt(6.0)
    return WCoefficients(3, 1, np.array([[2.0 / s6], [1.0 / s6], [1.0 / s6]]))


def coarse_grain(state: PureState, partition: Partition) -> PureState:
    """Merge each block into one composite site, in block order.

    Only reindexes amplitudes; requires the partition to cover every site.
    """
    if not partition.covers(state.shape):
        raise ValueError(
            "partition does not cover all sites; use reduce_to_partition instead"
        )
    dims = state.shape.dims
    perm = tuple(s for b in partition.blocks for s in b)
    merged = tuple(
        int(np.prod([dims[s] for s in b], dtype=np.int64)) for b in partition.blocks
    )
    tens = np.transpose(state.amps.reshape(dims), perm)
    return PureState(SystemShape(merged), tens.reshape(-1))


def reduce_to_partition(state: PureState, partition: Partition) -> PartitionedState:
    """Trace out uncovered sites, then merge each block into one site."""
    covered = partition.covered_sites()
    rho = partial_trace(to_density(state), covered)
    # rho's sites are the covered sites in label order; permute into block order.
    pos = {site: idx for idx, site in enumerate(covered)}
    perm = [pos[s] for b in partition.blocks for s in b]
    k = len(covered)
    cov_dims = rho.shape.dims
    tens = rho.mat.reshape(cov_dims + cov_dims)
    tens = np.transpose(tens, perm + [p + k for p in perm])
    dims = state.shape.dims
    merged = tuple(
        int(np.prod([dims[s] for s in b], dtype=np.int64)) for b in partition.blocks
    )
    d_tot = int(np.prod(merged, dtype=np.int64))
    density = DensityMatrix(SystemShape(merged), tens.reshape(d_tot, d_tot))
    return PartitionedState(density, partition, merged)


def is_wclass_support(state: PureState, tol: float = SUPPORT_TOL) -> bool:
    """True iff every non-negligible amplitude has at most one excited site."""
    for idx in np.nonzero(np.abs(state.amps) > tol)[0]:
        multi = unflatten_index(int(idx), state.shape)
        if sum(1 for lvl in multi if lvl != 0) > 1:
            return False
    return True


def to_descriptor(coeffs: WCoefficients) -> dict:
    """JSON-ready state descriptor: {"n", "d", "coeffs": [[re, im], ...]}.

    Coefficients are listed row-major, party then level.
    """
    flat = coeffs.a.reshape(-1)
    return {
        "n": coeffs.n,
        "d": coeffs.d,
        "coeffs": [[float(c.real), float(c.imag)] for c in flat],
    }


def from_descriptor(data: dict) -> WCoefficients:
    """Parse and validate the JSON state descriptor."""
    try:
        n = int(data["n"])
        d = int(data["d"])
        pairs = data["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state descriptor: {exc}") from exc
    if not isinstance(pairs, list) or len(pairs) != n * d:
        raise ValueError(
            f"descriptor needs {n * d} coefficient pairs, got {len(pairs) if isinstance(pairs, list) else type(pairs).__name__}"
        )
    try:
        flat = np.array([complex(float(re), float(im)) for re, im in pairs])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed coefficient entry: {exc}") from exc
    return WCoefficients(n, d, flat.reshape(n, d))


def singleton_partition(state: PureState) -> Partition:
    """One block per site, in label order."""
    return Partition(tuple((s,) for s in state.shape.sites()))


def three_block_partitions(n_sites: int) -> list[Partition]:
    """All full-cover partitions into exactly 3 blocks, canonically ordered.

    Blocks are sorted by their smallest member, so the block containing
    site 0 always comes first.
    """
    if n_sites < 3:
        return []
    sites = list(range(n_sites))
    out: list[Partition] = []

    def assign(i: int, blocks: list[list[int]]) -> None:
        if i == len(sites):
            if len(blocks) == 3:
                ordered = sorted((tuple(b) for b in blocks), key=lambda b: b[0])
                out.append(Partition(tuple(ordered)))
            return
        for b in blocks:
            b.append(sites[i])
            assign(i + 1, blocks)
            b.pop()
        if len(blocks) < 3:
            blocks.append([sites[i]])
            assign(i + 1, blocks)
            blocks.pop()

    assign(0, [])
    return out
