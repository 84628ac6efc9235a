"""Dense complex linear algebra for multi-qudit states.

Tensor indexing is row-major with site 0 most significant, so the basis
vector |l_0 l_1 ... l_{n-1}> sits at the mixed-radix index
l_0 * d_1*...*d_{n-1} + ... + l_{n-1}.  Subsystems are addressed by sorted,
duplicate-free tuples of site labels.  All values are immutable after
construction and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# Structural invariants (norms, hermiticity, trace) are enforced at 1e-10;
# derived quantities (spectra, reconstructions) at 1e-9.  Eigenvalues in
# [-1e-9, 0) are treated as numerical zeros, anything lower is an error.
STRUCTURAL_TOL = 1e-10
DERIVED_TOL = 1e-9
HERMITIAN_INPUT_TOL = 1e-8


@dataclass(frozen=True)
class SystemShape:
    """Per-site local dimensions of a multi-qudit system."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) == 0:
            raise ValueError("shape needs at least one site")
        if any(d < 2 for d in dims):
            raise ValueError(f"every local dimension must be >= 2, got {dims}")

    @property
    def n_sites(self) -> int:
        return len(self.dims)

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims, dtype=np.int64))

    def sites(self) -> tuple[int, ...]:
        return tuple(range(len(self.dims)))


def normalize_sites(shape: SystemShape, sites: Iterable[int]) -> tuple[int, ...]:
    """Validate a subsystem selector and return it as a sorted tuple."""
    out = tuple(sorted(int(s) for s in sites))
    if len(set(out)) != len(out):
        raise ValueError(f"duplicate site labels in {out}")
    for s in out:
        if s < 0 or s >= shape.n_sites:
            raise ValueError(f"site label {s} out of range for {shape.n_sites} sites")
    return out


@dataclass(frozen=True)
class PureState:
    """Complex amplitude vector over a multi-qudit space."""

    shape: SystemShape
    amps: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amps, dtype=complex).reshape(-1)
        if amps.size != self.shape.total_dim:
            raise ValueError(
                f"amplitude vector has length {amps.size}, expected {self.shape.total_dim}"
            )
        nrm2 = float(np.vdot(amps, amps).real)
        if abs(nrm2 - 1.0) > STRUCTURAL_TOL:
            raise ValueError(f"state not normalized: |amps|^2 = {nrm2!r}")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.shape.dims


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix with site shape."""

    shape: SystemShape
    mat: np.ndarray

    def __post_init__(self) -> None:
        mat = np.asarray(self.mat, dtype=complex)
        d = self.shape.total_dim
        if mat.shape != (d, d):
            raise ValueError(f"matrix has shape {mat.shape}, expected ({d}, {d})")
        herm_dev = float(np.max(np.abs(mat - mat.conj().T)))
        if herm_dev > STRUCTURAL_TOL:
            raise ValueError(f"matrix not Hermitian: max deviation {herm_dev!r}")
        tr = complex(np.trace(mat))
        if abs(tr - 1.0) > STRUCTURAL_TOL:
            raise ValueError(f"trace is {tr!r}, expected 1")
        lo = float(np.linalg.eigvalsh(mat)[0])
        if lo < -DERIVED_TOL:
            raise ValueError(f"matrix not positive semidefinite: min eigenvalue {lo!r}")
        mat.flags.writeable = False
        object.__setattr__(self, "mat", mat)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.shape.dims


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Descending nonnegative spectrum of a reduced pure-state density."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        if any(v < 0.0 for v in vals):
            raise ValueError("Schmidt values must be nonnegative")
        if abs(sum(vals) - 1.0) > DERIVED_TOL:
            raise ValueError(f"Schmidt values sum to {sum(vals)!r}, expected 1")
        object.__setattr__(self, "values", vals)


def flatten_index(multi: Sequence[int], shape: SystemShape) -> int:
    """Flatten per-site levels into the row-major basis index."""
    if len(multi) != shape.n_sites:
        raise IndexError(f"expected {shape.n_sites} levels, got {len(multi)}")
    for lvl, dim in zip(multi, shape.dims):
        if lvl < 0 or lvl >= dim:
            raise IndexError(f"level {lvl} out of range for local dimension {dim}")
    return int(np.ravel_multi_index(tuple(int(l) for l in multi), shape.dims))


def unflatten_index(index: int, shape: SystemShape) -> tuple[int, ...]:
    """Inverse of :func:`flatten_index`."""
    if index < 0 or index >= shape.total_dim:
        raise IndexError(f"index {index} out of range for total dimension {shape.total_dim}")
    return tuple(int(l) for l in np.unravel_index(int(index), shape.dims))


def to_density(state: PureState) -> DensityMatrix:
    """Rank-1 projector |psi><psi| of a normalized pure state."""
    amps = state.amps
    return DensityMatrix(state.shape, np.outer(amps, amps.conj()))


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every site not listed in ``keep``.

    The result's sites are the kept sites in label order; trace and
    hermiticity are preserved.
    """
    kept = normalize_sites(rho.shape, keep)
    if len(kept) == 0:
        raise ValueError("must keep at least one site")
    dims = list(rho.shape.dims)
    n = len(dims)
    traced = [s for s in range(n) if s not in kept]
    tens = rho.mat.reshape(dims + dims)
    # Trace highest site index first so remaining axis positions stay valid.
    for s in sorted(traced, reverse=True):
        tens = np.trace(tens, axis1=s, axis2=s + len(dims))
        del dims[s]
    d_keep = int(np.prod(dims, dtype=np.int64))
    out = tens.reshape(d_keep, d_keep)
    out = 0.5 * (out + out.conj().T)  # scrub roundoff asymmetry
    return DensityMatrix(SystemShape(tuple(dims)), out)


def partial_transpose(rho: DensityMatrix, subset: Iterable[int]) -> np.ndarray:
    """Transpose the row/column indices of the chosen sites only.

    Returns a plain Hermitian matrix: the output is generally not positive
    semidefinite, which is exactly what makes it useful.
    """
    sub = normalize_sites(rho.shape, subset)
    dims = list(rho.shape.dims)
    n = len(dims)
    tens = rho.mat.reshape(dims + dims)
    axes = list(range(2 * n))
    for s in sub:
        axes[s], axes[s + n] = axes[s + n], axes[s]
    d = rho.shape.total_dim
    return np.transpose(tens, axes).reshape(d, d)


def hermitian_eigenvalues(mat: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, descending.

    Backed by LAPACK via numpy; the reconstruction residual of the
    underlying eigenpairs is far below 1e-9 times the matrix norm for the
    desk-scale matrices this library handles.
    """
    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    dev = float(np.max(np.abs(mat - mat.conj().T))) if mat.size else 0.0
    if dev > HERMITIAN_INPUT_TOL:
        raise ValueError(f"matrix not Hermitian: max deviation {dev!r}")
    return np.linalg.eigvalsh(mat)[::-1].copy()


def trace_norm(mat: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.sum(np.abs(hermitian_eigenvalues(mat))))


def bipartition_matrix(state: PureState, part_a: Iterable[int]) -> np.ndarray:
    """Amplitudes reshaped to a (dim A) x (dim B) matrix for a bipartition."""
    pa = normalize_sites(state.shape, part_a)
    if len(pa) == 0 or len(pa) == state.shape.n_sites:
        raise ValueError("bipartition must be proper: both sides non-empty")
    dims = state.shape.dims
    pb = tuple(s for s in state.shape.sites() if s not in pa)
    tens = state.amps.reshape(dims)
    perm = pa + pb
    da = int(np.prod([dims[s] for s in pa], dtype=np.int64))
    return np.transpose(tens, perm).reshape(da, -1)


def schmidt_spectrum(state: PureState, part_a: Iterable[int]) -> SchmidtSpectrum:
    """Spectrum of the reduced density matrix on ``part_a``, descending.

    Eigenvalues in [-1e-9, 0) are clipped to zero; anything below -1e-9
    raises, because downstream square roots require nonnegativity.
    """
    m = bipartition_matrix(state, part_a)
    vals = hermitian_eigenvalues(m @ m.conj().T)
    if vals.size and float(vals[-1]) < -DERIVED_TOL:
        raise ValueError(f"reduced density has eigenvalue {vals[-1]!r} below -1e-9")
    clipped = np.clip(vals, 0.0, None)
    return SchmidtSpectrum(tuple(float(v) for v in clipped))


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2); equals the squared Frobenius norm for Hermitian input."""
    return float(np.vdot(rho.mat, rho.mat).real)


def random_state(dims: Sequence[int], seed: int) -> PureState:
    """Haar-random pure state: normalized standard complex Gaussian vector."""
    shape = SystemShape(tuple(dims))
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(shape.total_dim) + 1j * rng.standard_normal(shape.total_dim)
    return PureState(shape, z / np.linalg.norm(z))
