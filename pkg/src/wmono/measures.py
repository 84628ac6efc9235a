"""Entanglement measures: pure-state formulas, two-qubit closed forms,
and convex-roof search for mixed states.

Pure bipartite states get exact values.  Two-qubit mixed states get the
closed-form concurrence / concurrence-of-assistance oracles.  Everything
else goes through :func:`roof_minimize` / :func:`roof_maximize`, which
search over ensemble decompositions: random-restart isometry sampling
refined by coordinate descent over Givens rotation and phase parameters.
A minimization returns an upper bound on the true convex roof, a
maximization a lower bound; callers must treat the values as one-sided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .qudit import (
    DensityMatrix,
    PureState,
    partial_trace,
    purity,
    schmidt_spectrum,
    to_density,
)

UPPER_BOUND_ON_MIN = "upper-bound-on-minimum"
LOWER_BOUND_ON_MAX = "lower-bound-on-maximum"

# sigma_y (x) sigma_y, the two-qubit spin flip; real in the computational basis
_YY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ],
    dtype=complex,
)


def concurrence_pure(state: PureState, part_a: Iterable[int]) -> float:
    """sqrt(2 (1 - Tr rho_A^2)) across a proper bipartition."""
    pa = tuple(part_a)
    if len(pa) == 0 or len(pa) >= state.shape.n_sites:
        raise ValueError("bipartition must be proper: both sides non-empty")
    rho_a = partial_trace(to_density(state), pa)
    return math.sqrt(max(0.0, 2.0 * (1.0 - purity(rho_a))))


def negativity_pure(state: PureState, part_a: Iterable[int]) -> float:
    """Sum over i<j of 2 sqrt(lambda_i lambda_j) of the Schmidt spectrum.

    Equals the trace norm of the partial transpose minus one; the two
    routes are kept independent so they can cross-check each other.
    """
    lam = np.array(schmidt_spectrum(state, part_a).values)
    s = float(np.sum(np.sqrt(lam)))
    return max(0.0, s * s - 1.0)


def _wootters_mus(rho: DensityMatrix) -> np.ndarray:
    if rho.dims != (2, 2):
        raise ValueError(f"expected a two-qubit state, got dims {rho.dims}")
    m = rho.mat
    r = m @ _YY @ m.conj() @ _YY
    evals = np.linalg.eigvals(r).real
    mus = np.sqrt(np.clip(evals, 0.0, None))
    return np.sort(mus)[::-1]


def wootters_concurrence(rho: DensityMatrix) -> float:
    """Exact mixed-state concurrence of a two-qubit density matrix."""
    mus = _wootters_mus(rho)
    return max(0.0, float(mus[0] - mus[1] - mus[2] - mus[3]))


def coa_two_qubit(rho: DensityMatrix) -> float:
    """Exact two-qubit concurrence of assistance: the sum of the mus."""
    return float(np.sum(_wootters_mus(rho)))


@dataclass(frozen=True)
class Ensemble:
    """Weighted pure-state decomposition {p_i, |psi_i>}."""

    weights: tuple[float, ...]
    states: tuple[PureState, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.states):
            raise ValueError("weights and states must have equal length")
        if len(self.weights) == 0:
            raise ValueError("ensemble must be non-empty")
        if any(w <= 0.0 or w > 1.0 for w in self.weights):
            raise ValueError(f"weights must lie in (0, 1], got {self.weights}")
        total = sum(self.weights)
        if abs(total - 1.0) > 1e-10:
            raise ValueError(f"weights sum to {total!r}, expected 1")

    def reconstruct(self) -> np.ndarray:
        """Sum of p_i |psi_i><psi_i|."""
        d = self.states[0].shape.total_dim
        out = np.zeros((d, d), dtype=complex)
        for w, st in zip(self.weights, self.states):
            out += w * np.outer(st.amps, st.amps.conj())
        return out


@dataclass(frozen=True)
class RoofOptions:
    """Knobs for the convex-roof search.

    Per-restart randomness comes from ``default_rng(seed + restart_index)``,
    so results are deterministic for a fixed root seed no matter how the
    restarts are scheduled.  Ensemble sizes cycle over rank + k_offsets.
    """

    restarts: int = 200
    seed: int = 0
    improve_tol: float = 1e-7
    max_sweeps: int = 20
    k_offsets: tuple[int, ...] = (0, 1, 2)
    rank_tol: float = 1e-12
    coarse_theta: int = 8
    coarse_phi: int = 8
    refine_rounds: int = 3
    refine_points: int = 5

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if not self.k_offsets:
            raise ValueError("k_offsets must be non-empty")


@dataclass(frozen=True)
class RoofEstimate:
    value: float
    direction: str
    restarts_used: int
    ensemble: Ensemble


def random_isometry(k: int, r: int, seed: int) -> np.ndarray:
    """Haar-ish k x r isometry from the QR of a complex Gaussian matrix."""
    if k < r:
        raise ValueError(f"need k >= r, got k={k}, r={r}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((k, r)) + 1j * rng.standard_normal((k, r))
    q, _ = np.linalg.qr(z)
    return q


def _phase_fixed_eigh(mat: np.ndarray, cutoff: float) -> tuple[np.ndarray, np.ndarray]:
    """Descending eigenvalues above ``cutoff`` and phase-fixed eigenvectors.

    Each eigenvector's largest-magnitude component (lowest index on ties)
    is rotated to the positive real axis, which pins the otherwise
    arbitrary phases and keeps downstream sampling deterministic.
    """
    vals, vecs = np.linalg.eigh(mat)
    order = np.argsort(vals)[::-1]
    vals = vals[order]
    vecs = vecs[:, order]
    keep = vals > cutoff
    vals = vals[keep]
    vecs = vecs[:, keep]
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        idx = int(np.argmax(np.abs(col)))
        ph = col[idx]
        if abs(ph) > 0.0:
            vecs[:, j] = col * (abs(ph) / ph)
    return vals, vecs


def _eigen_ensemble(rho: DensityMatrix, rank_tol: float) -> tuple[np.ndarray, np.ndarray]:
    return _phase_fixed_eigh(rho.mat, rank_tol)


def sample_ensemble(
    rho: DensityMatrix,
    isometry: np.ndarray | None = None,
    size: int | None = None,
    rank_tol: float = 1e-12,
) -> Ensemble:
    """Mix the eigen-ensemble of rho through an isometry.

    The members are sqrt(p_i)|psi_i> = sum_j V_ij sqrt(q_j)|e_j> over the
    eigen-ensemble {q_j, |e_j>}; any isometry V with at least rank(rho)
    rows reconstructs rho exactly.  ``isometry=None`` uses the identity
    slice, which returns the eigen-ensemble itself.
    """
    q, e = _eigen_ensemble(rho, rank_tol)
    rank = len(q)
    if isometry is None:
        k = rank if size is None else int(size)
        if k < rank:
            raise ValueError(f"ensemble size {k} below rank {rank}")
        v = np.eye(k, rank, dtype=complex)
    else:
        v = np.asarray(isometry, dtype=complex)
        if v.ndim != 2 or v.shape[1] != rank:
            raise ValueError(f"isometry must have shape (k, {rank}), got {v.shape}")
        if v.shape[0] < rank:
            raise ValueError(f"ensemble size {v.shape[0]} below rank {rank}")
        if size is not None and size != v.shape[0]:
            raise ValueError("size disagrees with the isometry's row count")
        dev = float(np.max(np.abs(v.conj().T @ v - np.eye(rank))))
        if dev > 1e-10:
            raise ValueError(f"mixing matrix is not an isometry: deviation {dev!r}")
    members = v @ (np.sqrt(q)[:, None] * e.T)
    weights = np.einsum("kd,kd->k", members, members.conj()).real
    kept = weights > 1e-14
    weights = weights[kept]
    members = members[kept]
    total = float(np.sum(weights))
    states = tuple(
        PureState(rho.shape, members[i] / math.sqrt(weights[i]))
        for i in range(len(weights))
    )
    ens = Ensemble(tuple(float(w / total) for w in weights), states)
    resid = float(np.max(np.abs(ens.reconstruct() - rho.mat)))
    if resid > 1e-8:
        raise ValueError(f"ensemble does not reconstruct the state: residual {resid!r}")
    return ens


# ---------------------------------------------------------------------------
# batched objective evaluation
# ---------------------------------------------------------------------------

def _gram_small_side(m: np.ndarray) -> np.ndarray:
    # Gram matrix on whichever side of the bipartition is smaller; the
    # nonzero spectrum (all the objective needs) is the same on both sides.
    da, db = m.shape[-2], m.shape[-1]
    if da <= db:
        return np.einsum("...ab,...pb->...ap", m, m.conj())
    return np.einsum("...ab,...ap->...bp", m.conj(), m)


def _psd_eigvals_small(g: np.ndarray) -> np.ndarray:
    """Eigenvalues of batched small Hermitian PSD matrices, any order."""
    s = g.shape[-1]
    if s == 1:
        return g[..., 0, 0].real[..., None]
    if s == 2:
        a = g[..., 0, 0].real
        b = g[..., 1, 1].real
        c = g[..., 0, 1]
        half = 0.5 * (a + b)
        disc = 0.5 * np.sqrt(np.clip((a - b) ** 2 + 4.0 * np.abs(c) ** 2, 0.0, None))
        return np.stack([half + disc, half - disc], axis=-1)
    if s == 3:
        g00 = g[..., 0, 0].real
        g11 = g[..., 1, 1].real
        g22 = g[..., 2, 2].real
        g01 = g[..., 0, 1]
        g02 = g[..., 0, 2]
        g12 = g[..., 1, 2]
        q = (g00 + g11 + g22) / 3.0
        p1 = np.abs(g01) ** 2 + np.abs(g02) ** 2 + np.abs(g12) ** 2
        p2 = (g00 - q) ** 2 + (g11 - q) ** 2 + (g22 - q) ** 2 + 2.0 * p1
        p = np.sqrt(np.clip(p2 / 6.0, 0.0, None))
        safe = np.where(p > 0.0, p, 1.0)
        b00 = (g00 - q) / safe
        b11 = (g11 - q) / safe
        b22 = (g22 - q) / safe
        b01 = g01 / safe
        b02 = g02 / safe
        b12 = g12 / safe
        # full Hermitian 3x3 determinant, real by symmetry
        det = (
            b00 * (b11 * b22 - (b12 * np.conj(b12)).real)
            - (b01 * (np.conj(b01) * b22 - b12 * np.conj(b02))).real
            + (b02 * (np.conj(b01) * np.conj(b12) - b11 * np.conj(b02))).real
        )
        r = np.clip(det / 2.0, -1.0, 1.0)
        phi = np.arccos(r) / 3.0
        lam1 = q + 2.0 * p * np.cos(phi)
        lam3 = q + 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0)
        lam2 = 3.0 * q - lam1 - lam3
        return np.stack([lam1, lam2, lam3], axis=-1)
    return np.linalg.eigvalsh(g)


def _contrib_concurrence(m: np.ndarray) -> np.ndarray:
    # Weighted concurrence of unnormalized members: with p = <v|v> and
    # G the unnormalized Gram matrix, p * C = sqrt(2 (p^2 - Tr G^2)).
    g = _gram_small_side(m)
    p = np.einsum("...aa->...", g).real
    s4 = np.einsum("...ap,...pa->...", g, g).real
    return np.sqrt(np.clip(2.0 * (p * p - s4), 0.0, None))


def _contrib_negativity(m: np.ndarray) -> np.ndarray:
    # p * N = (sum of unnormalized singular values)^2 - p.
    g = _gram_small_side(m)
    lam = np.clip(_psd_eigvals_small(g), 0.0, None)
    t = np.sum(np.sqrt(lam), axis=-1)
    p = np.sum(lam, axis=-1)
    return np.clip(t * t - p, 0.0, None)


_CONTRIBS: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "concurrence": _contrib_concurrence,
    "negativity": _contrib_negativity,
}


# ---------------------------------------------------------------------------
# convex-roof search
# ---------------------------------------------------------------------------

def _round_robin(k: int) -> list[list[tuple[int, int]]]:
    """Rounds of pairwise-disjoint index pairs covering every pair once."""
    elems: list[int | None] = list(range(k))
    if k % 2 == 1:
        elems.append(None)
    n = len(elems)
    rounds: list[list[tuple[int, int]]] = []
    order = elems[1:]
    for _ in range(n - 1):
        lineup = [elems[0]] + order
        pairs = []
        for i in range(n // 2):
            a, b = lineup[i], lineup[n - 1 - i]
            if a is not None and b is not None:
                pairs.append((min(a, b), max(a, b)))
        rounds.append(pairs)
        order = order[1:] + order[:1]
    return rounds


def _coef_tensor(theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Gram-combination coefficients of the two rotated rows.

    For the rotation u' = a u + b w, w' = -conj(b) u + a w with a = cos
    theta and b = sin theta e^{i phi}, returns gamma_rx * conj(gamma_ry)
    with shape (..., row, 2, 2), so that the rotated Gram matrices are a
    linear combination of the four cross blocks X_x X_y^dagger.
    """
    a = np.cos(theta).astype(complex)
    b = np.sin(theta) * np.exp(1j * phi)
    gam = np.stack(
        [np.stack([a, b], axis=-1), np.stack([-np.conj(b), a], axis=-1)], axis=-2
    )  # (..., row, which)
    return gam[..., :, :, None] * np.conj(gam)[..., :, None, :]


def _contrib_from_gram(g: np.ndarray, measure: str) -> np.ndarray:
    """Weighted pure-measure contribution from unnormalized Gram matrices."""
    if measure == "concurrence":
        p = np.einsum("...aa->...", g).real
        s4 = np.einsum("...ab,...ba->...", g, g).real
        return np.sqrt(np.clip(2.0 * (p * p - s4), 0.0, None))
    lam = np.clip(_psd_eigvals_small(g), 0.0, None)
    t = np.sum(np.sqrt(lam), axis=-1)
    p = np.sum(lam, axis=-1)
    return np.clip(t * t - p, 0.0, None)


def _descend_group(
    members: np.ndarray,
    measure: str,
    sgn: float,
    opts: RoofOptions,
    da: int,
    db: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Coordinate descent on sgn * objective for a batch of restarts.

    ``members`` has shape (R, k, D) and is modified in place; returns the
    per-restart objective values (sign already applied) and the members.
    Each sweep visits every row pair once, in disjoint batches; a restart
    stops once a full sweep improves it by less than ``improve_tol``.
    """
    contrib_rows = _CONTRIBS[measure]
    nr, k, _ = members.shape
    vals = sgn * contrib_rows(members.reshape(nr, k, da, db))  # (R, k)
    total = vals.sum(axis=1)
    active = np.ones(nr, dtype=bool)
    rounds = _round_robin(k)
    swap = db < da  # evaluate Grams on the smaller side

    th0 = (np.arange(opts.coarse_theta) + 0.5) * (np.pi / opts.coarse_theta)
    ph0 = np.arange(opts.coarse_phi) * (2.0 * np.pi / opts.coarse_phi)
    coarse_th = np.repeat(th0, opts.coarse_phi)
    coarse_ph = np.tile(ph0, opts.coarse_theta)
    coef_coarse = _coef_tensor(coarse_th, coarse_ph)  # (C, 2, 2, 2)
    if swap:
        coef_coarse = np.conj(coef_coarse)
    ref_off = np.linspace(-1.0, 1.0, opts.refine_points)
    ref_th = np.repeat(ref_off, opts.refine_points)
    ref_ph = np.tile(ref_off, opts.refine_points)

    for _ in range(opts.max_sweeps):
        if not active.any():
            break
        idx = np.nonzero(active)[0][:, None]  # (A, 1)
        before = total[idx[:, 0]].copy()
        for pairs in rounds:
            il = np.array([i for i, _ in pairs])
            jl = np.array([j for _, j in pairs])
            u = members[idx, il]  # (A, P, D)
            w = members[idx, jl]
            x = np.stack([u, w], axis=2).reshape(u.shape[0], len(pairs), 2, da, db)
            if swap:
                x = np.conj(np.swapaxes(x, -1, -2))
            blocks = np.einsum("apxde,apyfe->apxydf", x, np.conj(x))

            # coarse scan with a fixed global grid
            g = np.einsum("cwxy,apxydf->apcwdf", coef_coarse, blocks)
            rowc = sgn * _contrib_from_gram(g, measure)  # (A, P, C, 2)
            cand = rowc.sum(axis=-1)
            pick = np.argmin(cand, axis=-1)
            best = np.take_along_axis(cand, pick[..., None], axis=-1)[..., 0]
            best_rows = np.take_along_axis(rowc, pick[..., None, None], axis=-2)[..., 0, :]
            best_th = coarse_th[pick]
            best_ph = coarse_ph[pick]

            # local refinement around the per-restart best angles
            dth = 0.5 * np.pi / opts.coarse_theta
            dph = np.pi / opts.coarse_phi
            for _round in range(opts.refine_rounds):
                th = best_th[..., None] + dth * ref_th
                ph = best_ph[..., None] + dph * ref_ph
                coef = _coef_tensor(th, ph)
                if swap:
                    coef = np.conj(coef)
                g = np.einsum("apcwxy,apxydf->apcwdf", coef, blocks)
                rowc = sgn * _contrib_from_gram(g, measure)
                cand = rowc.sum(axis=-1)
                pick = np.argmin(cand, axis=-1)
                cbest = np.take_along_axis(cand, pick[..., None], axis=-1)[..., 0]
                upd = cbest < best
                best = np.where(upd, cbest, best)
                best_rows = np.where(
                    upd[..., None],
                    np.take_along_axis(rowc, pick[..., None, None], axis=-2)[..., 0, :],
                    best_rows,
                )
                best_th = np.where(upd, np.take_along_axis(th, pick[..., None], axis=-1)[..., 0], best_th)
                best_ph = np.where(upd, np.take_along_axis(ph, pick[..., None], axis=-1)[..., 0], best_ph)
                dth /= opts.refine_points - 1
                dph /= opts.refine_points - 1

            old_vi = vals[idx, il]
            old_vj = vals[idx, jl]
            improved = best < old_vi + old_vj
            a = np.where(improved, np.cos(best_th), 1.0)[..., None]
            b = np.where(improved, np.sin(best_th) * np.exp(1j * best_ph), 0.0)[..., None]
            members[idx, il] = a * u + b * w
            members[idx, jl] = -np.conj(b) * u + a * w
            new_vi = np.where(improved, best_rows[..., 0], old_vi)
            new_vj = np.where(improved, best_rows[..., 1], old_vj)
            vals[idx, il] = new_vi
            vals[idx, jl] = new_vj
            total[idx[:, 0]] += (new_vi + new_vj - old_vi - old_vj).sum(axis=1)
        gain = before - total[idx[:, 0]]
        active[idx[:, 0]] = gain >= opts.improve_tol
    return total, members


def _local_supports(mat: np.ndarray, da: int, db: int, cutoff: float) -> tuple[np.ndarray, np.ndarray]:
    """Support isometries of the two marginals of a bipartite density."""
    tens = mat.reshape(da, db, da, db)
    rho_a = np.einsum("abcb->ac", tens)
    rho_b = np.einsum("abad->bd", tens)
    _, ua = _phase_fixed_eigh(rho_a, cutoff)
    _, ub = _phase_fixed_eigh(rho_b, cutoff)
    return ua, ub


def _roof_search(
    rho: DensityMatrix, measure: str, sense: str, opts: RoofOptions
) -> RoofEstimate:
    if len(rho.dims) != 2:
        raise ValueError(
            f"convex-roof search needs a two-site density matrix, got dims {rho.dims}"
        )
    sgn = 1.0 if sense == "min" else -1.0
    direction = UPPER_BOUND_ON_MIN if sense == "min" else LOWER_BOUND_ON_MAX
    da, db = rho.dims

    # Measures across the cut are invariant under local isometries, so the
    # search runs in the (often much smaller) local support spaces.
    ua, ub = _local_supports(rho.mat, da, db, opts.rank_tol)
    ra, rb = ua.shape[1], ub.shape[1]
    if ra == 1 or rb == 1:
        # one marginal is pure, so the state is a product across the cut
        ens = sample_ensemble(rho)
        return RoofEstimate(0.0, direction, 0, ens)
    tens = rho.mat.reshape(da, db, da, db)
    small = np.einsum("ar,abcd,ct->rbtd", np.conj(ua), tens, ua)
    small = np.einsum("bs,rbtd,du->rstu", np.conj(ub), small, ub).reshape(ra * rb, ra * rb)

    def lift(row: np.ndarray) -> np.ndarray:
        return (ua @ row.reshape(ra, rb) @ ub.T).reshape(-1)

    q, e = _phase_fixed_eigh(small, opts.rank_tol)
    rank = len(q)
    if rank == 1:
        amps = lift(e[:, 0])
        state = PureState(rho.shape, amps / np.linalg.norm(amps))
        ens = Ensemble((1.0,), (state,))
        val = _pure_value_dims(measure, e[:, 0], ra, rb)
        return RoofEstimate(val, direction, 0, ens)

    base = np.sqrt(q)[:, None] * e.T  # (rank, ra*rb), rows sqrt(q_j) e_j

    best_val = math.inf
    best_members: np.ndarray | None = None
    n_offsets = len(opts.k_offsets)
    for slot, off in enumerate(opts.k_offsets):
        t_indices = [t for t in range(opts.restarts) if t % n_offsets == slot]
        if not t_indices:
            continue
        k = rank + off
        vs = np.stack([random_isometry(k, rank, opts.seed + t) for t in t_indices])
        members = vs @ base  # (R, k, ra*rb)
        totals, members = _descend_group(members, measure, sgn, opts, ra, rb)
        gi = int(np.argmin(totals))
        if totals[gi] < best_val:
            best_val = float(totals[gi])
            best_members = members[gi].copy()

    assert best_members is not None
    weights = np.einsum("kd,kd->k", best_members, best_members.conj()).real
    kept = weights > 1e-14
    weights = weights[kept]
    rows = best_members[kept]
    wsum = float(np.sum(weights))
    states = tuple(
        PureState(rho.shape, lift(rows[i]) / math.sqrt(weights[i]))
        for i in range(len(weights))
    )
    ens = Ensemble(tuple(float(wt / wsum) for wt in weights), states)
    return RoofEstimate(sgn * best_val, direction, opts.restarts, ens)


def _pure_value_dims(measure: str, amps: np.ndarray, da: int, db: int) -> float:
    """Pure measure of a raw amplitude vector over a (da, db) cut."""
    m = amps.reshape(da, db)
    g = m @ m.conj().T if da <= db else m.conj().T @ m
    lam = np.clip(np.linalg.eigvalsh(g), 0.0, None)
    if measure == "concurrence":
        return math.sqrt(max(0.0, 2.0 * (1.0 - float(np.sum(lam * lam)))))
    s = float(np.sum(np.sqrt(lam)))
    return max(0.0, s * s - 1.0)


def roof_minimize(
    rho: DensityMatrix, pure_measure: str = "concurrence", opts: RoofOptions | None = None
) -> RoofEstimate:
    """Smallest ensemble average of a pure measure found by the search.

    The returned value is an upper bound on the true convex roof and is
    monotone non-increasing in the number of restarts for a fixed seed.
    """
    if pure_measure not in _CONTRIBS:
        raise ValueError(f"unknown pure measure {pure_measure!r}")
    return _roof_search(rho, pure_measure, "min", opts or RoofOptions())


def roof_maximize(rho: DensityMatrix, opts: RoofOptions | None = None) -> RoofEstimate:
    """Largest ensemble-average concurrence found: a lower bound on CoA."""
    return _roof_search(rho, "concurrence", "max", opts or RoofOptions())


# ---------------------------------------------------------------------------
# mixed-state dispatch used by the verification layer
# ---------------------------------------------------------------------------

def concurrence_mixed(
    rho: DensityMatrix, opts: RoofOptions | None = None
) -> tuple[float, str]:
    """Mixed concurrence: closed form on two qubits, roof search otherwise."""
    if rho.dims == (2, 2):
        return wootters_concurrence(rho), "closed-form"
    return roof_minimize(rho, "concurrence", opts).value, UPPER_BOUND_ON_MIN


def coa_mixed(rho: DensityMatrix, opts: RoofOptions | None = None) -> tuple[float, str]:
    """Mixed concurrence of assistance: closed form on two qubits."""
    if rho.dims == (2, 2):
        return coa_two_qubit(rho), "closed-form"
    return roof_maximize(rho, opts).value, LOWER_BOUND_ON_MAX


def cren_mixed(rho: DensityMatrix, opts: RoofOptions | None = None) -> tuple[float, str]:
    """Convex-roof extended negativity.

    On two qubits every pure state has equal negativity and concurrence,
    so the roof coincides with the closed-form concurrence.
    """
    if rho.dims == (2, 2):
        return wootters_concurrence(rho), "closed-form"
    return roof_minimize(rho, "negativity", opts).value, UPPER_BOUND_ON_MIN
