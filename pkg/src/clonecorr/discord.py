"""Quantum discord of the two-clone state via projective measurement of clone b.

The measurement basis is the one-parameter family
{cos(t)|0> + sin(t)|1>, sin(t)|0> - cos(t)|1>}, optionally extended by a
relative phase phi on the |1> component. The discord at a basis is

    D = H(b) - H(ab) + H(a | measurement on b),

and the reported discord minimizes the conditional entropy over the basis
family: a dense grid in t on [0, pi/2) (the projector pair has period
pi/2), then golden-section refinement around the best grid point. By
default phi is held at 0; scan_phase=True extends the grid to
phi in [0, pi), which for asymmetric inputs finds genuinely lower minima
(the output's y-axis correlation is invisible to the real family).
"""

from dataclasses import dataclass

import numpy as np

from . import hermat
from .cloner import _as_input, build_output_state
from .errors import DomainError
from .search import golden_min

# outcome probabilities at or below this are degenerate and contribute 0
DEGENERATE_P = 1e-12


@dataclass(frozen=True)
class MeasurementBasis:
    """Projective basis {cos t|0> + e^{i phi} sin t|1>, sin t|0> - e^{i phi} cos t|1>}.

    The projector pair is invariant under t -> t + pi and outcome-swapped
    under t -> t + pi/2, so [0, pi/2) is a canonical range for t.
    """
    t: float
    phi: float = 0.0

    def vectors(self):
        """The two basis kets as length-2 arrays (complex when phi != 0)."""
        c, s = np.cos(self.t), np.sin(self.t)
        if self.phi == 0.0:
            return np.array([c, s]), np.array([s, -c])
        ph = np.exp(1j * self.phi)
        return np.array([c, s * ph]), np.array([s, -c * ph])

    def canonical(self):
        """Equivalent basis (as a projector set) with t folded into [0, pi/2)."""
        return MeasurementBasis(self.t % (np.pi / 2), self.phi)


@dataclass(frozen=True)
class MeasurementOutcome:
    """One measurement branch: probability and the conditioned state of clone a.

    conditional_state is None when the branch is degenerate (probability at
    or below 1e-12); such branches contribute 0 to entropy averages.
    """
    probability: float
    conditional_state: np.ndarray | None
    degenerate: bool = False


@dataclass(frozen=True)
class DiscordResult:
    """Discord at the minimizing basis together with all entropy components (bits)."""
    discord: float
    optimal_t: float
    optimal_phi: float
    entropy_joint: float
    entropy_a: float
    entropy_b: float
    conditional_entropy: float
    mutual_info_j: float
    mutual_info_i: float


def _as_basis(basis):
    if isinstance(basis, MeasurementBasis):
        return basis
    return MeasurementBasis(float(basis))


def _outcome_quadratics(rho, u, v):
    """Compressed block entries <m, e| rho |n, e> for e = (u, v).

    u, v may be arrays (vectorized over measurement angles). Returns
    (q00, q01, q11) with q00/q11 real; q10 is conj(q01) by Hermiticity.
    """
    vc = np.conj(v)
    uu = u * u
    vv = (v * vc).real
    uv = u * v
    uvc = u * vc

    def q(mm, nn):
        i, k = 2 * mm, 2 * nn
        return (uu * rho[i, k] + uv * rho[i, k + 1]
                + uvc * rho[i + 1, k] + vv * rho[i + 1, k + 1])

    return np.real(q(0, 0)), q(0, 1), np.real(q(1, 1))


def _outcome_vectors(ts, phi):
    ts = np.asarray(ts, dtype=float)
    c, s = np.cos(ts), np.sin(ts)
    if phi == 0.0:
        return ((c, s), (s, -c))
    ph = np.exp(1j * phi)
    return ((c, s * ph), (s, -c * ph))


def conditional_entropy_curve(rho, ts, phi=0.0):
    """H(a | measure b at angle t) for an array of angles, in bits.

    Degenerate branches contribute 0; conditional spectra are clipped to
    their positive part, which leaves valid states untouched and keeps the
    value finite when rho is not positive semidefinite (unphysical sweep
    regions).
    """
    rho = np.asarray(rho, dtype=float)
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    total = np.zeros_like(ts)
    for u, v in _outcome_vectors(ts, phi):
        q00, q01, q11 = _outcome_quadratics(rho, u, v)
        p = q00 + q11
        rad = np.hypot(0.5 * (q00 - q11), np.abs(q01))
        lam_hi = 0.5 * p + rad
        lam_lo = 0.5 * p - rad
        live = p > DEGENERATE_P
        with np.errstate(divide="ignore", invalid="ignore"):
            x1 = np.where(live, lam_hi / p, 0.0)
            x2 = np.where(live, lam_lo / p, 0.0)
        term = p * (hermat.plogp(x1) + hermat.plogp(x2))
        total[live] += term[live]
    return total


def measure_b(rho, basis):
    """Projectively measure clone b; returns the two outcomes in basis order.

    Each outcome carries its probability and the conditioned 2x2 state of
    clone a. A probability at or below 1e-12 flags the outcome degenerate
    with no conditional state.
    """
    hermat.validate_state(rho)
    rho = np.asarray(rho, dtype=float)
    basis = _as_basis(basis)
    outcomes = []
    for e in basis.vectors():
        q00, q01, q11 = _outcome_quadratics(rho, e[0], e[1])
        p = float(q00 + q11)
        if p <= DEGENERATE_P:
            outcomes.append(MeasurementOutcome(p, None, degenerate=True))
            continue
        cond = np.array([[q00, q01], [np.conj(q01), q11]]) / p
        outcomes.append(MeasurementOutcome(p, cond, degenerate=False))
    return outcomes


def conditional_entropy(rho, basis):
    """Probability-weighted entropy of clone a after measuring clone b."""
    hermat.validate_state(rho)
    basis = _as_basis(basis)
    curve = conditional_entropy_curve(np.asarray(rho, dtype=float), [basis.t], basis.phi)
    return float(curve[0])


def mutual_info_j(rho):
    """Unmeasured mutual information H(a) + H(b) - H(ab), in bits."""
    spectrum = hermat.validate_state(rho)
    ha = hermat.vn_entropy(hermat.eig_herm2(hermat.partial_trace(rho, "a")))
    hb = hermat.vn_entropy(hermat.eig_herm2(hermat.partial_trace(rho, "b")))
    return ha + hb - hermat.vn_entropy(spectrum)


def mutual_info_i(rho, basis):
    """Measurement-based mutual information H(a) - H(a | measure b), in bits."""
    ha = hermat.vn_entropy(hermat.eig_herm2(hermat.partial_trace(rho, "a")))
    return ha - conditional_entropy(rho, basis)


def discord_at(rho, basis):
    """Discord H(b) - H(ab) + H(a | measure b) at one basis (not minimized).

    Equals mutual_info_j - mutual_info_i at the same basis.
    """
    spectrum = hermat.validate_state(rho)
    basis = _as_basis(basis)
    hb = hermat.vn_entropy(hermat.eig_herm2(hermat.partial_trace(rho, "b")))
    hab = hermat.vn_entropy(spectrum)
    curve = conditional_entropy_curve(np.asarray(rho, dtype=float), [basis.t], basis.phi)
    return float(hb - hab + curve[0])


def discord_min(rho, grid_points=721, refine_tol=1e-9, scan_phase=False):
    """Minimize discord over the measurement family.

    Dense grid of grid_points angles over t in [0, pi/2) guards against the
    conditional entropy's local minima; golden-section then refines around
    the best grid point to refine_tol. With scan_phase the grid extends to
    phi in [0, pi) at the same density and the refinement alternates
    between the two angles.
    """
    spectrum = hermat.validate_state(rho)
    if grid_points < 64:
        raise DomainError(f"grid_points must be >= 64, got {grid_points}")
    rho = np.asarray(rho, dtype=float)

    ha = hermat.vn_entropy(hermat.eig_herm2(hermat.partial_trace(rho, "a")))
    hb = hermat.vn_entropy(hermat.eig_herm2(hermat.partial_trace(rho, "b")))
    hab = hermat.vn_entropy(spectrum)

    def h_at(t, phi):
        return float(conditional_entropy_curve(rho, [t], phi)[0])

    ts = np.linspace(0.0, np.pi / 2, grid_points, endpoint=False)
    dt = (np.pi / 2) / grid_points

    if scan_phase:
        phis = np.linspace(0.0, np.pi, grid_points, endpoint=False)
        dphi = np.pi / grid_points
        best_t, best_phi, best_h = 0.0, 0.0, np.inf
        for phi in phis:
            curve = conditional_entropy_curve(rho, ts, phi)
            i = int(np.argmin(curve))
            if curve[i] < best_h:
                best_t, best_phi, best_h = float(ts[i]), float(phi), float(curve[i])
        # alternate one-dimensional refinements around the best grid point
        best_t, best_h = golden_min(lambda t: h_at(t, best_phi),
                                    best_t - dt, best_t + dt, refine_tol)
        best_phi, best_h = golden_min(lambda phi: h_at(best_t, phi),
                                      best_phi - dphi, best_phi + dphi, refine_tol)
        best_t, best_h = golden_min(lambda t: h_at(t, best_phi),
                                    best_t - dt, best_t + dt, refine_tol)
    else:
        curve = conditional_entropy_curve(rho, ts, 0.0)
        i = int(np.argmin(curve))
        best_t, best_phi, best_h = float(ts[i]), 0.0, float(curve[i])
        best_t, best_h = golden_min(lambda t: h_at(t, 0.0),
                                    best_t - dt, best_t + dt, refine_tol)

    best_t = best_t % (np.pi / 2)
    disc = hb - hab + best_h
    return DiscordResult(
        discord=disc,
        optimal_t=best_t,
        optimal_phi=best_phi,
        entropy_joint=hab,
        entropy_a=ha,
        entropy_b=hb,
        conditional_entropy=best_h,
        mutual_info_j=ha + hb - hab,
        mutual_info_i=ha - best_h,
    )


@dataclass(frozen=True)
class SurfaceRow:
    """One (j, t) sample of the unminimized discord surface."""
    j: float
    t: float
    discord: float
    physical: bool


def discord_surface(state, j_grid, t_grid):
    """Unminimized discord at every (j, t) grid point, row-major in (j, t).

    Rows at machine parameters where the output state is not positive
    semidefinite are emitted with physical=False; their joint entropy uses
    the positive part of the spectrum so the surface stays finite there.
    """
    st = _as_input(state)
    j_grid = np.atleast_1d(np.asarray(j_grid, dtype=float))
    t_grid = np.atleast_1d(np.asarray(t_grid, dtype=float))
    if j_grid.size == 0 or t_grid.size == 0:
        raise DomainError("j and t grids must be nonempty")
    rows = []
    for j in j_grid:
        rho = build_output_state(st, float(j))
        spectrum = hermat.eig_sym4(rho)
        physical = bool(spectrum[-1] >= hermat.STATE_EIG_FLOOR)
        hab = float(hermat.plogp(np.clip(spectrum, 0.0, None)).sum())
        hb = hermat.vn_entropy(hermat.eig_herm2(hermat.partial_trace(rho, "b")))
        curve = conditional_entropy_curve(rho, t_grid, 0.0)
        for t, h in zip(t_grid, curve):
            rows.append(SurfaceRow(j=float(j), t=float(t),
                                   discord=float(hb - hab + h), physical=physical))
    return rows
