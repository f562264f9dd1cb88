"""Strained acceptor-hole level structure.

Builds the 4x4 Hamiltonian of the F = 3/2 acceptor ground quadruplet
under biaxial strain (splitting ``delta0`` between the heavy and light
doublets), anisotropic in-plane strain (coupling ``delta1``) and an
in-plane magnetic field along x, in the hole representation:

    H = -(delta0/2) Fz^2 + g0 mu_B B Fx + (delta1/2) (Fx^2 - Fy^2)

Basis order is |+3/2>, |+1/2>, |-1/2>, |-3/2> with standard
angular-momentum matrix conventions.  The anisotropy term couples
|+-3/2> to |-+1/2>, which splits the heavy doublet linearly in B and
gives the transverse heavy-hole g-factor

    g_hh_perp = -3 delta1 g0 / delta0.

All energies in eV.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import RegimeError, ValidationError
from .params import MaterialParams, PhysicalConstants

_SQ3 = math.sqrt(3.0)

# F = 3/2 angular momentum matrices, basis |+3/2>, |+1/2>, |-1/2>, |-3/2>.
FZ = np.diag([1.5, 0.5, -0.5, -1.5])
FX = np.array(
    [
        [0.0, _SQ3 / 2, 0.0, 0.0],
        [_SQ3 / 2, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, _SQ3 / 2],
        [0.0, 0.0, _SQ3 / 2, 0.0],
    ]
)
FY = 1j * np.array(
    [
        [0.0, -_SQ3 / 2, 0.0, 0.0],
        [_SQ3 / 2, 0.0, -1.0, 0.0],
        [0.0, 1.0, 0.0, -_SQ3 / 2],
        [0.0, 0.0, _SQ3 / 2, 0.0],
    ]
)

# Ratio threshold below which the heavy doublet is treated as well defined.
MAX_DELTA1_RATIO = 0.25
MIN_HEAVY_WEIGHT = 0.6


@dataclass(frozen=True)
class StrainState:
    """In-plane strain components (dimensionless) and optional gap shift."""

    u_xx: float = 0.0
    u_yy: float = 0.0
    u_xy: float = 0.0
    delta_e: float | None = None  # band-gap shift (eV)

    def __post_init__(self):
        for name in ("u_xx", "u_yy", "u_xy"):
            if abs(getattr(self, name)) >= 1e-2:
                raise ValidationError(
                    f"{name} outside the small-strain regime (|u| < 1e-2)"
                )


@dataclass(frozen=True)
class HoleLevelStructure:
    """Inputs of the quadruplet Hamiltonian.

    ``delta0`` is the heavy-light splitting (eV, positive for the
    compressive-strain regime supported here), ``delta1`` the signed
    anisotropic coupling (eV), ``g0`` the bare hole g-factor and ``b_field``
    the magnitude of the in-plane field along x (T).
    """

    delta0: float
    delta1: float = 0.0
    g0: float = 1.0
    b_field: float = 0.0

    def __post_init__(self):
        if self.delta0 <= 0:
            raise ValidationError("delta0 must be positive (compressive strain)")
        if self.b_field < 0:
            raise ValidationError("b_field must be >= 0")


@dataclass(frozen=True)
class SpinorState:
    """Eigenstate over the |+3/2>, |+1/2>, |-1/2>, |-3/2> basis."""

    amplitudes: np.ndarray
    energy: float  # eV

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (4,):
            raise ValidationError("amplitudes must be a length-4 vector")
        if abs(np.vdot(amps, amps).real - 1.0) > 1e-12:
            raise ValidationError("amplitudes must be normalized to 1e-12")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def heavy_weight(self) -> float:
        """Total |+-3/2> population of the state."""
        return float(abs(self.amplitudes[0]) ** 2 + abs(self.amplitudes[3]) ** 2)


def strain_from_shift(delta_e: float, material: MaterialParams) -> float:
    """In-plane strain u_xx from the band-gap shift (eV).

    Inverts delta_e = 2 (a_c - a_v) (1 - C12/C11) u_xx; the sign of the
    shift carries through to the strain.
    """
    coeff = 2.0 * (material.a_c - material.a_v) * (1.0 - material.c_ratio)
    if coeff == 0.0:
        raise ValidationError(
            "degenerate strain coefficient: a_c = a_v or c_ratio = 1"
        )
    return delta_e / coeff


def hh_lh_splitting(u_xx: float, material: MaterialParams) -> float:
    """Heavy-light splitting delta0 = 2 b (1 + 2 C12/C11) u_xx (eV).

    Positive for compressive strain (u_xx < 0 with b < 0).
    """
    return 2.0 * material.b * (1.0 + 2.0 * material.c_ratio) * u_xx


def delta1_from_strain(u_xx: float, u_yy: float, b_prime: float) -> float:
    """Anisotropic coupling delta1 = -b' (u_xx - u_yy) (eV)."""
    return -b_prime * (u_xx - u_yy)


def build_hamiltonian(
    levels: HoleLevelStructure, constants: PhysicalConstants | None = None
) -> np.ndarray:
    """Assemble the 4x4 quadruplet Hamiltonian (eV), Hermitian by
    construction."""
    c = constants or PhysicalConstants()
    zeeman = levels.g0 * c.mu_b_ev_t * levels.b_field
    h = (
        -0.5 * levels.delta0 * (FZ @ FZ)
        + zeeman * FX
        + 0.5 * levels.delta1 * (FX @ FX - FY @ FY)
    )
    return h.astype(complex)


def _extract_splittings(h: np.ndarray) -> tuple[float, float]:
    """Recover (delta0, delta1) from a matrix built by build_hamiltonian."""
    delta0 = float((h[1, 1] - h[0, 0]).real)
    delta1 = float(2.0 * h[0, 2].real / _SQ3)
    return delta0, delta1


def heavy_hole_doublet(h: np.ndarray) -> tuple[SpinorState, SpinorState]:
    """Return the two heavy-hole-like eigenstates, ordered by energy.

    States are identified by their |+-3/2> weight; the phase of each is
    fixed so the |+3/2> amplitude is real and nonnegative.  Raises
    :class:`RegimeError` when the heavy/light character is ambiguous
    (weight below 0.6, or delta0 < 4 |delta1|).
    """
    h = np.asarray(h, dtype=complex)
    if h.shape != (4, 4):
        raise ValidationError("expected a 4x4 matrix")
    delta0, delta1 = _extract_splittings(h)
    if delta0 <= 0:
        raise RegimeError("delta0 extracted from H must be positive")
    if delta0 < 4.0 * abs(delta1):
        raise RegimeError(
            f"delta0 = {delta0:.3e} eV < 4 |delta1| = {4 * abs(delta1):.3e} eV: "
            "heavy doublet not perturbatively separated"
        )
    energies, vectors = np.linalg.eigh(h)
    weights = np.abs(vectors[0, :]) ** 2 + np.abs(vectors[3, :]) ** 2
    heavy_idx = np.argsort(weights)[-2:]
    if weights[heavy_idx].min() < MIN_HEAVY_WEIGHT:
        raise RegimeError(
            "heavy/light character ambiguous: heavy weight below "
            f"{MIN_HEAVY_WEIGHT} (got {weights[heavy_idx].min():.3f})"
        )
    heavy_idx = heavy_idx[np.argsort(energies[heavy_idx])]
    states = []
    for idx in heavy_idx:
        vec = vectors[:, idx]
        vec = _fix_phase(vec)
        states.append(SpinorState(amplitudes=vec, energy=float(energies[idx])))
    return states[0], states[1]


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the |+3/2> amplitude is real >= 0."""
    pivot = vec[0]
    if abs(pivot) < 1e-14:
        # fall back to the largest-magnitude amplitude
        pivot = vec[np.argmax(np.abs(vec))]
    phase = pivot / abs(pivot)
    out = vec / phase
    # scrub residual imaginary dust on the pivot
    out[0] = out[0].real
    return out


def perturbative_doublet(
    levels: HoleLevelStructure, constants: PhysicalConstants | None = None
) -> tuple[SpinorState, SpinorState]:
    """First-order heavy states and energies, valid for
    (|delta1| + |g0 mu_B B|) << delta0.

    The up state is (|+3/2> + |-3/2>)/sqrt(2) with light-hole admixture
    -sqrt(3)(delta1 + g0 mu_B B)/(2 delta0) on both |+-1/2>; the down
    state is (|+3/2> - |-3/2>)/sqrt(2) with admixture
    +-sqrt(3)(delta1 - g0 mu_B B)/(2 delta0).  Energies are
    -9 delta0/8 +- g_hh_perp mu_B B / 2.  Returned ordered by energy.
    """
    c = constants or PhysicalConstants()
    zeeman = levels.g0 * c.mu_b_ev_t * levels.b_field
    alpha_up = _SQ3 * (levels.delta1 + zeeman) / (2.0 * levels.delta0)
    alpha_dn = _SQ3 * (levels.delta1 - zeeman) / (2.0 * levels.delta0)
    up = np.array([1.0, -alpha_up, -alpha_up, 1.0], dtype=complex) / math.sqrt(2)
    dn = np.array([1.0, alpha_dn, -alpha_dn, -1.0], dtype=complex) / math.sqrt(2)
    up /= np.linalg.norm(up)
    dn /= np.linalg.norm(dn)
    g_perp = g_perp_perturbative(levels.delta0, levels.delta1, levels.g0)
    base = -9.0 * levels.delta0 / 8.0
    e_up = base + 0.5 * g_perp * c.mu_b_ev_t * levels.b_field
    e_dn = base - 0.5 * g_perp * c.mu_b_ev_t * levels.b_field
    pair = [
        SpinorState(amplitudes=up, energy=e_up),
        SpinorState(amplitudes=dn, energy=e_dn),
    ]
    pair.sort(key=lambda s: s.energy)
    return pair[0], pair[1]


def g_perp_perturbative(delta0: float, delta1: float, g0: float) -> float:
    """Transverse heavy-hole g-factor, -3 delta1 g0 / delta0."""
    if delta0 == 0:
        raise ValidationError("delta0 must be nonzero")
    return -3.0 * delta1 * g0 / delta0


@dataclass(frozen=True)
class LevelSummary:
    """Derived level structure for a strain state and field."""

    u_xx: float
    delta0: float
    delta1: float
    g_perp: float
    splitting_ev: float
    extras: dict = field(default_factory=dict)


def levels_from_strain(
    strain: StrainState,
    material: MaterialParams,
    g0: float = 1.0,
    b_field: float = 0.0,
    constants: PhysicalConstants | None = None,
) -> LevelSummary:
    """Convenience pipeline: strain components -> splittings -> g-factor."""
    c = constants or PhysicalConstants()
    delta0 = hh_lh_splitting(strain.u_xx, material)
    delta1 = delta1_from_strain(strain.u_xx, strain.u_yy, material.b_prime)
    g_perp = g_perp_perturbative(delta0, delta1, g0) if delta0 != 0 else 0.0
    return LevelSummary(
        u_xx=strain.u_xx,
        delta0=delta0,
        delta1=delta1,
        g_perp=g_perp,
        splitting_ev=abs(g_perp) * c.mu_b_ev_t * b_field,
    )
