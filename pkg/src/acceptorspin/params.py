"""Physical constants and material / hyperfine parameter sets.

Parameter values default to the GaAs set used throughout the package
(deformation potentials, elastic ratio, density, sound speeds, measured
g-factors, hyperfine constants).  Energies are stored in eV; SI
conversions happen only inside rate formulas.

Configuration is a flat plain-text file of ``key = value`` lines with
``#`` comments.  All keys are lower_snake_case.  Schema:

======================  =======================================  ==============
key                     meaning                                  default
======================  =======================================  ==============
a_c                     conduction-band deformation pot. (eV)    -7.17
a_v                     valence-band deformation pot. (eV)       1.16
c_ratio                 elastic ratio C12/C11                    0.4526
b                       valence shear deformation pot. (eV)      -1.7
b_prime                 Coulomb-renormalized b (eV)              equal to b
rho                     mass density (kg/m^3)                    5.32e3
s_l                     longitudinal sound speed (m/s)           4.73e3
s_t                     transverse sound speed (m/s)             3.35e3
g_hh_perp               in-plane heavy-hole g-factor             -0.15
g_e_perp                in-plane electron g-factor               -0.43
lattice_constant        cubic lattice constant (m)               5.653e-10
c_as                    As hyperfine constant (eV)               4.4e-6
c_ga                    Ga hyperfine constant (eV)               3.0e-6
i_nuc                   nuclear spin                             1.5
a_b                     acceptor Bohr radius (m)                 5.0903640513e-9
int_f2g2                radial integral of r^2 f^2 g^2, in       0.5
                        units of 1/a_b^3
int_f4                  radial integral of r^2 f^4, same units   7.9
mixing_ratio            heavy-light mixing ratio (strain         0.05
                        anisotropy splitting over biaxial
                        splitting)
======================  =======================================  ==============

The default ``a_b`` is calibrated so that the mixing-free hyperfine
dephasing term alone gives T2* = 58 ns with the default hyperfine
constants and per-sublattice cell volume v0 = lattice_constant^3 / 4
(see :func:`acceptorspin.hyperfine.calibrate_bohr_radius`).  Literature
estimates of the acceptor radius are smaller (1-3 nm); the calibrated
value is an effective normalization of the radial integrals rather
than an independently measured length.

The unit-cell volume v0 is defined per sublattice nucleus (a^3/4):
lattice sums over one sublattice convert to integrals with this volume.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import scipy.constants as sc

from .errors import ValidationError

# Default Bohr radius (m); frozen output of calibrate_bohr_radius() with
# the defaults below (mixing-free T2* target of 58 ns).
CALIBRATED_BOHR_RADIUS = 5.0903640513e-09


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants (CODATA) plus the GaAs unit-cell geometry."""

    hbar_j_s: float = sc.hbar
    hbar_ev_s: float = sc.physical_constants["reduced Planck constant in eV s"][0]
    mu_b_ev_t: float = sc.physical_constants["Bohr magneton in eV/T"][0]
    mu_b_j_t: float = sc.physical_constants["Bohr magneton"][0]
    k_b_ev_k: float = sc.physical_constants["Boltzmann constant in eV/K"][0]
    k_b_j_k: float = sc.k
    ev_j: float = sc.e
    lattice_constant: float = 5.653e-10  # m

    @property
    def v0(self) -> float:
        """Unit-cell volume per sublattice nucleus, a^3/4 (m^3)."""
        return self.lattice_constant**3 / 4.0

    def validate(self) -> None:
        for name in ("hbar_j_s", "mu_b_ev_t", "k_b_ev_k", "lattice_constant"):
            if getattr(self, name) <= 0:
                raise ValidationError(f"{name} must be positive")


@dataclass(frozen=True)
class MaterialParams:
    """GaAs material parameters for strain shifts and spin-phonon rates."""

    a_c: float = -7.17        # conduction-band deformation potential (eV)
    a_v: float = 1.16         # valence-band deformation potential (eV)
    c_ratio: float = 0.4526   # C12/C11
    b: float = -1.7           # valence shear deformation potential (eV)
    b_prime: float = -1.7     # Coulomb-renormalized b (eV); defaults to b
    rho: float = 5.32e3       # kg/m^3
    s_l: float = 4.73e3       # m/s
    s_t: float = 3.35e3       # m/s
    g_hh_perp: float = -0.15  # measured in-plane heavy-hole g-factor
    g_e_perp: float = -0.43   # measured in-plane electron g-factor

    def validate(self) -> None:
        if self.rho <= 0:
            raise ValidationError("rho must be positive")
        if self.s_l <= 0:
            raise ValidationError("s_l must be positive")
        if self.s_t <= 0:
            raise ValidationError("s_t must be positive")
        if not 0.0 < self.c_ratio < 1.0:
            raise ValidationError("c_ratio must lie strictly between 0 and 1")


@dataclass(frozen=True)
class HyperfineParams:
    """Hyperfine coupling set for the nuclear-field dephasing estimate.

    ``int_f2g2`` and ``int_f4`` are the dimensionless coefficients of the
    radial integrals in units of 1/a_b^3; the physical integrals are
    ``int_f2g2 / a_b**3`` and ``int_f4 / a_b**3`` (m^-3).
    """

    c_as: float = 4.4e-6      # As sublattice hyperfine constant (eV)
    c_ga: float = 3.0e-6      # Ga sublattice hyperfine constant (eV)
    i_nuc: float = 1.5        # nuclear spin (3/2 for both GaAs sublattices)
    a_b: float = CALIBRATED_BOHR_RADIUS  # acceptor Bohr radius (m)
    int_f2g2: float = 0.5     # in units of 1/a_b^3
    int_f4: float = 7.9       # in units of 1/a_b^3
    mixing_ratio: float = 0.05  # anisotropy splitting over biaxial splitting

    def validate(self) -> None:
        if self.c_as < 0 or self.c_ga < 0:
            raise ValidationError("hyperfine constants c_as, c_ga must be >= 0")
        if self.i_nuc <= 0:
            raise ValidationError("i_nuc must be positive")
        if self.a_b <= 0:
            raise ValidationError("a_b must be positive")
        if self.int_f2g2 < 0 or self.int_f4 < 0:
            raise ValidationError("radial integrals must be >= 0")


_CONSTANT_KEYS = {"lattice_constant"}
_MATERIAL_KEYS = {f.name for f in dataclasses.fields(MaterialParams)}
_HYPERFINE_KEYS = {f.name for f in dataclasses.fields(HyperfineParams)}


def parse_config(text: str) -> dict[str, float]:
    """Parse ``key = value`` lines into a dict of floats.

    Blank lines and ``#`` comments are ignored.  Raises
    :class:`ValidationError` on malformed lines, unknown keys or
    non-numeric values.
    """
    out: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _CONSTANT_KEYS | _MATERIAL_KEYS | _HYPERFINE_KEYS:
            raise ValidationError(f"line {lineno}: unknown key {key!r}")
        if key in out:
            raise ValidationError(f"line {lineno}: duplicate key {key!r}")
        try:
            out[key] = float(value)
        except ValueError:
            raise ValidationError(
                f"line {lineno}: value for {key!r} is not a number: {value!r}"
            ) from None
    return out


def load_params(
    config_text: str = "",
) -> tuple[PhysicalConstants, MaterialParams, HyperfineParams]:
    """Build validated parameter sets from config text.

    Unspecified keys take the GaAs defaults.  ``b_prime`` follows an
    explicit ``b`` unless set on its own.
    """
    values = parse_config(config_text)

    if "b" in values and "b_prime" not in values:
        values["b_prime"] = values["b"]

    constants = PhysicalConstants(
        **{k: v for k, v in values.items() if k in _CONSTANT_KEYS}
    )
    material = MaterialParams(
        **{k: v for k, v in values.items() if k in _MATERIAL_KEYS}
    )
    hyperfine = HyperfineParams(
        **{k: v for k, v in values.items() if k in _HYPERFINE_KEYS}
    )
    constants.validate()
    material.validate()
    hyperfine.validate()
    return constants, material, hyperfine


def serialize_params(
    constants: PhysicalConstants,
    material: MaterialParams,
    hyperfine: HyperfineParams,
) -> str:
    """Emit the full parameter set as config text (round-trips through
    :func:`load_params`)."""
    lines = [f"lattice_constant = {constants.lattice_constant!r}"]
    for obj in (material, hyperfine):
        for field in dataclasses.fields(obj):
            lines.append(f"{field.name} = {getattr(obj, field.name)!r}")
    return "\n".join(lines) + "\n"


def thermal_beta(splitting_ev: float, temperature_k: float,
                 constants: PhysicalConstants | None = None) -> float:
    """Zeeman splitting over thermal energy, |E| / (k_B T)."""
    if temperature_k <= 0:
        raise ValidationError("temperature must be positive")
    c = constants or PhysicalConstants()
    return abs(splitting_ev) / (c.k_b_ev_k * temperature_k)


def zeeman_splitting_ev(g_factor: float, field_t: float,
                        constants: PhysicalConstants | None = None) -> float:
    """|g| mu_B B in eV."""
    c = constants or PhysicalConstants()
    return abs(g_factor) * c.mu_b_ev_t * field_t


def ev_to_rad_per_ns(energy_ev: float,
                     constants: PhysicalConstants | None = None) -> float:
    """Convert an energy in eV to an angular frequency in rad/ns."""
    c = constants or PhysicalConstants()
    return energy_ev / c.hbar_ev_s * 1e-9


def ev_to_ghz(energy_ev: float) -> float:
    """Convert an energy in eV to an ordinary frequency in GHz (E/h)."""
    return energy_ev * sc.e / sc.h / 1e9


def require_finite(name: str, value: float) -> float:
    """Reject NaN/inf inputs early with a named error."""
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return value
