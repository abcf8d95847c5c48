"""Dyon-oscillator duality toolkit."""

from ._core import (
    DyonoscError,
    clebsch_gordan,
    dirac_circulation,
    dirac_potential,
    dyon3_wavefn,
    anyon_wavefn,
    euler_residual,
    forward_map,
    hermite,
    hurwitz_matrix,
    kummer,
    osc_degeneracy,
    run_cli,
    solve_radial,
    spectrum,
    verify,
    vortex_circulation,
    vortex_potential,
    wigner_d,
    ycm_degeneracy,
    yang_potentials,
)

__all__ = [
    "DyonoscError",
    "anyon_wavefn",
    "clebsch_gordan",
    "dirac_circulation",
    "dirac_potential",
    "dyon3_wavefn",
    "euler_residual",
    "forward_map",
    "hermite",
    "hurwitz_matrix",
    "kummer",
    "osc_degeneracy",
    "run_cli",
    "solve_radial",
    "spectrum",
    "verify",
    "vortex_circulation",
    "vortex_potential",
    "wigner_d",
    "ycm_degeneracy",
    "yang_potentials",
]
