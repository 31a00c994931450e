"""Lifshitz free energy and pressure of thin metallic films.

Compares the Drude and plasma descriptions of the film metal, in vacuum
or sandwiched between dielectric plates, with closed-form asymptotic
cross-checks and a CLI for sweeps and regression fixtures.
"""

from .asymptotics import (
    AsymptoticDomainError,
    AsymptoticInput,
    classical_drude_free_energy,
    classical_drude_pressure,
    drude_tail_bound,
    ideal_metal_limits,
    plasma_l0_combined,
    plasma_l0_pressure,
    plasma_l0_te,
    plasma_l0_tm,
    plasma_tail_l_ge_1,
)
from .lifshitz import (
    EngineError,
    FreeEnergyResult,
    LayeredConfig,
    MatsubaraTermResult,
    PressureResult,
    ValidationError,
    free_energy,
    matsubara_term,
    nonrelativistic_free_energy,
    pressure,
    reflection_coefficients,
    zero_frequency_term,
    zero_temperature_energy,
)
from .materials import (
    Drude,
    DrudeLike,
    DrudeTail,
    FiniteEpsilon,
    MaterialError,
    OpticalTable,
    Oscillator,
    Plasma,
    PlasmaLike,
    PlasmaTail,
    RelaxationLaw,
    Tabulated,
    Vacuum,
    evaluate,
    gold_drude,
    gold_plasma,
    gold_relaxation,
    kk_transform,
    sapphire,
    zero_frequency_class,
)
from .specfun import LogMagnitude, bessel_k2, log_sum_exp_series, polylog, zeta3

__version__ = "0.1.0"
