"""van der Waals / Casimir-Polder coefficients for atoms above graphene."""

from ._gvdw import (
    AtomCatalog,
    AtomSpec,
    C3Curve,
    C3Result,
    Constants,
    ConvergenceError,
    CurvePoint,
    DiracParams,
    FitReport,
    GapSweep,
    GapSweepPoint,
    HydrodynamicParams,
    Kinematics,
    NotFoundError,
    PhenomenologicalPotential,
    Quantity,
    QuadratureConfig,
    RatioRow,
    RatioTable,
    ReflectionPair,
    ValidationError,
    __version__,
    constants,
    default_delta_grid,
    default_separation_grid,
    deviation_profile,
    energy_eV_from_c3,
    evaluate,
    fit_potential,
    fit_separation_grid,
    from_atomic_units,
    kinematics_from_y,
    matsubara_frequency,
    model_label,
    model_ratio_table,
    phi,
    polarizability,
    polarizability_au,
    potential_c3_au,
    potential_energy_eV,
    reference_separations,
    reflection_dirac,
    reflection_hydrodynamic,
    species_ratio,
    sweep_gap,
    sweep_separation,
    to_atomic_units,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
