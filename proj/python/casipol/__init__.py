"""Thermal Casimir-Polder free energies for uniaxial plates, semispaces and
cylindrical shells, with additive-model comparisons for shell interiors."""

from casipol._core import (  # noqa: F401
    BOLTZMANN_EV_PER_K,
    HBAR_C_EV_NM,
    POLARIZABILITY_AU_NM3,
    AdditiveModel,
    CylinderGeometry,
    FreeEnergyResult,
    OscillatorModel,
    PermittivityModel,
    ThermalGeometry,
    __version__,
    additive_semispace_energy,
    c6_coefficient,
    calibrate_additive,
    compare_inside_outside,
    constant_material,
    drude_lorentz_material,
    free_energy_cylinder,
    free_energy_plate,
    free_energy_semispace,
    interatomic_energy,
    interior_energy,
    kk_transform,
    material_from_tables,
    matsubara_zeta,
    preset,
    region_boundaries,
    sweep_semispace,
)
