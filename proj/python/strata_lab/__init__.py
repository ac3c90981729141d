"""Half-translation surfaces, Z/2 monodromy and Dehn-twist orbits."""

from ._core import (
    StrataError,
    Surface,
    __version__,
    component_ga_vectors,
    halfperiod_values,
    orbit,
    q_components_over_teich,
    qd_components,
    run_cli,
    sympl,
    twist_action,
    twist_consistency_check,
    weierstrass_p,
    winding_ga,
)

__all__ = [
    "StrataError",
    "Surface",
    "__version__",
    "component_ga_vectors",
    "halfperiod_values",
    "orbit",
    "q_components_over_teich",
    "qd_components",
    "run_cli",
    "sympl",
    "twist_action",
    "twist_consistency_check",
    "weierstrass_p",
    "winding_ga",
]
