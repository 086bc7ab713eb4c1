"""Generalised isodiametric geometry: diameters, area bounds, pixel-region
search and the poisoned-pie simulator."""

from ._core import (
    BudgetError,
    InfeasibleError,
    InputError,
    PixelRegion,
    __version__,
    anneal,
    arc_tab_check,
    bound_profile,
    circle_bound,
    convex_candidate_measure,
    convex_hull,
    crossover,
    diam,
    diam3,
    diam_ab,
    distance_slack,
    evaluate_candidates,
    gen_jung_radius,
    jung_radius,
    kill_probability,
    lens_area,
    lethal_region,
    min_enclosing_circle,
    minkowski_difference,
    rasterize_disk,
    rasterize_disks,
    rasterize_two_disks,
    tab_check,
    triameter,
    u_delta_measure,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
