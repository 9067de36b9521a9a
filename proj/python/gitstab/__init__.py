"""Exact-arithmetic torus (semi)stability toolkit.

Thin package wrapper around the _gitstab extension module. All rational
values cross the boundary as fractions.Fraction, so every result is exact.
"""

from ._gitstab import (  # noqa: F401
    __version__,
    act_on_form,
    affine_dim,
    certify,
    contains_origin,
    destab_rays,
    dual_cone_rays,
    generic_state,
    hilbert_state,
    hm_index,
    hypersurface_generic_state,
    min_norm_point,
    origin_in_interior,
    project_weight,
    state_of_form,
    trivial_weight_necessary,
    vertex_oracle,
    weyl_orbit,
    worst_1ps,
)
