"""
Regions Package
===============

The model homomorphism rho_eps: U/W/V regions in area coordinates, the model
flows supported in them, and the case tables predicting the braid traced by
a configuration of a given type.

Example Usage:
--------------

```python
disc = SurfaceFactory.create_surface("disc")
regions = build_regions(disc, 0.2)
iso = rho_isotopy(disc, regions, BraidWord.parse(P3, "a b"))
```
"""
from .regions import (
    Box,
    Region,
    RegionSpec,
    Strip,
    TypeSignature,
    WavyBand,
    build_regions,
    classify_type,
    feasible_bound,
    good_types,
    nearest_type,
)
from .flows import ModelFlow, rho_flow, rho_isotopy
from .case_tables import PredictedBraid, count_rule, predicted_gamma

__all__ = [
    'Box', 'Region', 'RegionSpec', 'Strip', 'TypeSignature', 'WavyBand',
    'build_regions', 'classify_type', 'feasible_bound', 'good_types', 'nearest_type',
    'ModelFlow', 'rho_flow', 'rho_isotopy', 'PredictedBraid', 'count_rule', 'predicted_gamma',
]
