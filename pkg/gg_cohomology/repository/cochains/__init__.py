from .cochain import CochainHandle, coboundary, homogeneity_defect, right_translate, sup_norm_estimate
from .quasimorphism import QmHandle, brooks_qm, combine_qms, homogenize, pullback_qm, qm_to_cochain

__all__ = [
    'CochainHandle', 'coboundary', 'homogeneity_defect', 'right_translate', 'sup_norm_estimate',
    'QmHandle', 'brooks_qm', 'combine_qms', 'homogenize', 'pullback_qm', 'qm_to_cochain',
]
