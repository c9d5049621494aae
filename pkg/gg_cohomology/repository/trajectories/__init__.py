from .isotopy import Isotopy
from .trajectory import Trajectory, tethered_loop, extract_braid, gamma

__all__ = ['Isotopy', 'Trajectory', 'tethered_loop', 'extract_braid', 'gamma']
