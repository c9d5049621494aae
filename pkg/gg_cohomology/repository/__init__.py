from . import groups as groups
from . import cochains as cochains
from . import surfaces as surfaces
from . import trajectories as trajectories
from . import regions as regions
from . import integration as integration

__all__ = ['groups', 'cochains', 'surfaces', 'trajectories', 'regions', 'integration']
