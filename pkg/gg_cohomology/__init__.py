from .repository import groups, cochains, surfaces, trajectories, regions, integration

__all__ = ['groups', 'cochains', 'surfaces', 'trajectories', 'regions', 'integration']
