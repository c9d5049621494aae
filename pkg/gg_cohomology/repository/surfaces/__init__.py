from .surface import Surface, SurfaceKind, SurfacePoint, Configuration
from .surface_factory import SurfaceFactory

__all__ = ['Surface', 'SurfaceKind', 'SurfacePoint', 'Configuration', 'SurfaceFactory']
