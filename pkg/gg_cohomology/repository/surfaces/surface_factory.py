from pathlib import Path
import importlib
import functools
from typing import Set

from ...errors import UnsupportedSurface
from .surface import Surface


class SurfaceFactory:
    """Factory class for dynamically loading surface models.

    Naming Convention:
        - Module files should be named: {surface_name}_surface.py
        - Classes should be named: {SurfaceName}Surface

    Example:
        ```python
        surfaces = SurfaceFactory.get_supported_surfaces()
        disc = SurfaceFactory.create_surface("disc")
        ```
    """

    SURFACES_DIR = Path(__file__).parent / "models"

    @classmethod
    def create_surface(cls, surface_key: str) -> Surface:
        """Dynamically load and create an instance of a surface model.

        Args:
            surface_key: String identifier for the surface (e.g., 'disc', 'torus')

        Returns:
            Surface: An instantiated surface model

        Raises:
            UnsupportedSurface: If no model exists for the key
            ImportError: If the model module cannot be imported
        """
        if surface_key not in cls.get_supported_surfaces():
            raise UnsupportedSurface(
                f"Surface '{surface_key}' is not supported. "
                f"Supported surfaces: {sorted(cls.get_supported_surfaces())}"
            )

        surface_class_name = f"{surface_key.capitalize()}Surface"
        module_path = f"gg_cohomology.repository.surfaces.models.{surface_key}_surface"

        try:
            module = importlib.import_module(module_path)
        except ImportError as e:
            raise ImportError(f"Could not import surface model '{surface_key}'") from e

        surface_class = getattr(module, surface_class_name)
        return surface_class()

    @classmethod
    @functools.cache
    def get_supported_surfaces(cls) -> Set[str]:
        """Names of the surface models found in the models directory."""
        surface_files = cls.SURFACES_DIR.glob("*_surface.py")
        return {
            file.stem.replace("_surface", "")
            for file in surface_files
            if not file.stem.startswith("_")
        }
