"""
Configuration for the colorings toolkit.
Constants live on the class; paths are resolved relative to the project root.
"""

from pathlib import Path

from .errors import IntegerOverflow


class ToolkitConfig:
    """Configuration shared by the library and the CLI"""

    # Exact arithmetic is checked against signed 64-bit bounds
    INT64_MAX = 2**63 - 1
    INT64_MIN = -(2**63)

    # Defaults for scans and renders
    DEFAULT_BALL_RADIUS = 50
    DEFAULT_TREE_DEPTH = 3
    DEFAULT_STRING_WINDOW = (-50, 50)

    # Lattice scans reach this far past the exception bounding box
    LATTICE_MARGIN = 2

    # Documents larger than this are rejected before anything is allocated
    MAX_COLORING_LEVEL = 20
    MAX_LATTICE_DIMENSION = 16

    # Checks cross-check shift defects on a dense window of at most this many points
    WINDOW_CHECK_MAX_CELLS = 2_000_000

    # Color names used by binarize when none are given
    BINARY_COLOR_NAMES = ("0", "1")

    REPORTS_SUBDIR = "data/processed/reports"

    @classmethod
    def get_project_root(cls) -> Path:
        """Get the project root directory"""
        # src/mcg_colorings/config.py -> project root
        return Path(__file__).parent.parent.parent

    @classmethod
    def get_output_dir(cls) -> Path:
        """Directory for CSV reports, created on demand"""
        output_dir = cls.get_project_root() / cls.REPORTS_SUBDIR
        output_dir.mkdir(parents=True, exist_ok=True)
        return output_dir

    @classmethod
    def check_int64(cls, value: int, what: str = "value") -> int:
        """Return value unchanged, or raise if it left the int64 range"""
        if value > cls.INT64_MAX or value < cls.INT64_MIN:
            raise IntegerOverflow(f"{what} {value} exceeds the signed 64-bit range")
        return value
