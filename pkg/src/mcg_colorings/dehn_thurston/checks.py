"""
Necessary-condition checks on lattice colorings.

Every check first tests the almost invariance hypothesis axis by axis. When some
shift recolors infinitely many points the check reports the failing axes and
asserts nothing else.
"""

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import ToolkitConfig
from ..errors import DimensionTooSmall
from ..progress import print_banner, print_progress, print_summary
from .lattice_coloring import (
    LatticeColoring,
    Point,
    ShiftDefect,
    axis_defects,
    future,
    past,
    require_almost_invariant,
    window_shift_defect,
)


@dataclass
class CheckReport:
    check: str
    passed: bool
    hypothesis_holds: bool
    failed_axes: Tuple[int, ...] = ()
    region: Optional[int] = None
    details: Dict[str, object] = field(default_factory=dict)
    window_agrees: Optional[bool] = None

    def to_dict(self) -> dict:
        payload = {
            "check": self.check,
            "passed": self.passed,
            "hypothesis": self.hypothesis_holds,
            "failed_axes": list(self.failed_axes),
            "details": self.details,
        }
        if self.region is not None:
            payload["region"] = [-self.region, self.region]
        if self.window_agrees is not None:
            payload["window_agrees"] = self.window_agrees
        return payload


class BaseLatticeCheck(ABC):
    """Base class for lattice coloring checks"""

    name: str = ""
    min_dimension = 1

    def __init__(self, coloring: LatticeColoring):
        if coloring.dimension < self.min_dimension:
            raise DimensionTooSmall(
                f"{self.name} needs d >= {self.min_dimension}, got d = {coloring.dimension}"
            )
        self.coloring = coloring
        self.defects: Dict[int, ShiftDefect] = {}

    def window_agrees(self) -> Optional[bool]:
        """Whether a dense window scan finds the same shift defects, None above the size limit"""
        c = self.coloring
        side = 2 * (c.bounding_radius + ToolkitConfig.LATTICE_MARGIN + 1) + 1
        if side**c.dimension > ToolkitConfig.WINDOW_CHECK_MAX_CELLS:
            return None
        for axis, defect in self.defects.items():
            seen = window_shift_defect(c, axis)
            if seen != (defect.points if defect.is_finite else None):
                return False
        return True

    # -------------------------
    # Abstract methods (must be implemented by subclasses)
    # -------------------------

    @abstractmethod
    def evaluate(self) -> CheckReport:
        """Run the check on a coloring already known to be almost invariant"""

    # -------------------------
    # Pipeline
    # -------------------------

    def run(self) -> CheckReport:
        print_banner(f"{self.name} check (d = {self.coloring.dimension})")
        start = time.time()

        step_time = print_progress("Classifying shift defects")
        self.defects = axis_defects(self.coloring)
        failed = tuple(axis for axis, d in self.defects.items() if not d.is_finite)
        print_progress("Classified shift defects", step_time)
        agrees = self.window_agrees()

        if failed:
            report = CheckReport(
                self.name,
                passed=False,
                hypothesis_holds=False,
                failed_axes=failed,
                details={"defects": {str(a): self.defects[a].to_dict() for a in failed}},
            )
        else:
            step_time = print_progress(f"Running {self.name}")
            report = self.evaluate()
            print_progress(f"Finished {self.name}", step_time)
        report.window_agrees = agrees

        print_summary(
            f"{self.name} summary",
            [
                ("Hypothesis holds", report.hypothesis_holds),
                ("Failed axes", list(report.failed_axes) or "-"),
                ("Window agrees", "-" if agrees is None else agrees),
                ("Passed", report.passed),
                ("Total time", f"{time.time() - start:.2f}s"),
            ],
        )
        return report


def connecting_path(d: int, a: int, b: int, radius: int) -> List[Point]:
    """
    Lattice path from radius * e_a to -radius * e_a that stays outside the open box
    of the given radius, using axis b to go around it.
    """

    def point(x: int, y: int) -> Point:
        coords = [0] * d
        coords[a - 1] = x
        coords[b - 1] = y
        return tuple(coords)

    path = [point(radius, y) for y in range(0, radius + 1)]
    path += [point(x, radius) for x in range(radius - 1, -radius - 1, -1)]
    path += [point(-radius, y) for y in range(radius - 1, -1, -1)]
    return path


class Lemma1Check(BaseLatticeCheck):
    """
    Future equals past along every axis.

    Outside the box of radius R (one past the exceptions) neighbouring points share
    a color, so walking around the box joins the forward ray of an axis to its
    backward ray without a color change.
    """

    name = "lemma1"
    min_dimension = 2

    def evaluate(self) -> CheckReport:
        c = self.coloring
        radius = c.bounding_radius + 1
        axes = {}
        passed = True
        for a in range(1, c.dimension + 1):
            b = a % c.dimension + 1
            path = connecting_path(c.dimension, a, b, radius)
            seen = sorted({c.color_at(z) for z in path})
            fut = future(c, a)
            pas = past(c, a)
            ok = len(seen) == 1 and fut == pas
            passed = passed and ok
            axes[str(a)] = {
                "future": fut,
                "past": pas,
                "via_axis": b,
                "path_length": len(path),
                "path_colors": seen,
                "passed": ok,
            }
        return CheckReport(self.name, passed, True, region=radius, details={"axes": axes})


def corner_bases(d: int) -> List[Point]:
    """The origin and the 2^d unit corners (+-1, ..., +-1)"""
    bases = [(0,) * d]
    for mask in range(2**d):
        bases.append(tuple(-1 if mask >> (d - 1 - i) & 1 else 1 for i in range(d)))
    return bases


class CommonFutureCheck(BaseLatticeCheck):
    """All axes have the same future, seen from the origin and from every sector corner"""

    name = "common-future"

    def evaluate(self) -> CheckReport:
        c = self.coloring
        violations = []
        futures = {}
        for base in corner_bases(c.dimension):
            seen = {str(axis): future(c, axis, base) for axis in range(1, c.dimension + 1)}
            key = ",".join(map(str, base))
            futures[key] = seen
            if len(set(seen.values())) > 1:
                violations.append(key)
        details = {"futures": futures, "violations": violations}
        return CheckReport(self.name, not violations, True, details=details)


# -------------------------
# Registry
# -------------------------

CHECK_REGISTRY = {
    Lemma1Check.name: Lemma1Check,
    CommonFutureCheck.name: CommonFutureCheck,
}


def get_check(name: str):
    if name not in CHECK_REGISTRY:
        raise ValueError(f"Unknown check: {name}. Available: {sorted(CHECK_REGISTRY)}")
    return CHECK_REGISTRY[name]


def run_checks(c: LatticeColoring, names: Sequence[str]) -> List[CheckReport]:
    return [get_check(name)(c).run() for name in names]


def lemma1_check(c: LatticeColoring) -> CheckReport:
    return Lemma1Check(c).run()


def common_future_check(c: LatticeColoring) -> CheckReport:
    require_almost_invariant(c)
    return CommonFutureCheck(c).run()
