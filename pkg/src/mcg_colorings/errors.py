"""
Exception hierarchy for the toolkit.
Everything raised on bad input derives from ToolkitError so the CLI can map it to exit 2.
"""


class ToolkitError(ValueError):
    """Base class for all domain errors"""


class NotPrimitive(ToolkitError):
    """Pair is (0,0) or its entries share a factor"""


class NonCanonical(ToolkitError):
    """Pair is primitive but not the canonical sign representative"""


class NotInPositiveQuadrant(ToolkitError):
    """Curve has no tree word (q = 0 or outside X1)"""


class SpecialVertex(ToolkitError):
    """The (1,0) vertex below the root has no children"""


class PaletteSize(ToolkitError):
    """Palette does not have 2^k entries"""


class DuplicateColor(ToolkitError):
    """Palette entries are not pairwise distinct"""


class TrivialSplit(ToolkitError):
    """One side of a binarization holds no anchor color"""


class InvalidSurface(ToolkitError):
    """Genus/boundary combination outside the supported range"""


class IndexOutOfRange(ToolkitError):
    """Curve index or lattice axis outside 1..n"""


class NotInteresting(ToolkitError):
    """Twist acts trivially on the multicurve (m_k = 0)"""


class NotDistinct(ToolkitError):
    """Repeated entries where distinct ones are required"""


class NotAlmostInvariant(ToolkitError):
    """Some shift changes the color of infinitely many lattice points"""


class DimensionTooSmall(ToolkitError):
    """Lattice check needs more axes"""


class IntegerOverflow(ToolkitError):
    """Result left the signed 64-bit range"""


class NotUnimodular(ToolkitError):
    """Matrix determinant is not 1"""


class InvalidColoring(ToolkitError):
    """Coloring data does not have the structured shape"""


class DocumentError(ToolkitError):
    """Malformed JSON document or textual form"""
