"""
Dehn-Thurston Twists
====================

Pants-curve twists acting on Dehn-Thurston coordinates, twist strings, the Z^d
lattices spanned by commuting twists, and checks on colorings of those lattices.

Usage:
    from mcg_colorings.dehn_thurston import parse_multicurve, twist

    twist(parse_multicurve("2,0;3:5"), 1, 2).format()   # "2,0;3:11"
"""

from .checks import (
    CHECK_REGISTRY,
    BaseLatticeCheck,
    CheckReport,
    CommonFutureCheck,
    Lemma1Check,
    common_future_check,
    connecting_path,
    get_check,
    lemma1_check,
    run_checks,
)
from .coordinates import (
    DTMulticurve,
    SurfaceSpec,
    TwistLattice,
    acts_trivially,
    coordinates_summary,
    is_interesting,
    lattice_from_twists,
    parse_multicurve,
    string,
    twist,
)
from .lattice_coloring import (
    LatticeColoring,
    ShiftDefect,
    all_sign_keys,
    axis_defects,
    dumps_lattice,
    future,
    lattice_from_dict,
    lattice_to_dict,
    load_lattice_document,
    past,
    require_almost_invariant,
    scan_window,
    shift_defect,
    sign_key,
    window_shift_defect,
)
