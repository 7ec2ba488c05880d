"""
Progress tracking.
Timestamped step messages on stderr, silent unless verbose mode is switched on.
"""

import sys
import time
from datetime import datetime
from typing import Iterable, Optional, Tuple

_VERBOSE = False


def set_verbose(enabled: bool) -> None:
    global _VERBOSE
    _VERBOSE = bool(enabled)


def is_verbose() -> bool:
    return _VERBOSE


def print_progress(message: str, start_time: Optional[float] = None) -> float:
    """Print timestamped progress message"""
    if _VERBOSE:
        timestamp = datetime.now().strftime("%H:%M:%S")
        if start_time:
            elapsed = time.time() - start_time
            print(f"[{timestamp}] ✓ {message} ({elapsed:.2f}s)", file=sys.stderr)
        else:
            print(f"[{timestamp}] → {message}", file=sys.stderr)
    return time.time()


def print_banner(title: str, width: int = 60) -> None:
    if _VERBOSE:
        print(f"\n{'=' * width}", file=sys.stderr)
        print(title.upper(), file=sys.stderr)
        print(f"{'=' * width}", file=sys.stderr)


def print_summary(title: str, rows: Iterable[Tuple[str, object]], width: int = 60) -> None:
    """Print a banner followed by aligned name/value rows"""
    if not _VERBOSE:
        return
    print_banner(title, width)
    for name, value in rows:
        if isinstance(value, int) and not isinstance(value, bool):
            value = f"{value:,}"
        print(f"{name:24s}: {value}", file=sys.stderr)
    print(f"{'=' * width}", file=sys.stderr)
