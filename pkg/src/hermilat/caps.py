"""Size caps for exhaustive computations.

Every cap can be lifted for a single call with ``force=True`` or globally
by setting ``HERMILAT_CAP_OVERRIDE`` to a non-empty value other than ``0``.
Lifting a cap emits a :class:`CapOverrideWarning` instead of raising.
"""
import os
import warnings

from .errors import CapError

DEFAULT_CAPS = {
    "field_size": 2**16,
    "dimension": 8,
    "subspaces": 20000,
    "carrier": 2**20,
    "similarity_search": 10**6,
    "rank1_scan": 10**6,
    "congruence_size": 500,
    "lattice_size": 20000,
    "vector_pairs": 2**20,
    "vectors": 2**20,
}


class CapOverrideWarning(UserWarning):
    pass


def override_active():
    return os.environ.get("HERMILAT_CAP_OVERRIDE", "") not in ("", "0")


def check_cap(name, value, error=CapError, force=False, limit=None):
    """Raise ``error`` when ``value`` exceeds the named cap, unless overridden."""
    limit = DEFAULT_CAPS[name] if limit is None else limit
    if value <= limit:
        return
    msg = f"{name} cap exceeded: {value} > {limit}"
    if force or override_active():
        warnings.warn(msg + " (override active)", CapOverrideWarning, stacklevel=3)
        return
    raise error(msg)
