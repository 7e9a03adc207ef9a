"""Optional numba acceleration.

The array kernels in :mod:`suffixkit._kernels` are written as plain loops over
numpy arrays so they run identically with or without numba. When numba is
missing the decorator below is a no-op and everything still works, just slower.
"""

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap
