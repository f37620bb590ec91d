"""Runtime self-checks, enabled by ``HEAPALG_DEBUG=1`` or by the test suite."""

import os
from contextlib import contextmanager

CHECKS = os.environ.get("HEAPALG_DEBUG", "") not in ("", "0")


@contextmanager
def checks(enabled: bool = True):
    global CHECKS
    saved = CHECKS
    CHECKS = enabled
    try:
        yield
    finally:
        CHECKS = saved
