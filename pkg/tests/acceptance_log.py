"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""
import time
from contextlib import contextmanager

RESULTS = []


@contextmanager
def criterion(number, title, time_limit=None):
    start = time.perf_counter()
    ok = False
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = time_limit is None or elapsed < time_limit
        if not ok:
            detail = f" (took {elapsed:.2f}s, limit {time_limit}s)"
    except AssertionError as exc:
        detail = f" ({exc})" if str(exc) else ""
        raise
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} [{elapsed:.2f}s]{detail}"
        RESULTS.append(line)
        print(line)
    assert ok, line
