"""Exact cone calculus: normal cones, Segre classes, virtual classes.

Thin convenience layer over the compiled core. Jobs use the same JSON
shapes as the command line tool; `run` accepts either the JSON text or a
plain dict and hands back the parsed report.
"""

import json

try:
    from ._core import (
        CLASS_SEED,
        SUITE_SEED,
        ApplicabilityError,
        ConecalcError,
        GenericityError,
        InputError,
        __version__,
        fixture_names,
        run_job,
        run_suite,
        suite_names,
    )
except ImportError:  # in-tree test runs find _core next to the build dir
    from _core import (
        CLASS_SEED,
        SUITE_SEED,
        ApplicabilityError,
        ConecalcError,
        GenericityError,
        InputError,
        __version__,
        fixture_names,
        run_job,
        run_suite,
        suite_names,
    )

__all__ = [
    "CLASS_SEED",
    "SUITE_SEED",
    "ApplicabilityError",
    "ConecalcError",
    "GenericityError",
    "InputError",
    "__version__",
    "fixture_names",
    "run",
    "run_job",
    "run_suite",
    "suite_names",
]


def run(job, seed=None, dump_dir="."):
    """Run one job and return the outcome with the report parsed.

    `job` may be the JSON text or a dict; the result is a dict with
    `exit_code`, `report` (parsed), `summary`, and `dump_paths`.
    """
    text = job if isinstance(job, str) else json.dumps(job)
    out = run_job(text, seed=seed, dump_dir=dump_dir)
    out["report"] = json.loads(out["report"])
    return out
