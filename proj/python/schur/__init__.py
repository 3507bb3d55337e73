"""Schur multipliers, representation groups and projective representations.

The compiled extension exposes a few direct computations and ``run``, which
executes any CLI subcommand in-process. ``cli`` wraps ``run`` and decodes the
JSON document.
"""

import json as _json

from ._schur import (
    DEFAULT_SEED,
    CapExceeded,
    CheckFailed,
    canonical_spec,
    corpus,
    group_order,
    h2_integral,
    mc_is_nilpotent,
    multiplier_metacyclic,
    run,
)

__all__ = [
    "DEFAULT_SEED",
    "CapExceeded",
    "CheckFailed",
    "canonical_spec",
    "cli",
    "corpus",
    "group_order",
    "h2_integral",
    "mc_is_nilpotent",
    "multiplier_metacyclic",
    "run",
]


def cli(*args):
    """Run a subcommand and return ``(exit_code, document)``.

    ``document`` is the parsed JSON output, or the raw text for ``--format table``
    and for usage errors that produce no JSON.
    """
    code, out, _err = run([str(a) for a in args])
    try:
        return code, _json.loads(out)
    except ValueError:
        return code, out
