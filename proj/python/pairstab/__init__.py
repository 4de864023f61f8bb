"""Exact (semi)stability of pairs in torus representations."""

import json as _json

from ._pairstab import (
    Pair,
    PairstabError,
    affine_spans_equal,
    asymptotic_slope,
    curve_mu,
    degree_of,
    degrees,
    energy_along,
    energy_at,
    extension_criterion,
    find_degeneration,
    futaki_gen,
    hull_contains,
    kempf_ness_distance,
    limit_support,
    load_pair,
    relative_invariant,
    run_cli,
    semistable_bf,
    stabilizer_subtorus,
    stable,
    t_semistable,
    torus_oracle_bf,
    weight,
)


def _exact(x):
    # JSON numbers beyond 64 bits would be read back as floats
    if isinstance(x, bool):
        return x
    if isinstance(x, int) and not -(2**63) <= x < 2**63:
        return str(x)
    if isinstance(x, dict):
        return {k: _exact(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_exact(v) for v in x]
    return x


def pair_from_dict(problem):
    """Build a Pair from the same mapping the CLI reads from JSON files."""
    return Pair.from_json(_json.dumps(_exact(problem)))


__all__ = [name for name in dir() if not name.startswith("_")]
