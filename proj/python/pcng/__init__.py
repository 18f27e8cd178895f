"""Payment channel network creation game: exact costs, equilibria and regions.

Weights may be given as Fraction, int or str ("1/10", "0.1"); floats are
rejected because they are not exact. Costs come back as Fraction, with
math.inf for unreachable players.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Sequence

from . import _pcng
from ._pcng import ResourceLimitError, RationalOverflow, ProfileParseError

Weight = Fraction | int | str
Profile = Sequence[Sequence[int]]

__all__ = [
    "ResourceLimitError", "RationalOverflow", "ProfileParseError",
    "parse_profile", "format_profile", "canonical_profile",
    "player_cost", "social_cost", "freeman_betweenness", "social_optimum",
    "ne_predicate", "best_response", "is_nash", "enumerate_nash",
    "price_of_anarchy", "ne_region", "sweep", "run_dynamics",
]


def _w(value: Weight) -> str:
    if isinstance(value, float):
        raise TypeError("weights must be exact: pass a Fraction, int or str")
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _q(text: str | None) -> Fraction | float:
    return math.inf if text is None else Fraction(text)


def _opt(text: str | None) -> Fraction | None:
    return None if text is None else Fraction(text)


def _profile(p: Profile) -> list[list[int]]:
    return [list(s) for s in p]


def parse_profile(text: str) -> list[list[int]]:
    return _pcng.parse_profile(text)


def format_profile(profile: Profile) -> str:
    return _pcng.format_profile(_profile(profile))


def canonical_profile(topology: str, n: int) -> list[list[int]]:
    return _pcng.canonical_profile(topology, n)


def player_cost(profile: Profile, u: int, b: Weight, c: Weight) -> dict:
    raw = _pcng.player_cost(_profile(profile), u, _w(b), _w(c))
    return {
        "links": raw["links"],
        "betweenness": Fraction(raw["betweenness"]),
        "closeness": _q(raw["closeness"]),
        "total": _q(raw["total"]),
    }


def social_cost(profile: Profile, b: Weight, c: Weight) -> Fraction | float:
    return _q(_pcng.social_cost(_profile(profile), _w(b), _w(c)))


def freeman_betweenness(profile: Profile, u: int) -> Fraction:
    return Fraction(_pcng.freeman_betweenness(_profile(profile), u))


def social_optimum(n: int, b: Weight, c: Weight) -> tuple[list[str], Fraction]:
    kinds, cost = _pcng.social_optimum(n, _w(b), _w(c))
    return kinds, Fraction(cost)


def _halfplanes(raw) -> list[tuple[Fraction, Fraction, Fraction, str]]:
    return [(Fraction(a0), Fraction(a1), Fraction(a2), why) for a0, a1, a2, why in raw]


def ne_predicate(topology: str, n: int, b: Weight, c: Weight) -> tuple[str, list, str]:
    verdict, planes, note = _pcng.ne_predicate(topology, n, _w(b), _w(c))
    return verdict, _halfplanes(planes), note


def best_response(profile: Profile, u: int, b: Weight, c: Weight) -> tuple[list[list[int]], Fraction | float]:
    strategies, cost = _pcng.best_response(_profile(profile), u, _w(b), _w(c))
    return strategies, _q(cost)


def is_nash(profile: Profile, b: Weight, c: Weight) -> tuple[bool, dict | None]:
    ok, witness = _pcng.is_nash(_profile(profile), _w(b), _w(c))
    if witness is not None:
        witness = dict(witness, delta=_opt(witness["delta"]))
    return ok, witness


def enumerate_nash(n: int, b: Weight, c: Weight, *, dedup: bool = False, max_n: int = 6, threads: int = 0) -> dict:
    return json.loads(_pcng.enumerate_nash(n, _w(b), _w(c), dedup, max_n, threads))


def price_of_anarchy(n: int, b: Weight, c: Weight, *, max_n: int = 6) -> tuple[Fraction | None, Fraction | None]:
    """(PoA, PoS); None where no equilibrium exists."""
    poa, pos = _pcng.price_of_anarchy(n, _w(b), _w(c), max_n)
    return _opt(poa), _opt(pos)


def ne_region(topology: str, n: int, *, all_players: bool = False) -> tuple[list, bool]:
    """Pruned half-planes a0 + a1*b + a2*c >= 0 and whether the region is empty."""
    planes, empty = _pcng.ne_region(topology, n, all_players)
    return _halfplanes(planes), empty


def sweep(topology: str, n: int, *, b_max: Weight = "3/2", c_max: Weight = "3/2", resolution: int = 100):
    """CSV text of the grid and the exact polygon vertices."""
    csv, vertices = _pcng.sweep(topology, n, _w(b_max), _w(c_max), resolution)
    return csv, [(Fraction(b), Fraction(c)) for b, c in vertices]


def run_dynamics(profile: Profile, b: Weight, c: Weight, *, schedule: str = "round-robin", seed: int = 0,
                 max_iters: int = 1000):
    steps, outcome, final = _pcng.run_dynamics(_profile(profile), _w(b), _w(c), schedule, seed, max_iters)
    return [(p, old, new, _opt(d)) for p, old, new, d in steps], outcome, final
