# Copyright 2026 The contestq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact pure-equilibrium solvers for discrete contest games.

The extension returns rationals as "p/q" strings; the helpers here convert
them to :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _core
from ._core import (
    CapExceededError,
    Game,
    InputError,
    PreconditionError,
    brute_force_pne,
    classify,
    concavity,
    contigufy,
    count_inversions,
    improvement_graph,
    instance,
    instance_names,
    no_switch,
    potential_ascent,
    random_game,
    run_dynamics,
    solve_all_at_lowest,
    solve_contiguous,
    verify_instance,
)

__all__ = [
    "CapExceededError",
    "Game",
    "InputError",
    "PreconditionError",
    "brute_force_pne",
    "classify",
    "concavity",
    "contigufy",
    "count_inversions",
    "improvement_graph",
    "instance",
    "instance_names",
    "make_game",
    "no_switch",
    "payment",
    "potential",
    "potential_ascent",
    "random_game",
    "run_dynamics",
    "solve_all_at_lowest",
    "solve_contiguous",
    "utility",
    "verify_instance",
]


def _text(x):
    return str(Fraction(x))


def make_game(skills, efforts, voluntary, payment="proportional", k=1):
    """Game with product cost. Skills and efforts may be ints, strings or
    Fractions."""
    return _core.make_game([_text(s) for s in skills], [_text(f) for f in efforts],
                           voluntary, payment, k)


def utility(game, profile, player):
    return Fraction(game.utility(list(profile), player))


def payment(game, profile, player):
    return Fraction(game.payment(list(profile), player))


def potential(game, profile):
    return Fraction(_core.potential(game, list(profile)))
