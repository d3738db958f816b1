"""Branched spines, sliding moves and Reidemeister torsion.

Every function takes a spine as file text or as a path (``os.PathLike``, or
a one-line ``str`` naming a file) and returns the decoded JSON report as a
dict.
"""

import json
import os

from . import _core
from ._core import SpineError

__all__ = [
    "SpineError",
    "normalize",
    "validate",
    "summary",
    "branchings",
    "move",
    "walk",
    "replay",
    "hcheck",
    "torsion",
    "euler",
    "census",
    "invariance",
]


def _text(spine):
    # a one-line string naming an existing file is read as a path
    if isinstance(spine, os.PathLike) or ("\n" not in spine and os.path.isfile(spine)):
        with open(spine, encoding="utf-8") as f:
            return f.read()
    return spine


def normalize(spine):
    """Validated spine in serialized form."""
    return _core.normalize(_text(spine))


def validate(spine):
    return json.loads(_core.validate(_text(spine)))


def summary(spine):
    return json.loads(_core.summary(_text(spine)))


def branchings(spine):
    return json.loads(_core.branchings(_text(spine)))


def move(spine, face=None, variant=None, edge=None):
    return json.loads(_core.move(_text(spine), face, variant, edge))


def walk(spine, steps, seed, h_null_only=False, max_tets=6):
    return json.loads(_core.walk(_text(spine), steps, seed, h_null_only, max_tets))


def replay(spine, log):
    """Applies a move log (as written by ``walk``) and returns the final spine."""
    return json.loads(_core.replay(_text(spine), log))


def hcheck(spine, face, variant=0):
    return json.loads(_core.hcheck(_text(spine), face, variant))


def torsion(spine, rep="trivial", sign_refined=False, homology_basis="none"):
    if homology_basis not in ("none", "auto"):
        raise ValueError("homology_basis must be 'none' or 'auto'")
    return json.loads(_core.torsion(_text(spine), rep, sign_refined, homology_basis == "auto"))


def euler(spine):
    return json.loads(_core.euler(_text(spine)))


def census(tets):
    return json.loads(_core.census(tets))


def invariance(spine, steps, seed, rep="free-abelian", max_tets=6):
    return json.loads(_core.invariance(_text(spine), steps, seed, rep, max_tets))
