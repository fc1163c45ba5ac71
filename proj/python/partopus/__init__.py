"""Partitioned multilinear maps: partition products, compositions, identities."""

import json

from ._partopus import (
    ParseError,
    higher_product,
    models,
    pre_lie_defect,
    run_cli,
    star,
    star_raw,
)
from . import _partopus

__all__ = [
    "ParseError",
    "compose",
    "higher_product",
    "identity",
    "models",
    "pre_lie_defect",
    "run_cli",
    "star",
    "star_raw",
    "verify",
]


def compose(outer, inners, target=""):
    if isinstance(inners, str):
        inners = [inners]
    return json.loads(_partopus.compose_json(outer, list(inners), target))


def identity(target, kvz=False, filter="none"):
    return json.loads(_partopus.identity_json(target, kvz, filter))


def verify(suite, model="dual-numbers", seed=42, samples=0):
    return json.loads(_partopus.verify_json(suite, model, seed, samples))
