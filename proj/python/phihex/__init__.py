"""Exact golden-ratio checks on three-hexagon clusters."""

import json

from . import _phihex
from ._phihex import NotRepresentable, enumerate_vertices, phi_decimal, render_svg, scan

__all__ = [
    "NotRepresentable",
    "assess",
    "convergent",
    "enumerate_vertices",
    "fib",
    "phi_decimal",
    "render_svg",
    "scan",
    "verify",
]


def verify(vertex="0,0,0", side="1", digits=10):
    return json.loads(_phihex.verify(vertex, str(side), digits))


def fib(n):
    return int(_phihex.fib(n))


def convergent(n, digits=10, rounding="truncate"):
    return json.loads(_phihex.convergent(n, digits, rounding))


def assess(ratio, digits=10):
    return json.loads(_phihex.assess(str(ratio), digits))
