"""Truncated-Fock-space numerics for q-deformed mode pairs and theta-vacua."""

from qhopf._core import *  # noqa: F401,F403
