"""Exact Kostant-Rallis sections and Hitchin dimension counts.

The heavy lifting is in the compiled ``_hkr`` module; the helpers here
decode its JSON results.
"""

import json

from . import _hkr
from ._hkr import HkrError, forms, run, scalar, sl2_moduli_classify

__all__ = ["HkrError", "component_count", "describe", "dims", "forms", "hkr", "run",
           "scalar", "section", "sl2_moduli_classify"]


def describe(form):
    return json.loads(_hkr.describe(form))


def hkr(form):
    return json.loads(_hkr.hkr(form))


def dims(form, genus=2, L="K"):
    return json.loads(_hkr.dims(form, genus, L))


def section(form, gamma):
    return json.loads(_hkr.section(form, [str(g) for g in gamma]))


def component_count(N, genus):
    return int(_hkr.component_count(N, genus))
