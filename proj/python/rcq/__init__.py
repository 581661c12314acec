"""Exact Rankin-Cohen brackets, Fedosov star products and H1 actions.

Values are plain dicts in the JSON format used by the ``rcq`` tool.
"""

import json

from . import _rcq
from ._rcq import InputError, MathError

__all__ = ["InputError", "MathError", "laurent", "star", "flat_section", "modular_rc", "rc_h1",
           "omega_from_mu", "suite_names", "verify"]


def _dump(x):
    if x is None:
        return ""
    return x if isinstance(x, str) else json.dumps(x)


def laurent(terms):
    """Build a laurent dict from {(a, b): coeff} with integer or (num, den) coefficients."""
    out = []
    for (a, b), c in sorted(terms.items()):
        num, den = (c, 1) if isinstance(c, int) else c
        out.append([a, b, [num, den, 0, 1]])
    return {"type": "laurent", "terms": out}


def star(f, g, mu=None, order=4):
    return json.loads(_rcq.star(_dump(f), _dump(g), _dump(mu), order))


def flat_section(f, mu=None, degree=4):
    return json.loads(_rcq.flat_section(_dump(f), _dump(mu), degree))


def modular_rc(n, f, g, prec=20):
    return json.loads(_rcq.modular_rc(n, f, g, prec))


def rc_h1(n):
    return json.loads(_rcq.rc_h1(n))


def omega_from_mu(mu):
    return json.loads(_rcq.omega_from_mu(_dump(mu)))


def suite_names():
    return list(_rcq.suite_names())


def verify(suite, **config):
    return json.loads(_rcq.verify(suite, json.dumps(config)))
