"""Variable identifiers and their total order.

Two kinds of variables occur: equivariant parameters z_1..z_n and the
auxiliary group variables t^(k)_a, one group per column k with a running
inside the group.  A variable is a plain tuple so it can be used as a dict
key with no overhead:

    ("z", i)      the variable z_i
    ("t", k, a)   the variable t^(k)_a

The total order puts every z before every t; z's compare by index, t's by
(k, a).  Canonical printing is ``z3`` and ``t2_1``.
"""

import re

from .errors import ParseError

Var = tuple

_VAR_RE = re.compile(r"^(?:z(\d+)|t(\d+)_(\d+))$")


def zvar(i: int) -> Var:
    return ("z", i)


def tvar(k: int, a: int) -> Var:
    return ("t", k, a)


def var_key(v: Var):
    """Sort key realizing the total order: all z's first, then all t's."""
    if v[0] == "z":
        return (0, v[1])
    return (1, v[1], v[2])


def var_name(v: Var) -> str:
    if v[0] == "z":
        return f"z{v[1]}"
    return f"t{v[1]}_{v[2]}"


def var_latex(v: Var) -> str:
    if v[0] == "z":
        return f"z_{{{v[1]}}}"
    return f"t^{{({v[1]})}}_{{{v[2]}}}"


def parse_var(name: str) -> Var:
    m = _VAR_RE.match(name)
    if not m:
        raise ParseError(f"bad variable name {name!r}")
    if m.group(1) is not None:
        return zvar(int(m.group(1)))
    return tvar(int(m.group(2)), int(m.group(3)))
