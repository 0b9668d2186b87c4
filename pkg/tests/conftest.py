from __future__ import annotations

from functools import lru_cache

import pytest

from harmonia.groups import FiniteGroup, from_cayley_table, make_builtin, make_cyclic, make_direct_product

ODD_CYCLIC = [f"cyclic:{n}" for n in range(1, 82, 2)]
ODD_EXTRA = [
    "abelian:3,3",
    "abelian:3,9",
    "abelian:3,3,3",
    "abelian:5,5",
    "abelian:3,5",
    "frobenius:7:3",
    "heisenberg:3",
    "frobenius:13:3",
    "frobenius:31:5",
    "Z3xfrobenius:7:3",
]
ODD_CORPUS = ODD_CYCLIC + ODD_EXTRA

EVEN_SMALL = [
    "cyclic:2",
    "cyclic:4",
    "elementary2:2",
    "cyclic:6",
    "dihedral:3",
    "cyclic:8",
    "dihedral:4",
    "elementary2:3",
]
EVEN_MORE = [
    "quaternion",
    "cyclic:12",
    "dihedral:6",
    "abelian:2,4",
    "cyclic:16",
    "dihedral:8",
    "abelian:2,2,4",
    "elementary2:4",
    "abelian:2,12",
    "dihedral:12",
    "abelian:4,4",
    "cyclic:48",
    "dihedral:10",
]
CORPUS = ODD_CORPUS + EVEN_SMALL + EVEN_MORE


def _quaternion() -> FiniteGroup:
    # Q8 as +-1, +-i, +-j, +-k; index 2*u + s for unit u in (1, i, j, k) and sign s.
    units = {(0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1)}
    for u in range(1, 4):
        units[(u, 0)] = (u, 1)
        units[(u, u)] = (0, -1)
    units[(1, 2)], units[(2, 3)], units[(3, 1)] = (3, 1), (1, 1), (2, 1)
    units[(2, 1)], units[(3, 2)], units[(1, 3)] = (3, -1), (1, -1), (2, -1)
    table = []
    for a in range(8):
        ua, sa = divmod(a, 2)
        row = []
        for b in range(8):
            ub, sb = divmod(b, 2)
            u, sign = units[(ua, ub)]
            neg = (sa + sb + (sign < 0)) % 2
            row.append(2 * u + neg)
        table.append(row)
    return from_cayley_table(table, label="Q8")


@lru_cache(maxsize=None)
def corpus_group(name: str) -> FiniteGroup:
    if name == "quaternion":
        return _quaternion()
    if name == "Z3xfrobenius:7:3":
        return make_direct_product(make_cyclic(3), make_builtin("frobenius:7:3"))
    return make_builtin(name)


@pytest.fixture(params=ODD_CORPUS)
def odd_group(request) -> FiniteGroup:
    return corpus_group(request.param)
