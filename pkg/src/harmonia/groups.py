"""Finite groups stored as Cayley tables over elements 0..n-1.

Element 0 is always the identity. Every constructor funnels through
:func:`from_cayley_table`, so any :class:`FiniteGroup` in circulation has
passed the Latin-square, identity and associativity checks.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    InputError,
    NormalityError,
    NormalizationError,
    SizeError,
    StructureError,
)

DEFAULT_MAX_ORDER = 10_000
MAX_ORDER_ENV = "HARMONIA_MAX_ORDER"


def max_order() -> int:
    """Current group-order cap; ``HARMONIA_MAX_ORDER`` overrides the default."""
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"{MAX_ORDER_ENV} must be positive, got {value}")
    return value


def _check_order(n: int) -> None:
    cap = max_order()
    if n > cap:
        raise SizeError(f"group order {n} exceeds maximum {cap} (set {MAX_ORDER_ENV} to raise it)")


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A validated Cayley table; ``table[i][j]`` is the index of ``i*j``."""

    order: int
    table: tuple[tuple[int, ...], ...] = field(repr=False)
    label: str = ""

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self._inverses[x]

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def _inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(i + 1, self.order))

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(_order_of(self.table, x) for x in range(self.order))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __str__(self) -> str:
        return self.label or f"group of order {self.order}"


def _order_of(table: Sequence[Sequence[int]], x: int) -> int:
    k, y = 1, x
    while y != 0:
        y = table[y][x]
        k += 1
    return k


def _find_associativity_witness(t: np.ndarray) -> tuple[int, int, int] | None:
    # (i*j)*k is t[t[i, j], k]; i*(j*k) is t[i, t[j, k]].
    for i in range(t.shape[0]):
        left = t[t[i]]
        right = t[i][t]
        if not np.array_equal(left, right):
            j, k = np.argwhere(left != right)[0]
            return i, int(j), int(k)
    return None


def from_cayley_table(
    raw: Sequence[Sequence[int]],
    label: str = "",
    *,
    check_associativity: bool = True,
) -> FiniteGroup:
    """Validate ``raw`` and wrap it as a :class:`FiniteGroup`.

    The associativity check is O(n^3) (vectorised per row); pass
    ``check_associativity=False`` to skip it for very large tables that are
    known to come from a trusted construction.
    """
    n = len(raw)
    if n == 0:
        raise StructureError("empty Cayley table")
    _check_order(n)
    try:
        t = np.array([list(row) for row in raw], dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise StructureError(f"Cayley table is not a rectangular integer array: {exc}") from None
    if t.shape != (n, n):
        raise StructureError(f"Cayley table must be {n}x{n}, got shape {t.shape}")
    if t.min() < 0 or t.max() >= n:
        raise StructureError(f"table entries must lie in [0, {n})")

    expected = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(t[i]), expected):
            raise StructureError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if not np.array_equal(np.sort(t[:, j]), expected):
            raise StructureError(f"column {j} is not a permutation of 0..{n - 1}")

    if not (np.array_equal(t[0], expected) and np.array_equal(t[:, 0], expected)):
        identity = _identity_index(t)
        if identity is None:
            raise StructureError("table has no two-sided identity element")
        raise NormalizationError(
            f"identity is element {identity}, not 0; run the normalize tool to reindex the table"
        )

    if check_associativity:
        witness = _find_associativity_witness(t)
        if witness is not None:
            i, j, k = witness
            raise StructureError(f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})")

    # Latin rows guarantee a right inverse; the two-sided check is explicit anyway.
    inv = np.argmax(t == 0, axis=1)
    if not np.all(t[inv, np.arange(n)] == 0):
        raise StructureError("some element lacks a two-sided inverse")

    table = tuple(tuple(int(v) for v in row) for row in t)
    return FiniteGroup(order=n, table=table, label=label)


def _identity_index(t: np.ndarray) -> int | None:
    n = t.shape[0]
    expected = np.arange(n)
    for e in range(n):
        if np.array_equal(t[e], expected) and np.array_equal(t[:, e], expected):
            return e
    return None


def normalize_table(raw: Sequence[Sequence[int]]) -> list[list[int]]:
    """Relabel a group table so that its identity becomes element 0.

    The identity and element 0 swap labels; everything else keeps its index.
    """
    t = np.array([list(row) for row in raw], dtype=np.int64)
    n = t.shape[0]
    if t.ndim != 2 or t.shape != (n, n) or n == 0:
        raise StructureError("Cayley table must be a non-empty square array")
    if t.min() < 0 or t.max() >= n:
        raise StructureError(f"table entries must lie in [0, {n})")
    e = _identity_index(t)
    if e is None:
        raise StructureError("table has no two-sided identity element")
    perm = np.arange(n)
    perm[0], perm[e] = e, 0
    # perm is an involution: new label of old x is perm[x], old of new y is perm[y].
    out = perm[t[np.ix_(perm, perm)]]
    return out.tolist()


# -- constructors -----------------------------------------------------------


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError(f"cyclic group order must be positive, got {n}")
    _check_order(n)
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return from_cayley_table(table, label=f"Z{n}")


def make_direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Direct product on pairs; ``(x, y)`` has index ``x * |b| + y``."""
    nb = b.order
    n = a.order * nb
    _check_order(n)
    ta, tb = a.table, b.table
    table = [
        [ta[x1][x2] * nb + tb[y1][y2] for x2 in range(a.order) for y2 in range(nb)]
        for x1 in range(a.order)
        for y1 in range(nb)
    ]
    label = f"{a.label or a.order}x{b.label or b.order}"
    return from_cayley_table(table, label=label)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _make_frobenius(p: int, q: int) -> FiniteGroup:
    """Semidirect product Z_p x| Z_q; ``a^x b^y`` has index ``y * p + x``."""
    if not _is_prime(p):
        raise InputError(f"frobenius: p must be prime, got {p}")
    if q < 2 or (p - 1) % q:
        raise InputError(f"frobenius: q must be >= 2 and divide p-1 = {p - 1}, got {q}")
    s = next(
        s
        for s in range(2, p)
        if pow(s, q, p) == 1 and all(pow(s, d, p) != 1 for d in range(1, q))
    )
    n = p * q
    _check_order(n)
    powers = [pow(s, y, p) for y in range(q)]
    table = []
    for i in range(n):
        y1, x1 = divmod(i, p)
        row = []
        for j in range(n):
            y2, x2 = divmod(j, p)
            # b^y a^x b^-y = a^(s^y x)
            row.append(((y1 + y2) % q) * p + (x1 + powers[y1] * x2) % p)
        table.append(row)
    return from_cayley_table(table, label=f"F{p}:{q}")


def _make_heisenberg(p: int) -> FiniteGroup:
    """Unitriangular 3x3 matrices over Z_p; ``(a, b, c)`` has index ``a*p^2 + b*p + c``."""
    if not _is_prime(p):
        raise InputError(f"heisenberg: p must be prime, got {p}")
    n = p**3
    _check_order(n)
    coords = [(i // (p * p), (i // p) % p, i % p) for i in range(n)]
    table = [
        [
            ((a1 + a2) % p) * p * p + ((b1 + b2) % p) * p + (c1 + c2 + a1 * b2) % p
            for (a2, b2, c2) in coords
        ]
        for (a1, b1, c1) in coords
    ]
    return from_cayley_table(table, label=f"Heis{p}")


def _make_dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; ``r^i s^j`` has index ``j * n + i``."""
    if n < 1:
        raise InputError(f"dihedral: n must be positive, got {n}")
    _check_order(2 * n)
    table = []
    for a in range(2 * n):
        j1, i1 = divmod(a, n)
        row = []
        for b in range(2 * n):
            j2, i2 = divmod(b, n)
            # s r^i = r^-i s
            i = (i1 + (-i2 if j1 else i2)) % n
            row.append(((j1 + j2) % 2) * n + i)
        table.append(row)
    return from_cayley_table(table, label=f"D{n}")


def _make_abelian(dims: Iterable[int]) -> FiniteGroup:
    dims = list(dims)
    if not dims:
        return make_cyclic(1)
    group = make_cyclic(dims[0])
    for d in dims[1:]:
        group = make_direct_product(group, make_cyclic(d))
    return group


def _ints(text: str, spec: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise InputError(f"malformed group spec {spec!r}") from None


def make_builtin(spec: str) -> FiniteGroup:
    """Build a group from a short spec string.

    Accepted forms: ``cyclic:n``, ``abelian:d1,d2,...``, ``frobenius:p:q``,
    ``heisenberg:p``, ``dihedral:n`` (order 2n) and ``elementary2:k``.
    """
    kind, _, rest = spec.strip().partition(":")
    if not rest:
        raise InputError(f"malformed group spec {spec!r}")
    if kind == "cyclic":
        (n,) = _single(rest, spec)
        return make_cyclic(n)
    if kind == "abelian":
        group = _make_abelian(_ints(rest, spec))
        return _relabel(group, f"abelian:{rest}")
    if kind == "frobenius":
        parts = rest.split(":")
        if len(parts) != 2:
            raise InputError(f"frobenius spec needs p:q, got {spec!r}")
        (p,), (q,) = _single(parts[0], spec), _single(parts[1], spec)
        return _make_frobenius(p, q)
    if kind == "heisenberg":
        (p,) = _single(rest, spec)
        return _make_heisenberg(p)
    if kind == "dihedral":
        (n,) = _single(rest, spec)
        return _make_dihedral(n)
    if kind == "elementary2":
        (k,) = _single(rest, spec)
        if k < 0:
            raise InputError(f"elementary2: k must be non-negative, got {k}")
        return _relabel(_make_abelian([2] * k), f"elementary2:{k}")
    raise InputError(f"unknown group family {kind!r} in spec {spec!r}")


def _single(text: str, spec: str) -> list[int]:
    values = _ints(text, spec)
    if len(values) != 1:
        raise InputError(f"malformed group spec {spec!r}")
    return values


def _relabel(group: FiniteGroup, label: str) -> FiniteGroup:
    return FiniteGroup(order=group.order, table=group.table, label=label)


# -- element queries ---------------------------------------------------------


def _check_element(g: FiniteGroup, x: int) -> None:
    if not 0 <= x < g.order:
        raise InputError(f"element {x} out of range for group of order {g.order}")


def inverse(g: FiniteGroup, x: int) -> int:
    _check_element(g, x)
    return g.inv(x)


def element_order(g: FiniteGroup, x: int) -> int:
    _check_element(g, x)
    return g.element_orders[x]


# -- subgroups and quotients ---------------------------------------------------


@dataclass(frozen=True)
class SubgroupView:
    parent: FiniteGroup = field(repr=False)
    members: tuple[int, ...]
    is_normal: bool

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)


def _closure(g: FiniteGroup, generators: Iterable[int]) -> set[int]:
    gens = {x for x in generators if x != 0}
    members = {0}
    frontier = [0]
    t = g.table
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = t[x][s]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return members


def conjugation_witness(g: FiniteGroup, members: Iterable[int]) -> tuple[int, int] | None:
    """Return ``(x, h)`` with ``x h x^-1`` outside ``members``, or None if normal."""
    member_set = set(members)
    t = g.table
    for x in range(g.order):
        xi = g.inv(x)
        for h in sorted(member_set):
            if t[t[x][h]][xi] not in member_set:
                return x, h
    return None


def subgroup_closure(g: FiniteGroup, generators: Iterable[int]) -> SubgroupView:
    generators = list(generators)
    for x in generators:
        _check_element(g, x)
    members = _closure(g, generators)
    if g.order % len(members):
        raise StructureError(f"closure of size {len(members)} does not divide {g.order}")
    normal = conjugation_witness(g, members) is None
    return SubgroupView(parent=g, members=tuple(sorted(members)), is_normal=normal)


def derived_subgroup(g: FiniteGroup) -> SubgroupView:
    t = g.table
    commutators = set()
    for x in range(g.order):
        xi = g.inv(x)
        for y in range(g.order):
            commutators.add(t[t[xi][g.inv(y)]][t[x][y]])
    return subgroup_closure(g, commutators)


def subgroup_as_group(h: SubgroupView) -> FiniteGroup:
    """The subgroup as a group in its own right; local index i is ``h.members[i]``."""
    local = {x: i for i, x in enumerate(h.members)}
    t = h.parent.table
    table = [[local[t[x][y]] for y in h.members] for x in h.members]
    return from_cayley_table(table, label=f"subgroup of {h.parent}")


def cosets_of(g: FiniteGroup, h: SubgroupView) -> tuple[list[tuple[int, ...]], list[int]]:
    """Left cosets of ``h`` ordered by minimal element, plus the element-to-coset map.

    The coset containing the identity has minimum 0, so it always comes first.
    """
    coset_of = [-1] * g.order
    cosets: list[tuple[int, ...]] = []
    t = g.table
    for x in range(g.order):
        if coset_of[x] != -1:
            continue
        coset = tuple(sorted(t[x][y] for y in h.members))
        for y in coset:
            coset_of[y] = len(cosets)
        cosets.append(coset)
    return cosets, coset_of


@dataclass(frozen=True)
class QuotientData:
    quotient: FiniteGroup
    cosets: tuple[tuple[int, ...], ...]
    coset_of: tuple[int, ...]
    subgroup: SubgroupView = field(repr=False)


def quotient(g: FiniteGroup, h: SubgroupView) -> QuotientData:
    if not h.is_normal:
        witness = conjugation_witness(g, h.members)
        raise NormalityError(f"subgroup is not normal; conjugation witness (g, h) = {witness}")
    cosets, coset_of = cosets_of(g, h)
    reps = [c[0] for c in cosets]
    t = g.table
    table = [[coset_of[t[a][b]] for b in reps] for a in reps]
    q = from_cayley_table(table, label=f"{g} / subgroup of order {h.order}")
    return QuotientData(quotient=q, cosets=tuple(cosets), coset_of=tuple(coset_of), subgroup=h)
