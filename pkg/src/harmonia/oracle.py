"""Exhaustive backtracking search, used to certify constructions on small groups.

Nothing here calls the verifiers in :mod:`harmonia.seqcheck`; the searches
carry their own pruning checks so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import InputError, SizeError
from .groups import FiniteGroup, _closure
from .seqcheck import GroupSequence

SYMMETRIC_CAP = 15
HARMONIOUS_CAP = 12
R_STAR_CAP = 12


@dataclass
class SearchOutcome:
    found: list[GroupSequence] = field(default_factory=list)
    exhausted: bool = False
    nodes_visited: int = 0

    @property
    def entries(self) -> list[tuple[int, ...]]:
        return [s.entries for s in self.found]


class _Stop(Exception):
    pass


def _check_cap(g: FiniteGroup, cap: int, allow_large: bool) -> None:
    if g.order > cap and not allow_large:
        raise SizeError(f"exhaustive search capped at order {cap}; group has order {g.order}")


def _finish(g: FiniteGroup, results: list[tuple[int, ...]], exhausted: bool, nodes: int) -> SearchOutcome:
    found = [GroupSequence(g, e) for e in sorted(results)]
    return SearchOutcome(found=found, exhausted=exhausted, nodes_visited=nodes)


def _search_cyclic(
    g: FiniteGroup,
    op: Callable[[int, int], int],
    max_results: int | None,
    first: int | None = None,
    accept: Callable[[list[int]], bool] | None = None,
    at_depth3: Callable[[list[int]], bool] | None = None,
) -> SearchOutcome:
    """Orderings whose entries and cyclic ``op(g_i, g_{i+1})`` values are all distinct."""
    n = g.order
    seq: list[int] = []
    used = [False] * n
    seen = [False] * n
    results: list[tuple[int, ...]] = []
    nodes = 0

    def extend() -> None:
        nonlocal nodes
        nodes += 1
        if len(seq) == 3 and at_depth3 is not None and not at_depth3(seq):
            return
        if len(seq) == n:
            closing = op(seq[-1], seq[0])
            if seen[closing] or (accept is not None and not accept(seq)):
                return
            results.append(tuple(seq))
            if max_results is not None and len(results) >= max_results:
                raise _Stop
            return
        candidates = [first] if not seq and first is not None else range(n)
        for x in candidates:
            if used[x]:
                continue
            v = op(seq[-1], x) if seq else None
            if v is not None and seen[v]:
                continue
            used[x] = True
            if v is not None:
                seen[v] = True
            seq.append(x)
            extend()
            seq.pop()
            used[x] = False
            if v is not None:
                seen[v] = False

    try:
        extend()
        exhausted = True
    except _Stop:
        exhausted = False
    return _finish(g, results, exhausted, nodes)


def search_harmonious(
    g: FiniteGroup,
    max_results: int | None = None,
    *,
    up_to_rotation: bool = False,
    allow_large: bool = False,
) -> SearchOutcome:
    """All harmonious orderings of ``g``; with ``up_to_rotation`` only those starting at 0."""
    _check_cap(g, HARMONIOUS_CAP, allow_large)
    return _search_cyclic(g, g.mul, max_results, first=0 if up_to_rotation else None)


def search_r_star(
    g: FiniteGroup,
    max_results: int | None = None,
    *,
    allow_large: bool = False,
) -> SearchOutcome:
    if g.order < 3:
        raise InputError("R*-sequences need at least three elements")
    _check_cap(g, R_STAR_CAP, allow_large)
    mul, inv = g.mul, g.inv

    def center(seq: list[int]) -> bool:
        g0, g1, g2 = seq
        return mul(g0, g2) == g1 and mul(g2, g0) == g1

    return _search_cyclic(g, lambda x, y: mul(inv(x), y), max_results, at_depth3=center)


def search_symmetric_harmonious(
    g: FiniteGroup,
    max_results: int | None = None,
    *,
    use_symmetry: bool = True,
    allow_large: bool = False,
) -> SearchOutcome:
    """All symmetric harmonious orderings of ``g``.

    With ``use_symmetry`` (default) positions ``i`` and ``l-i`` are filled
    together with mutual inverses, and position 0 is pinned to the identity
    when ``l`` is odd. ``use_symmetry=False`` runs a plain harmonious search
    and filters, as a reference for the pruned version.
    """
    _check_cap(g, SYMMETRIC_CAP, allow_large)
    n, mul = g.order, g.mul
    if not use_symmetry:
        def symmetric(seq: list[int]) -> bool:
            return all(mul(seq[i], seq[n - i]) == 0 for i in range(1, n))

        return _search_cyclic(g, mul, max_results, accept=symmetric)

    slots: list[tuple[int, ...]] = [(0,)]
    for i in range(1, n // 2 + 1):
        slots.append((i,) if i == n - i else (i, n - i))

    seq: list[int | None] = [None] * n
    used = [False] * n
    seen = [False] * n
    results: list[tuple[int, ...]] = []
    nodes = 0

    def place(pos: int, x: int) -> list[int] | None:
        """Put x at pos and mark the products it completes; None on collision."""
        seq[pos] = x
        new: list[int] = []
        for a in sorted({(pos - 1) % n, pos}):
            b = (a + 1) % n
            if seq[a] is None or seq[b] is None:
                continue
            v = mul(seq[a], seq[b])
            if seen[v]:
                for w in new:
                    seen[w] = False
                seq[pos] = None
                return None
            new.append(v)
            seen[v] = True
        used[x] = True
        return new

    def unplace(pos: int, marks: list[int]) -> None:
        used[seq[pos]] = False
        seq[pos] = None
        for w in marks:
            seen[w] = False

    def extend(k: int) -> None:
        nonlocal nodes
        nodes += 1
        if k == len(slots):
            results.append(tuple(seq))  # type: ignore[arg-type]
            if max_results is not None and len(results) >= max_results:
                raise _Stop
            return
        slot = slots[k]
        if k == 0:
            candidates = [0] if n % 2 else range(n)
        else:
            candidates = range(n)
        for x in candidates:
            if used[x]:
                continue
            if len(slot) == 1:
                if k > 0 and mul(x, x) != 0:
                    continue
                marks = place(slot[0], x)
                if marks is None:
                    continue
                extend(k + 1)
                unplace(slot[0], marks)
            else:
                y = g.inv(x)
                if y == x or used[y]:
                    continue
                marks = place(slot[0], x)
                if marks is None:
                    continue
                marks2 = place(slot[1], y)
                if marks2 is not None:
                    extend(k + 1)
                    unplace(slot[1], marks2)
                unplace(slot[0], marks)

    try:
        extend(0)
        exhausted = True
    except _Stop:
        exhausted = False
    return _finish(g, results, exhausted, nodes)


def sylow2_is_cyclic_bruteforce(g: FiniteGroup) -> bool | None:
    """Construct a Sylow 2-subgroup by brute force and test whether it is cyclic.

    Grows 2-subgroups one generator at a time from the trivial group until
    one of order ``2^a`` appears. Returns None when the Sylow 2-subgroup is
    trivial.
    """
    target = g.order & -g.order
    if target == 1:
        return None
    frontier = {frozenset([0])}
    seen = set(frontier)
    sylow: frozenset[int] | None = None
    while frontier and sylow is None:
        nxt = set()
        for sub in frontier:
            for x in g.elements():
                if x in sub:
                    continue
                bigger = frozenset(_closure(g, set(sub) | {x}))
                size = len(bigger)
                if size & (size - 1) or bigger in seen:
                    continue
                if size == target:
                    sylow = bigger
                    break
                seen.add(bigger)
                nxt.add(bigger)
            if sylow is not None:
                break
        frontier = nxt
    assert sylow is not None, "Sylow's theorem guarantees a subgroup of order 2^a"
    return any(len(_closure(g, [x])) == target for x in sylow)
