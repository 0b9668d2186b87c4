"""Verifiers for harmonious-type sequences, complete mappings and Hall-Paige."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import InputError, PreconditionError
from .groups import FiniteGroup

NOT_PERMUTATION = "not-permutation"
PRODUCTS_COLLIDE = "products-collide"
SYMMETRY_BROKEN = "symmetry-broken"
R_STAR_CENTER_BROKEN = "r-star-center-broken"


@dataclass(frozen=True)
class GroupSequence:
    """An ordering of group elements, by index.

    Only length and range are enforced here; whether the entries form a
    permutation is something the verifiers report on.
    """

    group: FiniteGroup
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        n = self.group.order
        if len(self.entries) != n:
            raise InputError(f"sequence has length {len(self.entries)}, group has order {n}")
        bad = [x for x in self.entries if not 0 <= x < n]
        if bad:
            raise InputError(f"sequence entry {bad[0]} out of range for order {n}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class VerificationReport:
    verdict: bool
    failed_check: str | None = None
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def describe(self) -> str:
        if self.verdict:
            return "ok"
        if self.witness is None:
            return self.failed_check or "failed"
        return f"{self.failed_check} at positions {self.witness[0]}, {self.witness[1]}"


PASS = VerificationReport(True)


def _first_repeat(values: Sequence[int]) -> tuple[int, int] | None:
    """Positions ``(i, j)``, i < j, of the first repeated value scanning by j."""
    seen: dict[int, int] = {}
    for j, v in enumerate(values):
        if v in seen:
            return seen[v], j
        seen[v] = j
    return None


def _cyclic_check(s: GroupSequence, step: Callable[[int, int], int]) -> VerificationReport:
    repeat = _first_repeat(s.entries)
    if repeat is not None:
        return VerificationReport(False, NOT_PERMUTATION, repeat)
    e = s.entries
    n = len(e)
    products = [step(e[i], e[(i + 1) % n]) for i in range(n)]
    repeat = _first_repeat(products)
    if repeat is not None:
        return VerificationReport(False, PRODUCTS_COLLIDE, repeat)
    return PASS


def verify_harmonious(s: GroupSequence) -> VerificationReport:
    """Entries and cyclic consecutive products ``g_i g_{i+1}`` are both permutations."""
    return _cyclic_check(s, s.group.mul)


def verify_symmetric_harmonious(s: GroupSequence) -> VerificationReport:
    """Harmonious, and ``g_i g_{l-i}`` is the identity for ``1 <= i <= l-1``.

    Position 0 is exempt from the pairing condition.
    """
    report = verify_harmonious(s)
    if not report:
        return report
    e, n, mul = s.entries, len(s.entries), s.group.mul
    for i in range(1, n):
        if mul(e[i], e[n - i]) != 0:
            return VerificationReport(False, SYMMETRY_BROKEN, (i, n - i))
    return PASS


def verify_r_sequence(s: GroupSequence) -> VerificationReport:
    """Entries and cyclic left quotients ``g_i^-1 g_{i+1}`` are both permutations."""
    g = s.group
    return _cyclic_check(s, lambda x, y: g.mul(g.inv(x), y))


def verify_r_star(s: GroupSequence) -> VerificationReport:
    if len(s) < 3:
        raise InputError("R*-sequences need at least three elements")
    report = verify_r_sequence(s)
    if not report:
        return report
    g0, g1, g2 = s.entries[:3]
    mul = s.group.mul
    if mul(g0, g2) != g1:
        return VerificationReport(False, R_STAR_CENTER_BROKEN, (0, 2))
    if mul(g2, g0) != g1:
        return VerificationReport(False, R_STAR_CENTER_BROKEN, (2, 0))
    return PASS


# -- complete mappings -------------------------------------------------------


def harmonious_to_complete_mapping(s: GroupSequence) -> list[int]:
    """The successor map ``g_i -> g_{i+1}`` (cyclically) of a harmonious sequence."""
    report = verify_harmonious(s)
    if not report:
        raise PreconditionError(f"sequence is not harmonious: {report.describe()}")
    e = s.entries
    phi = [0] * len(e)
    for i, x in enumerate(e):
        phi[x] = e[(i + 1) % len(e)]
    return phi


def is_complete_mapping(g: FiniteGroup, phi: Sequence[int]) -> bool:
    if len(phi) != g.order:
        raise InputError(f"mapping has length {len(phi)}, group has order {g.order}")
    if sorted(phi) != list(range(g.order)):
        return False
    return len({g.mul(x, phi[x]) for x in range(g.order)}) == g.order


def mapping_cycle_count(phi: Sequence[int]) -> int:
    n = len(phi)
    if sorted(phi) != list(range(n)):
        raise InputError("mapping is not a bijection of 0..n-1")
    seen = [False] * n
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = phi[x]
    return cycles


def orbit(phi: Sequence[int], start: int) -> list[int]:
    """Iterate ``phi`` from ``start`` until it returns."""
    out = [start]
    x = phi[start]
    while x != start:
        out.append(x)
        x = phi[x]
    return out


def hall_paige_condition(g: FiniteGroup) -> bool:
    """Sylow 2-subgroups are trivial or non-cyclic.

    With ``|g| = 2^a m``, m odd, a Sylow 2-subgroup is cyclic exactly when
    some element has order ``2^a``.
    """
    two_power = g.order & -g.order
    if two_power == 1:
        return True
    return two_power not in g.element_orders
