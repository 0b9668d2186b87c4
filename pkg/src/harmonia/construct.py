"""Symmetric harmonious sequences for odd-order groups.

A sequence for ``G`` is assembled from sequences for a normal subgroup ``H``
and for ``G/H`` (:func:`lift`). :func:`synthesize` recurses through derived
subgroups, with cyclic groups as the base case.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from .errors import AnchorError, ConsistencyError, NonSolvableError, ParityError, PreconditionError
from .groups import (
    FiniteGroup,
    QuotientData,
    _is_prime,
    derived_subgroup,
    make_cyclic,
    quotient,
    subgroup_as_group,
    subgroup_closure,
)
from .seqcheck import GroupSequence, verify_symmetric_harmonious

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LiftScaffold:
    """Paired coset representatives and their suffix products.

    ``reps[i]`` lies in the i-th coset of the quotient sequence and
    ``reps[i] * reps[m-i]`` is the identity; ``suffix_products[i]`` is
    ``reps[i+1] * ... * reps[m-1]`` (identity for ``i = m-1``).
    """

    reps: tuple[int, ...]
    suffix_products: tuple[int, ...]


@dataclass(frozen=True)
class LiftTrace:
    """Everything a lift computed, kept so its internal identities can be audited."""

    group: FiniteGroup
    cosets: tuple[tuple[int, ...], ...]  # cosets[r] is K_r, reordered by the quotient sequence
    scaffold: LiftScaffold
    sub_entries: tuple[int, ...]  # the subgroup sequence, as indices of ``group``
    result: GroupSequence

    @property
    def m(self) -> int:
        return len(self.cosets)

    @property
    def n(self) -> int:
        return len(self.sub_entries)


def cyclic_symmetric_harmonious(n: int) -> GroupSequence:
    """``0, 1, ..., n-1`` in Z_n: sums ``2i+1`` hit every residue when n is odd."""
    if n < 1 or n % 2 == 0:
        raise ParityError(f"cyclic base case needs odd positive n, got {n}")
    return GroupSequence(make_cyclic(n), tuple(range(n)))


def _require_symmetric(s: GroupSequence, what: str) -> None:
    report = verify_symmetric_harmonious(s)
    if not report:
        raise PreconditionError(f"{what} is not symmetric harmonious: {report.describe()}")
    if s.entries[0] != 0:
        raise AnchorError(f"{what} must start at the identity, starts at {s.entries[0]}")


def choose_paired_reps(
    g: FiniteGroup, q: QuotientData, quotient_seq: GroupSequence
) -> tuple[int, ...]:
    if quotient_seq.group != q.quotient:
        raise PreconditionError("quotient sequence does not belong to this quotient group")
    _require_symmetric(quotient_seq, "quotient sequence")
    m = len(quotient_seq)
    if m % 2 == 0:
        raise ParityError(f"quotient order must be odd, got {m}")
    reps = [0] * m
    for i in range(1, (m - 1) // 2 + 1):
        k = q.cosets[quotient_seq.entries[i]][0]
        reps[i] = k
        reps[m - i] = g.inv(k)
    return tuple(reps)


def suffix_products(g: FiniteGroup, reps: tuple[int, ...] | list[int]) -> LiftScaffold:
    m = len(reps)
    mu = [0] * m
    for i in range(m - 2, -1, -1):
        mu[i] = g.mul(reps[i + 1], mu[i + 1])
    if mu[0] != 0:
        raise ConsistencyError(f"first suffix product is {mu[0]}, expected the identity")
    for r in range(1, m):
        if g.mul(reps[m - r], mu[m - r]) != mu[r]:
            raise ConsistencyError(f"reflection law fails at r={r}")
    return LiftScaffold(reps=tuple(reps), suffix_products=tuple(mu))


def lift_with_trace(
    g: FiniteGroup,
    q: QuotientData,
    quotient_seq: GroupSequence,
    sub_seq: GroupSequence,
) -> LiftTrace:
    """:func:`lift`, also returning the scaffold and coset order it used."""
    embed = q.cosets[0]
    n = len(embed)
    if sub_seq.group.order != n:
        raise PreconditionError(f"subgroup sequence has order {sub_seq.group.order}, subgroup has {n}")
    if n % 2 == 0:
        raise ParityError(f"subgroup order must be odd, got {n}")
    sub_table = sub_seq.group.table
    for a in range(n):
        for b in range(n):
            if g.mul(embed[a], embed[b]) != embed[sub_table[a][b]]:
                raise PreconditionError("subgroup sequence's group does not match the subgroup's table")
    _require_symmetric(sub_seq, "subgroup sequence")

    reps = choose_paired_reps(g, q, quotient_seq)
    scaffold = suffix_products(g, reps)
    m = len(reps)
    mu = scaffold.suffix_products
    h = tuple(embed[x] for x in sub_seq.entries)
    mul = g.mul

    # For r >= 1 the term is k_r mu_r h mu_r^-1, i.e. left * h * right.
    left = [mul(reps[r], mu[r]) for r in range(m)]
    right = [g.inv(mu[r]) for r in range(m)]
    if m == 1:
        # H = G: the interleaving h[2p] need not be harmonious, so pass h through.
        out = list(h)
    else:
        out = [0] * (m * n)
        for p in range(n):
            out[p * m] = h[(2 * p) % n]
            odd = h[(2 * p + 1) % n]
            for r in range(1, m):
                out[p * m + r] = mul(mul(left[r], odd), right[r])

    result = GroupSequence(g, tuple(out))
    report = verify_symmetric_harmonious(result)
    if not report:
        raise ConsistencyError(f"lifted sequence failed verification: {report.describe()}")
    cosets = tuple(q.cosets[c] for c in quotient_seq.entries)
    return LiftTrace(group=g, cosets=cosets, scaffold=scaffold, sub_entries=h, result=result)


def lift(
    g: FiniteGroup,
    q: QuotientData,
    quotient_seq: GroupSequence,
    sub_seq: GroupSequence,
) -> GroupSequence:
    """Combine symmetric harmonious sequences of ``H`` and ``G/H`` into one for ``G``.

    ``q`` must be the quotient of ``g`` by ``H``; ``sub_seq`` lives on
    ``subgroup_as_group(q.subgroup)`` (local index i is ``q.cosets[0][i]``).
    Entry ``p*m + r`` of the result is ``h[2p]`` for ``r = 0`` and
    ``k_r mu_r h[2p+1] mu_r^-1`` otherwise, subscripts of ``h`` taken mod n.
    When the quotient is trivial (m = 1) the subgroup sequence is returned
    as is.
    """
    return lift_with_trace(g, q, quotient_seq, sub_seq).result


def _is_cyclic(g: FiniteGroup) -> int | None:
    """Smallest generator of ``g`` if cyclic, else None."""
    orders = g.element_orders
    return next((x for x in g.elements() if orders[x] == g.order), None)


def synthesize(
    g: FiniteGroup,
    on_lift: Callable[[LiftTrace], None] | None = None,
) -> GroupSequence:
    """A symmetric harmonious sequence of an odd-order group.

    ``on_lift`` is called with the trace of every lift performed during the
    recursion, innermost first.
    """
    if g.order % 2 == 0:
        raise ParityError(
            f"group of even order {g.order} has no symmetric harmonious sequence: "
            "some consecutive product g_(i-1) g_i is the identity, forcing i-1 = l-i mod l, so l is odd"
        )
    result = _synthesize(g, on_lift)
    report = verify_symmetric_harmonious(result)
    if not report:
        raise ConsistencyError(f"synthesized sequence failed verification: {report.describe()}")
    return result


def _synthesize(g: FiniteGroup, on_lift: Callable[[LiftTrace], None] | None) -> GroupSequence:
    if g.order == 1:
        return GroupSequence(g, (0,))
    gen = _is_cyclic(g)
    if gen is not None:
        entries = [0]
        for _ in range(g.order - 1):
            entries.append(g.mul(entries[-1], gen))
        return GroupSequence(g, tuple(entries))

    if g.is_abelian:
        orders = g.element_orders
        x = next(x for x in g.elements() if _is_prime(orders[x]))
        h = subgroup_closure(g, [x])
    else:
        h = derived_subgroup(g)
        if h.order == g.order:
            raise NonSolvableError(f"derived subgroup of {g} is the whole group")
    log.debug("lifting %s over a normal subgroup of order %d", g, h.order)

    q = quotient(g, h)
    sub_seq = _synthesize(subgroup_as_group(h), on_lift)
    quotient_seq = _synthesize(q.quotient, on_lift)
    trace = lift_with_trace(g, q, quotient_seq, sub_seq)
    if on_lift is not None:
        on_lift(trace)
    return trace.result
