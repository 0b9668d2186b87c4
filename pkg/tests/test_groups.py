from __future__ import annotations

import math
from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CORPUS, ODD_CORPUS, corpus_group
from harmonia.errors import InputError, NormalityError, NormalizationError, SizeError, StructureError
from harmonia.groups import (
    cosets_of,
    derived_subgroup,
    element_order,
    from_cayley_table,
    inverse,
    make_builtin,
    make_cyclic,
    make_direct_product,
    normalize_table,
    quotient,
    subgroup_as_group,
    subgroup_closure,
)


def _power_order(g, x):
    """Independent element order: smallest k with x^k = 1, by explicit powers."""
    acc = x
    for k in range(1, g.order + 1):
        if acc == 0:
            return k
        acc = g.table[acc][x]
    raise AssertionError("no finite order")


def _brute_commutator_closure(g):
    members = {0}
    changed = True
    comms = {g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)) for x in g.elements() for y in g.elements()}
    members |= comms
    while changed:
        new = {g.mul(a, b) for a in members for b in members} - members
        changed = bool(new)
        members |= new
    return sorted(members)


# -- constructors --------------------------------------------------------------


def test_cyclic_tables():
    assert make_cyclic(1).table == ((0,),)
    assert make_cyclic(3).table == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    z5 = make_cyclic(5)
    for i in range(5):
        assert z5.table[i] == tuple((i + k) % 5 for k in range(5))


def test_cyclic_rejects_zero():
    with pytest.raises(InputError):
        make_cyclic(0)


def test_direct_product_indexing():
    g = make_direct_product(make_cyclic(3), make_cyclic(3))
    assert g.order == 9
    assert g.mul(4, 4) == 8  # (1,1)+(1,1) = (2,2)
    z4 = make_cyclic(4)
    assert make_direct_product(make_cyclic(1), z4).table == z4.table


def test_direct_product_element_of_order_15():
    g = make_direct_product(make_cyclic(3), make_cyclic(5))
    assert _power_order(g, 6) == math.lcm(3, 5)
    assert element_order(g, 6) == 15


def test_direct_product_size_cap(monkeypatch):
    monkeypatch.setenv("HARMONIA_MAX_ORDER", "20")
    with pytest.raises(SizeError):
        make_direct_product(make_cyclic(5), make_cyclic(5))


def test_frobenius_21_order_statistics():
    g = make_builtin("frobenius:7:3")
    assert g.order == 21 and not g.is_abelian
    counts = Counter(_power_order(g, x) for x in g.elements())
    assert counts == {1: 1, 7: 6, 3: 14}


def test_heisenberg_exponent_three():
    g = make_builtin("heisenberg:3")
    assert g.order == 27 and not g.is_abelian
    assert {_power_order(g, x) for x in range(1, 27)} == {3}


def test_klein_group_self_inverse():
    g = make_builtin("elementary2:2")
    assert all(g.mul(x, x) == 0 for x in g.elements())


def test_dihedral_is_nonabelian():
    g = make_builtin("dihedral:3")
    assert g.order == 6 and not g.is_abelian


@pytest.mark.parametrize(
    "spec",
    ["cyclic", "cyclic:x", "frobenius:7:4", "frobenius:9:2", "heisenberg:4", "nope:3", "abelian:", "frobenius:7"],
)
def test_builtin_rejects_bad_specs(spec):
    with pytest.raises(InputError):
        make_builtin(spec)


def test_frobenius_action_constant_is_smallest():
    # For p=7, q=3 the smallest s of multiplicative order 3 is 2: b a b^-1 = a^2.
    g = make_builtin("frobenius:7:3")
    a, b = 1, 7
    assert g.mul(g.mul(b, a), g.inv(b)) == 2


# -- from_cayley_table -----------------------------------------------------------


def test_from_table_small_cases():
    assert from_cayley_table([[0]]).order == 1
    assert from_cayley_table([[0, 1], [1, 0]]).table == ((0, 1), (1, 0))


def test_from_table_rejects_non_latin():
    with pytest.raises(StructureError, match="row 1"):
        from_cayley_table([[0, 1], [1, 1]])


def test_from_table_rejects_nonassociative():
    # A Latin square with identity 0 that is not a group (order-5 loop).
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(StructureError, match="not associative"):
        from_cayley_table(loop)


def test_from_table_asks_for_normalization():
    # Z2 with the identity stored as element 1.
    with pytest.raises(NormalizationError, match="normalize"):
        from_cayley_table([[1, 0], [0, 1]])


def test_normalize_table_roundtrip():
    g = normalize_table([[1, 0], [0, 1]])
    assert g == [[0, 1], [1, 0]]
    z3_shifted = [[(i + j + 1) % 3 for j in range(3)] for i in range(3)]  # identity is 2
    assert from_cayley_table(normalize_table(z3_shifted)).order == 3


def test_associativity_opt_out():
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    assert from_cayley_table(loop, check_associativity=False).order == 5


# -- inverses, orders --------------------------------------------------------------


def test_inverse_examples():
    assert inverse(make_cyclic(5), 2) == 3
    f = make_builtin("frobenius:7:3")
    b = 7
    assert inverse(f, 0) == 0
    assert inverse(f, b) == f.mul(b, b)
    assert f.mul(b, inverse(f, b)) == 0


def test_element_order_examples():
    assert element_order(make_cyclic(9), 3) == 3
    assert element_order(make_cyclic(9), 0) == 1
    with pytest.raises(InputError):
        element_order(make_cyclic(9), 9)


@pytest.mark.parametrize("name", CORPUS)
def test_group_invariants(name):
    g = corpus_group(name)
    t = g.table
    n = g.order
    assert all(t[0][j] == j and t[j][0] == j for j in range(n))
    assert all(sorted(row) == list(range(n)) for row in t)
    assert all(inverse(g, inverse(g, x)) == x for x in range(n))
    assert all(g.mul(x, g.inv(x)) == 0 == g.mul(g.inv(x), x) for x in range(n))
    if n <= 27:
        assert all(t[t[i][j]][k] == t[i][t[j][k]] for i, j, k in product(range(n), repeat=3))


@pytest.mark.parametrize("name", ODD_CORPUS)
def test_odd_order_squaring_is_bijection_and_no_involutions(name):
    g = corpus_group(name)
    assert sorted(g.mul(x, x) for x in g.elements()) == list(g.elements())
    assert [x for x in g.elements() if g.inv(x) == x] == [0]


# -- subgroups ------------------------------------------------------------------


def test_subgroup_closure_examples():
    z9 = make_cyclic(9)
    h = subgroup_closure(z9, {3})
    assert h.members == (0, 3, 6) and h.is_normal
    triv = subgroup_closure(z9, set())
    assert triv.members == (0,) and triv.is_normal
    f = make_builtin("frobenius:7:3")
    a7 = subgroup_closure(f, {1})
    assert a7.order == 7 and a7.is_normal


def test_nonnormal_subgroup():
    d3 = make_builtin("dihedral:3")
    h = subgroup_closure(d3, {3})
    assert h.order == 2 and not h.is_normal
    with pytest.raises(NormalityError):
        quotient(d3, h)


@pytest.mark.parametrize("name", [n for n in CORPUS if corpus_group(n).order <= 64])
def test_derived_subgroup_matches_bruteforce(name):
    g = corpus_group(name)
    d = derived_subgroup(g)
    assert list(d.members) == _brute_commutator_closure(g)
    assert d.is_normal
    for x in g.elements():
        conj = sorted(g.mul(g.mul(x, h), g.inv(x)) for h in d.members)
        assert conj == list(d.members)
    if g.is_abelian:
        assert d.members == (0,)


def test_derived_subgroup_examples():
    assert derived_subgroup(make_builtin("frobenius:7:3")).members == tuple(range(7))
    heis = make_builtin("heisenberg:3")
    centre = [z for z in heis.elements() if all(heis.mul(z, x) == heis.mul(x, z) for x in heis.elements())]
    assert list(derived_subgroup(heis).members) == centre
    assert len(centre) == 3


def test_cosets_examples():
    z9 = make_cyclic(9)
    cosets, coset_of = cosets_of(z9, subgroup_closure(z9, {3}))
    assert cosets == [(0, 3, 6), (1, 4, 7), (2, 5, 8)]
    assert coset_of == [0, 1, 2, 0, 1, 2, 0, 1, 2]
    whole, _ = cosets_of(z9, subgroup_closure(z9, {1}))
    assert whole == [tuple(range(9))]
    f = make_builtin("frobenius:7:3")
    fc, _ = cosets_of(f, subgroup_closure(f, {1}))
    assert [len(c) for c in fc] == [7, 7, 7]


def test_quotient_examples():
    z9 = make_cyclic(9)
    assert quotient(z9, subgroup_closure(z9, {3})).quotient == make_cyclic(3)
    assert quotient(z9, subgroup_closure(z9, {1})).quotient.order == 1
    f = make_builtin("frobenius:7:3")
    assert quotient(f, derived_subgroup(f)).quotient == make_cyclic(3)


@pytest.mark.parametrize("name", [n for n in CORPUS if corpus_group(n).order <= 81])
def test_quotient_map_is_surjective_homomorphism(name):
    g = corpus_group(name)
    if g.is_abelian:
        # a proper nontrivial subgroup when one exists: generated by an element of prime order
        x = next((x for x in g.elements() if g.element_orders[x] in (2, 3, 5, 7)), 0)
        h = subgroup_closure(g, [x])
    else:
        h = derived_subgroup(g)
    q = quotient(g, h)
    assert q.cosets[0] == h.members
    assert sorted(x for c in q.cosets for x in c) == list(g.elements())
    assert set(q.coset_of) == set(q.quotient.elements())
    for x in g.elements():
        for y in g.elements():
            assert q.coset_of[g.mul(x, y)] == q.quotient.mul(q.coset_of[x], q.coset_of[y])


def test_subgroup_as_group_embeds():
    f = make_builtin("frobenius:13:3")
    d = derived_subgroup(f)
    sub = subgroup_as_group(d)
    assert sub.order == 13
    for a in sub.elements():
        for b in sub.elements():
            assert d.members[sub.mul(a, b)] == f.mul(d.members[a], d.members[b])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([n for n in CORPUS if corpus_group(n).order <= 64]), st.data())
def test_closure_is_a_subgroup_dividing_order(name, data):
    g = corpus_group(name)
    gens = data.draw(st.sets(st.integers(0, g.order - 1), max_size=3))
    h = subgroup_closure(g, gens)
    members = set(h.members)
    assert 0 in members and gens <= members
    assert all(g.mul(a, b) in members for a in members for b in members)
    assert g.order % len(members) == 0
