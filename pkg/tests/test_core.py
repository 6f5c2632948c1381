import pytest
from hypothesis import given, strategies as st

from monospec.core import (
    MonoidMap,
    compose_homs,
    direct_product,
    format_monoid_table,
    is_hom,
    is_idempotent,
    monoid_homs,
    parse_monoid_table,
    render_set,
    sierpinski,
    submonoid_closure,
    trivial_monoid,
    units,
    validate_monoid,
)
from monospec.errors import ParseError, ValidationError
from monospec.presentation import free_semilattice


def z2():
    return validate_monoid([[0, 1], [1, 0]], identity=0, names=["1", "g"])


def laws_hold(table, identity):
    """Independent triple-loop oracle for the monoid laws."""
    n = len(table)
    if any(table[identity][i] != i for i in range(n)):
        return False
    if any(table[i][j] != table[j][i] for i in range(n) for j in range(n)):
        return False
    return all(
        table[table[i][j]][k] == table[i][table[j][k]]
        for i in range(n)
        for j in range(n)
        for k in range(n)
    )


def test_validate_sierpinski():
    # table given with identity at index 1, as in {0, 1} with unit 1
    M = validate_monoid([[0, 0], [0, 1]], identity=1, names=["0", "1"])
    assert M.names == ("1", "0")  # identity relabeled to the front
    assert M.table == sierpinski().table


def test_validate_trivial_and_group():
    assert trivial_monoid().size == 1
    assert units(z2()) == frozenset({0, 1})


def test_validation_witnesses():
    with pytest.raises(ValidationError, match="identity"):
        validate_monoid([[1, 1], [1, 1]], identity=0)
    with pytest.raises(ValidationError, match="commutative"):
        validate_monoid([[0, 1, 2], [1, 1, 1], [2, 2, 2]], identity=0)
    with pytest.raises(ValidationError, match="associative"):
        validate_monoid([[0, 1, 2], [1, 0, 2], [2, 2, 1]], identity=0)
    with pytest.raises(ValidationError, match="duplicate name"):
        validate_monoid([[0, 1], [1, 1]], identity=0, names=["a", "a"])
    with pytest.raises(ValidationError, match="square"):
        validate_monoid([[0, 1], [1]], identity=0)


def test_is_idempotent():
    assert is_idempotent(sierpinski())
    assert not is_idempotent(z2())
    assert is_idempotent(trivial_monoid())


def test_units():
    assert units(sierpinski()) == frozenset({0})
    F = free_semilattice(2).monoid
    assert units(F) == frozenset({0})


def test_submonoid_closure():
    assert submonoid_closure(z2(), {1}) == frozenset({0, 1})
    F = free_semilattice(2).monoid
    assert submonoid_closure(F, {1}) == frozenset({0, 1})
    assert submonoid_closure(z2(), set()) == frozenset({0})


def test_direct_product():
    P = direct_product(sierpinski(), sierpinski())
    assert P.size == 4 and is_idempotent(P)
    F = free_semilattice(2).monoid
    # isomorphic to the free semilattice on two generators
    assert sorted(sorted(row) for row in P.table) == sorted(sorted(row) for row in F.table)
    Q = direct_product(z2(), trivial_monoid())
    assert Q.table == z2().table
    R = direct_product(z2(), sierpinski())
    assert len(units(R)) == 2


def test_is_hom():
    I = sierpinski()
    assert is_hom(MonoidMap(I, I, (0, 1)))
    assert is_hom(MonoidMap(z2(), I, (0, 0)))
    assert not is_hom(MonoidMap(I, I, (1, 0)))


def test_hom_composition():
    I = sierpinski()
    F = free_semilattice(2).monoid
    for f in monoid_homs(F, I):
        for g in monoid_homs(I, I):
            assert is_hom(compose_homs(f, g))


@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n),
                        st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                                 min_size=n, max_size=n),
                        st.integers(0, n - 1))))
def test_fuzz_validation_matches_law_oracle(args):
    n, table, identity = args
    try:
        validate_monoid(table, identity=identity)
        accepted = True
    except ValidationError:
        accepted = False
    assert accepted == laws_hold(table, identity)


def test_render_set():
    M = z2()
    assert render_set(M, set()) == "{}"
    assert render_set(M, {1, 0}) == "{1, g}"


def test_table_roundtrip():
    text = "# comment\nelements: 1 t t2\nidentity: 1\ntable:\n1 t t2\nt t2 t2\nt2 t2 t2\n"
    M = parse_monoid_table(text)
    assert M.names == ("1", "t", "t2")
    assert parse_monoid_table(format_monoid_table(M)) == M


def test_table_parse_errors():
    with pytest.raises(ParseError, match="line 1"):
        parse_monoid_table("nonsense: a b")
    with pytest.raises(ParseError, match="unknown identity"):
        parse_monoid_table("elements: a\nidentity: b\ntable:\na\n")
    with pytest.raises(ParseError, match="expected 2 table rows"):
        parse_monoid_table("elements: a b\nidentity: a\ntable:\na b\n")
