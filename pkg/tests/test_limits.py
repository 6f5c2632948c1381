import pytest

from monospec.core import sierpinski, submonoid_closure, validate_monoid
from monospec.corpus import chain_semilattice, corpus_submonoid_chains
from monospec.errors import ValidationError
from monospec.limits import (
    colimit_of_submonoid_chain,
    inverse_limit,
    inverse_system,
    profinite_check,
    profinite_spec,
    subsemilattices,
    zg_check,
)
from monospec.presentation import free_semilattice
from monospec.semilattice import from_monoid


def test_inverse_system_validation():
    with pytest.raises(ValidationError, match="missing transition"):
        inverse_system([2, 2], [(0, 1)], {})
    with pytest.raises(ValidationError, match="entries"):
        inverse_system([2, 2], [(0, 1)], {(0, 1): (0,)})
    with pytest.raises(ValidationError, match="compose"):
        inverse_system(
            [2, 2, 2],
            [(0, 1), (1, 2), (0, 2)],
            {(0, 1): (0, 1), (1, 2): (0, 1), (0, 2): (1, 0)},
        )
    # identity self-transitions are fine
    inverse_system([2], [(0, 0)], {(0, 0): (0, 1)})


def test_inverse_limit_single_stage():
    sys1 = inverse_system([3], [], {})
    assert inverse_limit(sys1) == [(0,), (1,), (2,)]


def test_inverse_limit_constant_map():
    sys2 = inverse_system([1, 3], [(0, 1)], {(0, 1): (0, 0, 0)})
    assert inverse_limit(sys2) == [(0, 0), (0, 1), (0, 2)]


def test_colimit_of_chain():
    F = free_semilattice(2).monoid
    chain = [frozenset({0}), frozenset({0, 1}), frozenset(range(4))]
    colim, local = colimit_of_submonoid_chain(F, chain)
    assert colim.size == 4
    single, _ = colimit_of_submonoid_chain(F, [frozenset({0})])
    assert single.size == 1
    with pytest.raises(ValidationError, match="not increasing"):
        colimit_of_submonoid_chain(F, [frozenset({0, 1}), frozenset({0})])
    with pytest.raises(ValidationError, match="not a submonoid"):
        colimit_of_submonoid_chain(F, [frozenset({1})])


def test_zg_on_free_semilattice_chain():
    F = free_semilattice(2).monoid
    chain = [frozenset({0}), frozenset({0, 1}), frozenset(range(4))]
    assert zg_check(F, chain)


def test_zg_trivial_chain():
    assert zg_check(sierpinski(), [frozenset({0}), frozenset({0, 1})])
    assert zg_check(validate_monoid([[0]]), [frozenset({0})])


def test_zg_on_corpus_chains():
    for M, stages in corpus_submonoid_chains(21, count=25):
        assert zg_check(M, stages)


def test_subsemilattices_of_chain():
    L = chain_semilattice(3)
    # all subsets containing the bottom are join closed in a chain
    assert len(subsemilattices(L)) == 4


def test_profinite_examples():
    L = from_monoid(sierpinski())
    stages, families, evaluations = profinite_spec(L)
    assert len(families) == 2
    assert profinite_check(L)
    assert profinite_check(chain_semilattice(1))
    assert profinite_check(chain_semilattice(3))
    assert profinite_check(free_semilattice(2))
