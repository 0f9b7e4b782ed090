import pytest

from modules.monoid.classes import (
    SizeCapExceededError,
    WordTooLongError,
    enumerate_classes,
    oracle_equivalent,
    product_class_counts,
)
from modules.monoid.disjoint_set import DisjointSet
from modules.monoid.structure import (
    LCM_FAILS,
    LCM_OK,
    LCM_VACUOUS,
    check_lcm_existence,
    check_left_cancellativity,
)
from modules.presentation.relations import NonHomogeneousError, Presentation


def test_disjoint_set():
    ds = DisjointSet()
    assert ds.union('a', 'b')
    assert ds.union('c', 'b')
    assert not ds.union('a', 'c')
    ds.make_set('d')
    assert sorted(sorted(group) for group in ds.groups()) == [['a', 'b', 'c'], ['d']]


def test_free_monoid_classes(hand_presentation):
    gc = enumerate_classes(hand_presentation('free2'), 3)
    assert gc.class_counts() == (1, 2, 4, 8)
    assert sum(gc.class_counts()[1:]) == 14
    assert all(len(members) == 1 for per_length in gc.classes for members in per_length)


def test_commutator_classes(hand_presentation):
    gc = enumerate_classes(hand_presentation('commutator'), 3)
    assert gc.classes[2] == (((0, 0),), ((0, 1), (1, 0)), ((1, 1),))
    assert gc.class_counts() == (1, 2, 3, 4)
    assert gc.class_of((1, 0, 0)) == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_pencil_rotation_class(arrangement_presentation):
    gc = enumerate_classes(arrangement_presentation('pencil3'), 3)
    assert gc.class_of((2, 1, 0)) == ((0, 2, 1), (1, 0, 2), (2, 1, 0))
    assert gc.class_counts()[3] == 27 - 2


def test_oracle_equivalent(hand_presentation, arrangement_presentation):
    gc = enumerate_classes(hand_presentation('commutator'), 2)
    assert oracle_equivalent(gc, (0, 1), (1, 0))
    assert not oracle_equivalent(gc, (0, 0), (0, 1))
    assert not oracle_equivalent(gc, (0,), (0, 1))
    with pytest.raises(WordTooLongError):
        oracle_equivalent(gc, (0, 1, 0), (1, 0, 0))

    triangle = enumerate_classes(arrangement_presentation('triangle'), 2)
    for k in range(3):
        assert oracle_equivalent(triangle, (k,), (k,))


def test_graded_classes_refine_monotonically(arrangement_presentation):
    p = arrangement_presentation('shared_line')
    assert enumerate_classes(p, 4).classes[:4] == enumerate_classes(p, 3).classes


def test_enumerate_classes_errors(arrangement_presentation):
    with pytest.raises(SizeCapExceededError) as info:
        enumerate_classes(arrangement_presentation('pencil3'), 5, size_cap=100)
    assert info.value.length == 5
    assert info.value.count == 243

    with pytest.raises(NonHomogeneousError):
        enumerate_classes(Presentation.from_names(['a', 'b'], [((0,), (1, 1))]), 2)


def test_product_class_counts(hand_presentation):
    free1 = enumerate_classes(Presentation.from_names(['a'], []), 3)
    assert free1.class_counts() == (1, 1, 1, 1)
    assert product_class_counts(free1, free1) == (1, 2, 3, 4)

    commutator = enumerate_classes(hand_presentation('commutator'), 3)
    assert product_class_counts(free1, free1) == commutator.class_counts()


def test_left_cancellativity(hand_presentation, arrangement_presentation):
    assert check_left_cancellativity(enumerate_classes(hand_presentation('free2'), 4)).ok
    assert check_left_cancellativity(enumerate_classes(arrangement_presentation('pencil_plus_generic'), 5)).ok

    p = hand_presentation('noncancellative')
    report = check_left_cancellativity(enumerate_classes(p, 3))
    assert not report.ok
    assert report.counterexample == (0, (1,), (2,))
    assert report.to_dict(p)['counterexample'] == {'s': 'a', 'y': 'b', 'z': 'c'}


def test_lcm_commutator(hand_presentation):
    p = hand_presentation('commutator')
    report = check_lcm_existence(enumerate_classes(p, 4), p)
    assert report.ok
    assert report.details == ({'pair': ['a', 'b'], 'lcm': 'a b', 'lcm_class': ['a b', 'b a'],
                               'status': LCM_OK},)


def test_lcm_pencil(arrangement_presentation):
    p = arrangement_presentation('pencil3')
    report = check_lcm_existence(enumerate_classes(p, 5), p)
    assert report.ok
    assert report.details[0]['pair'] == ['x0', 'x1']
    assert report.details[0]['lcm'] == 'x0 x2 x1'
    assert report.details[0]['lcm_class'] == ['x0 x2 x1', 'x1 x0 x2', 'x2 x1 x0']
    assert report.to_dict()['verified_up_to_length'] == 5


def test_lcm_free_monoid_is_vacuous(hand_presentation):
    p = hand_presentation('free2')
    report = check_lcm_existence(enumerate_classes(p, 4), p)
    assert report.ok
    assert report.details[0]['status'] == LCM_VACUOUS
    assert 'no common multiple up to length 4' in report.details[0]['note']


def test_lcm_fails_for_incomplete_presentation(arrangement_presentation):
    p = arrangement_presentation('shared_line')
    report = check_lcm_existence(enumerate_classes(p, 4), p)
    assert not report.ok
    by_pair = {tuple(detail['pair']): detail for detail in report.details}
    assert by_pair[('x1', 'x2')]['status'] == LCM_FAILS
    assert by_pair[('x1', 'x2')]['lcm'] == 'x1 x0 x2'
