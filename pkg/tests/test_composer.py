from math import gcd

import pytest

from smaleflows.composer import (
    FlowDescriptor,
    HypothesisError,
    alexander_of_flow,
    compose_split,
    compose_sum,
    realize_any_knot,
)
from smaleflows.franks import LinkingMatrix, SaddleData, linking_attractor_repeller
from smaleflows.knots import TREFOIL, UNKNOT, alexander_of, named, torus
from smaleflows.laurent import LaurentPoly, equal_up_to_units

P = LaurentPoly.parse
TORUS_5 = [torus(p, q) for p in range(2, 6) for q in range(p + 1, 6) if gcd(p, q) == 1]


def test_sum_of_trefoils():
    f = compose_sum(realize_any_knot(TREFOIL), realize_any_knot(TREFOIL))
    assert str(f.attractor) == "torus(2,3) # torus(2,3)"
    assert f.repeller == UNKNOT and f.lk_ar_abs == 1
    assert alexander_of_flow(f) == P("1 - t + t^2") * P("1 - t + t^2")


def test_unknot_is_a_unit():
    k = torus(3, 5)
    assert compose_sum(realize_any_knot(UNKNOT), realize_any_knot(k)).attractor == k


@pytest.mark.parametrize("k1", TORUS_5 + [UNKNOT])
def test_multiplicativity(k1):
    for k2 in TORUS_5:
        f = compose_sum(realize_any_knot(k1), realize_any_knot(k2))
        assert equal_up_to_units(alexander_of_flow(f), alexander_of(k1) * alexander_of(k2))
        assert f.lk_ar_abs == linking_attractor_repeller(f.saddles)


def test_sum_commutes():
    a, b = realize_any_knot(TREFOIL), realize_any_knot(torus(2, 5))
    assert compose_sum(a, b) == compose_sum(b, a)


def test_realize_values():
    f = realize_any_knot(TREFOIL)
    assert alexander_of_flow(f) == P("1 - t + t^2")
    assert f.is_simple and not f.saddles[0].is_opaque
    u = realize_any_knot(UNKNOT)
    assert u.saddles[0] == SaddleData.lorenz(0, 0, label="realize(unknot)")
    assert alexander_of_flow(u) == P("1")
    assert equal_up_to_units(u.saddles[0].delta_r, P("1"))


def test_realize_general_knot_is_opaque():
    f = realize_any_knot(torus(3, 7))
    s = f.saddles[0]
    assert s.is_opaque and s.delta_a == alexander_of(torus(3, 7))
    assert f.repeller_disk_condition and f.lk_ar_abs == 1


def test_no_saddles_gives_one():
    f = FlowDescriptor(UNKNOT, UNKNOT, True, True)
    assert f.lk_ar_abs == 1 and alexander_of_flow(f) == P("1")


def test_named_knot_has_no_polynomial():
    f = realize_any_knot(named("8_20"))
    with pytest.raises(ValueError):
        alexander_of_flow(f)


def _flow(**kw):
    base = dict(attractor=TREFOIL, repeller=UNKNOT, repeller_is_meridian_of_attractor=True,
                repeller_disk_condition=True, saddles=(SaddleData.lorenz(1, 0),))
    base.update(kw)
    return FlowDescriptor(**base)


@pytest.mark.parametrize("kw, clause", [
    (dict(attractor_count=2), 1),
    (dict(repeller_count=2), 2),
    (dict(repeller=TREFOIL), 2),
    (dict(repeller_is_meridian_of_attractor=False), 2),
    (dict(repeller_disk_condition=False), 3),
])
def test_sum_hypotheses(kw, clause):
    with pytest.raises(HypothesisError) as info:
        compose_sum(_flow(), _flow(**kw))
    assert info.value.clause == clause
    assert f"hypothesis ({clause})" in str(info.value)


def test_split_skips_disk_condition():
    f = compose_split(_flow(repeller_disk_condition=False), realize_any_knot(torus(2, 5)))
    assert f.attractor == TREFOIL and f.repeller == torus(2, 5)
    assert f.lk_ar_abs == 1 and f.mutual_meridians
    assert alexander_of_flow(f) == P("1 - t + t^2")


def test_split_still_checks_clause_1():
    with pytest.raises(HypothesisError) as info:
        compose_split(_flow(attractor_count=3), _flow())
    assert info.value.clause == 1


def test_split_of_unknots_is_hopf_pair():
    f = compose_split(realize_any_knot(UNKNOT), realize_any_knot(UNKNOT))
    assert f.attractor == UNKNOT and f.repeller == UNKNOT
    assert f.lk_ar_abs == 1 and f.repeller_is_meridian_of_attractor


def test_split_with_named_repeller():
    f = compose_split(realize_any_knot(TREFOIL), realize_any_knot(named("figure-eight")))
    assert str(f.repeller) == "named(figure-eight)" and f.lk_ar_abs == 1


def test_descriptor_invariants():
    with pytest.raises(ValueError):
        _flow(lk_ar_abs=3)
    same_sign = LinkingMatrix(((1, 1), (1, 1)), ((1, 1), (1, 1)))
    bad = SaddleData.from_matrices(SaddleData.lorenz().structure, same_sign)
    with pytest.raises(ValueError):
        _flow(saddles=(bad,))
