import pytest

from scurve.configs import derive_type_d_alias
from scurve.gons import classify_gon, enumerate_gon_classes
from scurve.realize import glued_pair, realize, realize_class, single_cycles


@pytest.mark.parametrize("n", [3, 4, 5])
def test_every_class_round_trips(n):
    for cls in enumerate_gon_classes(n):
        real, face = realize_class(cls)
        assert real.curve.genus == 0
        assert classify_gon(real.curve, face).label == cls.label


def test_torus_pentagon_realizes_the_torus_curve():
    from scurve.curve import canonical_code, parse_signed_code
    from scurve.gons import class_by_label

    real, _ = realize_class(class_by_label("1acebd"))
    torus = parse_signed_code("a+ b- c+ d- e+ a+ b- c+ d- e+")
    assert canonical_code(real.curve) == canonical_code(torus)


def test_bigons_are_out_of_reach():
    with pytest.raises(ValueError):
        realize_class(enumerate_gon_classes(2)[0])


def test_glued_pair_lines():
    cx = glued_pair(3, 5)
    assert len(cx.lines) == 5
    assert len(cx.rays) == 10


def test_successor_must_be_one_cycle():
    cx = glued_pair(3, 5)
    with pytest.raises(ValueError):
        realize(cx, [True] * 5, [1, 0, 3, 4, 2])


def test_single_cycles_count():
    assert sum(1 for _ in single_cycles(5)) == 24


def test_type_d_is_unique_and_mirror_stable():
    d = derive_type_d_alias()
    assert d.label == "1abc"
    assert d.type_candidates == ["1abc", "1acb"]
    assert d.list_candidates == ["1abc"]
    assert derive_type_d_alias(mirrored=True).label == "1abc"
