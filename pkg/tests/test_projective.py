import random

import pytest
from hypothesis import given, strategies as st

from helpers import random_point
from polylab.errors import DegenerateFrame, DegenerateInput
from polylab.projective import (ProjLine, ProjPoint, ProjTransform, collinear, frame_map, frame_normalize, incident,
                                join, line, meet, point, projectively_equivalent, standard_frame)
from polylab.scalar import Field

F = Field.prime(101)


def test_canonical_form():
    assert point(2, 4, 6) == point(1, 2, 3)
    assert point(0, 3, 6).coords == (0, 1, 2)
    assert point(2, 4, 6, field=F) == point(1, 2, 3, field=F)
    with pytest.raises(DegenerateInput):
        point(0, 0, 0)
    assert point(1, 2, 3) != line(1, 2, 3)
    assert point(1, 2, 3).dual() == line(1, 2, 3)


def test_join_meet_incidence():
    p, q = point(1, 2, 3), point(-1, 0, 5)
    l = join(p, q)
    assert incident(l, p) and incident(l, q)
    m = line(3, 1, 1)
    x = meet(l, m)
    assert incident(l, x) and incident(m, x)
    assert collinear(p, q, meet(l, line(0, 0, 1)))


@given(st.integers(0, 10 ** 6))
def test_frame_map_sends_frame(seed):
    rng = random.Random(seed)
    pts = [random_point(F, rng) for _ in range(4)]
    try:
        g = frame_map(*pts)
    except DegenerateFrame:
        return
    assert [g(p) for p in pts] == list(standard_frame(F))
    assert (g.inverse() @ g) == ProjTransform.identity(F)


@given(st.integers(0, 10 ** 6))
def test_projective_equivalence_finds_transform(seed):
    rng = random.Random(seed)
    pts = [random_point(F, rng) for _ in range(6)]
    m = [[F.random(rng) for _ in range(3)] for _ in range(3)]
    try:
        h = ProjTransform(m)
        frame_normalize(pts)
    except (DegenerateInput, DegenerateFrame):
        return
    image = [h(p) for p in pts]
    g = projectively_equivalent(pts, image)
    assert g is not None and [g(p) for p in pts] == image
    # the frame fixes the transform, so moving any later member breaks equivalence
    other = random_point(F, rng)
    if other not in image:
        assert projectively_equivalent(pts, image[:5] + [other]) is None


def test_equivalence_rejects_mismatch():
    a = [point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point(1, 1, 1), point(1, 2, 3)]
    b = a[:4] + [point(1, 2, 4)]
    assert projectively_equivalent(a, b) is None
    with pytest.raises(ValueError):
        projectively_equivalent(a, b[:4])
    with pytest.raises(ValueError):
        projectively_equivalent(a, [x.dual() for x in a])


def test_singular_matrix():
    with pytest.raises(DegenerateInput):
        ProjTransform(((1, 0, 0), (0, 1, 0), (1, 1, 0)))


def test_lines_transform_with_same_matrix():
    assert isinstance(ProjTransform.identity(Field.rationals())(ProjLine(1, 2, 3)), ProjLine)
    assert isinstance(ProjTransform.identity(Field.rationals())(ProjPoint(1, 2, 3)), ProjPoint)
