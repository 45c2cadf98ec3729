from itertools import product as cartesian

import pytest
from hypothesis import given, settings, strategies as st

from chartfold.errors import NormalizationError, OrbitCapExceeded
from chartfold.hurwitz import (
    HurwitzSystem,
    Transposition,
    hc_equivalent,
    hc_orbit_bfs,
    is_transitive,
    normal_form_of,
    normalize,
    product,
    replay,
)

ALPHA = HurwitzSystem.of([(1, 2)] * 4 + [(2, 3)] * 2, 3)
SIGMA3 = [Transposition(1, 2), Transposition(2, 3), Transposition(1, 3)]


def _normalizable_sigma3(max_length: int = 6) -> list[HurwitzSystem]:
    systems = []
    for length in range(2, max_length + 1, 2):
        for entries in cartesian(SIGMA3, repeat=length):
            system = HurwitzSystem(tuple(entries), 3)
            if is_transitive(system) and product(system).is_identity():
                systems.append(system)
    return systems


def test_alpha_normal_form():
    result = normalize(ALPHA)
    assert result.system == HurwitzSystem.of([(1, 2)] * 4 + [(1, 3)] * 2, 3)
    assert replay(ALPHA, result.moves) == result.system


def test_normal_form_is_fixed():
    target = normal_form_of(4, 8)
    assert normalize(target).system == target
    pair = HurwitzSystem.of([(1, 2), (1, 2)], 2)
    assert normalize(pair).system == pair


def test_rejects_intransitive_and_nontrivial_product():
    with pytest.raises(NormalizationError):
        normalize(HurwitzSystem.of([(1, 2), (1, 2)], 3))
    with pytest.raises(NormalizationError):
        normalize(HurwitzSystem.of([(1, 2), (2, 3)], 3))


def test_degree_four_log_replays():
    system = HurwitzSystem.of([(3, 4), (2, 4), (2, 4), (1, 2), (3, 4), (1, 2)], 4)
    result = normalize(system)
    assert result.system == normal_form_of(4, 6)
    assert replay(system, result.moves) == result.system


def test_every_small_sigma3_system_normalizes_by_replayable_log():
    for system in _normalizable_sigma3():
        result = normalize(system)
        assert result.system == normal_form_of(3, len(system))
        assert replay(system, result.moves) == result.system


def test_orbit_examples():
    pair = HurwitzSystem.of([(1, 2), (1, 2)], 2)
    assert hc_orbit_bfs(pair) == {pair}
    orbit = hc_orbit_bfs(ALPHA)
    assert normalize(ALPHA).system in orbit
    member = next(iter(orbit))
    assert len(hc_orbit_bfs(member)) == len(orbit)


@pytest.mark.parametrize("length", [4, 6])
def test_equivalence_agrees_with_orbits(length):
    systems = _normalizable_sigma3(6)
    first = next(system for system in systems if len(system) == length)
    orbit = hc_orbit_bfs(first)
    for system in systems:
        same_length = len(system) == length
        assert hc_equivalent(first, system) == same_length
        assert (system in orbit) == same_length


def test_orbit_enumeration_respects_the_cap():
    with pytest.raises(OrbitCapExceeded):
        hc_orbit_bfs(ALPHA, cap=3)
    assert len(hc_orbit_bfs(ALPHA, cap=10_000)) > 3


def test_lengths_separate_classes():
    assert not hc_equivalent(ALPHA, HurwitzSystem.of([(1, 2), (2, 3), (2, 3), (1, 2)], 3))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([(1, 2), (2, 3), (1, 3), (3, 4), (1, 4), (2, 4)]), max_size=5))
def test_normalizing_doubled_systems(pairs):
    pairs = pairs + [(1, 2), (2, 3), (3, 4)]
    entries = [pair for pair in pairs for _ in range(2)]
    system = HurwitzSystem.of(entries, 4)
    result = normalize(system)
    assert result.system == normal_form_of(4, len(entries))
    assert replay(system, result.moves) == result.system
