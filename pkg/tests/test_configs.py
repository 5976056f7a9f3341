"""Family builders, positive-system enumeration, and edge vectors."""

from fractions import Fraction

import pytest

from bispectral.basis import WeightedBasis, vec
from bispectral.configs import (
    Configuration,
    build_family,
    edge_vectors,
    enumerate_positive_systems,
    expected_iteration_count,
)
from bispectral.errors import InvalidParams, TooLarge

F = Fraction


def entry_set(config):
    return {(v, m) for v, m in config.entries}


def test_c2_11_equals_root_c2():
    c = build_family("Cnlm", n=2, l=1, m=1)
    r = build_family("rootC", n=2, m=1)
    assert len(c.entries) == 4
    assert c.basis.weights == (3, 3)
    assert entry_set(c) == entry_set(r)
    mults = sorted(m for _, m in c.entries)
    assert mults == [1, 1, 1, 1]


def test_a22_entries():
    c = build_family("An2", n=2, m=1)
    assert c.basis.weights == (-2, 1, 1)
    assert len(c.entries) == 3
    assert all(m == 1 for _, m in c.entries)


def test_c3_11_entry_count():
    c = build_family("Cnlm", n=3, l=1, m=1)
    assert len(c.entries) == 9
    longs = [v for v, m in c.entries if m == 1 and v.count(0) == 2 and max(v) == 1]
    assert len(longs) == 3


def test_cnlm_integrality_enforced():
    with pytest.raises(InvalidParams):
        build_family("Cnlm", n=3, l=2, m=1)  # (2l+1)/(2m+1) = 5/3
    build_family("Cnlm", n=3, l=4, m=1)  # 9/3 = 3 is fine
    build_family("Cnlm", n=2, l=2, m=1)  # no (i,j) pairs below n, no constraint


def test_an2_rational_m_only_for_n2():
    c = build_family("An2", n=2, m="1/2")
    assert c.basis.weights == (F(-3, 2), 1, F(1, 2))
    with pytest.raises(InvalidParams):
        build_family("An2", n=3, m="1/2")


def test_parallel_vectors_rejected():
    b = WeightedBasis([1, 1])
    with pytest.raises(InvalidParams):
        Configuration(b, [(vec([1, 1]), 1), (vec([2, 2]), 1)])


def test_isotropic_vectors_rejected():
    b = WeightedBasis([-1, 1])
    with pytest.raises(InvalidParams):
        Configuration(b, [(vec([1, 1]), 1)])


def test_multiplicity_tables():
    for fam, kw, total in [
        ("Cnlm", dict(n=2, l=1, m=1), 4),
        ("Cnlm", dict(n=2, l=2, m=1), 5),
        ("Cnlm", dict(n=3, l=4, m=1), 19),
        ("An1", dict(n=2, m=2), 4),
        ("An2", dict(n=2, m=1), 3),
        ("An2", dict(n=3, m=2), 7),
    ]:
        c = build_family(fam, **kw)
        assert c.total_multiplicity() == total
        assert expected_iteration_count(c) == total


def test_positive_system_counts():
    b = WeightedBasis([1, 1])
    single = Configuration(b, [(vec([1, 0]), 1)])
    assert len(enumerate_positive_systems(single)) == 2

    ortho = Configuration(b, [(vec([1, 0]), 1), (vec([0, 1]), 1)])
    assert len(enumerate_positive_systems(ortho)) == 4

    c2 = build_family("Cnlm", n=2, l=1, m=1)
    systems = enumerate_positive_systems(c2)
    assert len(systems) == 8


def test_positive_systems_certify_and_pair():
    c2 = build_family("Cnlm", n=2, l=1, m=1)
    systems = enumerate_positive_systems(c2)
    sign_set = {s.signs for s in systems}
    for s in systems:
        assert s.verify_witness()
        assert tuple(-x for x in s.signs) in sign_set


def test_edges_single_and_orthogonal():
    b = WeightedBasis([1, 1])
    single = Configuration(b, [(vec([1, 0]), 1)])
    (sys0,) = [s for s in enumerate_positive_systems(single) if s.signs == (1,)]
    assert edge_vectors(sys0) == [vec([1, 0])]

    ortho = Configuration(b, [(vec([1, 0]), 1), (vec([0, 1]), 1)])
    (sys1,) = [s for s in enumerate_positive_systems(ortho) if s.signs == (1, 1)]
    assert len(edge_vectors(sys1)) == 2


def test_edges_c2_all_plus_chamber():
    # A_+ = {f_1, f_2, (f_1+f_2)/2, (f_1-f_2)/2}: edges are f_2 and (f_1-f_2)/2
    c2 = build_family("Cnlm", n=2, l=1, m=1)
    systems = enumerate_positive_systems(c2)
    (allplus,) = [s for s in systems if s.signs == (1, 1, 1, 1)]
    edges = set(edge_vectors(allplus))
    assert edges == {vec([0, 1]), vec(["1/2", "-1/2"])}


def test_every_entry_is_an_edge_somewhere():
    for fam, kw in [
        ("Cnlm", dict(n=2, l=1, m=1)),
        ("An1", dict(n=2, m=2)),
        ("An2", dict(n=2, m=1)),
    ]:
        c = build_family(fam, **kw)
        systems = enumerate_positive_systems(c)
        seen = set()
        from bispectral.configs import edge_vector_indices

        for s in systems:
            for i in edge_vector_indices(s):
                if s.signs[i] == 1:
                    seen.add(i)
        assert seen == set(range(len(c.entries)))


def test_too_large_guard():
    b = WeightedBasis([1] * 2)
    entries = [(vec([1, k]), 1) for k in range(5)]
    cfg = Configuration(b, entries)
    with pytest.raises(TooLarge):
        enumerate_positive_systems(cfg, bound=3)
