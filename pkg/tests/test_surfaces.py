import itertools
import random

import pytest

from braidzel.surfaces import (
    Braidzel,
    boundary_components,
    euler_characteristic,
    is_orientable,
    mirror_pretzel,
    pair_crossings,
    pretzel,
    profile,
    sub_braidzel,
)
from braidzel.words import BraidWord, crossing_count, permutation, random_word


def union_find_boundary(bz: Braidzel) -> int:
    """Independent boundary count: explicit edge list + union-find."""
    k = bz.k
    images = permutation(bz.braid).images
    parent = list(range(4 * k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    def node(disk, pos, side):
        return (disk * k + pos) * 2 + side

    for x in range(k):
        top = images[x] - 1
        if bz.twists[x] % 2:
            union(node(0, x, 0), node(1, top, 1))
            union(node(0, x, 1), node(1, top, 0))
        else:
            union(node(0, x, 0), node(1, top, 0))
            union(node(0, x, 1), node(1, top, 1))
    for disk in (0, 1):
        for pos in range(k):
            union(node(disk, pos, 1), node(disk, (pos + 1) % k, 0))
    return len({find(a) for a in range(4 * k)})


def test_construction_validation():
    with pytest.raises(ValueError):
        Braidzel(3, BraidWord(2), (1, 2, 3))
    with pytest.raises(ValueError):
        Braidzel(3, BraidWord(3), (1, 2))
    with pytest.raises(ValueError):
        pretzel()


def test_pretzel_basics():
    p = pretzel(3, -5, -7)
    assert p.k == 3 and p.is_pretzel() and p.twists == (3, -5, -7)
    assert pretzel(-1).k == 1
    assert pretzel(4, 4).twists == (4, 4)


def test_orientability():
    assert is_orientable(pretzel(3, -5, -7))
    assert not is_orientable(pretzel(1, 2))
    assert is_orientable(pretzel(0, -2, -2))
    # one band is always orientable: it cannot close into a Moebius band
    assert is_orientable(pretzel(5))
    assert is_orientable(pretzel(4))


def test_euler_characteristic():
    assert euler_characteristic(pretzel(-1)) == 1
    assert euler_characteristic(pretzel(3, -5, -7)) == -1
    assert euler_characteristic(pretzel(0, 0)) == 0


def test_boundary_hand_traced_cases():
    assert boundary_components(pretzel(-1, -1, -1)) == 1  # trefoil
    assert boundary_components(pretzel(0, 0)) == 2  # untwisted annulus
    assert boundary_components(pretzel(1, 2)) == 1  # Moebius-like
    assert boundary_components(pretzel(1, 1)) == 2
    assert boundary_components(pretzel(0, 0, 0)) == 3
    # one band between two disks is a disk whatever the twisting
    for t in range(-5, 6):
        assert boundary_components(pretzel(t)) == 1


def test_boundary_against_union_find_oracle():
    rng = random.Random(47)
    for _ in range(300):
        k = rng.randint(1, 6)
        w = random_word(rng, k, rng.randint(0, 12))
        tw = tuple(rng.randint(-5, 5) for _ in range(k))
        bz = Braidzel(k, w, tw)
        assert boundary_components(bz) == union_find_boundary(bz)


def test_boundary_range_bound():
    rng = random.Random(53)
    for _ in range(200):
        k = rng.randint(1, 6)
        bz = Braidzel(
            k,
            random_word(rng, k, rng.randint(0, 10)),
            tuple(rng.randint(-5, 5) for _ in range(k)),
        )
        assert 1 <= boundary_components(bz) <= k + 1


def test_knot_criterion_small():
    # orientable pretzels on two or more bands bound a knot iff the band
    # count and every twist are odd
    for k in range(2, 6):
        for parity in (0, 1):
            vals = [t for t in range(-5, 6) if t % 2 == parity]
            for tw in itertools.product(vals, repeat=k):
                is_knot = boundary_components(pretzel(*tw)) == 1
                assert is_knot == (k % 2 == 1 and parity == 1), tw


def test_profile():
    pr = profile(pretzel(-1, -1, -1))
    assert (pr.euler, pr.orientable, pr.boundary_components, pr.genus) == (-1, True, 1, 1)
    pr = profile(pretzel(2, 2))
    assert (pr.euler, pr.boundary_components, pr.genus) == (0, 2, 0)
    pr = profile(pretzel(1, 1, 1, 1, 1))
    assert pr.boundary_components == 1 and pr.genus == 2
    pr = profile(pretzel(1, 2))
    assert pr.genus is None and not pr.orientable


def test_profile_euler_genus_consistency():
    rng = random.Random(59)
    for _ in range(200):
        k = rng.randint(1, 6)
        parity = rng.choice([0, 1])
        tw = tuple(rng.choice([t for t in range(-5, 6) if t % 2 == parity]) for _ in range(k))
        bz = Braidzel(k, random_word(rng, k, rng.randint(0, 10)), tw)
        pr = profile(bz)
        assert pr.euler == 2 - 2 * pr.genus - pr.boundary_components


def test_sub_braidzel():
    p = pretzel(3, -5, -7)
    assert sub_braidzel(p, {1, 2, 3}) == p
    assert sub_braidzel(p, {2, 3}) == pretzel(-5, -7)
    with pytest.raises(ValueError):
        sub_braidzel(p, set())
    with pytest.raises(ValueError):
        sub_braidzel(p, {0, 1})


def test_sub_braidzel_pair_is_crossing_power():
    rng = random.Random(61)
    from braidzel.garside import words_equal
    from braidzel.words import power

    for _ in range(80):
        k = rng.randint(2, 6)
        bz = Braidzel(
            k,
            random_word(rng, k, rng.randint(0, 10)),
            tuple(rng.randint(-4, 4) for _ in range(k)),
        )
        i = rng.randint(1, k - 1)
        j = rng.randint(i + 1, k)
        sub = sub_braidzel(bz, {i, j})
        c = pair_crossings(bz, i, j)
        assert sub.twists == (bz.twists[i - 1], bz.twists[j - 1])
        assert words_equal(sub.braid, power(BraidWord(2, (1,)), c))


def test_sub_braidzel_preserves_crossing_counts():
    rng = random.Random(67)
    for _ in range(60):
        k = rng.randint(3, 6)
        bz = Braidzel(
            k,
            random_word(rng, k, rng.randint(0, 12)),
            tuple(rng.randint(-4, 4) for _ in range(k)),
        )
        subset = sorted(rng.sample(range(1, k + 1), rng.randint(2, k)))
        sub = sub_braidzel(bz, subset)
        for a in range(len(subset)):
            for b in range(a + 1, len(subset)):
                assert crossing_count(a + 1, b + 1, sub.braid) == crossing_count(
                    subset[a], subset[b], bz.braid
                )


def test_mirror_pretzel():
    assert mirror_pretzel((3, -5, -7)) == pretzel(7, 5, -3)
    assert mirror_pretzel((-1, -1, -1)) == pretzel(1, 1, 1)
    rng = random.Random(71)
    for _ in range(50):
        tw = tuple(rng.randint(-6, 6) for _ in range(rng.randint(1, 6)))
        assert mirror_pretzel(mirror_pretzel(tw).twists) == pretzel(*tw)
