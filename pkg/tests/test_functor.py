from __future__ import annotations

from random import Random

import pytest

from plesken_lab import (
    AlgebraElement,
    FunctorWitness,
    check_full,
    check_functor_laws,
    compose_homs,
    enumerate_homs,
    find_faithfulness_counterexample,
    identity_hom,
    lift_hom_bar,
    morphism_map,
    object_map,
    parse_element,
    random_element,
    random_scalar,
    reduce,
    subgroup_category,
    trivial_hom,
)


def test_object_map_examples(catalog):
    C3, K4 = catalog["C3"], catalog["K4"]
    e = AlgebraElement.basis(C3, C3.identity)
    assert object_map(e).is_zero()
    rng = Random(3)
    for _ in range(10):
        assert object_map(random_element(K4, rng)).is_zero()
    assert object_map(parse_element(C3, "a")) == parse_element(C3, "2*a - 2*a^2")
    assert object_map(parse_element(C3, "a"), "pairwise") == parse_element(C3, "a - a^2")


def test_object_map_literal_is_twice_pairwise(catalog):
    rng = Random(8)
    for G in catalog.values():
        if G.order > 8:
            continue
        for _ in range(10):
            x = random_element(G, rng)
            assert object_map(x) == 2 * object_map(x, "pairwise")


def test_object_map_rejects_unknown_convention(catalog):
    with pytest.raises(ValueError):
        object_map(AlgebraElement.zero(catalog["C3"]), "midpoint")


def test_object_map_is_linear_and_lands_in_span(catalog):
    rng = Random(14)
    for G in catalog.values():
        if G.order > 8:
            continue
        for _ in range(10):
            x, y = random_element(G, rng), random_element(G, rng)
            a, b = random_scalar(rng), random_scalar(rng)
            assert object_map(a * x + b * y) == a * object_map(x) + b * object_map(y)
            reduce(object_map(x))  # must not raise NotInSpan


def test_morphism_map_identity_and_trivial(catalog):
    S3 = catalog["S3"]
    assert morphism_map(lift_hom_bar(identity_hom(S3))).is_identity_map()
    assert morphism_map(lift_hom_bar(trivial_hom(S3, S3))).is_zero_map()


def test_morphism_map_respects_composition_chains(catalog):
    C3 = catalog["C3"]
    homs = enumerate_homs(C3, C3)
    for f1 in homs:
        for f2 in homs:
            lhs = morphism_map(lift_hom_bar(compose_homs(f2, f1)))
            h1, h2 = morphism_map(lift_hom_bar(f1)), morphism_map(lift_hom_bar(f2))
            for m in range(lhs.domain_basis.dimension):
                assert lhs.action[m] == h2(h1.action[m])


def test_subgroup_category_invariants(catalog):
    C = subgroup_category(catalog["S3"])
    n = len(C.objects)
    for i, obj in enumerate(C.objects):
        images = [f.hom.image for f in C.homsets[(i, i)]]
        assert identity_hom(obj).image in images
    for i in range(n):
        for j in range(n):
            for k in range(n):
                available = {f.hom.image for f in C.homsets[(i, k)]}
                for f1 in C.homsets[(i, j)]:
                    for f2 in C.homsets[(j, k)]:
                        assert compose_homs(f2.hom, f1.hom).image in available


@pytest.mark.parametrize("spec", ["C3", "K4", "S3"])
def test_functor_laws_hold(catalog, spec):
    report = check_functor_laws(subgroup_category(catalog[spec]))
    assert report.all_hold
    assert all(r.ok for r in report.identity)
    assert all(r.ok for r in report.composition)


@pytest.mark.parametrize("spec", ["C3", "K4", "S3", "C6"])
def test_functor_is_full(catalog, spec):
    report = check_full(subgroup_category(catalog[spec]))
    assert report.all_full
    for pair in report.pairs:
        assert pair.witnessed == pair.distinct_images


def test_fullness_covers_mixed_object_pairs(catalog):
    C = subgroup_category(catalog["S3"])
    report = check_full(C)
    a3 = next(i for i, obj in enumerate(C.objects) if obj.order == 3)
    top = next(i for i, obj in enumerate(C.objects) if obj.order == 6)
    pair = next(r for r in report.pairs if (r.source, r.target) == (a3, top))
    assert pair.ok and pair.morphisms >= pair.distinct_images >= 1


def test_k4_witness_contains_identity_vs_trivial(catalog):
    C = subgroup_category(catalog["K4"])
    witnesses = find_faithfulness_counterexample(C)
    assert witnesses
    k4_index = len(C.objects) - 1
    assert C.objects[k4_index].order == 4
    found = [
        w
        for w in witnesses
        if (w.source, w.target) == (k4_index, k4_index)
        and w.image_a == (0, 0, 0, 0)
        and w.image_b == (0, 1, 2, 3)
    ]
    assert len(found) == 1


def test_c3_category_is_faithful(catalog):
    assert find_faithfulness_counterexample(subgroup_category(catalog["C3"])) == []


def test_c2_category_witness_count(catalog):
    C = subgroup_category(catalog["C2"])
    witnesses = find_faithfulness_counterexample(C)
    # the only homset with more than one morphism is end(C2) with 2 maps
    assert len(witnesses) == 1
    assert witnesses[0].image_a == (0, 0) and witnesses[0].image_b == (0, 1)


def test_witnesses_are_sorted(catalog):
    witnesses = find_faithfulness_counterexample(subgroup_category(catalog["K4"]))
    keys = [(w.source, w.target, w.image_a, w.image_b) for w in witnesses]
    assert keys == sorted(keys)
    assert all(w.image_a < w.image_b for w in witnesses)


def test_functor_witness_build(catalog):
    C = subgroup_category(catalog["K4"])
    witness = FunctorWitness.build(C)
    assert witness.law_report.all_hold
    assert witness.fullness_report.all_full
    assert all(b.dimension == 0 for b in witness.object_bases)
    assert witness.faithfulness_counterexamples
    assert set(witness.morphism_images) == set(C.homsets)
