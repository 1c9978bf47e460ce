"""Mapping group-algebra Lie algebras of subgroups onto their hat-span Lie algebras.

Objects are the subgroups of an ambient group; morphisms are the linear lifts
of all group homomorphisms between them.  The checks here verify the identity
and composition laws of the object/morphism assignment, its surjectivity on
induced maps, and exhibit pairs of distinct morphisms with equal images.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, BarLift, Scalar, ZERO, lift_hom_bar
from .groups import (
    FiniteGroup,
    compose_homs,
    enumerate_homs,
    enumerate_subgroups,
    identity_hom,
)
from .plesken import HatLift, PleskenBasis, canonical_basis, lift_hom_hat

CONVENTIONS = ("literal", "pairwise")


def object_map(x: AlgebraElement, convention: str = "literal") -> AlgebraElement:
    """Antisymmetrize x into the hat span.

    ``literal`` sums (a_g - a_{g^{-1}})(g - g^{-1}) over every group element,
    so each non-involution pair contributes twice; ``pairwise`` sums over
    canonical representatives only and differs by that factor of two.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")
    G = x.group
    candidates = sorted(set(x.coeffs) | {G.inv[g] for g in x.coeffs})
    if convention == "pairwise":
        candidates = [g for g in candidates if g < G.inv[g]]
    acc: dict[int, Scalar] = {}
    for g in candidates:
        gi = G.inv[g]
        if gi == g:
            continue
        c = x.coeffs.get(g, ZERO) - x.coeffs.get(gi, ZERO)
        if not c:
            continue
        acc[g] = acc.get(g, ZERO) + c
        acc[gi] = acc.get(gi, ZERO) - c
    return AlgebraElement(G, acc)


def morphism_map(fbar: BarLift) -> HatLift:
    """Send the bar lift of a group homomorphism to its hat lift."""
    return lift_hom_hat(fbar.hom)


@dataclass
class SubgroupCategory:
    """Subgroups of an ambient group with all induced bar lifts as morphisms."""

    ambient: FiniteGroup
    objects: tuple[FiniteGroup, ...]
    homsets: dict[tuple[int, int], tuple[BarLift, ...]]


def subgroup_category(ambient: FiniteGroup) -> SubgroupCategory:
    objects = tuple(enumerate_subgroups(ambient))
    homsets: dict[tuple[int, int], tuple[BarLift, ...]] = {}
    for i, Gi in enumerate(objects):
        for j, Gj in enumerate(objects):
            homsets[(i, j)] = tuple(lift_hom_bar(f) for f in enumerate_homs(Gi, Gj))
    return SubgroupCategory(ambient, objects, homsets)


@dataclass(frozen=True)
class IdentityLawResult:
    object_index: int
    ok: bool


@dataclass(frozen=True)
class CompositionLawResult:
    source: int
    middle: int
    target: int
    pairs: int
    ok: bool


@dataclass(frozen=True)
class LawReport:
    identity: tuple[IdentityLawResult, ...]
    composition: tuple[CompositionLawResult, ...]

    @property
    def all_hold(self) -> bool:
        return all(r.ok for r in self.identity) and all(r.ok for r in self.composition)


def check_functor_laws(category: SubgroupCategory) -> LawReport:
    """Exhaustively verify the identity and composition laws on all homsets."""
    lifts = {
        key: tuple(morphism_map(f) for f in homset)
        for key, homset in category.homsets.items()
    }
    identity_results = []
    for i, obj in enumerate(category.objects):
        ident_image = identity_hom(obj).image
        ok = False
        for fbar, hlift in zip(category.homsets[(i, i)], lifts[(i, i)]):
            if fbar.hom.image == ident_image:
                ok = hlift.is_identity_map()
                break
        identity_results.append(IdentityLawResult(i, ok))
    composition_results = []
    n = len(category.objects)
    for i in range(n):
        for j in range(n):
            first = list(zip(category.homsets[(i, j)], lifts[(i, j)]))
            for k in range(n):
                second = list(zip(category.homsets[(j, k)], lifts[(j, k)]))
                pairs = 0
                ok = True
                for f1, h1 in first:
                    for f2, h2 in second:
                        pairs += 1
                        composed = morphism_map(
                            lift_hom_bar(compose_homs(f2.hom, f1.hom))
                        )
                        dim = composed.domain_basis.dimension
                        if any(
                            composed.action[m] != h2(h1.action[m]) for m in range(dim)
                        ):
                            ok = False
                composition_results.append(
                    CompositionLawResult(i, j, k, pairs, ok)
                )
    return LawReport(tuple(identity_results), tuple(composition_results))


@dataclass(frozen=True)
class FullnessPairResult:
    source: int
    target: int
    morphisms: int
    distinct_images: int
    witnessed: int

    @property
    def ok(self) -> bool:
        return self.witnessed == self.distinct_images


@dataclass(frozen=True)
class FullnessReport:
    pairs: tuple[FullnessPairResult, ...]

    @property
    def all_full(self) -> bool:
        return all(r.ok for r in self.pairs)


def check_full(category: SubgroupCategory) -> FullnessReport:
    """For every object pair, match each induced hat lift to an explicit preimage."""
    results = []
    for (i, j), homset in sorted(category.homsets.items()):
        lifts = [morphism_map(f) for f in homset]
        distinct: list[HatLift] = []
        for h in lifts:
            if not any(h == d for d in distinct):
                distinct.append(h)
        witnessed = sum(
            1
            for target in distinct
            if any(morphism_map(f) == target for f in homset)
        )
        results.append(
            FullnessPairResult(i, j, len(homset), len(distinct), witnessed)
        )
    return FullnessReport(tuple(results))


@dataclass(frozen=True)
class FaithfulnessWitness:
    """Two distinct bar lifts between the same objects with equal hat lifts."""

    source: int
    target: int
    image_a: tuple[int, ...]
    image_b: tuple[int, ...]


def find_faithfulness_counterexample(
    category: SubgroupCategory,
) -> list[FaithfulnessWitness]:
    """All pairs of distinct morphisms that collapse to the same hat lift."""
    out: list[FaithfulnessWitness] = []
    for (i, j), homset in sorted(category.homsets.items()):
        lifts = [morphism_map(f) for f in homset]
        for a in range(len(homset)):
            for b in range(a + 1, len(homset)):
                if homset[a].hom.image != homset[b].hom.image and lifts[a] == lifts[b]:
                    out.append(
                        FaithfulnessWitness(
                            i, j, homset[a].hom.image, homset[b].hom.image
                        )
                    )
    out.sort(key=lambda w: (w.source, w.target, w.image_a, w.image_b))
    return out


@dataclass
class FunctorWitness:
    """Complete record of the object map, morphism map, and verified laws."""

    category: SubgroupCategory
    object_bases: tuple[PleskenBasis, ...]
    morphism_images: dict[tuple[int, int], tuple[HatLift, ...]]
    law_report: LawReport
    fullness_report: FullnessReport
    faithfulness_counterexamples: tuple[FaithfulnessWitness, ...]

    @classmethod
    def build(cls, category: SubgroupCategory) -> "FunctorWitness":
        bases = tuple(canonical_basis(obj) for obj in category.objects)
        images = {
            key: tuple(morphism_map(f) for f in homset)
            for key, homset in category.homsets.items()
        }
        return cls(
            category=category,
            object_bases=bases,
            morphism_images=images,
            law_report=check_functor_laws(category),
            fullness_report=check_full(category),
            faithfulness_counterexamples=tuple(
                find_faithfulness_counterexample(category)
            ),
        )
