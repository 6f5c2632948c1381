"""Colimits of submonoid chains and inverse limits of finite stage systems.

General categorical colimits are deliberately replaced by unions of submonoid
chains, the only shape needed here; inverse limits enumerate coherent families
(one point per stage, compatible with every transition map).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .core import FiniteMonoid, is_submonoid, submonoid_as_monoid
from .errors import ValidationError
from .semilattice import JoinSemilattice
from .spectrum import alpha, canonical_key, primes_bruteforce


@dataclass
class InverseSystem:
    """Finite point sets per stage with transition maps toward smaller stages.

    `relations` holds pairs (low, high); `maps[(low, high)]` sends each point
    of stage `high` to a point of stage `low`.
    """

    sizes: list[int]
    relations: list[tuple[int, int]]
    maps: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)


def inverse_system(sizes, relations, maps) -> InverseSystem:
    """Validate shapes and functoriality before any limit is computed."""
    sizes = list(sizes)
    relations = list(relations)
    maps = dict(maps)
    for rel in relations:
        i, j = rel
        if rel not in maps:
            raise ValidationError(f"missing transition map for relation {rel}")
        t = maps[rel]
        if len(t) != sizes[j]:
            raise ValidationError(f"map for {rel} has {len(t)} entries, stage {j} has {sizes[j]} points")
        if any(not 0 <= v < sizes[i] for v in t):
            raise ValidationError(f"map for {rel} leaves stage {i}")
        if i == j and tuple(t) != tuple(range(sizes[i])):
            raise ValidationError(f"self-transition at stage {i} is not the identity")
    relset = set(relations)
    into: dict[int, list[int]] = {}
    for (i, j) in relations:
        into.setdefault(j, []).append(i)
    for (j, k) in relations:
        if j == k:
            continue
        for i in into.get(j, ()):
            if i != j and (i, k) in relset:
                composed = tuple(maps[(i, j)][maps[(j, k)][p]] for p in range(sizes[k]))
                if composed != tuple(maps[(i, k)]):
                    raise ValidationError(
                        f"transitions do not compose: ({i},{j}) o ({j},{k}) != ({i},{k})"
                    )
    return InverseSystem(sizes, relations, maps)


def inverse_limit(system: InverseSystem) -> list[tuple[int, ...]]:
    """All coherent families, canonically sorted.

    When some stage maps onto every other one, families are enumerated from it
    and verified; otherwise plain backtracking over the stages.
    """
    n = len(system.sizes)
    if n == 0:
        return [()]
    relset = set(system.relations)

    def coherent(choice) -> bool:
        return all(
            system.maps[(i, j)][choice[j]] == choice[i] for (i, j) in system.relations if i != j
        )

    maximal = next(
        (m for m in range(n) if all((i, m) in relset for i in range(n) if i != m)),
        None,
    )
    families = []
    if maximal is not None:
        for p in range(system.sizes[maximal]):
            choice = [system.maps[(i, maximal)][p] if i != maximal else p for i in range(n)]
            if coherent(choice):
                families.append(tuple(choice))
    else:
        choice = [0] * n

        def assign(stage: int):
            if stage == n:
                families.append(tuple(choice))
                return
            for p in range(system.sizes[stage]):
                choice[stage] = p
                ok = all(
                    system.maps[(i, j)][choice[j]] == choice[i]
                    for (i, j) in system.relations
                    if i != j and i <= stage and j <= stage
                )
                if ok:
                    assign(stage + 1)

        assign(0)
    return sorted(set(families))


def colimit_of_submonoid_chain(ambient: FiniteMonoid, chain) -> tuple[FiniteMonoid, dict[int, int]]:
    """The union of an increasing chain of submonoids, as a monoid of its own."""
    chain = [frozenset(s) for s in chain]
    if not chain:
        raise ValidationError("empty chain")
    prev = None
    for k, stage in enumerate(chain):
        if not is_submonoid(ambient, stage):
            raise ValidationError(f"stage {k} is not a submonoid")
        if prev is not None and not prev <= stage:
            raise ValidationError(f"chain is not increasing at stage {k}")
        prev = stage
    return submonoid_as_monoid(ambient, chain[-1])


def _stage_spectra(ambient: FiniteMonoid, chain, cap):
    """Spectra of the chain stages plus restriction maps between them."""
    stages = []
    for stage in chain:
        mon, local = submonoid_as_monoid(ambient, stage)
        spec = primes_bruteforce(mon, cap=cap)
        stages.append((frozenset(stage), mon, local, spec))
    sizes = [len(s[3].points) for s in stages]
    relations = []
    maps = {}
    for i in range(len(stages)):
        for j in range(i, len(stages)):
            set_i, _, local_i, spec_i = stages[i]
            set_j, _, local_j, spec_j = stages[j]
            ambient_j = {v: k for k, v in local_j.items()}
            index_i = {p: k for k, p in enumerate(spec_i.points)}
            t = []
            for p in spec_j.points:
                restricted = frozenset(local_i[ambient_j[x]] for x in p if ambient_j[x] in set_i)
                t.append(index_i[restricted])
            relations.append((i, j))
            maps[(i, j)] = tuple(t)
    return stages, inverse_system(sizes, relations, maps)


def zg_check(ambient: FiniteMonoid, chain, cap: int = 16) -> bool:
    """Spec of the chain union matches the inverse limit of the stage spectra."""
    chain = [frozenset(s) for s in chain]
    colim, local = colimit_of_submonoid_chain(ambient, chain)
    spec_c = primes_bruteforce(colim, cap=cap)
    stages, system = _stage_spectra(ambient, chain, cap)
    families = inverse_limit(system)
    ambient_c = {v: k for k, v in local.items()}
    images = []
    for p in spec_c.points:
        fam = []
        for set_i, _, local_i, spec_i in stages:
            restricted = frozenset(local_i[ambient_c[x]] for x in p if ambient_c[x] in set_i)
            index_i = {q: k for k, q in enumerate(spec_i.points)}
            fam.append(index_i[restricted])
        images.append(tuple(fam))
    return len(set(images)) == len(images) and sorted(images) == families


def subsemilattices(L: JoinSemilattice) -> list[tuple[int, ...]]:
    """All join-closed subsets containing the least element, canonical order.

    Every subsemilattice of a finite semilattice is finitely generated, and a
    subsemilattice generated by S has at most 2^|S| elements, so this is the
    full system of finitely generated subsemilattices.
    """
    n = L.size
    out = []
    for mask in range(1, 1 << n, 2):  # bit 0: the least element is always in
        members = [x for x in range(n) if (mask >> x) & 1]
        if all((mask >> L.join(a, b)) & 1 for a in members for b in members):
            out.append(tuple(members))
    return sorted(out, key=lambda s: (len(s), s))


def profinite_system(L: JoinSemilattice) -> tuple[list[tuple[int, ...]], InverseSystem]:
    """The inverse system of all subsemilattices, dualized via right adjoints.

    For an inclusion of stages the transition is the right adjoint of the
    inclusion map: y goes to the greatest element of the smaller stage below y.
    """
    stages = subsemilattices(L)
    sizes = [len(s) for s in stages]
    relations = []
    maps = {}
    stage_sets = [frozenset(s) for s in stages]
    for i, si in enumerate(stage_sets):
        for j, sj in enumerate(stage_sets):
            if si <= sj:
                t = []
                for y in stages[j]:
                    below = [x for x in stages[i] if L.leq[x][y]]
                    g = reduce(L.join, below)
                    t.append(stages[i].index(g))
                relations.append((i, j))
                maps[(i, j)] = tuple(t)
    return stages, inverse_system(sizes, relations, maps)


def profinite_spec(L: JoinSemilattice):
    """Coherent families of the dualized subsemilattice system, with the
    element of L each family evaluates to at the full stage."""
    stages, system = profinite_system(L)
    families = inverse_limit(system)
    full = stages.index(tuple(range(L.size)))
    return stages, families, [fam[full] for fam in families]


def profinite_check(L: JoinSemilattice, cap: int = 16) -> bool:
    """Families biject with Spec(L) through the downset-complement map."""
    _, families, evaluations = profinite_spec(L)
    if len(families) != L.size or len(set(evaluations)) != len(evaluations):
        return False
    spec = primes_bruteforce(L.monoid, cap=cap)
    image = sorted((alpha(L, a) for a in evaluations), key=canonical_key)
    return image == list(spec.points)
