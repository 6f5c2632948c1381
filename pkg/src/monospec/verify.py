"""Executable property suites over the seeded corpus.

Each check returns (name, failures, total); `run_all` drives every suite and
is shared between the CLI `verify` command and the acceptance tests.
"""

from __future__ import annotations

from .congruence import congruence_closure, grillet_relation, quotient, sl_reflection
from .core import (
    FiniteMonoid,
    MonoidMap,
    is_hom,
    is_idempotent,
    monoid_homs,
    submonoid_closure,
    units,
)
from .corpus import (
    corpus_join_morphisms,
    corpus_monoids,
    corpus_power_pairs,
    corpus_presentations,
    corpus_semilattices,
    corpus_submonoid_chains,
)
from .errors import HypothesisError
from .limits import profinite_check, zg_check
from .semilattice import (
    MonotoneMap,
    check_adjunction,
    compose_monotone,
    is_join_morphism,
    is_meet_morphism,
    left_adjoint,
    meet,
    right_adjoint,
    top,
)
from .spectrum import (
    alpha,
    beta,
    canonical_key,
    ev_check,
    homs_to_I,
    primes_bruteforce,
    sierpinski,
    spec_cubed_check,
    spec_monoid,
    spec_presentation,
    spec_spec_check,
    theta,
    theta_inverse,
)
from .topology import (
    alpha_opens_check,
    basis_D,
    spec_topology,
    theta_homeo_check,
    union_continuous,
)


def three_route_points(M: FiniteMonoid):
    """The three independent computations of the prime set, canonically sorted."""
    r1 = list(primes_bruteforce(M).points)
    r2 = sorted((theta(f) for f in homs_to_I(M)), key=canonical_key)
    r3 = list(spec_monoid(M).points)
    return r1, r2, r3


def routes_agree(M: FiniteMonoid) -> bool:
    r1, r2, r3 = three_route_points(M)
    return r1 == r2 == r3


def check_three_routes(seed: int, table_count=150, pres_count=60):
    fails = 0
    monoids = corpus_monoids(seed, count=table_count, max_size=10)
    for M in monoids:
        if not routes_agree(M):
            fails += 1
    presentations = corpus_presentations(seed, count=pres_count, max_gens=6)
    for P in presentations:
        L, _, S, supports = spec_presentation(P)
        if not routes_agree(L.monoid):
            fails += 1
            continue
        if len(set(supports)) != len(S.points):
            fails += 1
    return "three-route agreement", fails, len(monoids) + len(presentations)


def check_theta(seed: int):
    """Hom/prime correspondence: monoid isomorphism plus homeomorphism."""
    fails = 0
    monoids = [M for M in corpus_monoids(seed, count=120, max_size=10) if M.size <= 8]
    for M in monoids:
        ok = theta_homeo_check(M)
        homs = homs_to_I(M)
        spec = primes_bruteforce(M)
        index = {p: i for i, p in enumerate(spec.points)}
        # pointwise: product of homs maps to union of their zero fibers
        for f in homs:
            if theta_inverse(M, theta(f)) != f:
                ok = False
            for g in homs:
                prod = MonoidMap(M, sierpinski(), tuple(a | b for a, b in zip(f.images, g.images)))
                if theta(prod) != theta(f) | theta(g):
                    ok = False
        # D(a) * D(b) = D(ab), and continuity of the union map
        T = spec_topology(M, spec)
        D = {a: frozenset(i for i, p in enumerate(spec.points) if a not in p)
             for a in M.elements()}
        for a in M.elements():
            for b in M.elements():
                if D[a] & D[b] != D[M.table[a][b]]:
                    ok = False
        if not union_continuous(spec, T):
            ok = False
        if frozenset() not in index or index[frozenset()] != 0:
            ok = False
        if frozenset(M.elements()) - units(M) not in index:
            ok = False
        if not ok:
            fails += 1
    return "hom/prime correspondence incl. topology", fails, len(monoids)


def check_alpha_suite(seed: int):
    fails = 0
    lattices = corpus_semilattices(seed, count=40, max_size=10)
    for L in lattices:
        ok = True
        spec = primes_bruteforce(L.monoid)
        points = [alpha(L, a) for a in L.elements()]
        if len(set(points)) != L.size:
            ok = False
        if sorted(points, key=canonical_key) != list(spec.points):
            ok = False
        for a in L.elements():
            if beta(L, alpha(L, a)) != a:
                ok = False
            for b in L.elements():
                if alpha(L, meet(L, a, b)) != alpha(L, a) | alpha(L, b):
                    ok = False
                down_sub = frozenset(L.elements()) - points[a] <= frozenset(L.elements()) - points[b]
                if L.leq[a][b] != down_sub or L.leq[a][b] != (points[a] >= points[b]):
                    ok = False
        if not alpha_opens_check(L):
            ok = False
        if not ok:
            fails += 1
    return "downset-complement bijection and topology transport", fails, len(lattices)


def check_naturality(seed: int, count=120):
    maps = [f for f in corpus_join_morphisms(seed, count=count) if is_join_morphism(f)]
    from .spectrum import naturality_square

    fails = sum(0 if naturality_square(f) else 1 for f in maps)
    return "naturality of the spectrum bijection", fails, len(maps)


def check_grillet(seed: int):
    monoids = [M for M in corpus_monoids(seed, count=150, max_size=10) if M.size <= 7]
    fails = 0
    for M in monoids:
        a = grillet_relation(M)
        b = congruence_closure(M, [(x, M.table[x][x]) for x in M.elements()])
        if a.classes != b.classes:
            fails += 1
    return "power-divisibility congruence vs idempotent closure", fails, len(monoids)


def check_power_submonoid(seed: int, count=60):
    from .spectrum import power_submonoid_check

    pairs = corpus_power_pairs(seed, count=count)
    fails = 0
    for A, B in pairs:
        try:
            if not power_submonoid_check(A, B):
                fails += 1
        except HypothesisError:
            fails += 1
    return "power-submonoid spectrum bijection", fails, len(pairs)


def check_duals(seed: int):
    lattices = [L for L in corpus_semilattices(seed, count=40, max_size=10) if L.size <= 8]
    fails = 0
    for L in lattices:
        ok = ev_check(L.monoid) and spec_spec_check(L) and spec_cubed_check(L.monoid)
        if not ok:
            fails += 1
    return "dualizing object and double spectrum", fails, len(lattices)


def check_limits(seed: int, chain_count=60):
    chains = corpus_submonoid_chains(seed, count=chain_count)
    fails = sum(0 if zg_check(M, stages) else 1 for M, stages in chains)
    lattices = [L for L in corpus_semilattices(seed, count=40, max_size=8) if L.size <= 8]
    fails += sum(0 if profinite_check(L) else 1 for L in lattices)
    return "colimit and profinite limits", fails, len(chains) + len(lattices)


def check_adjoints(seed: int, count=120):
    maps = [f for f in corpus_join_morphisms(seed, count=count) if is_join_morphism(f)]
    fails = 0
    for f in maps:
        ok = True
        g = right_adjoint(f)
        if not check_adjunction(f, g):
            ok = False
        if not is_meet_morphism(g):
            ok = False
        if g.images[top(f.target)] != top(f.source):
            ok = False
        if left_adjoint(g).images != f.images:
            ok = False
        if not ok:
            fails += 1
    # composition duality on composable pairs
    pairs = 0
    for f in maps:
        for h in maps:
            if f.target == h.source:
                pairs += 1
                lhs = right_adjoint(compose_monotone(f, h))
                rhs = compose_monotone(right_adjoint(h), right_adjoint(f))
                if lhs.images != rhs.images:
                    fails += 1
                if pairs >= 200:
                    break
        if pairs >= 200:
            break
    return "adjoint existence, round trip, duality", fails, len(maps) + pairs


def check_module_invariants(seed: int):
    """Smaller cross-module invariants: units, hom composition, reflection."""
    monoids = corpus_monoids(seed, count=60, max_size=8)
    fails = 0
    for M in monoids:
        ok = submonoid_closure(M, units(M)) == units(M)
        L, q = sl_reflection(M)
        if not is_idempotent(L.monoid) or not is_hom(q):
            ok = False
        # universal property at desk scale against small idempotent targets
        for X in (sierpinski(), chain3_monoid()):
            up = {h.images for h in monoid_homs(L.monoid, X)}
            down = {tuple(h.images[q.images[x]] for x in M.elements()) for h in monoid_homs(L.monoid, X)}
            direct = {h.images for h in monoid_homs(M, X)}
            if len(up) != len(down) or down != direct:
                ok = False
        if not ok:
            fails += 1
    return "core and reflection invariants", fails, len(monoids)


def chain3_monoid() -> FiniteMonoid:
    from .corpus import chain_semilattice

    return chain_semilattice(3).monoid


def run_all(seed: int = 0, quick: bool = False):
    """Run every suite; returns a list of (name, failures, total)."""
    scale = 1 if not quick else 4
    results = [
        check_three_routes(seed, table_count=150 // scale, pres_count=60 // scale),
        check_theta(seed),
        check_alpha_suite(seed),
        check_naturality(seed, count=120 // scale),
        check_grillet(seed),
        check_power_submonoid(seed, count=60 // scale),
        check_duals(seed),
        check_limits(seed, chain_count=60 // scale),
        check_adjoints(seed, count=120 // scale),
        check_module_invariants(seed),
    ]
    return results


def mutation_detected(seed: int = 0) -> bool:
    """Flip one table entry of a corpus monoid; some check must now fail.

    The corpus law-check property (every table satisfies the monoid laws) and
    the route-agreement property are both given a chance to notice.
    """
    from .core import validate_monoid
    from .errors import ValidationError

    candidates = [M for M in corpus_monoids(seed, count=30, max_size=8) if M.size >= 3]
    M = candidates[seed % len(candidates)]
    table = [list(row) for row in M.table]
    i, j = 1, M.size - 1
    table[i][j] = (table[i][j] + 1) % M.size
    broken = FiniteMonoid(tuple(tuple(r) for r in table), M.names)
    try:
        validate_monoid(table, identity=0, names=M.names)
    except ValidationError:
        return True
    try:
        if not routes_agree(broken):
            return True
        a = grillet_relation(broken)
        b = congruence_closure(broken, [(x, broken.table[x][x]) for x in broken.elements()])
        if a.classes != b.classes:
            return True
        L, q = sl_reflection(broken)
        return not is_idempotent(L.monoid)
    except Exception:
        return True
