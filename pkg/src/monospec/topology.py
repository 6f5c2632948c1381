"""Finite topologies on spectra, semilattices, and hom sets.

Open families are stored in full (the spaces are tiny) and kept in the
canonical order: by cardinality, then lexicographic membership.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SUBSET_CAP, FiniteMonoid
from .errors import CapExceeded, ValidationError
from .semilattice import JoinSemilattice
from .spectrum import (
    Spectrum,
    canonical_key,
    homs_to_I,
    primes_bruteforce,
    theta,
)


@dataclass(frozen=True)
class FiniteTopology:
    """An open-set family over points 0..size-1, saturated and canonical."""

    size: int
    opens: tuple[frozenset[int], ...]


def _canonical(opens) -> tuple[frozenset[int], ...]:
    return tuple(sorted(set(opens), key=canonical_key))


def topology(size: int, opens) -> FiniteTopology:
    """Saturate a family into a topology: add empty and full, close under
    pairwise union and intersection (enough for finite spaces)."""
    family = set(frozenset(o) for o in opens)
    family.add(frozenset())
    family.add(frozenset(range(size)))
    for o in family:
        for x in o:
            if not 0 <= x < size:
                raise ValidationError(f"open set mentions point {x} outside 0..{size - 1}")
    changed = True
    while changed:
        changed = False
        current = list(family)
        for i, a in enumerate(current):
            for b in current[i + 1:]:
                for c in (a | b, a & b):
                    if c not in family:
                        family.add(c)
                        changed = True
    return FiniteTopology(size, _canonical(family))


def is_open(T: FiniteTopology, s) -> bool:
    return frozenset(s) in set(T.opens)


def basis_D(M: FiniteMonoid, S: Spectrum) -> list[frozenset[int]]:
    """The basic opens, one per element: the points avoiding that element."""
    seen = []
    for a in M.elements():
        d = frozenset(i for i, p in enumerate(S.points) if a not in p)
        if d not in seen:
            seen.append(d)
    return seen


def topology_from_basis(size: int, basis) -> FiniteTopology:
    return topology(size, basis)


def spec_topology(M: FiniteMonoid, S: Spectrum) -> FiniteTopology:
    return topology_from_basis(len(S.points), basis_D(M, S))


def ideal_opens(L: JoinSemilattice, cap: int = SUBSET_CAP) -> FiniteTopology:
    """Opens are the monoid ideals of L, i.e. the upward-closed subsets."""
    n = L.size
    if n > cap:
        raise CapExceeded(f"size {n} exceeds the subset-enumeration cap of {cap}")
    opens = []
    for mask in range(1 << n):
        members = [x for x in range(n) if (mask >> x) & 1]
        if all((mask >> y) & 1 for x in members for y in range(n) if L.leq[x][y]):
            opens.append(frozenset(members))
    return FiniteTopology(n, _canonical(opens))


def product_topology_on_homs(M: FiniteMonoid, homs=None) -> FiniteTopology:
    """Topology induced on Hom(M, 2) by the product of Sierpinski factors.

    Subbasic opens fix one source element to the unit value.
    """
    if homs is None:
        homs = homs_to_I(M)
    subbasis = [
        frozenset(j for j, h in enumerate(homs) if h.images[m] == 0) for m in M.elements()
    ]
    return topology(len(homs), subbasis)


def is_homeomorphism(bijection, T1: FiniteTopology, T2: FiniteTopology) -> bool:
    """Check a point bijection carries opens to opens both ways."""
    bijection = list(bijection)
    if T1.size != T2.size or sorted(bijection) != list(range(T1.size)):
        raise ValidationError("not a bijection between the point sets")
    opens2 = set(T2.opens)
    images = set(frozenset(bijection[x] for x in o) for o in T1.opens)
    return images == opens2


def min_neighborhood(T: FiniteTopology, x: int) -> frozenset[int]:
    """Smallest open containing x (exists in any finite space)."""
    out = frozenset(range(T.size))
    for o in T.opens:
        if x in o and len(o) < len(out):
            out = o
    return out


def union_continuous(S: Spectrum, T: FiniteTopology) -> bool:
    """Continuity of the union map Spec x Spec -> Spec for the product topology.

    A subset of the product is open iff it contains the product of minimal
    neighborhoods around each of its points.
    """
    k = len(S.points)
    mins = [min_neighborhood(T, i) for i in range(k)]
    for o in T.opens:
        pre = {(i, j) for i in range(k) for j in range(k) if S.union_table[i][j] in o}
        for i, j in pre:
            for a in mins[i]:
                for b in mins[j]:
                    if (a, b) not in pre:
                        return False
    return True


def theta_homeo_check(M: FiniteMonoid, cap: int = SUBSET_CAP) -> bool:
    """The hom/prime correspondence is a homeomorphism for the two topologies."""
    S = primes_bruteforce(M, cap=cap)
    homs = homs_to_I(M, cap=cap)
    if len(homs) != len(S.points):
        return False
    point_index = {p: i for i, p in enumerate(S.points)}
    bijection = [point_index[theta(h)] for h in homs]
    if sorted(bijection) != list(range(len(S.points))):
        return False
    T1 = product_topology_on_homs(M, homs)
    T2 = spec_topology(M, S)
    return is_homeomorphism(bijection, T1, T2)


def alpha_opens_check(L: JoinSemilattice, cap: int = SUBSET_CAP) -> bool:
    """Downset-complement map carries the ideal topology onto the spectral one."""
    from .spectrum import alpha

    S = primes_bruteforce(L.monoid, cap=cap)
    point_index = {p: i for i, p in enumerate(S.points)}
    amap = [point_index[alpha(L, a)] for a in L.elements()]
    T_ideal = ideal_opens(L, cap=cap)
    T_spec = spec_topology(L.monoid, S)
    images = set(frozenset(amap[a] for a in o) for o in T_ideal.opens)
    return images == set(T_spec.opens)


def format_opens(T: FiniteTopology, names=None) -> str:
    """One open per line, canonical order."""
    lines = []
    for o in T.opens:
        if names is None:
            lines.append("{" + ", ".join(str(x) for x in sorted(o)) + "}")
        else:
            lines.append("{" + ", ".join(names[x] for x in sorted(o)) + "}")
    return "\n".join(lines) + "\n"
