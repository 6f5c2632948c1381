"""Commutative monoid presentations and their idempotent reflections.

A presentation is a list of generator names plus relations between commutative
words (exponent vectors).  The presented monoid itself is never materialized;
only its reflection, the quotient of the free semilattice on the generators by
the supports of the relations, which is always finite.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .congruence import congruence_closure, quotient
from .core import SUBSET_CAP
from .errors import CapExceeded, ParseError
from .semilattice import JoinSemilattice, from_monoid

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_FACTOR = re.compile(r"([A-Za-z][A-Za-z0-9_]*)\s*(\^\s*(-?\d+))?")


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


def _parse_word(text: str, gens: dict[str, int], lineno: int, offset: int) -> tuple[int, ...]:
    exps = [0] * len(gens)
    s = text.strip()
    if s == "1":
        return tuple(exps)
    pos = 0
    found = False
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _FACTOR.match(s, pos)
        if not m:
            raise ParseError(f"cannot read word near {s[pos:]!r}", line=lineno, column=offset + pos + 1)
        name = m.group(1)
        if name not in gens:
            raise ParseError(f"unknown generator {name!r}", line=lineno, column=offset + m.start(1) + 1)
        exp = 1
        if m.group(3) is not None:
            exp = int(m.group(3))
            if exp < 0:
                raise ParseError(f"negative exponent {exp}", line=lineno, column=offset + m.start(3) + 1)
        exps[gens[name]] += exp
        found = True
        pos = m.end()
    if not found:
        raise ParseError("empty word (use `1` for the identity)", line=lineno, column=offset + 1)
    return tuple(exps)


def parse_presentation(text: str) -> Presentation:
    """Parse `gens: ...` and an optional `rels: ...` line.

    Relations are separated by `;`, each `word = word`; a factor is a name
    with an optional `^k`; `1` denotes the empty word; `#` starts a comment
    line.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, raw))
    if not lines:
        raise ParseError("empty input")
    lineno, raw = lines[0]
    stripped = raw.strip()
    if not stripped.startswith("gens:"):
        raise ParseError("expected `gens:` line", line=lineno)
    gen_names = stripped[len("gens:"):].split()
    if not gen_names:
        raise ParseError("no generators listed", line=lineno)
    gens: dict[str, int] = {}
    for nm in gen_names:
        if not _NAME.fullmatch(nm):
            raise ParseError(f"bad generator name {nm!r}", line=lineno)
        if nm in gens:
            raise ParseError(f"duplicate generator {nm!r}", line=lineno)
        gens[nm] = len(gens)

    relations = []
    if len(lines) > 1:
        lineno, raw = lines[1]
        stripped = raw.strip()
        if not stripped.startswith("rels:"):
            raise ParseError("expected `rels:` line", line=lineno)
        offset = raw.index("rels:") + len("rels:")
        body = raw[offset:]
        for chunk in body.split(";"):
            sides = chunk.split("=")
            if len(sides) != 2:
                raise ParseError(
                    f"relation needs exactly one `=`: {chunk.strip()!r}", line=lineno,
                    column=offset + 1,
                )
            lhs = _parse_word(sides[0], gens, lineno, offset)
            rhs = _parse_word(sides[1], gens, lineno, offset + len(sides[0]) + 1)
            relations.append((lhs, rhs))
            offset += len(chunk) + 1
    if len(lines) > 2:
        raise ParseError("unexpected extra line", line=lines[2][0])
    return Presentation(tuple(gen_names), tuple(relations))


def subsets_in_order(k: int) -> list[tuple[int, ...]]:
    """All subsets of range(k), by cardinality then lexicographic."""
    out = []
    for size in range(k + 1):
        out.extend(combinations(range(k), size))
    return out


def free_semilattice(k: int, names=None, cap: int = SUBSET_CAP) -> JoinSemilattice:
    """Subsets of k generators under union; identity is the empty set."""
    if k < 0:
        raise CapExceeded("generator count must be nonnegative")
    if k > cap:
        raise CapExceeded(f"{k} generators exceeds the cap of {cap}")
    if names is None:
        names = tuple(f"g{i + 1}" for i in range(k))
    subsets = subsets_in_order(k)
    index = {s: i for i, s in enumerate(subsets)}
    table = tuple(
        tuple(index[tuple(sorted(set(a) | set(b)))] for b in subsets) for a in subsets
    )
    elem_names = tuple("{" + ",".join(names[i] for i in s) + "}" for s in subsets)
    from .core import FiniteMonoid

    return from_monoid(FiniteMonoid(table, elem_names))


def support(word) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(word) if e > 0)


def sl_of_presentation(P: Presentation, cap: int = SUBSET_CAP) -> tuple[JoinSemilattice, tuple[int, ...]]:
    """Reflection of the presented monoid, plus the images of the generators.

    Quotient of the free semilattice on the generators by the closure of
    {(supp(u), supp(v))} over the relations; each relation x^a with a >= 1
    contributes x itself.
    """
    k = len(P.generators)
    F = free_semilattice(k, names=P.generators, cap=cap)
    subsets = subsets_in_order(k)
    index = {s: i for i, s in enumerate(subsets)}
    pairs = [(index[support(u)], index[support(v)]) for u, v in P.relations]
    C = congruence_closure(F.monoid, pairs)
    Q, q = quotient(F.monoid, C)
    gen_images = tuple(q.images[index[(i,)]] for i in range(k))
    return from_monoid(Q), gen_images
