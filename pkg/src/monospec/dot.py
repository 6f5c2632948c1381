"""DOT emission for Hasse diagrams, with deterministic node order."""

from __future__ import annotations

from .semilattice import JoinSemilattice, cover_pairs


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(L: JoinSemilattice, graph_name: str = "hasse") -> str:
    """Hasse diagram of the order, edges pointing from lower to higher."""
    lines = [f"digraph {graph_name} {{", "  rankdir=BT;"]
    for i in range(L.size):
        lines.append(f"  n{i} [label={_quote(L.names[i])}];")
    for a, b in sorted(cover_pairs(L)):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
