"""DOT emission for the cyclic subgroup graph."""

from ..models import CyclicPoset


def generate_cyclic_graph_dot(poset: CyclicPoset, name: str = "") -> str:
    """Undirected DOT graph: one vertex per cyclic subgroup, one edge per cover pair.

    Vertices are named C{order}#{rank within order}; vertex and edge order follow
    the canonical poset order, so equal inputs give byte-identical output.
    """
    names = poset.vertex_names()
    lines = ["graph {"]
    if name:
        lines.append(f"    label=\"{_sanitize_label(name)}\";")
    for vertex, sub in zip(names, poset.subgroups):
        lines.append(f"    \"{vertex}\" [order={sub.order}];")
    for low, high in poset.cover_edges:
        lines.append(f"    \"{names[low]}\" -- \"{names[high]}\";")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _sanitize_label(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', "'")
