"""Combinatorial maps built from string C-groups.

Group elements are the flags.  Vertices, edges and faces are the right
cosets of <rho1,rho2>, <rho0,rho2> and <rho0,rho1>; two cells are incident
exactly when the cosets intersect, and the i-adjacent flag of x is rho_i * x
(left multiplication).  No geometric data is stored: the Euler
characteristic together with orientability already pins the surface.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import analysis
from .enumeration import RegularRepresentation
from .errors import LabelError, UnsupportedFormatError
from .presentations import SIGMA1, SIGMA2


@dataclass(frozen=True)
class MapStructure:
    """Flags plus the three kinds of cells and their incidences."""

    rep: RegularRepresentation
    vertices: tuple
    edges: tuple
    faces: tuple
    vertex_of: tuple  # flag -> vertex id
    edge_of: tuple
    face_of: tuple
    adjacency: tuple  # three flag involutions (0-, 1-, 2-adjacency)
    vertex_edge: frozenset
    edge_face: frozenset
    vertex_face: frozenset

    @property
    def flag_count(self):
        return self.rep.order


@dataclass(frozen=True)
class MapInvariants:
    euler_characteristic: int
    orientable: bool
    edge_multiplicity: int
    has_multiple_edges: bool
    vertex_count: int
    edge_count: int
    face_count: int


def _orbits(perms, n):
    """Orbits of a set of permutations on range(n), numbered by least flag."""
    cell = [-1] * n
    cells = []
    for start in range(n):
        if cell[start] != -1:
            continue
        idx = len(cells)
        orbit = [start]
        cell[start] = idx
        for x in orbit:
            for perm in perms:
                y = perm[x]
                if cell[y] == -1:
                    cell[y] = idx
                    orbit.append(y)
        cells.append(frozenset(orbit))
    return tuple(cells), tuple(cell)


def build_map(rep: RegularRepresentation) -> MapStructure:
    left = rep.left_perms()
    n = rep.order
    vertices, vertex_of = _orbits((left[1], left[2]), n)
    edges, edge_of = _orbits((left[0], left[2]), n)
    faces, face_of = _orbits((left[0], left[1]), n)
    return MapStructure(
        rep=rep,
        vertices=vertices,
        edges=edges,
        faces=faces,
        vertex_of=vertex_of,
        edge_of=edge_of,
        face_of=face_of,
        adjacency=left,
        vertex_edge=frozenset((vertex_of[x], edge_of[x]) for x in range(n)),
        edge_face=frozenset((edge_of[x], face_of[x]) for x in range(n)),
        vertex_face=frozenset((vertex_of[x], face_of[x]) for x in range(n)),
    )


def _edge_vertex_pairs(m: MapStructure):
    """For each edge, the sorted tuple of its incident vertex ids."""
    out = []
    for e in range(len(m.edges)):
        vs = sorted({v for (v, e2) in m.vertex_edge if e2 == e})
        out.append(tuple(vs))
    return out


def validate_polyhedron(m: MapStructure) -> bool:
    """Axioms (1)-(4) plus uniqueness of adjacent flags.

    Any failure returns False; maps built from genuine string C-groups
    always pass, and sggis violating the intersection condition are expected
    to fail here (typically on flag uniqueness or the vertex figures).
    """
    n = m.rep.order
    # unique i-adjacent flags: fixed-point-free involutions
    for perm in m.adjacency:
        for x in range(n):
            if perm[x] == x or perm[perm[x]] != x:
                return False
    # (1) flags are pairwise distinct mutually incident triples
    triples = {(m.vertex_of[x], m.edge_of[x], m.face_of[x]) for x in range(n)}
    if len(triples) != n:
        return False
    # (2) each edge on exactly two vertices and two faces
    edge_vs = _edge_vertex_pairs(m)
    edge_fs = [sorted({f for (e2, f) in m.edge_face if e2 == e})
               for e in range(len(m.edges))]
    if any(len(vs) != 2 for vs in edge_vs) or any(len(fs) != 2 for fs in edge_fs):
        return False
    # (3) vertex-edge graph connected
    seen = {0}
    queue = [0]
    for v in queue:
        for (v2, e) in m.vertex_edge:
            if v2 != v:
                continue
            for u in edge_vs[e]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    if len(seen) != len(m.vertices):
        return False
    # (4) each vertex figure is the incidence cycle of a connected 2-regular graph
    for v in range(len(m.vertices)):
        edges_at = [e for (v2, e) in m.vertex_edge if v2 == v]
        faces_at = [f for (v2, f) in m.vertex_face if v2 == v]
        inc = {
            (e, f) for e in edges_at for f in faces_at if (e, f) in m.edge_face
        }
        if any(sum(1 for (e2, _) in inc if e2 == e) != 2 for e in edges_at):
            return False
        if any(sum(1 for (_, f2) in inc if f2 == f) != 2 for f in faces_at):
            return False
        comp = {("e", edges_at[0])}
        queue = [("e", edges_at[0])]
        for kind, c in queue:
            for (e, f) in inc:
                nxt = ("f", f) if (kind == "e" and e == c) else \
                      ("e", e) if (kind == "f" and f == c) else None
                if nxt is not None and nxt not in comp:
                    comp.add(nxt)
                    queue.append(nxt)
        if len(comp) != len(edges_at) + len(faces_at):
            return False
    return True


def detect_multiple_edges(m: MapStructure) -> bool:
    """True iff some vertex pair carries at least two edges."""
    return edge_multiplicity(m) >= 2


def edge_multiplicity(m: MapStructure) -> int:
    """Largest number of edges sharing one vertex pair."""
    counts = {}
    for vs in _edge_vertex_pairs(m):
        counts[vs] = counts.get(vs, 0) + 1
    return max(counts.values())


def map_invariants(m: MapStructure, rep: RegularRepresentation | None = None) -> MapInvariants:
    rep = rep if rep is not None else m.rep
    v, e, f = len(m.vertices), len(m.edges), len(m.faces)
    r = edge_multiplicity(m)
    return MapInvariants(
        euler_characteristic=v - e + f,
        orientable=analysis.orientability(rep),
        edge_multiplicity=r,
        has_multiple_edges=r >= 2,
        vertex_count=v,
        edge_count=e,
        face_count=f,
    )


def vertex_labels(m: MapStructure):
    """Labels in Z_p with label(base vertex) = 1 and label(v*sigma1) =
    label(v) + 1; requires sigma1 to act as a p-cycle on the vertices."""
    rep = m.rep
    p = len(m.vertices)
    labels = [None] * p
    flag = 0  # representative flag of the current vertex, starting at the base
    for t in range(p):
        v = m.vertex_of[flag]
        if labels[v] is not None:
            raise LabelError("sigma1 does not act as a p-cycle on the vertices")
        labels[v] = (1 + t) % p
        flag = rep.apply_word(flag, SIGMA1)
    return labels


def vertex_action(m: MapStructure, word):
    """Permutation of vertex ids induced by right multiplication by a word."""
    rep = m.rep
    perm = [0] * len(m.vertices)
    for v, coset in enumerate(m.vertices):
        perm[v] = m.vertex_of[rep.apply_word(min(coset), word)]
    return perm


def check_vertex_action(rep: RegularRepresentation, k: int) -> bool:
    """Compare sigma2's vertex permutation with the closed edge-simple
    formula: i*sigma2 = k(2-i)/2 for even i, 1 + k(1-i)/2 for odd i."""
    m = build_map(rep)
    labels = vertex_labels(m)
    p = len(m.vertices)
    sigma2 = vertex_action(m, SIGMA2)
    for v, lab in enumerate(labels):
        image = labels[sigma2[v]]
        if lab % 2 == 0:
            want = (k * (2 - lab)) // 2 % p
        else:
            want = (1 + (k * (1 - lab)) // 2) % p
        if image != want:
            return False
    return True


def face_walk(m: MapStructure, face: int, start_flag: int | None = None):
    """Cyclic vertex sequence around a face, walking alternating 0- and
    1-adjacencies from a flag of the face (the least flag by default).

    The boundary visits all 2p' flags of the face; consecutive flags share a
    vertex exactly at the 1-adjacency steps, so compressing those pairs
    leaves the p' vertex slots in boundary order.
    """
    flags = m.faces[face]
    start = min(flags) if start_flag is None else start_flag
    if m.face_of[start] != face:
        raise ValueError("start flag does not belong to the face")
    adj0, adj1 = m.adjacency[0], m.adjacency[1]
    cycle = [start]
    x, use_zero = start, True
    while True:
        x = adj0[x] if use_zero else adj1[x]
        use_zero = not use_zero
        if x == start:
            break
        cycle.append(x)
    out = [m.vertex_of[cycle[0]]]
    for fl in cycle[1:]:
        v = m.vertex_of[fl]
        if v != out[-1]:
            out.append(v)
    if len(out) > 1 and out[-1] == out[0]:
        out.pop()
    return tuple(out)


_JSON_KEYS = (
    "family", "type", "parameters", "order", "flags", "orientable", "euler",
    "vertices", "edges", "faces", "edge_multiplicity", "dual_form",
)


def export_map(
    m: MapStructure,
    invariants: MapInvariants,
    fmt: str,
    family: str = "custom",
    parameters: dict | None = None,
    dual_form: bool = False,
) -> bytes:
    """Serialize a map: ``json`` (stable key order) or ``dot`` (flag graph,
    edges labelled by adjacency rank)."""
    if fmt == "json":
        stype = analysis.schlafli_type(m.rep)
        doc = {
            "family": family,
            "type": [stype.p, stype.q],
            "parameters": dict(parameters or {}),
            "order": m.rep.order,
            "flags": m.rep.order,
            "orientable": invariants.orientable,
            "euler": invariants.euler_characteristic,
            "vertices": invariants.vertex_count,
            "edges": invariants.edge_count,
            "faces": invariants.face_count,
            "edge_multiplicity": invariants.edge_multiplicity,
            "dual_form": dual_form,
        }
        assert tuple(doc) == _JSON_KEYS
        return (json.dumps(doc, indent=2) + "\n").encode()
    if fmt == "dot":
        lines = ["graph flags {"]
        for x in range(m.rep.order):
            for rank in range(3):
                y = m.adjacency[rank][x]
                if y >= x:
                    lines.append(f"  {x} -- {y} [rank={rank}];")
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise UnsupportedFormatError(f"unsupported export format {fmt!r}")
