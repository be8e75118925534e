"""Fusion-ring utilities: validation, Frobenius-Perron dimensions, isomorphism
search, fusion graphs and (de)serialization."""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import NoPositiveEigenvector, SearchBudgetExceeded
from .modular import FusionRing, ValidationReport

DEFAULT_BUDGET = 10**7


def _first(mask):
    idx = np.argwhere(mask)
    return tuple(int(i) for i in idx[0]) if len(idx) else None


def validate_ring(fr: FusionRing) -> ValidationReport:
    """Check every fusion-ring axiom, reporting the first counterexample of each."""
    rep = ValidationReport()
    n, u, m = fr.n, fr.unit, fr.rank
    dual = np.asarray(fr.dual)
    eye = np.eye(m, dtype=n.dtype)

    bad = _first(n < 0)
    rep.add("nonnegative", bad is None, f"N at {bad}" if bad else "")
    ok_perm = sorted(dual.tolist()) == list(range(m)) and np.array_equal(dual[dual], np.arange(m))
    rep.add("dual involution", ok_perm)
    if not ok_perm:
        return rep

    bad = _first(n[:, u, :] != eye)
    rep.add("right unit", bad is None, f"(x, z) = {bad}" if bad else "")
    bad = _first(n[u, :, :] != eye)
    rep.add("left unit", bad is None, f"(y, z) = {bad}" if bad else "")
    dual_mat = np.zeros((m, m), dtype=n.dtype)
    dual_mat[np.arange(m), dual] = 1
    bad = _first(n[:, :, u] != dual_mat)
    rep.add("unit in x (x) y iff y = x*", bad is None, f"(x, y) = {bad}" if bad else "")
    bad = _first(n != n.transpose(1, 0, 2))
    rep.add("commutativity", bad is None, f"(x, y, z) = {bad}" if bad else "")
    bad = _first(n != n[np.ix_(dual, dual, dual)])
    rep.add("duality N^z_xy = N^z*_x*y*", bad is None, f"(x, y, z) = {bad}" if bad else "")
    # (x y) z versus x (y z)
    left = np.einsum("xyw,wzv->xyzv", n, n)
    right = np.einsum("yzw,xwv->xyzv", n, n)
    bad = _first(left != right)
    rep.add("associativity", bad is None, f"(x, y, z, v) = {bad}" if bad else "")
    return rep


def fusion_matrices(fr: FusionRing) -> np.ndarray:
    """``L[x][y, z] = N^z_{xy}``; the left-multiplication matrices."""
    return fr.n.astype(float)


def fp_dims(fr: FusionRing, tol=1e-8) -> np.ndarray:
    """Frobenius-Perron dimensions as the Perron vector of sum_x L_x."""
    total = fusion_matrices(fr).sum(axis=0)
    vals, vecs = np.linalg.eig(total)
    top = int(np.argmax(vals.real))
    v = np.real(vecs[:, top])
    v = v / v[fr.unit]
    if not np.all(v > 0):
        raise NoPositiveEigenvector("Perron vector is not strictly positive")
    lhs = np.einsum("xyz,z->xy", fr.n, v)
    if np.max(np.abs(lhs - np.outer(v, v)) / np.outer(v, v)) > tol:
        raise NoPositiveEigenvector("Perron vector is not multiplicative; invalid ring?")
    return v


def relabel(fr: FusionRing, perm) -> FusionRing:
    """New label ``i`` is old label ``perm[i]``."""
    perm = list(perm)
    inv = np.argsort(perm)
    return FusionRing(
        labels=tuple(fr.labels[p] for p in perm),
        unit=int(inv[fr.unit]),
        dual=tuple(int(inv[fr.dual[p]]) for p in perm),
        n=fr.n[np.ix_(perm, perm, perm)],
    )


def _invariants(fr, dims):
    n = fr.n
    out = []
    for x in range(fr.rank):
        row = tuple(sorted(int(v) for v in n[x].ravel() if v))
        out.append((round(float(dims[x]), 6), fr.dual[x] == x, int(n[x, x, x]), row))
    return out


def ring_isomorphism(a: FusionRing, b: FusionRing, budget=DEFAULT_BUDGET, seed=None):
    """A bijection ``f`` (list, ``f[i]`` = index in b of a's label i) with
    ``N_a[x, y, z] == N_b[f x, f y, f z]``, or None if none exists.

    Backtracking over candidates with equal invariants (FP-dimension,
    self-duality, N^x_xx, multiset of structure constants). ``seed`` shuffles
    the candidate order inside each invariant class.
    """
    if a.rank != b.rank:
        return None
    inv_a = _invariants(a, fp_dims(a))
    inv_b = _invariants(b, fp_dims(b))
    if sorted(inv_a) != sorted(inv_b):
        return None
    rng = random.Random(seed) if seed is not None else None
    cands = {}
    for x in range(a.rank):
        c = [y for y in range(b.rank) if inv_b[y] == inv_a[x]]
        if rng is not None:
            rng.shuffle(c)
        cands[x] = c
    order = [a.unit] + sorted((x for x in range(a.rank) if x != a.unit), key=lambda x: (inv_a[x][:3], len(cands[x]), x))
    na, nb = a.n, b.n
    f = [-1] * a.rank
    used = [False] * b.rank
    nodes = 0

    def consistent(x, y, placed):
        if a.dual[x] != x and f[a.dual[x]] not in (-1, b.dual[y]):
            return False
        if (a.dual[x] == x) != (b.dual[y] == y):
            return False
        for p in placed + [x]:
            fp = y if p == x else f[p]
            for q in placed + [x]:
                fq = y if q == x else f[q]
                # every coefficient touching x among assigned labels
                if na[x, p, q] != nb[y, fp, fq] or na[p, x, q] != nb[fp, y, fq] or na[p, q, x] != nb[fp, fq, y]:
                    return False
        return True

    def search(depth, placed):
        nonlocal nodes
        if depth == len(order):
            return True
        x = order[depth]
        for y in ([b.unit] if x == a.unit else cands[x]):
            if used[y]:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"isomorphism search exceeded {budget} nodes")
            if not consistent(x, y, placed):
                continue
            f[x], used[y] = y, True
            if search(depth + 1, placed + [x]):
                return True
            f[x], used[y] = -1, False
        return False

    if not search(0, []):
        return None
    assert np.array_equal(na, nb[np.ix_(f, f, f)])
    return f


# -- fusion graphs -------------------------------------------------------------


@dataclass(frozen=True)
class FusionGraph:
    """Directed multigraph of fusion with ``label``: edge y -> z of weight N^z_{label, y}."""

    label: str
    vertices: tuple
    edges: tuple  # (source, target, multiplicity)

    def to_dot(self) -> str:
        lines = [f'digraph "fusion with {_esc(self.label)}" {{']
        lines += [f'  "{_esc(v)}";' for v in self.vertices]
        for src, dst, m in self.edges:
            lines.append(f'  "{_esc(self.vertices[src])}" -> "{_esc(self.vertices[dst])}" [label="{m}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def is_connected(self) -> bool:
        k = len(self.vertices)
        if not self.edges:
            return k <= 1
        rows, cols, _ = zip(*self.edges)
        adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(k, k))
        ncomp, _ = connected_components(adj, directed=True, connection="weak")
        return ncomp == 1

    def incident(self):
        """Set of vertices touching at least one edge."""
        return {v for e in self.edges for v in e[:2]}


def _esc(s):
    return str(s).replace("\\", "\\\\").replace('"', '\\"')


def fusion_graph(fr: FusionRing, label) -> FusionGraph:
    x = fr.index(label)
    edges = tuple((y, z, int(m)) for y in range(fr.rank) for z in range(fr.rank) if (m := fr.n[x, y, z]))
    return FusionGraph(label=fr.labels[x], vertices=tuple(fr.labels), edges=edges)


# -- serialization -------------------------------------------------------------


def export_ring(fr: FusionRing, fmt="json", label=None) -> str:
    if fmt == "json":
        quads = [[int(x), int(y), int(z), int(fr.n[x, y, z])] for x, y, z in np.argwhere(fr.n > 0)]
        doc = {"labels": list(fr.labels), "unit": int(fr.unit), "dual": [int(d) for d in fr.dual], "N": quads}
        return json.dumps(doc, ensure_ascii=False) + "\n"
    if fmt == "dot":
        if label is None:
            raise ValueError("DOT export needs a label whose fusion graph to draw")
        return fusion_graph(fr, label).to_dot()
    if fmt == "text":
        lines = []
        for x in range(fr.rank):
            for y in range(fr.rank):
                terms = [
                    (fr.labels[z] if m == 1 else f"{m}·{fr.labels[z]}")
                    for z in range(fr.rank)
                    if (m := int(fr.n[x, y, z]))
                ]
                lines.append(f"{fr.labels[x]} ⊗ {fr.labels[y]} = {' + '.join(terms) or '0'}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def load_ring(document: str, fmt="json") -> FusionRing:
    """Inverse of ``export_ring`` for the json and text formats."""
    if fmt == "json":
        doc = json.loads(document)
        m = len(doc["labels"])
        n = np.zeros((m, m, m), dtype=np.int64)
        for x, y, z, mult in doc["N"]:
            n[x, y, z] = mult
        return FusionRing(labels=tuple(doc["labels"]), unit=int(doc["unit"]), dual=tuple(doc["dual"]), n=n)
    if fmt == "text":
        rows = []
        for line in document.splitlines():
            if not line.strip():
                continue
            lhs, rhs = line.split(" = ", 1)
            x, y = lhs.split(" ⊗ ", 1)
            rows.append((x, y, rhs.split(" + ")))
        labels = list(dict.fromkeys(x for x, _, _ in rows))
        # "0" is the empty sum unless it is also a label
        rows = [(x, y, [] if t == ["0"] and "0" not in labels else t) for x, y, t in rows]
        pos = {lab: i for i, lab in enumerate(labels)}
        m = len(labels)
        n = np.zeros((m, m, m), dtype=np.int64)
        for x, y, terms in rows:
            for t in terms:
                match = re.fullmatch(r"(\d+)·(.*)", t)
                mult, z = (int(match.group(1)), match.group(2)) if match else (1, t)
                n[pos[x], pos[y], pos[z]] = mult
        eye = np.eye(m, dtype=np.int64)
        unit = next(u for u in range(m) if np.array_equal(n[u], eye))
        dual = tuple(int(np.argmax(n[x, :, unit])) for x in range(m))
        return FusionRing(labels=tuple(labels), unit=unit, dual=dual, n=n)
    raise ValueError(f"unknown format {fmt!r}")
