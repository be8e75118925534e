"""Root systems and Weyl groups of the simple Lie algebras A-D and G2.

Every algebra is realized in a small ambient space carrying a rational Gram
matrix, normalized so that long roots have squared length 2:

* ``A_n``: R^{n+1}, standard form, alpha_i = e_i - e_{i+1}
* ``B_n``: R^n, standard form, alpha_n = e_n short
* ``C_n``: R^n, half the standard form, alpha_n = 2 e_n long
* ``D_n``: R^n, standard form, alpha_n = e_{n-1} + e_n
* ``G2``: R^2 in simple-root coordinates, alpha_1 short

Everything else (Cartan matrix, fundamental weights, highest root, comarks,
dual Coxeter number) is derived from the simple roots.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import ClosureOverflow, UnsupportedSeries

SERIES = ("A", "B", "C", "D", "G2")
WEYL_BOUND = 10**6
_KEY_DECIMALS = 9


@dataclass(frozen=True)
class LieSpec:
    """A simple Lie algebra together with a level, e.g. ``LieSpec("G2", 2, 3)``."""

    series: str
    rank: int
    level: int = 1

    def __post_init__(self):
        if self.series not in SERIES:
            raise UnsupportedSeries(f"series {self.series!r} not in {SERIES}")
        min_rank = {"A": 1, "B": 2, "C": 1, "D": 3, "G2": 2}[self.series]
        if self.series == "G2" and self.rank != 2:
            raise ValueError("G2 has rank 2")
        if self.rank < min_rank:
            raise ValueError(f"{self.series} needs rank >= {min_rank}, got {self.rank}")
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")

    @property
    def name(self):
        return "G2" if self.series == "G2" else f"{self.series}{self.rank}"


@dataclass(frozen=True, eq=False)
class RootData:
    spec: LieSpec
    gram: np.ndarray
    simple_roots: np.ndarray
    fundamental_weights: np.ndarray
    rho: np.ndarray
    highest_root: np.ndarray
    comarks: tuple
    dual_coxeter: int
    roots: np.ndarray

    @property
    def rank(self):
        return len(self.simple_roots)

    def inner(self, u, v):
        return np.asarray(u) @ self.gram @ np.asarray(v)

    @property
    def coroots(self):
        norms = np.einsum("ij,jk,ik->i", self.simple_roots, self.gram, self.simple_roots)
        return 2 * self.simple_roots / norms[:, None]

    @property
    def cartan(self):
        """``cartan[i, j] = 2 (a_i, a_j) / (a_j, a_j)``, rounded to integers."""
        c = self.simple_roots @ self.gram @ self.coroots.T
        return np.rint(c).astype(int)

    def dynkin_labels(self, weight):
        """Coordinates of an ambient weight in the fundamental-weight basis."""
        return self.coroots @ self.gram @ np.asarray(weight, dtype=float)

    def to_ambient(self, labels):
        return np.asarray(labels, dtype=float) @ self.fundamental_weights

    def reflection(self, i):
        a = self.simple_roots[i]
        return np.eye(len(a)) - np.outer(a, self.gram @ self.coroots[i])


def _realization(spec):
    n = spec.rank
    if spec.series == "G2":
        return np.array([[2 / 3, -1.0], [-1.0, 2.0]]), np.eye(2)
    dim = n + 1 if spec.series == "A" else n
    e = np.eye(dim)
    roots = [e[i] - e[i + 1] for i in range(n - 1)]
    if spec.series == "A":
        roots.append(e[n - 1] - e[n])
    elif spec.series == "B":
        roots.append(e[n - 1])
    elif spec.series == "C":
        roots.append(2 * e[n - 1])
    else:
        roots.append(e[n - 2] + e[n - 1])
    gram = np.eye(dim) / 2 if spec.series == "C" else np.eye(dim)
    return gram, np.array(roots)


def _key(arr):
    return tuple(np.round(np.asarray(arr), _KEY_DECIMALS).ravel() + 0.0)


def build_root_data(spec: LieSpec) -> RootData:
    if spec.series not in SERIES:
        raise UnsupportedSeries(spec.series)
    gram, simple = _realization(spec)
    norms = np.einsum("ij,jk,ik->i", simple, gram, simple)
    coroots = 2 * simple / norms[:, None]
    cartan = simple @ gram @ coroots.T
    fund = np.linalg.solve(cartan, simple)

    # all roots: orbit of the simple roots under simple reflections
    refl = [np.eye(len(a)) - np.outer(a, gram @ c) for a, c in zip(simple, coroots)]
    seen = {_key(a): a for a in simple}
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for s in refl:
            img = s @ r
            k = _key(img)
            if k not in seen:
                seen[k] = img
                queue.append(img)
    roots = np.array(list(seen.values()))

    # simple-root coefficients (a_i-component) = (root, fund_i) * 2/(a_i,a_i)
    coeffs = roots @ gram @ fund.T * (2 / norms)
    heights = coeffs.sum(axis=1)
    theta = roots[int(np.argmax(heights))]
    theta_vee = 2 * theta / (theta @ gram @ theta)
    comarks = tuple(int(round(c)) for c in theta_vee @ gram @ fund.T)
    return RootData(
        spec=spec,
        gram=gram,
        simple_roots=simple,
        fundamental_weights=fund,
        rho=fund.sum(axis=0),
        highest_root=theta,
        comarks=comarks,
        dual_coxeter=1 + sum(comarks),
        roots=roots,
    )


@dataclass(frozen=True, eq=False)
class WeylElement:
    matrix: np.ndarray
    sign: int

    def __call__(self, v):
        return self.matrix @ np.asarray(v)


def weyl_group(rd: RootData, bound: int = WEYL_BOUND) -> list[WeylElement]:
    """All Weyl group elements, by breadth-first closure over simple reflections."""
    gens = [rd.reflection(i) for i in range(rd.rank)]
    ident = np.eye(len(rd.gram))
    elements = [WeylElement(ident, 1)]
    seen = {_key(ident)}
    queue = deque(elements)
    while queue:
        w = queue.popleft()
        for s in gens:
            m = s @ w.matrix
            k = _key(m)
            if k in seen:
                continue
            if len(elements) >= bound:
                raise ClosureOverflow(f"Weyl closure exceeded {bound} elements")
            seen.add(k)
            el = WeylElement(m, -w.sign)
            elements.append(el)
            queue.append(el)
    return elements


def level_labels(rd: RootData, k: int) -> list[tuple[int, ...]]:
    """Dominant integral weights of level at most ``k``, as Dynkin-label tuples.

    The condition is ``sum_i a_i * comark_i <= k``; the result is sorted
    lexicographically, so the zero weight comes first.
    """
    if k < 1:
        raise ValueError("level must be >= 1")
    ranges = [range(k // c + 1) for c in rd.comarks]
    out = [lab for lab in product(*ranges) if sum(a * c for a, c in zip(lab, rd.comarks)) <= k]
    return sorted(out)


def longest_element(rd: RootData, group=None) -> WeylElement:
    """The element sending rho to -rho."""
    group = weyl_group(rd) if group is None else group
    for w in group:
        if np.allclose(w(rd.rho), -rd.rho, atol=1e-9):
            return w
    raise AssertionError("no longest element found")


def dual_label(rd: RootData, labels, w0=None):
    """Dynkin labels of the dual weight ``-w0(lambda)``."""
    w0 = longest_element(rd) if w0 is None else w0
    img = -w0(rd.to_ambient(labels))
    return tuple(int(round(x)) for x in rd.dynkin_labels(img))
