"""Fusion rules of the Z/2Z permutation gauging of C (x) C.

The gauged category has three families of simple objects, for X, Y simple in C:

* ``Pair(x, y)``  the orbit [X, Y] of X(x)Y + Y(x)X, x < y
* ``Diag(x, e)``  X(x)X with the swap acting by e = +1 or -1
* ``Hat(x, e)``   the twisted-sector object X^ with equivariant structure
                  e * sqrt(theta_X)

Multiplicities are computed in the Z/2-crossed extension
D = (C(x)C) + C^ (objects ``Boxed(x, y)`` and ``Twisted(m)``) and then in the
equivariantization, by reducing every coefficient to one of three closed
formulas (see ``PermutationGauging.coefficient``).
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .errors import InconsistentRing, NonIntegralMultiplicity
from .modular import INT_TOL, FusionRing, ModularData, choose_zeta, dims, verlinde


@dataclass(frozen=True)
class Pair:
    x: int
    y: int

    def __post_init__(self):
        if not self.x < self.y:
            raise ValueError(f"Pair needs x < y, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class Diag:
    x: int
    sign: int = 1


@dataclass(frozen=True)
class Hat:
    x: int
    sign: int = 1


GaugedLabel = Union[Pair, Diag, Hat]


class Boxed(NamedTuple):
    x: int
    y: int


class Twisted(NamedTuple):
    m: int


def _sgn(e):
    return "+" if e > 0 else "-"


def render(label: GaugedLabel, names) -> str:
    if isinstance(label, Pair):
        return f"[{names[label.x]};{names[label.y]}]"
    if isinstance(label, Diag):
        return f"[{names[label.x]};{names[label.x]}]{_sgn(label.sign)}"
    return f"{names[label.x]}^{_sgn(label.sign)}"


def gauged_labels(md: ModularData) -> list[GaugedLabel]:
    n = md.rank
    out = [Pair(x, y) for x in range(n) for y in range(x + 1, n)]
    out += [Diag(x, e) for x in range(n) for e in (1, -1)]
    out += [Hat(x, e) for x in range(n) for e in (1, -1)]
    return out


def gauged_dim(md: ModularData, label: GaugedLabel) -> float:
    d = dims(md)
    if isinstance(label, Pair):
        return 2 * d[label.x] * d[label.y]
    if isinstance(label, Diag):
        return d[label.x] ** 2
    return d[label.x] * np.sqrt(np.sum(d**2))


def sqrt_twists(md: ModularData) -> np.ndarray:
    """Square roots of the twists: theta = e^{i phi}, phi in [0, 2 pi) -> e^{i phi / 2}."""
    phi = np.mod(np.angle(md.theta), 2 * np.pi)
    phi[phi > 2 * np.pi - 1e-9] = 0.0
    return np.exp(0.5j * phi)


def check_sqrt_choice(md: ModularData, sqrt, tol=1e-10):
    sqrt = np.asarray(sqrt, dtype=complex)
    if sqrt.shape != md.theta.shape:
        raise ValueError("one square root per simple object is required")
    if np.max(np.abs(sqrt**2 - md.theta)) > tol:
        raise ValueError("square-root choice does not square to the twists")
    if abs(sqrt[md.unit] - 1) > tol:
        raise ValueError("the unit must take square root 1")
    return sqrt


def _round(value, tol, what):
    if abs(value.imag) > tol or abs(value.real - round(value.real)) > tol:
        raise NonIntegralMultiplicity(f"{what} = {value:.8g} is not an integer within {tol:g}")
    out = int(round(value.real))
    if out < 0:
        raise NonIntegralMultiplicity(f"{what} = {out} is negative")
    return out


class PermutationGauging:
    """Precomputed data for the gauging of ``md (x) md`` by the swap."""

    def __init__(self, md: ModularData, sqrt=None, tol=INT_TOL):
        self.md = md
        self.tol = tol
        self.ring = verlinde(md, tol)
        self.sqrt = check_sqrt_choice(md, sqrt_twists(md) if sqrt is None else sqrt)
        self.labels = gauged_labels(md)
        self.names = tuple(render(lab, md.labels) for lab in self.labels)
        self._pos = {lab: i for i, lab in enumerate(self.labels)}

        n = self.ring.n
        dual = list(md.dual)
        # dim C(x m y, k) and dim C(a b, z w)
        self.triple = np.einsum("xmw,wyk->xmyk", n, n)
        self.hathat = np.einsum("abv,zwv->abzw", n, n)

        s, t2 = md.s, md.theta**2
        # F[y][p, q]-contracted: (S T^2 N^y T^-2 S)[z, x]
        self._fourier = np.einsum("zp,p,pqy,q,qx->yzx", s, t2, n, 1 / t2, s)
        self._fourier = self._fourier[:, dual][:, :, dual]
        self._p = None

    # -- the extension D ---------------------------------------------------

    def forget(self, label: GaugedLabel):
        """Underlying object of D, as a list of simple summands."""
        if isinstance(label, Pair):
            return [Boxed(label.x, label.y), Boxed(label.y, label.x)]
        if isinstance(label, Diag):
            return [Boxed(label.x, label.x)]
        return [Twisted(label.x)]

    def extension_dims(self, a, b, c) -> int:
        """dim Hom_D(c, a (x) b) for simple objects of D."""
        n = self.ring.n
        if isinstance(c, Boxed):
            if isinstance(a, Boxed) and isinstance(b, Boxed):
                return int(n[a.x, b.x, c.x] * n[a.y, b.y, c.y])
            if isinstance(a, Twisted) and isinstance(b, Twisted):
                return int(self.hathat[a.m, b.m, c.x, c.y])
            return 0
        if isinstance(a, Boxed) and isinstance(b, Twisted):
            return int(self.triple[a.x, b.m, a.y, c.m])
        if isinstance(a, Twisted) and isinstance(b, Boxed):
            return int(self.triple[b.x, a.m, b.y, c.m])
        return 0

    # -- the three closed formulas -----------------------------------------

    def case1(self, x, y, a: GaugedLabel, b: GaugedLabel) -> int:
        """dim Hom([X, Y], A (x) B) = dim Hom_D(X(x)Y, G(A) (x) G(B))."""
        if x == y:
            raise ValueError("case 1 needs x != y")
        c = Boxed(x, y)
        return sum(self.extension_dims(g, h, c) for g in self.forget(a) for h in self.forget(b))

    def case2(self, x, ex, y, ey, z, ez) -> int:
        """dim Hom([X,X]ex, [Y,Y]ey (x) [Z,Z]ez) = N (N + ex ey ez) / 2 with N = N^X_YZ."""
        m = int(self.ring.n[y, z, x])
        return m * (m + ex * ey * ez) // 2

    def case3(self, x, ex, y, ey, z, ez) -> int:
        """dim Hom(X^ex, [Y,Y]ey (x) Z^ez) from S, theta and their square roots."""
        ratio = self.sqrt[z] / self.sqrt[x]
        value = 0.5 * (ratio * ex * ey * ez * self._fourier[y, z, x] + self.triple[y, y, z, x])
        return _round(complex(value), self.tol, f"case-3 multiplicity ({x},{ex},{y},{ey},{z},{ez})")

    @property
    def zeta(self):
        return choose_zeta(self.md)

    def t_hat_sqrt(self):
        """Square roots of T^ = T / zeta, consistent with the chosen sqrt(theta)."""
        return self.sqrt / cmath.sqrt(self.zeta)

    def p_matrix(self):
        if self._p is None:
            s = self.md.s
            t_hat = self.md.theta / self.zeta
            half = self.t_hat_sqrt()
            self._p = (half[:, None] * (s @ np.diag(t_hat**2) @ s)) * half[None, :]
        return self._p

    def case3_p(self, x, ex, y, ey, z, ez) -> int:
        """The case-3 multiplicity via the P-matrix expression of the permutation orbifold."""
        s, u = self.md.s, self.md.unit
        p = self.p_matrix()
        xd = self.md.dual[x]
        first = np.sum(s[y] ** 2 * s[z] * s[xd] / s[u] ** 2)
        second = np.sum(s[y] * p[z] * p[xd] / s[u])
        value = 0.5 * (first + ex * ey * ez * second)
        return _round(complex(value), self.tol, f"P-matrix multiplicity ({x},{ex},{y},{ey},{z},{ez})")

    # -- assembly ------------------------------------------------------------

    def dual(self, label: GaugedLabel) -> GaugedLabel:
        d = self.md.dual
        if isinstance(label, Pair):
            a, b = sorted((d[label.x], d[label.y]))
            return Pair(a, b)
        return type(label)(d[label.x], label.sign)

    def coefficient(self, a: GaugedLabel, b: GaugedLabel, c: GaugedLabel, p_matrix=False) -> int:
        """dim Hom(c, a (x) b), reduced to one of the three formulas.

        target Pair                 -> case 1
        target Diag, Diag (x) Diag  -> case 2
        target Diag, Hat (x) Hat    -> Hom(a, c (x) b*), case 3
        target Diag or Hat, a Pair  -> Hom(a, c (x) b*), case 1
        target Diag or Hat, b Pair  -> Hom(b, a* (x) c), case 1
        target Hat, Diag and Hat    -> case 3
        Z/2-grading violations are zero.
        """
        case3 = self.case3_p if p_matrix else self.case3
        deg = lambda lab: int(isinstance(lab, Hat))  # noqa: E731
        if (deg(a) + deg(b)) % 2 != deg(c):
            return 0
        if isinstance(c, Pair):
            return self.case1(c.x, c.y, a, b)
        if isinstance(a, Pair):
            return self.case1(a.x, a.y, c, self.dual(b))
        if isinstance(b, Pair):
            return self.case1(b.x, b.y, self.dual(a), c)
        if isinstance(c, Diag):
            if isinstance(a, Diag):
                return self.case2(c.x, c.sign, a.x, a.sign, b.x, b.sign)
            bd = self.dual(b)
            return case3(a.x, a.sign, c.x, c.sign, bd.x, bd.sign)
        if isinstance(a, Diag):
            return case3(c.x, c.sign, a.x, a.sign, b.x, b.sign)
        return case3(c.x, c.sign, b.x, b.sign, a.x, a.sign)

    def fusion(self, validate=True, p_matrix=False) -> FusionRing:
        labels = self.labels
        m = len(labels)
        n = np.zeros((m, m, m), dtype=np.int64)
        for i, a in enumerate(labels):
            for j, b in enumerate(labels):
                for k, c in enumerate(labels):
                    n[i, j, k] = self.coefficient(a, b, c, p_matrix=p_matrix)
        ring = FusionRing(
            labels=self.names,
            unit=self._pos[Diag(self.md.unit, 1)],
            dual=tuple(self._pos[self.dual(lab)] for lab in labels),
            n=n,
        )
        if validate:
            from .ringtools import validate_ring

            report = validate_ring(ring)
            if not report.ok:
                raise InconsistentRing("; ".join(str(c) for c in report.failures))
        return ring

    def index(self, label: GaugedLabel) -> int:
        return self._pos[label]


def _idx(md, label):
    return md.index(label)


def extension_dims(md: ModularData, a, b, c) -> int:
    return PermutationGauging(md).extension_dims(a, b, c)


def mult_case1(md: ModularData, x, y, a: GaugedLabel, b: GaugedLabel) -> int:
    return PermutationGauging(md).case1(_idx(md, x), _idx(md, y), a, b)


def mult_case2(md: ModularData, x, ex, y, ey, z, ez) -> int:
    return PermutationGauging(md).case2(_idx(md, x), ex, _idx(md, y), ey, _idx(md, z), ez)


def mult_case3(md: ModularData, sqrt, x, ex, y, ey, z, ez) -> int:
    return PermutationGauging(md, sqrt).case3(_idx(md, x), ex, _idx(md, y), ey, _idx(md, z), ez)


def mult_case3_p(md: ModularData, x, ex, y, ey, z, ez, sqrt=None) -> int:
    return PermutationGauging(md, sqrt).case3_p(_idx(md, x), ex, _idx(md, y), ey, _idx(md, z), ez)


def p_matrix(md: ModularData, sqrt=None) -> np.ndarray:
    return PermutationGauging(md, sqrt).p_matrix()


def gauged_fusion(md: ModularData, sqrt=None, tol=INT_TOL, validate=True) -> FusionRing:
    return PermutationGauging(md, sqrt, tol).fusion(validate=validate)
