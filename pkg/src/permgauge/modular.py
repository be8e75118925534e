"""Modular data (S, T) of quantum-group categories and the Verlinde fusion ring.

S is the unitary, normalized S-matrix and ``theta`` the vector of twists.
The Kac-Peterson construction below evaluates

    s[l, m] ~ sum_w det(w) exp(-2 pi i (w(l + rho), m + rho) / (k + h))
    theta[l] = exp(pi i (l, l + 2 rho) / (k + h))

and fixes the overall scalar of S by unitarity and ``s[0, 0] > 0``.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .errors import NegativeMultiplicity, NonIntegralMultiplicity, NumericalDegeneracy
from .liealg import LieSpec, build_root_data, dual_label, level_labels, longest_element, weyl_group

MATRIX_TOL = 1e-8
INT_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class ModularData:
    labels: tuple
    unit: int
    s: np.ndarray
    theta: np.ndarray
    dual: tuple
    adjoint_label: str | None = None

    @property
    def rank(self):
        return len(self.labels)

    def index(self, label):
        if isinstance(label, (int, np.integer)):
            return int(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label!r}; known: {', '.join(self.labels)}") from None

    @property
    def t(self):
        return np.diag(self.theta)

    @property
    def charge_conjugation(self):
        return permutation_matrix(self.dual)

    def relabel(self, perm):
        """Reorder so that new label ``i`` is old label ``perm[i]``."""
        perm = list(perm)
        inv = np.argsort(perm)
        return ModularData(
            labels=tuple(self.labels[p] for p in perm),
            unit=int(inv[self.unit]),
            s=self.s[np.ix_(perm, perm)],
            theta=self.theta[perm],
            dual=tuple(int(inv[self.dual[p]]) for p in perm),
            adjoint_label=self.adjoint_label,
        )


@dataclass(frozen=True, eq=False)
class FusionRing:
    """Structure constants ``n[x, y, z] = N^z_{xy}``, the multiplicity of z in x (x) y."""

    labels: tuple
    unit: int
    dual: tuple
    n: np.ndarray

    @property
    def rank(self):
        return len(self.labels)

    def index(self, label):
        if isinstance(label, (int, np.integer)):
            return int(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label!r}") from None

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.unit == other.unit
            and tuple(self.dual) == tuple(other.dual)
            and self.n.shape == other.n.shape
            and bool(np.array_equal(self.n, other.n))
        )

    __hash__ = None

    def product(self, x, y):
        """``{label: multiplicity}`` for the decomposition of x (x) y."""
        x, y = self.index(x), self.index(y)
        return {self.labels[z]: int(m) for z, m in enumerate(self.n[x, y]) if m}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


@dataclass(frozen=True, eq=False)
class DerivedScalars:
    dims: np.ndarray
    global_dim: float
    gauss_plus: complex
    gauss_minus: complex
    zeta: complex
    t_hat: np.ndarray


def permutation_matrix(perm):
    n = len(perm)
    m = np.zeros((n, n))
    m[np.arange(n), list(perm)] = 1.0
    return m


def snap_permutation(m, tol=INT_TOL):
    """Return the permutation encoded by an almost-permutation matrix."""
    m = np.asarray(m)
    perm = [int(i) for i in np.argmax(np.abs(m), axis=1)]
    if sorted(perm) != list(range(len(m))):
        raise NumericalDegeneracy("matrix is not close to a permutation")
    if np.max(np.abs(m - permutation_matrix(perm))) > tol:
        raise NumericalDegeneracy("matrix is not close to a permutation")
    return tuple(perm)


def weight_name(labels):
    """Display name of a weight from its Dynkin labels: ``(2, 0) -> "2L1"``."""
    terms = []
    for i, a in enumerate(labels, start=1):
        if a:
            terms.append(f"L{i}" if a == 1 else f"{a}L{i}")
    return "+".join(terms) or "0"


def normalize_s(raw, tol=INT_TOL):
    """Scale ``raw`` by one complex number so it is unitary with ``s[0, 0] > 0``."""
    raw = np.asarray(raw, dtype=complex)
    c = np.real(np.trace(raw @ raw.conj().T)) / len(raw)
    if c <= 0 or abs(raw[0, 0]) < tol * np.sqrt(c):
        raise NumericalDegeneracy("S-matrix normalization is ill-conditioned")
    s = raw / np.sqrt(c) * (abs(raw[0, 0]) / raw[0, 0])
    resid = np.max(np.abs(s @ s.conj().T - np.eye(len(s))))
    if resid > tol:
        raise NumericalDegeneracy(f"rows not orthonormal after scaling (residual {resid:.2e})")
    return s


def kac_peterson(spec: LieSpec) -> ModularData:
    rd = build_root_data(spec)
    group = weyl_group(rd)
    k, h = spec.level, rd.dual_coxeter
    weights = level_labels(rd, k)

    shifted = rd.to_ambient(weights) + rd.rho
    mats = np.array([w.matrix for w in group])
    signs = np.array([w.sign for w in group])
    images = np.einsum("wij,nj->wni", mats, shifted)
    inner = np.einsum("wni,ij,mj->wnm", images, rd.gram, shifted)
    raw = np.einsum("w,wnm->nm", signs, np.exp(-2j * np.pi * inner / (k + h)))
    s = normalize_s(raw)

    lam = rd.to_ambient(weights)
    norms = np.einsum("ni,ij,nj->n", lam, rd.gram, lam + 2 * rd.rho)
    theta = np.exp(1j * np.pi * norms / (k + h))

    w0 = longest_element(rd, group)
    pos = {lab: i for i, lab in enumerate(weights)}
    dual = tuple(pos[dual_label(rd, lab, w0)] for lab in weights)
    if dual != snap_permutation(s @ s):
        raise NumericalDegeneracy("S^2 disagrees with -w0 duality")

    adj = tuple(int(round(x)) for x in rd.dynkin_labels(rd.highest_root))
    return ModularData(
        labels=tuple(weight_name(w) for w in weights),
        unit=0,
        s=s,
        theta=theta,
        dual=dual,
        adjoint_label=weight_name(adj) if adj in pos else None,
    )


def trivial() -> ModularData:
    return ModularData(labels=("1",), unit=0, s=np.ones((1, 1), complex), theta=np.ones(1, complex), dual=(0,))


def gauss_sums(md: ModularData):
    d = dims(md)
    return complex(np.sum(d**2 * md.theta)), complex(np.sum(d**2 / md.theta))


def dims(md: ModularData) -> np.ndarray:
    return np.real(md.s[md.unit] / md.s[md.unit, md.unit])


def _relation_residual(md, zeta):
    st = md.s @ np.diag(md.theta / zeta)
    return np.max(np.abs(st @ st @ st - md.s @ md.s))


def zeta_candidates(md: ModularData):
    """The six sixth roots of ``p+/p-``, principal root first."""
    p_plus, p_minus = gauss_sums(md)
    z0 = (p_plus / p_minus) ** (1 / 6)
    return [z0 * cmath.exp(2j * cmath.pi * j / 6) for j in range(6)]


def choose_zeta(md: ModularData, tol=MATRIX_TOL) -> complex:
    """Sixth root of ``p+/p-`` for which ``(s T/zeta)^3 = s^2``.

    The relation only pins down zeta^3, so three roots always qualify; the one
    of smallest absolute argument is returned (the principal root when it
    qualifies, matching ``exp(2 pi i c / 24)`` for small central charge).
    """
    ok = [z for z in zeta_candidates(md) if _relation_residual(md, z) <= tol]
    if not ok:
        raise NumericalDegeneracy("no sixth root of p+/p- satisfies (sT)^3 = s^2")
    return min(ok, key=lambda z: (round(abs(cmath.phase(z)), 9), -cmath.phase(z)))


def derived_scalars(md: ModularData, tol=MATRIX_TOL) -> DerivedScalars:
    d = dims(md)
    p_plus, p_minus = gauss_sums(md)
    zeta = choose_zeta(md, tol)
    return DerivedScalars(
        dims=d,
        global_dim=float(np.sum(d**2)),
        gauss_plus=p_plus,
        gauss_minus=p_minus,
        zeta=zeta,
        t_hat=md.theta / zeta,
    )


def verlinde(md: ModularData, tol=INT_TOL) -> FusionRing:
    s = md.s
    raw = np.einsum("xr,yr,zr->xyz", s, s, s[list(md.dual)] / s[md.unit])
    n = np.rint(raw.real)
    resid = np.max(np.abs(raw - n)) if raw.size else 0.0
    if resid > tol:
        raise NonIntegralMultiplicity(f"Verlinde residual {resid:.2e} exceeds {tol:g}")
    if (n < 0).any():
        raise NegativeMultiplicity("Verlinde formula produced a negative multiplicity")
    return FusionRing(labels=md.labels, unit=md.unit, dual=tuple(md.dual), n=n.astype(np.int64))


def validate_modular(md: ModularData, tol=MATRIX_TOL, int_tol=INT_TOL) -> ValidationReport:
    """Check the modular-group relations; never raises."""
    rep = ValidationReport()
    s, n = md.s, md.rank
    c = permutation_matrix(md.dual)
    rep.add("symmetric", np.allclose(s, s.T, atol=tol, rtol=0))
    unit_res = np.max(np.abs(s @ s.conj().T - np.eye(n)))
    rep.add("unitary", unit_res <= tol, f"residual {unit_res:.2e}")
    rep.add("s^2 = C", np.max(np.abs(s @ s - c)) <= tol)
    rep.add("C^2 = 1", np.array_equal(c @ c, np.eye(n)))
    rep.add("theta_unit = 1", abs(md.theta[md.unit] - 1) <= tol)
    rep.add("T C = C T", np.max(np.abs(md.theta[list(md.dual)] - md.theta)) <= tol)
    rep.add("positive dims", bool(np.all(np.real(s[md.unit]) > tol)) and np.max(np.abs(np.imag(s[md.unit]))) <= tol)
    try:
        zeta = choose_zeta(md, tol)
        rep.add("(s T^)^3 = s^2", True, f"zeta = exp(2 pi i * {cmath.phase(zeta) / (2 * cmath.pi):.6f})")
    except (NumericalDegeneracy, ZeroDivisionError, ValueError) as exc:
        rep.add("(s T^)^3 = s^2", False, str(exc))
    try:
        verlinde(md, int_tol)
        rep.add("Verlinde integrality", True)
    except (NonIntegralMultiplicity, NegativeMultiplicity) as exc:
        rep.add("Verlinde integrality", False, str(exc))
    except (FloatingPointError, ZeroDivisionError) as exc:
        rep.add("Verlinde integrality", False, str(exc))
    return rep
