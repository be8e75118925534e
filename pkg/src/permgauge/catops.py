"""Deligne products, reversed braiding and tensor subcategories of modular data."""
from __future__ import annotations

import numpy as np

from .errors import NotModular, NumericalDegeneracy
from .modular import ModularData, normalize_s, validate_modular, verlinde


def deligne_product(a: ModularData, b: ModularData) -> ModularData:
    """Labels are the pairs ``"x,y"`` with the second factor varying fastest."""
    nb = b.rank
    return ModularData(
        labels=tuple(f"{x},{y}" for x in a.labels for y in b.labels),
        unit=a.unit * nb + b.unit,
        s=np.kron(a.s, b.s),
        theta=np.outer(a.theta, b.theta).ravel(),
        dual=tuple(da * nb + db for da in a.dual for db in b.dual),
    )


def reverse(md: ModularData) -> ModularData:
    return ModularData(
        labels=md.labels,
        unit=md.unit,
        s=md.s.conj(),
        theta=md.theta.conj(),
        dual=md.dual,
        adjoint_label=md.adjoint_label,
    )


def fusion_closure(md: ModularData, generators) -> list[int]:
    """Indices of the smallest fusion- and duality-closed set containing the generators."""
    ring = verlinde(md)
    members = {md.unit} | {md.index(g) for g in generators}
    members |= {md.dual[x] for x in members}
    while True:
        new = set(members)
        for x in members:
            for y in members:
                new.update(int(z) for z in np.nonzero(ring.n[x, y])[0])
        new |= {md.dual[x] for x in new}
        if new == members:
            return sorted(members)
        members = new


def tensor_subcategory(md: ModularData, generators) -> ModularData:
    """The tensor subcategory generated by ``generators``, if it is modular."""
    if not generators:
        raise ValueError("at least one generator is required")
    idx = fusion_closure(md, generators)
    pos = {old: new for new, old in enumerate(idx)}
    try:
        s = normalize_s(md.s[np.ix_(idx, idx)])
    except NumericalDegeneracy as exc:
        raise NotModular(f"restricted S is not proportional to a unitary: {exc}") from None
    sub = ModularData(
        labels=tuple(md.labels[i] for i in idx),
        unit=pos[md.unit],
        s=s,
        theta=md.theta[idx],
        dual=tuple(pos[md.dual[i]] for i in idx),
        adjoint_label=md.adjoint_label if md.adjoint_label in {md.labels[i] for i in idx} else None,
    )
    report = validate_modular(sub)
    if not report.ok:
        raise NotModular("subcategory fails: " + "; ".join(str(c) for c in report.failures))
    return sub


def adjoint_subcategory(md: ModularData) -> ModularData:
    """Subcategory generated by the highest-root object, e.g. ``2L1`` for sl2."""
    if md.adjoint_label is None:
        raise ValueError("no default adjoint generator for this category; pass one explicitly")
    return tensor_subcategory(md, [md.adjoint_label])
