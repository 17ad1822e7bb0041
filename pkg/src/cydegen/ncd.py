"""Log-canonical threshold and degeneracy index from a normal-crossings model.

A model records the special fiber X_0 = sum a_j E_j, the evaluation-map
divisor B = sum (b_j - 1) E_j, and which components meet (an abstract
simplicial complex). Nothing here checks the data against geometry.
"""
from __future__ import annotations

import cmath
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

__all__ = [
    "Component",
    "NCDModel",
    "InvalidModel",
    "AsymptoticReport",
    "validate",
    "lct",
    "degeneracy_index",
    "theorem_a_report",
    "quadratic_model",
    "semistable_model",
]


class InvalidModel(ValueError):
    def __init__(self, violations: list):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class Component:
    label: str
    a: int  # multiplicity in the special fiber
    b: int  # b - 1 is the multiplicity in B


def _downward_closure(strata: Iterable[Iterable[str]]) -> frozenset:
    closed = set()
    for face in strata:
        face = tuple(sorted(set(face)))
        for k in range(1, len(face) + 1):
            closed.update(frozenset(sub) for sub in combinations(face, k))
    return frozenset(closed)


@dataclass(frozen=True)
class NCDModel:
    """Normal-crossings model of a single singular fiber.

    ``strata`` may list only the maximal intersecting sets; the stored
    complex is closed under nonempty subsets and contains every singleton.
    """

    n: int
    components: tuple
    strata: frozenset = frozenset()

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Component) else Component(*c) for c in self.components)
        object.__setattr__(self, "components", comps)
        singletons = [[c.label] for c in comps]
        object.__setattr__(self, "strata", _downward_closure(list(self.strata) + singletons))

    @property
    def labels(self) -> tuple:
        return tuple(c.label for c in self.components)

    def maximal_strata(self) -> list:
        faces = sorted(self.strata, key=lambda s: (-len(s), sorted(s)))
        out = []
        for face in faces:
            if not any(face < other for other in out):
                out.append(face)
        return out

    @classmethod
    def from_dict(cls, data: Mapping) -> NCDModel:
        if "n" not in data or "components" not in data:
            raise InvalidModel(["document needs fields 'n' and 'components'"])
        comps = []
        for item in data["components"]:
            try:
                comps.append(Component(str(item["label"]), item["a"], item["b"]))
            except (KeyError, TypeError):
                raise InvalidModel([f"component entry {item!r} needs label, a, b"]) from None
        return cls(data["n"], tuple(comps), frozenset(frozenset(map(str, s)) for s in data.get("strata", [])))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "components": [{"label": c.label, "a": c.a, "b": c.b} for c in self.components],
            "strata": [sorted(s) for s in self.maximal_strata()],
        }

    @classmethod
    def from_json(cls, text: str) -> NCDModel:
        return cls.from_dict(json.loads(text))

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def validate(model: NCDModel) -> list:
    """List of violated invariants; empty when the model is usable."""
    problems = []
    if not isinstance(model.n, int) or isinstance(model.n, bool) or model.n < 1:
        problems.append(f"fiber dimension n must be a positive integer, got {model.n!r}")
    if not model.components:
        problems.append("model has no components")
    labels = model.labels
    dup = sorted({l for l in labels if labels.count(l) > 1})
    if dup:
        problems.append(f"duplicate component labels {dup}")
    for c in model.components:
        for field_name in ("a", "b"):
            v = getattr(c, field_name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                problems.append(f"component {c.label!r}: {field_name} must be a positive integer, got {v!r}")
    known = set(labels)
    for face in sorted(model.strata, key=sorted):
        unknown = sorted(face - known)
        if unknown:
            problems.append(f"stratum {sorted(face)} names unknown components {unknown}")
    if isinstance(model.n, int):
        for face in model.maximal_strata():
            if len(face) > model.n + 1:
                problems.append(
                    f"stratum exceeds n+1: {sorted(face)} has {len(face)} components, n = {model.n}"
                )
    for face in model.strata:
        for k in range(1, len(face)):
            for sub in combinations(sorted(face), k):
                if frozenset(sub) not in model.strata:
                    problems.append(f"strata not closed under subsets: {sorted(sub)} missing")
    for label in known:
        if frozenset([label]) not in model.strata:
            problems.append(f"singleton stratum {label!r} missing")
    if model.components and all(c.b != 1 for c in model.components if isinstance(c.b, int)):
        problems.append("B contains the full fiber: no component has b = 1")
    return problems


def _checked(model: NCDModel) -> NCDModel:
    problems = validate(model)
    if problems:
        raise InvalidModel(problems)
    return model


def lct(model: NCDModel) -> Fraction:
    """Log-canonical threshold min_j b_j / a_j."""
    _checked(model)
    return min(Fraction(c.b, c.a) for c in model.components)


def degeneracy_index(model: NCDModel) -> int:
    """Largest stratum made of components attaining the threshold, minus one."""
    c = lct(model)
    minimal = {comp.label for comp in model.components if comp.b * c.denominator == comp.a * c.numerator}
    return max(len(face) for face in model.strata if face <= minimal) - 1


@dataclass(frozen=True)
class AsymptoticReport:
    """Coefficients of -log||eta||^2 = alpha log|s|^2 - beta log|log|s|^2| + O(1).

    The monodromy eigenvalue on the limit is exp(-2 pi i r) with rotation
    number r = alpha; the relevant mixed Hodge weight is n + beta.
    """

    n: int
    lct: Fraction
    alpha: Fraction
    beta: int
    rotation_number: Fraction
    weight: int

    @property
    def monodromy_eigenvalue(self) -> complex:
        return cmath.exp(-2j * cmath.pi * float(self.rotation_number))


def theorem_a_report(model: NCDModel) -> AsymptoticReport:
    c = lct(model)
    beta = degeneracy_index(model)
    alpha = 1 - c
    return AsymptoticReport(model.n, c, alpha, beta, alpha, model.n + beta)


def quadratic_model(n: int, num_sing: int) -> NCDModel:
    """Blow-up model of a fiber with ``num_sing`` ordinary double points.

    Strict transform (a=1, b=1) plus one exceptional divisor (a=2, b=n+1)
    per point, each meeting only the strict transform.
    """
    if n < 1 or num_sing < 1:
        raise ValueError("need n >= 1 and at least one singular point")
    comps = [Component("X0", 1, 1)]
    strata = []
    for k in range(1, num_sing + 1):
        comps.append(Component(f"E{k}", 2, n + 1))
        strata.append(frozenset({"X0", f"E{k}"}))
    return NCDModel(n, tuple(comps), frozenset(strata))


def semistable_model(n: int, labels: Iterable[str], strata: Iterable[Iterable[str]], b=None) -> NCDModel:
    """Reduced special fiber (all a = 1); ``b`` defaults to 1 everywhere (Kulikov)."""
    labels = list(labels)
    b = b or {}
    comps = tuple(Component(l, 1, b.get(l, 1)) for l in labels)
    return NCDModel(n, comps, frozenset(frozenset(s) for s in strata))
