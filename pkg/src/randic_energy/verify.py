"""Inequality checks, energy classes and the equality case, bundled into reports.

Two tolerances are used throughout: ``SLACK_TOL`` absorbs eigensolver error
when testing an inequality, ``EQUALITY_TOL`` decides whether ``E = 2R`` (or
``E = n``) holds numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .descriptors import (cs_witness, graph_energy, randic_index,
                          vertex_energies_spectral)
from .formats import to_graph6
from .graph import Graph
from .spectral import EigenDecomposition, graph_spectrum
from .structure import (BipartiteSemiRegular, Regular, StructuralClass,
                        classify_structure, is_union_complete_bipartite,
                        maximum_matching)

SLACK_TOL = 1e-8
EQUALITY_TOL = 1e-7


class EnergyClass(str, Enum):
    HYPOENERGETIC = "hypoenergetic"
    ORDERENERGETIC = "orderenergetic"
    NEITHER = "neither"


@dataclass(frozen=True)
class MainInequality:
    energy: float
    twice_randic: float
    gap: float
    holds: bool


@dataclass(frozen=True)
class VertexViolation:
    edge: tuple[int, int]
    product: float
    total: float


@dataclass(frozen=True)
class EqualityCase:
    numeric: bool
    structural: bool

    @property
    def agree(self) -> bool:
        return self.numeric == self.structural


@dataclass(frozen=True)
class RegularBound:
    degree: int
    energy: float
    n: int
    holds: bool
    numeric_equality: bool
    structural_equality: bool  # every component is K_{d,d}

    @property
    def consistent(self) -> bool:
        return self.holds and self.numeric_equality == self.structural_equality


@dataclass(frozen=True)
class SemiRegularBound:
    energy: float
    rhs: float  # n1*sqrt(d1/d2) + n2*sqrt(d2/d1)
    twice_randic: float
    holds: bool
    numeric_equality: bool
    structural_equality: bool  # every component is K_{d2,d1}

    @property
    def consistent(self) -> bool:
        return self.holds and self.numeric_equality == self.structural_equality


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")


def check_main_inequality(g: Graph, tol: float = SLACK_TOL,
                          spectrum: EigenDecomposition | None = None) -> MainInequality:
    _check_tol(tol)
    e = graph_energy(g, spectrum)
    r2 = 2.0 * randic_index(g)
    return MainInequality(e, r2, e - r2, e - r2 >= -tol)


def check_vertex_inequalities(g: Graph, tol: float = SLACK_TOL,
                              spectrum: EigenDecomposition | None = None) -> list[VertexViolation]:
    """Adjacent pairs breaking ``E(u)E(v) >= 1`` or ``E(u)+E(v) >= 2``."""
    _check_tol(tol)
    if not g.edges:
        return []
    e = vertex_energies_spectral(g, spectrum).per_vertex
    out = []
    for u, v in g.edges:
        prod, tot = float(e[u] * e[v]), float(e[u] + e[v])
        if prod < 1.0 - tol or tot < 2.0 - tol:
            out.append(VertexViolation((u, v), prod, tot))
    return out


def check_matching_bound(g: Graph, tol: float = SLACK_TOL,
                         spectrum: EigenDecomposition | None = None) -> tuple[int, bool]:
    _check_tol(tol)
    nu = len(maximum_matching(g))
    return nu, graph_energy(g, spectrum) >= 2 * nu - tol


def _energy_class(energy: float, n: int, tol: float) -> EnergyClass:
    if energy < n - tol:
        return EnergyClass.HYPOENERGETIC
    if abs(energy - n) <= tol:
        return EnergyClass.ORDERENERGETIC
    return EnergyClass.NEITHER


def classify_energy(g: Graph, tol: float = EQUALITY_TOL,
                    spectrum: EigenDecomposition | None = None) -> EnergyClass:
    """Order vs energy; "size" here is the vertex count."""
    _check_tol(tol)
    return _energy_class(graph_energy(g, spectrum), g.n, tol)


def check_equality_case(g: Graph, tol: float = EQUALITY_TOL,
                        spectrum: EigenDecomposition | None = None) -> EqualityCase:
    _check_tol(tol)
    gap = graph_energy(g, spectrum) - 2.0 * randic_index(g)
    return EqualityCase(abs(gap) <= tol, is_union_complete_bipartite(g))


def check_regular_bound(g: Graph, tol: float = SLACK_TOL, equality_tol: float = EQUALITY_TOL,
                        spectrum: EigenDecomposition | None = None,
                        structure: StructuralClass | None = None) -> Optional[RegularBound]:
    """``E >= n`` for r-regular graphs, r > 0; None for any other graph."""
    _check_tol(tol)
    structure = structure or classify_structure(g)
    kind = structure.kind
    if not isinstance(kind, Regular) or kind.degree == 0:
        return None
    e = graph_energy(g, spectrum)
    r = kind.degree
    return RegularBound(
        degree=r, energy=e, n=g.n,
        holds=e >= g.n - tol,
        numeric_equality=abs(e - g.n) <= equality_tol,
        structural_equality=all(c == (r, r) for c in structure.certificates),
    )


def semiregular_rhs(kind: BipartiteSemiRegular) -> float:
    return kind.n1 * math.sqrt(kind.d1 / kind.d2) + kind.n2 * math.sqrt(kind.d2 / kind.d1)


def check_semiregular_bound(g: Graph, tol: float = SLACK_TOL, equality_tol: float = EQUALITY_TOL,
                            spectrum: EigenDecomposition | None = None,
                            structure: StructuralClass | None = None) -> Optional[SemiRegularBound]:
    """Energy bound for bipartite semi-regular graphs; None for any other graph."""
    _check_tol(tol)
    structure = structure or classify_structure(g)
    kind = structure.kind
    if not isinstance(kind, BipartiteSemiRegular):
        return None
    e = graph_energy(g, spectrum)
    rhs = semiregular_rhs(kind)
    return SemiRegularBound(
        energy=e, rhs=rhs, twice_randic=2.0 * randic_index(g),
        holds=e >= rhs - tol,
        numeric_equality=abs(e - rhs) <= equality_tol,
        structural_equality=all(c == (kind.d2, kind.d1) for c in structure.certificates),
    )


@dataclass(frozen=True)
class DescriptorReport:
    energy: float
    randic: float
    twice_randic: float
    gap: float
    matching_size: int
    matching_bound_ok: bool
    vertex_product_min: Optional[float]  # None for edgeless graphs
    vertex_sum_min: Optional[float]
    numeric_equality: bool
    structural_equality: bool
    energy_class: EnergyClass
    structure: StructuralClass

    def to_json(self) -> str:
        from .serialize import dumps_flat
        return dumps_flat(self.as_flat_dict())

    def as_flat_dict(self) -> dict:
        return {
            "energy": self.energy,
            "randic": self.randic,
            "twice_randic": self.twice_randic,
            "gap": self.gap,
            "matching_size": self.matching_size,
            "matching_bound_ok": self.matching_bound_ok,
            "vertex_product_min": self.vertex_product_min,
            "vertex_sum_min": self.vertex_sum_min,
            "numeric_equality": self.numeric_equality,
            "structural_equality": self.structural_equality,
            "energy_class": self.energy_class.value,
            "structure": self.structure.label(),
        }


def full_report(g: Graph, tol: float = SLACK_TOL, equality_tol: float = EQUALITY_TOL,
                spectrum: EigenDecomposition | None = None) -> DescriptorReport:
    _check_tol(tol)
    _check_tol(equality_tol)
    d = graph_spectrum(g) if spectrum is None else spectrum
    energy = graph_energy(g, d)
    randic = randic_index(g)
    gap = energy - 2.0 * randic
    nu = len(maximum_matching(g))
    e = vertex_energies_spectral(g, d).per_vertex
    if g.edges:
        prod_min = min(float(e[u] * e[v]) for u, v in g.edges)
        sum_min = min(float(e[u] + e[v]) for u, v in g.edges)
    else:
        prod_min = sum_min = None
    return DescriptorReport(
        energy=energy,
        randic=randic,
        twice_randic=2.0 * randic,
        gap=gap,
        matching_size=nu,
        matching_bound_ok=energy >= 2 * nu - tol,
        vertex_product_min=prod_min,
        vertex_sum_min=sum_min,
        numeric_equality=abs(gap) <= equality_tol,
        structural_equality=is_union_complete_bipartite(g),
        energy_class=_energy_class(energy, g.n, equality_tol),
        structure=classify_structure(g),
    )


def find_violations(g: Graph, tol: float = SLACK_TOL, equality_tol: float = EQUALITY_TOL,
                    report: DescriptorReport | None = None,
                    spectrum: EigenDecomposition | None = None) -> list[str]:
    """Human-readable descriptions of every failed check; empty when all hold."""
    d = graph_spectrum(g) if spectrum is None else spectrum
    if report is None:
        report = full_report(g, tol, equality_tol, spectrum=d)
    out = []
    if report.gap < -tol:
        out.append(f"main inequality: E - 2R = {report.gap:.17g}")
    if report.vertex_product_min is not None and report.vertex_product_min < 1.0 - tol:
        out.append(f"vertex product: min E(u)E(v) = {report.vertex_product_min:.17g}")
    if report.vertex_sum_min is not None and report.vertex_sum_min < 2.0 - tol:
        out.append(f"vertex sum: min E(u)+E(v) = {report.vertex_sum_min:.17g}")
    if not report.matching_bound_ok:
        out.append(f"matching bound: E = {report.energy:.17g} < 2*{report.matching_size}")
    if report.numeric_equality != report.structural_equality:
        out.append(f"equality case: numeric={report.numeric_equality} "
                   f"structural={report.structural_equality} gap={report.gap:.17g}")
    reg = check_regular_bound(g, tol, equality_tol, spectrum=d, structure=report.structure)
    if reg is not None and not reg.consistent:
        out.append(f"regular bound: E = {reg.energy:.17g}, n = {reg.n}, "
                   f"numeric={reg.numeric_equality} structural={reg.structural_equality}")
    semi = check_semiregular_bound(g, tol, equality_tol, spectrum=d, structure=report.structure)
    if semi is not None:
        if not semi.consistent:
            out.append(f"semiregular bound: E = {semi.energy:.17g}, rhs = {semi.rhs:.17g}, "
                       f"numeric={semi.numeric_equality} structural={semi.structural_equality}")
        if abs(semi.rhs - semi.twice_randic) > 1e-10:
            out.append(f"semiregular rhs {semi.rhs:.17g} != 2R {semi.twice_randic:.17g}")
    return [f"{to_graph6(g)}: {msg}" for msg in out]


def adjacent_witnesses(g: Graph, spectrum: EigenDecomposition | None = None):
    """Yield ``(edge, WitnessPair)`` for every edge."""
    d = graph_spectrum(g) if spectrum is None else spectrum
    for u, v in g.edges:
        yield (u, v), cs_witness(g, u, v, spectrum=d)
