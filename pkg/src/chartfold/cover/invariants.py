"""Topological invariants of the cover described by a chart movie."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..chart.monodromy import extract_hurwitz
from ..chart.movie import ChartMovie
from ..chart.orientation import Obstruction, orient, semi_orient
from ..hurwitz.systems import HurwitzSystem


@dataclass(frozen=True, slots=True)
class CoverInvariants:
    """Closed-surface invariants of the cover extended trivially over the outer disk.

    ``boundary_circles`` refers to the cover of the disk itself, whose boundary
    monodromy is trivial.
    """

    degree: int
    branch_points: int
    components: int
    component_orbits: tuple[frozenset[int], ...]
    euler_closed: int
    euler_per_component: tuple[int, ...]
    genus_per_component: tuple[int, ...]
    boundary_circles: int

    def as_dict(self) -> dict[str, object]:
        return {
            "degree": self.degree,
            "branch_points": self.branch_points,
            "components": self.components,
            "component_orbits": [sorted(orbit) for orbit in self.component_orbits],
            "euler_closed": self.euler_closed,
            "euler_per_component": list(self.euler_per_component),
            "genus_per_component": list(self.genus_per_component),
            "boundary_circles": self.boundary_circles,
        }


def sheet_orbits(system: HurwitzSystem) -> tuple[frozenset[int], ...]:
    """Orbits of ``{1..n}`` under the group generated by the entries."""

    graph = nx.Graph()
    graph.add_nodes_from(range(1, system.degree + 1))
    graph.add_edges_from((entry.a, entry.b) for entry in system.entries)
    orbits = (frozenset(component) for component in nx.connected_components(graph))
    return tuple(sorted(orbits, key=min))


def system_invariants(system: HurwitzSystem) -> CoverInvariants:
    """Invariants of the cover with monodromy ``system``."""

    orbits = sheet_orbits(system)
    euler = []
    for orbit in orbits:
        inside = sum(1 for entry in system.entries if entry.a in orbit)
        euler.append(2 * len(orbit) - inside)
    genus = tuple((2 - chi) // 2 for chi in euler)
    return CoverInvariants(
        degree=system.degree,
        branch_points=len(system.entries),
        components=len(orbits),
        component_orbits=orbits,
        euler_closed=2 * system.degree - len(system.entries),
        euler_per_component=tuple(euler),
        genus_per_component=genus,
        boundary_circles=system.degree,
    )


def cover_invariants(movie: ChartMovie) -> CoverInvariants:
    """Invariants of the cover of ``movie``; invalid movies raise InvalidMovieError."""

    return system_invariants(extract_hurwitz(movie))


@dataclass(frozen=True, slots=True)
class Embedded:
    """The cover admits a folded embedding; ``lift`` is a node-free braid chart."""

    lift: ChartMovie

    def describe(self) -> str:
        return "Embedded"


@dataclass(frozen=True, slots=True)
class Immersed:
    """Only a folded immersion was found; ``node_count`` nodes were needed."""

    node_count: int
    lift: ChartMovie
    obstruction: Obstruction

    def describe(self) -> str:
        return f"Immersed({self.node_count})"


FoldingClass = Embedded | Immersed


def folding_class(movie: ChartMovie) -> FoldingClass:
    """Embedded when the permutation chart orients, otherwise the semi-oriented count."""

    result = orient(movie)
    if isinstance(result, Obstruction):
        lifted = semi_orient(movie)
        return Immersed(lifted.count("node"), lifted, result)
    return Embedded(result)


__all__ = [
    "CoverInvariants",
    "Embedded",
    "FoldingClass",
    "Immersed",
    "cover_invariants",
    "folding_class",
    "sheet_orbits",
    "system_invariants",
]
