"""Example graphs shipped with the package."""

from __future__ import annotations

from importlib import resources

from ..graph import VoltageGraph, parse_graph

NAMES = ("line", "graph1", "graph2", "graph3", "graph4", "graph5", "graph6",
         "sawtooth", "triladder")


def fixture_path(name: str):
    return resources.files(__name__).joinpath(f"{name}.json")


def load_fixture(name: str) -> VoltageGraph:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}")
    return parse_graph(fixture_path(name).read_text(encoding="utf-8"))
