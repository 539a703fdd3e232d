"""Shared fixtures.

The full default-grid evolution series (t_max=200, dt=0.01) is expensive
enough to be worth computing once per molecule and sharing across the
whole run.
"""

import pytest

import arenewalk as aw


@pytest.fixture(scope="session")
def full_series():
    """Map molecule name -> (graph, default-grid EvolutionSeries)."""
    out = {}
    for name in aw.CATALOG:
        graph = aw.load_molecule(name)
        prop = aw.propagator(aw.hamiltonian(graph))
        out[name] = (graph, aw.time_series(prop))
    return out
