import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from coringlab.exactla import QQ
from coringlab.workspace import load_workspace_file
from coringlab.zoo import FIXTURES

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "coringlab",
                           "fixtures", "v1")


def fixture_path(name):
    return os.path.join(FIXTURE_DIR, name + ".json")


@pytest.fixture(scope="session")
def workspaces():
    """All bundled fixtures, loaded once."""
    return {name: load_workspace_file(fixture_path(name)) for name in FIXTURES}


@pytest.fixture(scope="session")
def e2(workspaces):
    return workspaces["E2"]


@pytest.fixture(scope="session")
def e3(workspaces):
    return workspaces["E3"]


@pytest.fixture(scope="session")
def e4(workspaces):
    return workspaces["E4"]


@pytest.fixture(scope="session")
def e5(workspaces):
    return workspaces["E5"]


class ContextBundle:
    """Comodule context + extension context for one fixture, built once."""

    def __init__(self, ws, sigma_name="Sigma", ext_name="ext"):
        from coringlab.extension import ExtContext, purity_check
        from coringlab.morita import context_M
        self.ws = ws
        self.sigma = ws.comodules[sigma_name]
        self.ext = ws.extensions[ext_name]
        comods = [self.sigma]
        for name in sorted(ws.comodules):
            com = ws.comodules[name]
            if com is not self.sigma and com.coring is self.sigma.coring and com.dim:
                comods.append(com)
        purity_check(self.ext, comods)
        self.samples = comods
        self.cm = context_M(self.sigma)
        self.ec = ExtContext(self.ext, self.sigma, comodule_ctx=self.cm)


@pytest.fixture(scope="session")
def bundles(workspaces):
    return {name: ContextBundle(workspaces[name])
            for name in ("E1", "E2", "E3", "E4", "E5", "G1")}
