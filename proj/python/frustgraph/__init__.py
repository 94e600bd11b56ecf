# Copyright 2026 The frustgraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Commutation structure of qudit Pauli groups and stabilizer entanglement."""

import json

from frustgraph._core import (
    FrustgraphError,
    __version__,
    canonical_form,
    generating_graph,
    ggm_measure,
    gm_measure,
    lagrange_extremum,
    nullspace,
    rank,
    verify_swap_identity,
)
from frustgraph._core import run_command as _run_command


def run(command, document=None, **options):
    """Runs a CLI command and returns the parsed JSON report."""
    return json.loads(_run_command(command, document, **options))


__all__ = [
    "FrustgraphError",
    "__version__",
    "canonical_form",
    "generating_graph",
    "ggm_measure",
    "gm_measure",
    "lagrange_extremum",
    "nullspace",
    "rank",
    "run",
    "verify_swap_identity",
]
