# Copyright 2026 The dgdensity Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Exact verification engine for Danilov-Gizatullin surfaces.

Polynomials, words and fields are passed as text in the command-line syntax.
``verify`` and ``plan`` return parsed JSON documents.
"""

import json

from ._core import (
    DomainError,
    Error,
    NilpotencyBoundExceeded,
    ParameterMismatch,
    ParseError,
    __version__,
    bracket,
    decompose,
    normal_form,
    stage_names,
    x_normal_form,
)
from . import _core


def verify(n, stages=None, seed=20231017, nmax=3, mmax=3, rmax=3, word_degree=4):
    """Run the pipeline for V_n and return the report as a dict."""
    return json.loads(_core.verify(n, stages, seed, nmax, mmax, rmax, word_degree))


def plan(word, n, field="eps", module=False):
    """Membership script for ``word * field`` as a dict."""
    return json.loads(_core.plan(word, n, field, module))


def check_script(script):
    """Verify a script given as a dict or JSON text."""
    if not isinstance(script, str):
        script = json.dumps(script)
    return _core.check_script(script)


__all__ = [
    "DomainError",
    "Error",
    "NilpotencyBoundExceeded",
    "ParameterMismatch",
    "ParseError",
    "__version__",
    "bracket",
    "check_script",
    "decompose",
    "normal_form",
    "plan",
    "stage_names",
    "verify",
    "x_normal_form",
]
