# Copyright 2026 The WalkForge Authors
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

"""Exact, time-independent circuits for continuous-time quantum walks."""

from ._walkforge import (
    Circuit,
    DegreeMismatchError,
    DimensionError,
    EmbeddingError,
    Expr,
    Graph,
    NotCommutingError,
    ParseError,
    PreconditionError,
    ResourceError,
    WalkforgeError,
    commutes,
    eigh,
    graph_of,
    oracle,
    parse_expr,
    scaling_csv,
    synth,
    t_independence,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
