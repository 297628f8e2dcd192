# Copyright 2025 Google LLC

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     https://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
This module maintains state for the execution environment of a session
"""

import os
from typing import Dict, Union

from ring_inverses.rings import RingContext, RingSpec, make_ring

THREADS_ENV_VAR = "RINGINV_THREADS"

# Global dict of ring instances created in a single session
ring_instances: Dict[str, RingContext] = {}


def get_ring(spec: Union[RingSpec, str]) -> RingContext:
    """Gets a cached or new ring instance based on the spec.

    Args:
        spec: A `RingSpec`, or its text form `zmod:<n>` / `gqmat:<k>`.

    Returns:
        The `RingContext` shared by every caller asking for the same ring.

    Raises:
        LiteralError: If a text spec cannot be parsed.
    """
    if isinstance(spec, str):
        spec = RingSpec.parse(spec)

    key = spec.get_key()
    ring = ring_instances.get(key)
    if ring:
        return ring

    ring = make_ring(spec)
    ring_instances[key] = ring
    return ring


def get_thread_count() -> int:
    """Reads the parallelism cap from RINGINV_THREADS.

    Raises:
        ValueError: If the variable is set to something other than a positive
            integer.
    """
    raw = os.environ.get(THREADS_ENV_VAR, "").strip()
    if not raw:
        return min(8, os.cpu_count() or 1)
    try:
        threads = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}")
    if threads < 1:
        raise ValueError(f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}")
    return threads
