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

"""Exported modules"""

from .along import exists_along, invert_along, invert_along_sigma, sided_inverse_along
from .centralizer import make_scaling_centralizer, verify_centralizer
from .classical import drazin_inverse, group_inverse, moore_penrose, mp_one_sided
from .exec_env import get_ring
from .laws import LAWS, search_counterexamples

__all__ = [
    "LAWS",
    "drazin_inverse",
    "exists_along",
    "get_ring",
    "group_inverse",
    "invert_along",
    "invert_along_sigma",
    "make_scaling_centralizer",
    "moore_penrose",
    "mp_one_sided",
    "search_counterexamples",
    "sided_inverse_along",
    "verify_centralizer",
]
