# Copyright The Volcano Authors.
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

"""Facts about the vtm DFAO used by the even and power-of-two cases of the progression check."""

import logging
from typing import Tuple

import numpy as np

from vtmkit.dfao.automaton import DFAO, run_many
from vtmkit.exceptions import DomainError

logger = logging.getLogger(__name__)


def check_doubling(d: DFAO, bound: int) -> bool:
    """For all i < bound: v_i = 0 implies v_{2i} = 0, and v_i = 2 implies v_{2i} = 2."""
    i = np.arange(bound, dtype=np.int64)
    here = run_many(d, i)
    doubled = run_many(d, 2 * i)
    bad = ((here == 0) & (doubled != 0)) | ((here == 2) & (doubled != 2))
    if bad.any():
        logger.debug(f"Doubling fails first at i={int(np.flatnonzero(bad)[0])}")
        return False
    return True


def check_power_of_two(d: DFAO, max_exp: int) -> bool:
    """v_{2^l} = 2 for every 1 <= l <= max_exp."""
    powers = np.left_shift(np.int64(1), np.arange(1, max_exp + 1, dtype=np.int64))
    return bool((run_many(d, powers) == 2).all())


def decompose_even(k: int) -> Tuple[int, int]:
    """Write k = 2^a * k' with k' odd."""
    if k < 1:
        raise DomainError(f"decompose_even needs k >= 1, got {k}")
    a = (k & -k).bit_length() - 1
    return a, k >> a
