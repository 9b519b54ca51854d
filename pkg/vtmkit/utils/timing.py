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

import time
from contextlib import contextmanager
from typing import Dict, Iterator


@contextmanager
def timed(timings: Dict[str, float], phase: str) -> Iterator[None]:
    """Record the wall time of the block in milliseconds under phase."""
    start = time.perf_counter()
    try:
        yield
    finally:
        timings[phase] = round((time.perf_counter() - start) * 1000.0, 3)
