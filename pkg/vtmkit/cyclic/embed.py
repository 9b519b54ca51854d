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

"""Embed a squarefree word along an arithmetic progression of a longer squarefree word."""

from typing import Optional

from vtmkit.cyclic.morphisms import Certificate, CyclicUniformMorphism, as_morphism, certify
from vtmkit.exceptions import PreconditionError
from vtmkit.words import Word, apply_morphism, find_square


def embed(w: Word, c: CyclicUniformMorphism, certificate: Optional[Certificate] = None) -> Word:
    """v = h(w), so that v[k*n] = w[n] for every n.

    A certificate for another morphism is ignored and c is certified afresh.
    """
    if len(w) and int(w.letters.max()) > 2:
        raise PreconditionError("embed needs a ternary word")
    witness = find_square(w, first_only=True)
    if witness is not None:
        raise PreconditionError(f"Input word is not squarefree: square of period {witness.period} at {witness.position}")
    if certificate is None or certificate.morphism != c:
        certificate = certify(c)
    if not certificate.certified:
        raise PreconditionError(f"Morphism with image0={c.to_string()} is not certified squarefree")
    return apply_morphism(as_morphism(c), Word(w.letters, 3))
