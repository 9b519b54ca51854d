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

class VtmkitError(Exception):
    """Base exception for vtmkit"""
    pass

class DomainError(VtmkitError, ValueError):
    """Raised when an argument lies outside the domain of an operation"""
    pass

class PreconditionError(VtmkitError):
    """Raised when an operation's precondition does not hold"""
    pass

class KernelVerificationError(VtmkitError):
    """Raised when a reconstructed DFAO disagrees with its sequence oracle"""
    def __init__(self, index, expected, actual):
        self.index = index
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"compare_len too small: DFAO outputs {actual} at n={index}, sequence has {expected}"
        )

class PredicateSyntaxError(VtmkitError):
    """Raised when a predicate cannot be parsed"""
    def __init__(self, message, position, text=None):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

class CompileError(VtmkitError):
    """Raised when a parsed predicate cannot be compiled to an automaton"""
    pass

class StateCeilingError(CompileError):
    """Raised when an intermediate automaton exceeds the configured state ceiling"""
    def __init__(self, subformula, ceiling):
        self.subformula = subformula
        self.ceiling = ceiling
        super().__init__(f"State ceiling {ceiling} exceeded while compiling: {subformula}")

class ArityError(VtmkitError, ValueError):
    """Raised when an assignment does not match an automaton's tracks"""
    pass

class SearchLimitError(VtmkitError):
    """Raised when an exhaustive morphism search is requested beyond its cap"""
    pass

class CriterionDisagreementError(VtmkitError):
    """Raised when the finite squarefree-morphism test and the exhaustive oracle disagree"""
    def __init__(self, image0, criterion, exhaustive):
        self.image0 = image0
        self.criterion = criterion
        self.exhaustive = exhaustive
        super().__init__(
            f"Squarefree criteria disagree for image0={image0}: "
            f"length<=3 test says {criterion}, length<=8 oracle says {exhaustive}"
        )

class ArtifactFormatError(VtmkitError):
    """Raised when a word, DFAO, morphism or automaton file is malformed"""
    def __init__(self, path, reason):
        self.path = path
        self.reason = reason
        super().__init__(f"Malformed artifact {path}: {reason}")
