# Copyright 2026 The tmss Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Two-mode spin-squeezing certification for bipartite spin states.

The witness functional V(Jy+) + V(Jx-) - <Jz+> is negative exactly when a
state is two-mode spin squeezed. States, operators and local unitaries use the
Jz eigenbasis ordered m = -j .. j, and joint index i1 * (2 j2 + 1) + i2.
"""

from tmss._core import (
    BipartiteState,
    CanonicalMoments,
    DensityMatrix,
    InputError,
    NumericalError,
    OptResult,
    RotationReport,
    SchmidtForm,
    SelftestRow,
    SpinJ,
    StateClass,
    StateClassTag,
    SurveyStats,
    UnequalSpinReport,
    WernerFailureReport,
    WitnessReport,
    __version__,
    canonical_moment_terms,
    canonical_state,
    canonicalize,
    classify,
    closed_form_witness,
    haar_random_pure,
    haar_survey,
    make_unitary,
    maximally_entangled_state,
    minimize_witness,
    partial_trace,
    rotation_counterexample,
    run_cli,
    schmidt_decompose,
    selftest,
    spin_matrices,
    two_mode_operator,
    unequal_spin_counterexample,
    werner_failure_check,
    werner_state,
    werner_threshold,
    witness_report,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
