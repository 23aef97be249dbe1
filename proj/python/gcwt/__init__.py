# Copyright 2026 The gcwt Authors.
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
"""Gammachirp continuous wavelet transform."""

import json

from gcwt._gcwt import (
    ConfigError,
    DomainError,
    Gammachirp,
    GammachirpParams,
    GaussianDerivative,
    IoError,
    MexicanHat,
    Morlet,
    Scalogram,
    ScaleLadder,
    VowelSpec,
    approximation,
    builtin_vowel,
    check_admissibility,
    cwt,
    erb,
    family_name,
    family_spectrum,
    gammachirp_energy,
    gammachirp_ir,
    gammachirp_spectrum,
    level_log_spectrum,
    log_spectrum,
    make_gammatone,
    normalize,
    read_wav,
    sample_mother,
    synthesize,
    write_wav,
)
from gcwt import _gcwt

__all__ = [
    "ConfigError",
    "DomainError",
    "Gammachirp",
    "GammachirpParams",
    "GaussianDerivative",
    "IoError",
    "MexicanHat",
    "Morlet",
    "Scalogram",
    "ScaleLadder",
    "VowelSpec",
    "approximation",
    "builtin_vowel",
    "check_admissibility",
    "compare_families",
    "cwt",
    "erb",
    "family_name",
    "family_spectrum",
    "formant_report",
    "gammachirp_energy",
    "gammachirp_ir",
    "gammachirp_spectrum",
    "level_log_spectrum",
    "load_config",
    "log_spectrum",
    "make_gammatone",
    "normalize",
    "read_wav",
    "sample_mother",
    "synthesize",
    "write_wav",
]


def _spec(vowel):
    return builtin_vowel(vowel) if isinstance(vowel, str) else vowel


def formant_report(samples, family, spec, ladder=None, report_levels=(), threads=0):
    """Per-level formant presence for one family, as a dict."""
    text = _gcwt.formant_report_json(
        samples, family, ladder or ScaleLadder(), _spec(spec), list(report_levels), threads
    )
    return json.loads(text)["families"][0]


def compare_families(vowel, ladder=None, gammachirp=None, report_levels=(), threads=0,
                     table=False):
    """Gammachirp, Morlet and Mexican hat reports for a vowel.

    Returns the report as a dict, or the text table when `table` is set.
    """
    text = _gcwt.compare_families_json(
        _spec(vowel), ladder or ScaleLadder(), gammachirp or GammachirpParams(),
        list(report_levels), threads, table
    )
    return text if table else json.loads(text)


def load_config(source):
    """Parses and validates a run configuration from a dict or JSON text."""
    text = source if isinstance(source, str) else json.dumps(source)
    return json.loads(_gcwt.normalize_config_json(text))
