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

import json

import numpy as np
import pytest

import gcwt


def test_normalized_gammachirp_has_unit_energy():
    p = gcwt.normalize(gcwt.GammachirpParams(c=-2.96))
    assert gcwt.gammachirp_energy(p) == pytest.approx(1.0, abs=1e-9)
    w = gcwt.sample_mother(gcwt.Gammachirp(p), 16000.0)
    assert w["energy"] == pytest.approx(1.0, abs=1e-4)
    assert w["samples"].dtype == np.complex128


def test_gammatone_is_zero_chirp():
    t = np.linspace(1e-4, 0.02, 50)
    a = gcwt.gammachirp_ir(gcwt.GammachirpParams(c=0.0), t)
    g = gcwt.make_gammatone(gcwt.GammachirpParams(c=-1.0))
    b = gcwt.gammachirp_ir(g.params, t)
    np.testing.assert_array_equal(a, b)


def test_spectrum_peaks_below_center_for_negative_chirp():
    f = np.arange(500.0, 1500.0, 1.0)
    mag = np.abs(gcwt.gammachirp_spectrum(gcwt.GammachirpParams(c=-2.0), f))
    assert f[np.argmax(mag)] < 1000.0


def test_synthesize_vowel():
    x = gcwt.synthesize(gcwt.builtin_vowel("a"))
    assert x.shape == (8000,)
    assert np.max(np.abs(x)) == pytest.approx(0.9)


def test_unknown_vowel_raises():
    with pytest.raises(gcwt.DomainError):
        gcwt.builtin_vowel("x")


def test_cwt_shape_and_tone_localization():
    ladder = gcwt.ScaleLadder()
    t = np.arange(8000) / 16000.0
    x = np.sin(2 * np.pi * 1090.0 * t)
    scal = gcwt.cwt(x, 16000.0, gcwt.Morlet(), ladder)
    c = scal.coefficients
    assert c.shape == (23, 8000)
    energy = np.sum(np.abs(c[:, 2000:6000]) ** 2, axis=1)
    freqs = scal.level_center_freqs
    assert abs(np.log(freqs[np.argmax(energy)] / 1090.0)) < np.log(1.13)


def test_cwt_deterministic_across_threads():
    x = gcwt.synthesize(gcwt.builtin_vowel("u"))
    fam = gcwt.Gammachirp(gcwt.normalize(gcwt.GammachirpParams()))
    a = gcwt.cwt(x, 16000.0, fam, threads=1).coefficients
    b = gcwt.cwt(x, 16000.0, fam, threads=4).coefficients
    np.testing.assert_array_equal(a, b)


def test_approximation_and_spectra():
    x = gcwt.synthesize(gcwt.builtin_vowel("i"))
    scal = gcwt.cwt(x, 16000.0, gcwt.MexicanHat())
    approx = gcwt.approximation(scal, 0)
    np.testing.assert_allclose(approx, np.sum(scal.coefficients, axis=0).real, atol=1e-9)
    freqs, db = gcwt.level_log_spectrum(scal, 5)
    assert freqs[0] == 0.0 and freqs[-1] == 8000.0
    assert db.min() >= -120.0


def test_compare_families():
    r = gcwt.compare_families("u")
    assert [f["name"] for f in r["families"]] == ["gammachirp", "morlet", "mexican_hat"]
    assert r["agreement"][0]["counts"][0] == 3
    assert "3/3" in gcwt.compare_families("u", table=True)


def test_formant_report():
    spec = gcwt.builtin_vowel("a")
    x = gcwt.synthesize(spec)
    r = gcwt.formant_report(x, gcwt.Morlet(), spec, report_levels=[0, 22])
    assert [lv["level"] for lv in r["per_level"]] == [0, 22]
    assert r["per_level"][0]["presence"][0] == "detected"


def test_admissibility():
    assert gcwt.check_admissibility(gcwt.MexicanHat(), 16000.0)["dc_leakage"] < 1e-6
    fam = gcwt.Gammachirp(gcwt.normalize(gcwt.GammachirpParams()))
    assert gcwt.check_admissibility(fam, 16000.0)["admissible"]


def test_wav_round_trip(tmp_path):
    x = gcwt.synthesize(gcwt.builtin_vowel("a"))
    path = str(tmp_path / "a.wav")
    assert gcwt.write_wav(path, x, 16000.0) == 0
    y, rate = gcwt.read_wav(path)
    assert rate == 16000.0
    np.testing.assert_allclose(y, x, atol=1.0 / 32768)
    with pytest.raises(gcwt.IoError):
        gcwt.read_wav(str(tmp_path / "missing.wav"))


def test_config_validation():
    c = gcwt.load_config({"family": {"c": 0.0}})
    assert c["family"]["c"] == 0.0
    with pytest.raises(gcwt.ConfigError, match="family.q"):
        gcwt.load_config(json.dumps({"family": {"q": 1}}))
