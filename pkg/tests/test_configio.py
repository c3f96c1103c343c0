import numpy as np
import pytest
from numpy.testing import assert_allclose

from triloop import ConfigError, preset, propagate
from triloop.configio import (apply_overrides, dict_to_scenario, dict_to_text,
                              parse_config, preset_to_dict, text_to_dict)

MINIMAL = """
[scenario]
name = demo

[grid]
t_start = -2
t_end = 2
dt = 0.01

[initial]
basis = bare
amplitudes = 1, 0, 0

[pulse.P]
shape = gaussian
peak = 1.0
center = 0.0
width = 1.0
phase = 0.0

[pulse.S]
shape = constant
value = 0.5

[pulse.C]
shape = gaussian
peak = 0.5
center = 0.2
width = 1.2

[detuning]
delta2 = 0.1
delta3 = -0.2
"""


class TestParsing:
    def test_minimal_roundtrip(self):
        scenario = parse_config(MINIMAL)
        assert scenario.name == "demo"
        assert scenario.grid.dt == pytest.approx(0.01)
        assert scenario.cfg.pulse_s.value == pytest.approx(0.5)
        assert scenario.cfg.detunings.delta3.value_at(0.0) == pytest.approx(-0.2)
        assert_allclose(scenario.initial_state.amplitudes, [1, 0, 0])

    def test_amplitudes_are_normalized(self):
        text = MINIMAL.replace("amplitudes = 1, 0, 0",
                               "amplitudes = 1+0i, 0+1i, 0")
        scenario = parse_config(text)
        assert np.linalg.norm(scenario.initial_state.amplitudes) == pytest.approx(1.0)

    def test_missing_key_is_diagnosed(self):
        text = MINIMAL.replace("peak = 1.0\n", "")
        with pytest.raises(ConfigError, match=r"pulse\.P.*peak"):
            parse_config(text)

    def test_missing_section_is_diagnosed(self):
        text = MINIMAL.replace("[grid]", "[grd]")
        with pytest.raises(ConfigError, match="grid"):
            parse_config(text)

    def test_bad_number_is_diagnosed(self):
        text = MINIMAL.replace("dt = 0.01", "dt = fast")
        with pytest.raises(ConfigError, match="dt"):
            parse_config(text)

    def test_syntax_error_is_diagnosed(self):
        with pytest.raises(ConfigError, match="parse error"):
            parse_config("not an ini file at all\n")

    def test_chain_break_shape_only_for_s(self):
        text = MINIMAL.replace("shape = gaussian\npeak = 1.0",
                               "shape = chain_break\npeak = 1.0")
        with pytest.raises(ConfigError, match="chain_break"):
            parse_config(text)


class TestPresetsRoundtrip:
    @pytest.mark.parametrize("name", ["fig3", "fig4", "fig5"])
    def test_preset_survives_serialization(self, name):
        p = preset(name)
        conf = preset_to_dict(p)
        again = dict_to_scenario(text_to_dict(dict_to_text(conf)))
        grid = p.grid
        direct = propagate(p.cfg, p.initial_state, grid)
        loaded = propagate(again.cfg, again.initial_state, again.grid)
        assert np.abs(direct.final_populations
                      - loaded.final_populations).max() < 1e-12


class TestOverrides:
    def test_override_changes_value(self):
        conf = text_to_dict(MINIMAL)
        out = apply_overrides(conf, ["grid.dt=0.005", "pulse.P.peak=2.0"])
        scenario = dict_to_scenario(out)
        assert scenario.grid.dt == pytest.approx(0.005)
        assert scenario.cfg.pulse_p.envelope(0.0) == pytest.approx(2.0)

    def test_unknown_key_rejected(self):
        conf = text_to_dict(MINIMAL)
        with pytest.raises(ConfigError, match="unknown key"):
            apply_overrides(conf, ["grid.dx=0.005"])

    def test_malformed_override_rejected(self):
        conf = text_to_dict(MINIMAL)
        with pytest.raises(ConfigError):
            apply_overrides(conf, ["grid.dt"])
        with pytest.raises(ConfigError):
            apply_overrides(conf, ["dt=0.005"])

    def test_originals_untouched(self):
        conf = text_to_dict(MINIMAL)
        apply_overrides(conf, ["grid.dt=0.005"])
        assert conf["grid"]["dt"] == "0.01"
