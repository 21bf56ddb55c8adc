"""Config parsing, defaults, overrides, and rejection messages."""

import math

import pytest

from shearless.config import (
    apply_overrides,
    default_config,
    format_pairs,
    load_config,
    parse_config,
)
from shearless.errors import (
    ConfigSyntaxError,
    InvalidValue,
    NonPositiveOmega,
    UnknownKey,
)


def test_empty_text_gives_defaults():
    config = parse_config("")
    params = config.params
    assert params.J == -1.0
    assert params.B0 == 2.0
    assert params.N == 100
    assert params.omega == 0.12
    assert params.drive == "sinusoidal"
    assert config.packet.j0 == 25
    assert config.packet.k0 == 0.0
    assert config.packet.delta_j == 5.0
    assert config.out_dir == "results"
    assert config.section("sos")["periods"] == 500
    assert config.section("floquet")["sigma"] == 0.10


def test_parse_round_trip_with_comments():
    text = """
    # model
    omega = 0.2
    k0 = 1.0
    b0 = 1.5

    [floquet]
    ; tighter smoothing
    sigma = 0.05
    prominence = 0.2

    [concurrence]
    pairs = 10:11, 40:41
    """
    config = parse_config(text)
    assert config.params.omega == 0.2
    assert config.params.B0 == 1.5
    assert config.packet.k0 == 1.0
    assert config.section("floquet")["sigma"] == 0.05
    assert config.section("concurrence")["pairs"] == [(10, 11), (40, 41)]


def test_unknown_key_and_section_name_the_line():
    with pytest.raises(UnknownKey, match="line 2"):
        parse_config("omega = 0.2\nchirp = 3\n")
    with pytest.raises(UnknownKey, match=r"line 1.*\[magnets\]"):
        parse_config("[magnets]\n")
    with pytest.raises(UnknownKey, match="in section"):
        parse_config("[sos]\nomega = 0.2\n")


def test_syntax_errors_name_the_line():
    with pytest.raises(ConfigSyntaxError, match="line 3"):
        parse_config("omega = 0.2\n\njust words\n")
    with pytest.raises(ConfigSyntaxError, match="unterminated"):
        parse_config("[sos\n")


def test_type_errors_are_rejected():
    with pytest.raises(InvalidValue, match="n"):
        parse_config("n = 20.5\n")
    with pytest.raises(InvalidValue):
        parse_config("omega = fast\n")
    with pytest.raises(InvalidValue, match="pairs"):
        parse_config("[concurrence]\npairs = 1-2\n")


def test_domain_errors_surface_at_parse_time():
    with pytest.raises(NonPositiveOmega):
        parse_config("omega = -0.1\n")
    with pytest.raises(InvalidValue, match="must be >= 1"):
        parse_config("[sos]\nperiods = 0\n")
    with pytest.raises(InvalidValue):
        parse_config("drive = pulsed\n")


def test_load_config_reads_file(tmp_path):
    path = tmp_path / "run.ini"
    path.write_text("omega = 1.0\nk0 = 1.5707963267948966\n")
    config = load_config(path)
    assert config.params.omega == 1.0
    assert abs(config.packet.k0 - math.pi / 2) <= 1e-15


def test_apply_overrides_casts_and_validates():
    config = default_config()
    out = apply_overrides(config, {"omega": "0.2", "floquet.sigma": 0.2, "j0": "30"})
    assert out.params.omega == 0.2
    assert out.section("floquet")["sigma"] == 0.2
    assert out.packet.j0 == 30
    # the original is untouched
    assert config.params.omega == 0.12
    with pytest.raises(UnknownKey):
        apply_overrides(config, {"floquet.windows": 3})
    with pytest.raises(InvalidValue):
        apply_overrides(config, {"evolve.stride": 0})


def test_resolved_fills_every_default():
    config = parse_config("[floquet]\nsubsteps = 500\n")
    flat = config.resolved()
    assert flat["omega"] == 0.12
    assert flat["floquet.substeps"] == 500
    # unset quantum substeps fall back to the model-level count
    assert flat["evolve.substeps"] == 16000
    assert flat["concurrence.substeps"] == 16000
    # unset classical substeps keep their section default
    assert flat["sos.substeps"] == 2000
    assert flat["concurrence.pairs"] == "25:26,50:51,75:76,100:1"
    assert flat["rotation.x0"] == 25.0


def test_format_pairs_round_trips():
    text = format_pairs([(25, 26), (100, 1)])
    assert text == "25:26,100:1"
    config = parse_config(f"[concurrence]\npairs = {text}\n")
    assert config.section("concurrence")["pairs"] == [(25, 26), (100, 1)]
