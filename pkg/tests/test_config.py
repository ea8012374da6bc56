import io
import json

import pytest

import run_dynn
from param.analysis_parameters import DEFAULT_CONFIG, AnalysisParameterBuilder, AnalysisParameters
from provider.output_provider import LocalOutputProvider, OutputProviderFactory, StdoutOutputProvider
from util.errors import ConfigError
from util.helpers import Helpers as h


def test_defaults_without_config():
    config = AnalysisParameterBuilder.load_config(None)
    assert AnalysisParameterBuilder.build(config) == AnalysisParameters()
    assert h.require(config, "entropy/iters") == 200


def test_user_config_is_merged(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"analysis": {"restarts": 3}}))
    params = AnalysisParameterBuilder.build(AnalysisParameterBuilder.load_config(str(path)))
    assert params.restarts == 3
    assert params.stable_window == 5
    assert DEFAULT_CONFIG["analysis"]["restarts"] == 8


@pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
def test_bad_config(tmp_path, content):
    path = tmp_path / "config.json"
    path.write_text(content)
    with pytest.raises(ConfigError):
        AnalysisParameterBuilder.load_config(str(path))


def test_missing_key():
    with pytest.raises(ConfigError):
        AnalysisParameterBuilder.build({"analysis": {"restarts": 2}})
    assert h.dont_require({"analysis": {}}, "analysis/restarts") is None


def test_overrides_skip_none():
    params = AnalysisParameters().with_overrides(seed=None, restarts=2)
    assert params.seed == 0
    assert params.restarts == 2


def test_factory():
    assert isinstance(OutputProviderFactory.build({}), StdoutOutputProvider)
    with pytest.raises(ConfigError):
        OutputProviderFactory.build({"output": {"type": "drive"}})
    with pytest.raises(ConfigError):
        OutputProviderFactory.build({"output": {"type": "local"}})


def test_stdout_provider_csv():
    stream = io.StringIO()
    StdoutOutputProvider({}, stream).save_csv(("m", "c_m"), [(1, 0.5), (2, 0.25)], "x.csv")
    assert stream.getvalue() == "m,c_m\n1,0.5\n2,0.25\n"


def test_local_provider(tmp_path):
    provider = OutputProviderFactory.build({"output": {"type": "local", "folder": str(tmp_path / "out")}})
    assert isinstance(provider, LocalOutputProvider)
    path = provider.save_json({"lambda": 2.5}, "report.json")
    with open(path) as f:
        assert json.load(f) == {"lambda": 2.5}
    assert open(provider.save_text("ok", "v.txt")).read() == "ok\n"


@pytest.mark.parametrize("key", ["restarts", "max_iter", "stable_window", "tie_cap"])
@pytest.mark.parametrize("value", [0, -1])
def test_counts_must_be_positive(key, value):
    config = h.merge(DEFAULT_CONFIG, {"analysis": {key: value}})
    with pytest.raises(ConfigError) as e:
        AnalysisParameterBuilder.build(config)
    assert "analysis/" + key in str(e.value)
    with pytest.raises(ConfigError):
        AnalysisParameters().with_overrides(**{key: value})


def test_tolerances_are_checked():
    with pytest.raises(ConfigError):
        AnalysisParameters(eigen_tolerance=0.0)
    with pytest.raises(ConfigError):
        AnalysisParameters(tie_tolerance=-1e-9)
    assert AnalysisParameters(tie_tolerance=0.0).tie_tolerance == 0.0


@pytest.mark.parametrize("value", ["8", 2.5, True, None])
def test_typed_lookup_names_the_path(value):
    config = {"analysis": {"restarts": value}}
    if value is None:
        with pytest.raises(ConfigError, match="Missing config value analysis/restarts"):
            h.require(config, "analysis/restarts", int)
    else:
        with pytest.raises(ConfigError, match="analysis/restarts must be int"):
            h.require(config, "analysis/restarts", int)


def test_typed_lookup_widens_int_to_float():
    assert h.require({"analysis": {"tie_tolerance": 0}}, "analysis/tie_tolerance", float) == 0.0
    assert h.dont_require({}, "entropy/iters", int, 200) == 200


def test_lookup_through_a_value_is_an_error():
    with pytest.raises(ConfigError, match="not a section"):
        h.require({"analysis": 3}, "analysis/restarts")


def test_zero_restarts_from_the_command_line(capsys):
    code = run_dynn.main(["pa", "-n", "3", "-w", "1 -2", "--restarts", "0"])
    assert code == 1
    assert "analysis/restarts must be >= 1" in capsys.readouterr().err
