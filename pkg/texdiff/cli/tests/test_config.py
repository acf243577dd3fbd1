import pytest

from texdiff.diffusion import DEFAULT_PARAMS, EdgeStopping
from texdiff.errors import ConfigurationError
from texdiff.testutils.test_patterns import open_temp_dir

from ..config import (
    ExperimentConfig,
    load_config,
    load_config_file,
    parse_config,
    parse_config_line,
)


@pytest.mark.parametrize(
    "line,expected",
    [
        ("", None),
        ("   ", None),
        ("# only a comment", None),
        ("n_scales = 30", ("n_scales", "30")),
        ("  methods=pm, fbr  # the fast ones", ("methods", "pm, fbr")),
        ("sigma-step = 0.25", ("sigma_step", "0.25")),
        ("dataset_root = datasets/brodatz 2", ("dataset_root", "datasets/brodatz 2")),
    ],
)
def test_config_lines(line: str, expected: object) -> None:
    assert parse_config_line(line) == expected


@pytest.mark.parametrize("line", ["n_scales 30", "= 30", "n_scales =", "3d = 1"])
def test_that_malformed_lines_are_rejected(line: str) -> None:
    with pytest.raises(ConfigurationError, match="line 2"):
        parse_config(f"# header\n{line}\n")


def test_repeated_keys_keep_the_last_value() -> None:
    with pytest.warns(UserWarning, match="more than once"):
        raw = parse_config("folds = 5\nfolds = 10\n")
    assert raw == {"folds": "10"}


def test_empty_configuration_gives_the_defaults() -> None:
    config = load_config({})
    assert config == ExperimentConfig()
    assert config.n_scales == 150
    assert config.folds == 10
    assert config.ltp_k == 5
    assert config.cslbp_t == 0.01
    assert config.diffusion_params() == DEFAULT_PARAMS


def test_values_are_converted() -> None:
    config = load_config(
        parse_config(
            "methods = nl, pm\n"
            "descriptors = clbp\n"
            "n_scales = 30\n"
            "epsilon = 0.2\n"
            "edge_stopping = exponential\n"
            "cslbp_median = true\n"
        )
    )
    assert config.methods == ["nl", "pm"]
    assert config.descriptors == ["clbp"]
    assert config.n_scales == 30
    assert config.cslbp_median is True
    params = config.diffusion_params()
    assert params.epsilon == 0.2
    assert params.edge_stopping is EdgeStopping.EXPONENTIAL


@pytest.mark.parametrize(
    "raw",
    [
        {"methods": "pm, heat"},
        {"folds": "1"},
        {"n_scales": "0"},
        {"ltp_k": "-1"},
        {"dt": "0.5"},
        {"epsilon": "1"},
        {"seed": "many"},
    ],
)
def test_that_invalid_values_are_rejected(raw: dict) -> None:
    with pytest.raises(ConfigurationError):
        load_config(raw)


def test_that_unknown_keys_are_reported() -> None:
    with pytest.warns(UserWarning, match="scales"):
        load_config({"scales": "3"})


def test_config_files_tell_which_keys_they_set() -> None:
    with open_temp_dir() as folder:
        path = folder / "run.cfg"
        path.write_text("n_scales = 12\nkappa = 0.5\n", encoding="utf-8")
        config, given = load_config_file(path)
    assert given == {"n_scales": 12, "kappa": 0.5}
    assert config.delta == 0.1


def test_dumped_configurations_load_back() -> None:
    config = ExperimentConfig(dataset_root="somewhere")
    assert load_config(config.dump()) == config
