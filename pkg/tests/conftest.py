import pytest

from src import main


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run full-range sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def cli(tmp_path, capsys):
    """Run the CLI in-process against an isolated config; returns (code, stdout, stderr)."""
    config_path = tmp_path / "config.yaml"

    def invoke(*argv):
        code = main.run(["--config", str(config_path), *map(str, argv)])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke
