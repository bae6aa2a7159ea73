import json

import pytest

from src.constructions import ars
from src.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE


def test_generate_ars_33(cli):
    code, out, _ = cli("generate", "--n", 33, "--method", "ars")
    assert code == EXIT_OK
    assert json.loads(out) == ars(33).to_dict()


def test_generate_t_refuses_impossible_size(cli):
    code, out, err = cli("generate", "--n", 12, "--method", "t")
    assert code == EXIT_USAGE
    assert out == ""
    assert "no RPM exists" in " ".join(err.split())


def test_generate_kirkman_warns_when_not_rainbow(cli):
    code, out, err = cli("generate", "--n", 8, "--method", "kirkman")
    assert code == EXIT_OK
    assert json.loads(out)["edges"] == [[0, 7], [1, 6], [2, 5], [3, 4]]
    assert "not rainbow" in err


def test_family_count_only(cli):
    code, out, _ = cli("family", "--n", 33, "--count-only")
    assert code == EXIT_OK
    assert out.strip() == '{"n":33,"count":8}'


def test_family_members(cli):
    code, out, _ = cli("family", "--n", 9)
    payload = json.loads(out)
    assert code == EXIT_OK
    assert payload["count"] == 2 and len(payload["members"]) == 2


def test_enumerate_census_of_4(cli):
    code, out, _ = cli("enumerate", "--n", 4, "--census")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["n"] == 4
    assert payload["rpm_count"] == 0
    assert payload["class_count"] == 0


def test_census_subcommand(cli):
    code, out, _ = cli("census", "--n", 5)
    assert code == EXIT_OK
    assert json.loads(out)["class_count"] == 1


def test_enumerate_lists_matchings(cli):
    code, out, _ = cli("enumerate", "--n", 2)
    assert code == EXIT_OK
    assert json.loads(out) == {"n": 2, "rpm_count": 1, "matchings": [{"n": 2, "edges": [[0, 1]]}]}


def test_enumerate_guard(cli):
    code, _, err = cli("enumerate", "--n", 20)
    assert code == EXIT_USAGE
    assert "refusing" in err


def test_enumerate_guard_from_config(cli, tmp_path):
    (tmp_path / "config.yaml").write_text("oracle:\n  max_n: 6\n")
    code, _, _ = cli("enumerate", "--n", 7)
    assert code == EXIT_USAGE


@pytest.mark.parametrize("n, method", [(7, "kirkman"), (2, "kirkman"), (8, "t"), (16, "t"), (33, "ars"), (1, "ars")])
def test_generated_matchings_verify(cli, tmp_path, n, method):
    _, out, _ = cli("generate", "--n", n, "--method", method)
    path = tmp_path / "m.json"
    path.write_text(out)
    code, _, err = cli("verify", "--in", path)
    assert code == EXIT_OK
    assert "Verified" in err


def test_verify_fails_on_non_rainbow(cli, tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"n": 4, "edges": [[0, 3], [1, 2]]}')
    code, _, err = cli("verify", "--in", path)
    assert code == EXIT_FAILED
    assert "c_1" in err


def test_verify_cuttable(cli, tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"n": 7, "edges": [[0, 6], [1, 5], [2, 4]]}')
    assert cli("verify", "--in", path)[0] == EXIT_OK
    assert cli("verify", "--in", path, "--cuttable")[0] == EXIT_FAILED


def test_verify_invalid_file(cli, tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"n": 7, "edges": [[0, 1], [1, 2]]}')
    code, _, err = cli("verify", "--in", path)
    assert code == EXIT_USAGE
    assert "vertex 1 is covered" in " ".join(err.split())


def test_normalize(cli, tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"n": 7, "edges": [[0, 1], [2, 4], [3, 6]]}')
    code, out, _ = cli("normalize", "--in", path)
    assert code == EXIT_OK
    assert json.loads(out) == {"n": 7, "edges": [[0, 6], [1, 3], [2, 5]]}


def test_schedule_csv_file(cli, tmp_path):
    out_path = tmp_path / "season.csv"
    code, out, _ = cli("schedule", "--teams", 8, "--method", "kirkman", "--out", out_path)
    assert code == EXIT_OK
    assert out == ""
    lines = out_path.read_text().splitlines()
    assert lines[0] == "round,team_a,team_b"
    assert lines[1:5] == ["1,0,6", "1,1,5", "1,2,4", "1,3,7"]


def test_schedule_json_from_matching_file(cli, tmp_path):
    matching = tmp_path / "m.json"
    matching.write_text(json.dumps(ars(9).to_dict()))
    code, out, _ = cli("schedule", "--in", matching, "--variant", "reversed")
    payload = json.loads(out)
    assert code == EXIT_OK
    assert payload["teams"] == 10
    assert len(payload["rounds"]) == 9


def test_schedule_format_override(cli):
    code, out, _ = cli("schedule", "--teams", 4, "--method", "ars", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "round,team_a,team_b"


@pytest.mark.parametrize("argv", [
    ("schedule", "--teams", 7, "--method", "ars"),
    ("schedule", "--method", "ars"),
    ("schedule", "--teams", 8, "--method", "t"),
    ("schedule", "--teams", 8, "--method", "ars", "--out", "season.txt"),
])
def test_schedule_usage_errors(cli, argv):
    assert cli(*argv)[0] == EXIT_USAGE


def test_usage_errors(cli):
    assert cli()[0] == EXIT_USAGE
    assert cli("generate", "--n", 7, "--method", "random")[0] == EXIT_USAGE


def test_output_is_deterministic(cli):
    first = cli("family", "--n", 97)[1]
    second = cli("family", "--n", 97)[1]
    assert first == second


def test_unopenable_log_file_is_a_usage_error(cli, tmp_path):
    code, out, err = cli("--log-file", tmp_path / "no" / "such" / "dir.log", "generate", "--n", 7, "--method", "ars")
    assert code == EXIT_USAGE
    assert out == ""
    assert "log file" in err


def test_log_file_receives_records(cli, tmp_path):
    log_path = tmp_path / "run.log"
    code, _, _ = cli("--log-level", "DEBUG", "--log-file", log_path, "generate", "--n", 7, "--method", "ars")
    assert code == EXIT_OK
    assert "running generate" in log_path.read_text()


@pytest.mark.parametrize("yaml_text", [
    "oracle:\n  max_n: lots\n",
    "oracle:\n  jobs: [1, 2]\n",
    "output:\n  json_indent: wide\n",
])
def test_bad_setting_types_are_usage_errors(cli, tmp_path, yaml_text):
    (tmp_path / "config.yaml").write_text(yaml_text)
    code, _, err = cli("enumerate", "--n", 5)
    assert code == EXIT_USAGE
    assert "invalid setting" in " ".join(err.split())


def test_indent_from_config(cli, tmp_path):
    (tmp_path / "config.yaml").write_text("output:\n  json_indent: 2\n")
    _, out, _ = cli("family", "--n", 9, "--count-only")
    assert out == '{\n  "n": 9,\n  "count": 2\n}\n'


def test_verify_reports_color_coverage(cli, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(ars(9).to_dict()))
    code, _, err = cli("verify", "--in", path)
    assert code == EXIT_OK
    assert "4 of 4" in err


@pytest.mark.parametrize("name", ["season.csv", "season.json"])
def test_verify_generated_schedule_file(cli, tmp_path, name):
    season = tmp_path / name
    assert cli("schedule", "--teams", 10, "--method", "ars", "--variant", "reversed", "--out", season)[0] == EXIT_OK
    code, _, err = cli("verify", "--schedule", season)
    assert code == EXIT_OK
    assert "10 teams, 9 rounds" in err


def test_verify_broken_schedule_file(cli, tmp_path):
    season = tmp_path / "season.csv"
    season.write_text("round,team_a,team_b\n1,0,1\n1,2,3\n2,0,1\n2,2,3\n3,0,2\n3,1,3\n")
    code, _, err = cli("verify", "--schedule", season)
    assert code == EXIT_FAILED
    assert "pair_repeated" in err
    assert "pair_missing" in err


@pytest.mark.parametrize("content", ["r,a,b\n1,0,1\n", "round,team_a,team_b\n1,0,x\n"])
def test_verify_unreadable_schedule_file(cli, tmp_path, content):
    season = tmp_path / "season.csv"
    season.write_text(content)
    assert cli("verify", "--schedule", season)[0] == EXIT_USAGE


def test_verify_flag_combinations(cli, tmp_path):
    season = tmp_path / "season.csv"
    cli("schedule", "--teams", 4, "--method", "ars", "--out", season)
    assert cli("verify", "--schedule", season, "--cuttable")[0] == EXIT_USAGE
    assert cli("verify")[0] == EXIT_USAGE
