import json

import pytest

from twincore.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_largest_table(capsys):
    code, out, _ = run(capsys, "largest", "--k", "2")
    assert code == 0
    assert "size: 21" in out
    assert "partition: (9,5,4,2,1)" in out
    assert "beta_set: {13,8,6,3,1}" in out


def test_largest_json(capsys):
    code, out, _ = run(capsys, "largest", "--k", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "k": 2,
        "size": 21,
        "partition": {"parts": [9, 5, 4, 2, 1]},
        "beta_set": {"hooks": [13, 8, 6, 3, 1]},
    }
    # round-trips through the documented encodings
    from twincore.partitions import BetaSet, Partition

    assert Partition.from_json_dict(payload["partition"]) == Partition((9, 5, 4, 2, 1))
    assert BetaSet.from_json_dict(payload["beta_set"]) == BetaSet({13, 8, 6, 3, 1})


def test_bijection_ideal_to_path(capsys):
    code, out, _ = run(capsys, "bijection", "--k", "1", "--ideal", "2")
    assert code == 0
    assert out.strip() == "UD"


def test_bijection_path_to_ideal(capsys):
    code, out, _ = run(capsys, "bijection", "--k", "2", "--path", "UUDD")
    assert code == 0
    assert out.strip() == "{2,4,9}"


def test_bijection_empty_ideal(capsys):
    code, out, _ = run(capsys, "bijection", "--k", "2", "--ideal", "")
    assert code == 0
    assert out.strip() == "DUDU"


def test_bijection_json_round_trip(capsys):
    code, out, _ = run(capsys, "bijection", "--k", "2", "--ideal", "2,4,9",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"k": 2, "ideal": [2, 4, 9], "path": "UUDD"}
    code, out, _ = run(capsys, "bijection", "--k", "2", "--path", payload["path"],
                       "--format", "json")
    assert json.loads(out)["ideal"] == [2, 4, 9]


def test_bijection_usage_errors(capsys):
    code, _, err = run(capsys, "bijection", "--k", "2", "--ideal", "1,3")
    assert code == 2 and "element 1" in err
    code, _, err = run(capsys, "bijection", "--k", "2", "--ideal", "9")
    assert code == 2 and "down-closed" in err
    code, _, err = run(capsys, "bijection", "--k", "2", "--ideal", "2,3")
    assert code == 2 and "nice" in err
    code, _, err = run(capsys, "bijection", "--k", "2", "--ideal", "5")
    assert code == 2
    code, _, err = run(capsys, "bijection", "--k", "2", "--path", "UUDDUD")
    assert code == 2 and "order 2" in err
    code, _, err = run(capsys, "bijection", "--k", "2", "--path", "UXDD")
    assert code == 2


def test_verify_counts_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--counts", "--k", "1")
    assert code == 0
    matching = [line for line in out.splitlines() if line.endswith("ok") and "k=1" in line]
    assert len(matching) == 5
    assert "status: ok" in out


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--counts", "--k", "1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "quantity,param,formula,enumerated,match,millis"
    assert len(lines) == 6


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--regressions", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_match"] is True


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "--identities", "--kmax", "5")
    assert code == 0
    code, _, err = run(capsys, "verify", "--identities", "--kmax", "25")
    assert code == 3 and "guard" in err


def test_verify_missing_flags(capsys):
    code, _, err = run(capsys, "verify", "--counts")
    assert code == 2 and "--k" in err


def test_poset_dot(capsys):
    code, out, _ = run(capsys, "poset", "--s", "3", "--t", "5", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert '"1" -> "4";' in out


def test_poset_json(capsys):
    code, out, _ = run(capsys, "poset", "--s", "3", "--t", "5")
    payload = json.loads(out)
    assert payload["elements"] == [1, 2, 4, 7]
    assert payload["covers"]["7"] == [2, 4]


def test_poset_truncated(capsys):
    code, out, _ = run(capsys, "poset", "--s", "5", "--t", "7", "--truncate-k", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 2
    assert payload["elements"] == [1, 2, 3, 4, 8, 9]
    code, _, err = run(capsys, "poset", "--s", "5", "--t", "9", "--truncate-k", "2")
    assert code == 2


def test_poset_rejects_non_coprime(capsys):
    code, _, err = run(capsys, "poset", "--s", "4", "--t", "6")
    assert code == 2 and "coprime" in err


def test_ideals_table(capsys):
    code, out, _ = run(capsys, "ideals", "--s", "3", "--t", "5", "--nice")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines == ["{}", "{1}", "{2}", "{1,4}", "count: 4"]


def test_ideals_json(capsys):
    code, out, _ = run(capsys, "ideals", "--s", "3", "--t", "5", "--format", "json")
    payload = json.loads(out)
    assert payload["count"] == 7
    assert [1, 2, 4, 7] in payload["ideals"]


def test_paths_listing(capsys):
    code, out, _ = run(capsys, "paths", "--order", "2")
    assert code == 0
    assert out.splitlines() == ["UUDD", "UDUD"]
    code, out, _ = run(capsys, "paths", "--order", "2", "--free", "--format", "json")
    assert json.loads(out)["count"] == 6


def test_paths_guard(capsys):
    code, _, err = run(capsys, "paths", "--order", "20")
    assert code == 3 and "guard" in err


def test_usage_error_exit_code(capsys):
    assert main(["nonsense"]) == 2
    assert main(["largest"]) == 2  # missing --k
    assert main(["bijection", "--k", "2"]) == 2  # needs --ideal or --path
