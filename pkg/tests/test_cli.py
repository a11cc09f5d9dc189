import json
from pathlib import Path

import pytest

from specht_invariants import cli, theorem
from specht_invariants.partitions import Partition, enumeration_bound, DEFAULT_BOUND

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def envelope(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    env = json.loads(out)
    assert set(env) == {"schema_version", "command", "result", "timing_ms"}
    assert isinstance(env["timing_ms"], int)
    return env


@pytest.mark.parametrize(
    "name,argv",
    [
        ("admits_4-4_5-3", ["admits", "--lambda", "4,4", "--mu", "5,3"]),
        ("fmu_2-2", ["fmu", "--mu", "2,2"]),
        ("exceptions_4", ["exceptions", "--n", "4"]),
    ],
)
def test_golden_envelopes(capsys, name, argv):
    env = envelope(capsys, *argv)
    env.pop("timing_ms")
    assert env == json.loads((GOLDEN / f"{name}.json").read_text())


def test_admits_examples(capsys):
    res = envelope(capsys, "admits", "--lambda", "6", "--mu", "3,2,1")["result"]
    assert res["admits"] and res["multiplicity"] == 1
    res = envelope(capsys, "admits", "--lambda", "2,2", "--mu", "2,2")["result"]
    assert res["admits"] and res["multiplicity"] == 2 and res["agree"]


def test_oracle_only(capsys):
    res = envelope(capsys, "admits", "--lambda", "4,4", "--mu", "5,3", "--oracle-only")["result"]
    assert "multiplicity" not in res and res["case_ids"] == [8]


def test_parse_error_names_token(capsys):
    code, out, err = run(capsys, "admits", "--lambda", "3,x", "--mu", "4")
    assert code == 2 and out == ""
    assert "'x'" in err


def test_unsorted_rejected(capsys):
    code, _, err = run(capsys, "character", "--lambda", "1,3", "--mu", "4")
    assert code == 2 and "'3'" in err


def test_size_mismatch(capsys):
    code, out, err = run(capsys, "admits", "--lambda", "3", "--mu", "2")
    assert code == 2 and out == "" and "equal size" in err


def test_missing_argument(capsys):
    code, _, _ = run(capsys, "fmu")
    assert code == 2


def test_bound_exceeded(capsys):
    code, out, err = run(capsys, "--bound", "5", "exceptions", "--n", "6")
    assert code == 3 and out == "" and "bound" in err
    assert enumeration_bound() == DEFAULT_BOUND


def test_verify_bound_exceeded(capsys):
    code, _, _ = run(capsys, "--verify-bound", "5", "verify", "--max-n", "6", "--jobs", "1")
    assert code == 3


def test_disagreement_exit(capsys, monkeypatch):
    monkeypatch.setitem(theorem.SPORADIC, 10, (Partition((3, 3)), Partition((4, 2))))
    code, out, err = run(capsys, "verify", "--max-n", "6", "--jobs", "1")
    assert code == 1 and out == ""
    assert "disagreement" in err and '"lambda": "3,3"' in err


def test_fmu_tsv(capsys):
    code, out, _ = run(capsys, "fmu", "--mu", "1,1", "--format", "tsv")
    assert code == 0
    assert out == "1\t2\n1\t1,1\n"


def test_verify_tsv(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "2", "--jobs", "1", "--format", "tsv")
    assert code == 0
    assert out == "n\tlambda\tmu\tcase_ids\tmultiplicity\n2\t1,1\t2\t1,2\t0\n"


def test_verify_matches_exceptions_union(capsys):
    env = envelope(capsys, "verify", "--max-n", "10", "--jobs", "1")
    assert env["result"]["ok"]
    from_verify = {(r["lambda"], r["mu"], tuple(r["case_ids"])) for r in env["result"]["exceptions"]}
    union = set()
    for k in range(1, 11):
        for r in envelope(capsys, "exceptions", "--n", str(k))["result"]["exceptions"]:
            union.add((r["lambda"], r["mu"], tuple(r["case_ids"])))
    assert from_verify == union


def _partition_strings(obj):
    keys = {"lambda", "mu", "partition", "outer", "inner", "weight", "alpha", "beta"}
    if isinstance(obj, dict):
        for k, v in obj.items():
            if k in keys and isinstance(v, str):
                yield v
            else:
                yield from _partition_strings(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _partition_strings(v)


@pytest.mark.parametrize(
    "argv",
    [
        ["fmu", "--mu", "3,3"],
        ["exceptions", "--n", "7"],
        ["lr", "--outer", "3,2,1", "--inner", "2,1", "--weight", "2,1", "--list"],
        ["witness", "--lambda", "4,3,1", "--p", "4", "--q", "4"],
        ["character", "--lambda", "-", "--mu", "-"],
    ],
)
def test_partition_round_trip(capsys, argv):
    env = envelope(capsys, *argv)
    seen = list(_partition_strings(env["result"]))
    assert seen
    for text in seen:
        assert str(Partition.parse(text)) == text


def test_character(capsys):
    assert envelope(capsys, "character", "--lambda", "3,3", "--mu", "3,3")["result"]["value"] == "2"


def test_lr(capsys):
    res = envelope(capsys, "lr", "--outer", "3,2,1", "--inner", "2,1", "--weight", "2,1", "--list")["result"]
    assert res["coefficient"] == 2 and len(res["tableaux"]) == 2


def test_witness_absent(capsys):
    res = envelope(capsys, "witness", "--lambda", "2,2,1,1,1", "--p", "5", "--q", "2")["result"]
    assert res == {"lambda": "2,2,1,1,1", "p": 5, "q": 2, "found": False, "witness": None}


def test_spectrum(capsys):
    res = envelope(capsys, "spectrum", "--lambda", "1,1,1,1", "--mu", "4")["result"]
    assert res["text"] == "2:1"


def test_immersion(capsys):
    res = envelope(capsys, "immersion", "--n", "6")["result"]
    assert res["ok"]
    assert res["trivial_not_immersed_in"] == ["5,1", "2,2,2", "1,1,1,1,1,1"]


def test_module_entry_point():
    import subprocess, sys

    out = subprocess.run(
        [sys.executable, "-m", "specht_invariants", "character", "--lambda", "2,1", "--mu", "3"],
        capture_output=True, text=True, check=True,
    ).stdout
    assert json.loads(out)["result"]["value"] == "-1"
