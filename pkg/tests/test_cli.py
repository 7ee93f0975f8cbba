import json
import subprocess
import sys

import pytest

from hyperlab.cli import EXIT_FALSE, EXIT_INPUT, EXIT_OK, main
from hyperlab.formats import bundled

DATA = {"structure": bundled("paper_24.json"), "fuzzy": bundled("paper_24_fuzzy.json")}


@pytest.fixture
def files(tmp_path):
    paths = {}
    for key, doc in DATA.items():
        paths[key] = tmp_path / f"{key}.json"
        paths[key].write_text(json.dumps(doc))
    return paths


def run(*argv):
    proc = subprocess.run([sys.executable, "-m", "hyperlab", *map(str, argv)],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_validate(files):
    code, out, _ = run("validate", files["structure"])
    assert code == EXIT_OK and "Krasner hyperring" in out


def test_validate_mutated_sum(tmp_path):
    doc = json.loads(json.dumps(DATA["structure"]))
    for row in doc["f"]:
        if row["args"] == [1, 2]:
            row["out"] = [2]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run("validate", path, "--json")
    assert code == EXIT_FALSE
    assert json.loads(out)["ok"] is False


def test_malformed_input_exit_code(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["validate", str(path)]) == EXIT_INPUT
    assert main(["validate", "no_such_structure"]) == EXIT_INPUT
    assert main(["gen", "paper_24", "--q", "1"]) == EXIT_INPUT


def test_classify(files):
    s, f = files["structure"], files["fuzzy"]
    assert main(["classify", str(s), str(f), "--kind", "alphabeta"]) == EXIT_OK
    assert main(["classify", "paper_24", str(f), "--kind", "ordinary", "--json"]) == EXIT_FALSE
    code, out, _ = run("classify", "paper_24", f, "--kind", "ordinary", "--json")
    report = json.loads(out)
    assert code == EXIT_FALSE and report["verdict"] is False
    assert report["witness"]["tuple"] == [1, 2]
    assert main(["classify", "paper_24", str(f), "--kind", "implication", "--op", "Igr"]) \
        == EXIT_FALSE
    assert main(["classify", "paper_24", str(f), "--kind", "threshold",
                 "--s1", "1/2,1/2", "--s2", "1/5,1/5"]) == EXIT_INPUT


def test_levels(files):
    assert main(["levels", "paper_24", str(files["fuzzy"]), "--range", "lower"]) == EXIT_OK


def test_output_is_reproducible(files):
    argv = ("classify", "paper_24", files["fuzzy"], "--kind", "invq", "--json")
    assert run(*argv) == run(*argv)
    gen = ("gen", "zmod(4,2,4)", "--seed", "3", "--count", "5", "--json")
    first = run(*gen)
    assert first == run(*gen) and len(json.loads(first[1])) == 5


def test_gen_writes_files(tmp_path):
    assert main(["gen", "paper_24", "--count", "3", "--out", str(tmp_path / "c")]) == EXIT_OK
    assert sorted(p.name for p in (tmp_path / "c").iterdir()) == [
        "fuzzy_0000.json", "fuzzy_0001.json", "fuzzy_0002.json"]


def test_verify(capsys):
    assert main(["verify", "--theorems", "T3,T4", "--structures", "paper_24"]) == EXIT_OK
    assert "T3: pass over 16 trials" in capsys.readouterr().out
    code = main(["verify", "--theorems", "T9", "--structures", "paper_24+zmod(4,2,4)",
                 "--chain-only", "--variant", "paper-literal", "--count", "60"])
    assert code == EXIT_FALSE
    assert main(["verify", "--theorems", "T42"]) == EXIT_INPUT
