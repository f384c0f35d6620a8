import json
import subprocess
import sys

from goldens import M1_N5_T2, M1_N6_T2, M2_N5_12, M2_N6_12
from exsquares.cli import system_from_json, system_to_json
from exsquares.seeds import lemma3_special
from exsquares.verify import system_from_chain, validate_system


def run(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "exsquares.cli", *args],
                          capture_output=True, text=True, input=stdin)


def test_gen_emits_schema_with_decimal_strings():
    proc = run("gen", "--n", "5", "--method", "1", "--t", "2")
    assert proc.returncode == 0
    obj = json.loads(proc.stdout)
    assert list(obj) == ["n", "roots", "certificates", "s", "reduced"]
    assert obj["n"] == 5
    assert obj["reduced"] is True
    assert all(isinstance(r, str) for r in obj["roots"])
    assert all(isinstance(c, str) for c in obj["certificates"])
    assert isinstance(obj["s"], str)
    assert sorted(int(r) for r in obj["roots"]) == M1_N5_T2


def test_gen_published_values():
    proc = run("gen", "--n", "6", "--method", "1", "--t", "2")
    assert sorted(int(r) for r in json.loads(proc.stdout)["roots"]) == \
        M1_N6_T2
    proc = run("gen", "--n", "5", "--method", "2", "--params", "1,2")
    assert proc.returncode == 0
    assert '"3023249"' in proc.stdout
    assert sorted(int(r) for r in json.loads(proc.stdout)["roots"]) == \
        M2_N5_12


def test_gen_is_byte_stable():
    a = run("gen", "--n", "7", "--method", "2", "--params", "2,1")
    b = run("gen", "--n", "7", "--method", "2", "--params", "2,1")
    assert a.stdout == b.stdout


def test_gen_degenerate_parameter_exits_2():
    proc = run("gen", "--n", "5", "--method", "1", "--t", "0")
    assert proc.returncode == 2
    assert proc.stdout == ""
    assert "vanishes" in proc.stderr


def test_gen_flag_mismatches_exit_2():
    assert run("gen", "--n", "5", "--method", "1").returncode == 2
    assert run("gen", "--n", "5", "--method", "2").returncode == 2
    assert run("gen", "--n", "9", "--method", "1", "--t", "2") \
        .returncode == 2
    assert run("gen", "--n", "5", "--method", "2",
               "--params", "1,2,3").returncode == 2


def test_verify_round_trip():
    gen = run("gen", "--n", "8", "--method", "2", "--params", "2,1")
    ver = run("verify", stdin=gen.stdout)
    assert ver.returncode == 0
    assert ver.stdout.strip() == "ok"


def test_verify_reads_files(tmp_path):
    gen = run("gen", "--n", "5", "--method", "2", "--params", "1,2")
    path = tmp_path / "system.json"
    path.write_text(gen.stdout)
    assert run("verify", str(path)).returncode == 0
    assert run("verify", str(tmp_path / "missing.json")).returncode == 3


def test_verify_hand_edited_root_fails_with_entry():
    gen = run("gen", "--n", "5", "--method", "2", "--params", "1,2")
    obj = json.loads(gen.stdout)
    obj["roots"][2] = str(int(obj["roots"][2]) + 1)
    ver = run("verify", stdin=json.dumps(obj))
    assert ver.returncode == 1
    assert "entry" in ver.stdout


def test_verify_malformed_json_exits_3():
    assert run("verify", stdin="{oops").returncode == 3
    assert run("verify", stdin='{"n": 5}').returncode == 3


def test_verify_allow_repeats():
    system = system_from_chain(lemma3_special(2, 3))
    text = system_to_json(system)
    assert run("verify", stdin=text).returncode == 1
    assert run("verify", "--allow-repeats", stdin=text).returncode == 0


def test_json_helpers_round_trip():
    system = system_from_chain(lemma3_special(3, 2))
    again = system_from_json(system_to_json(system))
    assert again.roots == system.roots
    assert again.certificates == system.certificates
    assert again.s == system.s


def test_catalog_list_and_eval():
    listing = run("catalog", "list")
    assert listing.returncode == 0
    assert len(listing.stdout.strip().splitlines()) >= 3

    ev = run("catalog", "eval", "n6-method2-deg38", "--params", "1,2")
    assert ev.returncode == 0
    roots = json.loads(ev.stdout)["roots"]
    assert sorted(int(r) for r in roots) == M2_N6_12

    ev = run("catalog", "eval", "n5-method1-deg17", "--t", "2")
    assert sorted(int(r) for r in json.loads(ev.stdout)["roots"]) == M1_N5_T2


def test_catalog_cross_check():
    proc = run("catalog", "cross-check", "n5-method2-deg30")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "OK (10 points)"


def test_catalog_bad_requests_exit_2():
    assert run("catalog", "eval", "no-such-id", "--params", "1,2") \
        .returncode == 2
    assert run("catalog", "eval", "n5-method2-deg30").returncode == 2
    assert run("catalog", "eval").returncode == 2


def test_sweep_method1_range_is_inclusive_and_verified():
    proc = run("sweep", "--n", "5", "--method", "1", "--t-range", "2:20")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert len(lines) == 19
    for line in lines:
        system = system_from_json(line)
        assert validate_system(system).ok


def test_sweep_method2_logs_degenerate_skips():
    proc = run("sweep", "--n", "6", "--method", "2", "--max-sum", "6")
    assert proc.returncode == 0
    assert "skipped (1, 1)" in proc.stderr
    for line in proc.stdout.splitlines():
        assert validate_system(system_from_json(line)).ok


def test_sweep_empty_range():
    proc = run("sweep", "--n", "5", "--method", "1", "--t-range", "9:5")
    assert proc.returncode == 0
    assert proc.stdout == ""


def test_sweep_deterministic_across_worker_counts():
    one = run("sweep", "--n", "5", "--method", "2", "--max-sum", "8")
    four = run("sweep", "--n", "5", "--method", "2", "--max-sum", "8",
               "--jobs", "4")
    assert one.stdout == four.stdout
    assert one.stdout  # not vacuous


def test_sweep_flag_mismatch_exits_2():
    assert run("sweep", "--n", "5", "--method", "1").returncode == 2
    assert run("sweep", "--n", "5", "--method", "2").returncode == 2
