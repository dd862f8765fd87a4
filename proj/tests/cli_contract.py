"""Exit-code, schema and determinism contract of the eccensus command line."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMA = sys.argv[1], sys.argv[2]
failures = []


def run(args, env_extra=None):
    env = dict(os.environ)
    env.pop("ECCENSUS_CACHE", None)
    env.update(env_extra or {})
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def expect(name, cond, detail=""):
    print(("[PASS] " if cond else "[FAIL] ") + name + (f": {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


with open(SCHEMA) as fh:
    schema = json.load(fh)

with tempfile.TemporaryDirectory() as tmp:
    cache = os.path.join(tmp, "cache")
    common = ["--cache-dir", cache]

    def out(name):
        return os.path.join(tmp, name)

    # Exit codes.
    expect("even order rejected", run(["census", "--order", "4", *common]).returncode == 2)
    expect("unknown subcommand rejected", run(["bogus"]).returncode == 2)
    expect("bad variant rejected", run(["verify", "gl2", "--variant", "neither"]).returncode == 2)
    expect("bad m rejected", run(["census", "--order", "9", "--m", "5", *common]).returncode == 2)
    expect("zero threads rejected", run(["census", "--order", "9", "--threads", "0", *common]).returncode == 2)

    # Census rows and the skipped-prime log on stderr only.
    r = run(["census", "--order", "7", "--m", "1", "--out", out("n7.csv"), *common])
    expect("census N=7 exit 0", r.returncode == 0, r.stderr)
    lines = open(out("n7.csv"), newline="").read().split("\n")
    expect("census header", lines[0] == "N,N1,N2,m,p,weighted,class_value,match", lines[0])
    expect("census rows", [l.split(",")[4] for l in lines[1:] if l] == ["5", "7", "11", "13"], str(lines))
    expect("skipped prime logged", "p=3" in r.stderr, r.stderr)
    expect("LF line endings", "\r" not in open(out("n7.csv"), newline="").read())

    # Determinism across thread counts and cache state.
    a = run(["census", "--group", "3x9", "--threads", "1", "--out", out("g1.csv"), "--no-cache"])
    b = run(["census", "--group", "3x9", "--threads", "3", "--out", out("g2.csv"), *common])
    c = run(["census", "--group", "3x9", "--threads", "2", "--out", out("g3.csv"), *common])
    same = open(out("g1.csv"), "rb").read() == open(out("g2.csv"), "rb").read() == open(out("g3.csv"), "rb").read()
    expect("census output independent of threads and cache", a.returncode == b.returncode == c.returncode == 0 and same)
    expect("cache reused", "0 sweeps computed" in c.stderr, c.stderr)

    # Cache directory: flag beats environment.
    env_cache = os.path.join(tmp, "env-cache")
    run(["census", "--order", "9", "--m", "3"], {"ECCENSUS_CACHE": env_cache})
    expect("ECCENSUS_CACHE used", os.path.isdir(env_cache) and len(os.listdir(env_cache)) > 0)
    flag_cache = os.path.join(tmp, "flag-cache")
    run(["census", "--order", "11", "--cache-dir", flag_cache], {"ECCENSUS_CACHE": env_cache})
    expect("--cache-dir beats ECCENSUS_CACHE", os.path.isdir(flag_cache))

    # Verify reports validate and follow the exit-code contract.
    suites = [
        (["verify", "schoof", "--nmax", "45"], 0),
        (["verify", "sieve", "--gmax", "45"], 0),
        (["verify", "lemma14"], 0),
        (["verify", "lemma14", "--variant", "original"], 3),
        (["verify", "assembly", "--gmax", "500", "--variant", "erratum"], 0),
        (["verify", "assembly", "--gmax", "100", "--variant", "both"], 0),
        (["verify", "gl2"], 0),
        (["verify", "aut", "--gmax", "100"], 0),
    ]
    for i, (args, code) in enumerate(suites):
        path = out(f"v{i}.json")
        r = run([*args, "--out", path, *common])
        name = " ".join(args)
        expect(f"{name} exit {code}", r.returncode == code, f"got {r.returncode}: {r.stderr[-300:]}")
        try:
            report = json.load(open(path))
            jsonschema.validate(report, schema)
            ok = report["all_pass"] == (code == 0) and report["summary"]["failed"] == sum(
                c["status"] == "fail" for c in report["cases"])
            expect(f"{name} report valid", ok)
        except Exception as e:  # noqa: BLE001
            expect(f"{name} report valid", False, repr(e))

    # Constants tables.
    r = run(["constants", "kg", "--group", "3x3", "--variant", "both", "--ell-cutoff", "1000"])
    rows = [l.split(",") for l in r.stdout.strip().split("\n")]
    expect("kg both-variant finite parts", r.returncode == 0 and rows[0][-1] == "differs"
           and rows[1][3] == "8/9" and rows[2][3] == "20/27", r.stdout)
    r = run(["constants", "factors", "--order", "9", "--m", "3"])
    expect("factor table header", r.stdout.startswith("ell,kind,variant,numerator,denominator\n"), r.stdout[:80])
    r = run(["constants", "k0", "--order", "9", "--m", "3", "--u", "100", "--v", "5", "--format", "json"])
    try:
        k0 = json.loads(r.stdout)
        expect("k0 json", r.returncode == 0 and k0[0]["euler_finite"] == "1/6", r.stdout[:200])
    except ValueError as e:
        expect("k0 json", False, repr(e))
    r = run(["constants", "bdh", "--x", "100000", "--y", "1000", "--q", "100"])
    expect("bdh table", r.returncode == 0 and r.stdout.startswith("X,Y,Q,variance_sum,comparator,ratio\n"))

print(f"{len(failures)} contract failures")
sys.exit(1 if failures else 0)
