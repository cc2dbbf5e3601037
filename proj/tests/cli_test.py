import json
import subprocess
import sys

cli = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def expect(cond, what):
    if not cond:
        failures.append(what)


def roundtrip(text):
    data = json.loads(text)
    for rec in data if isinstance(data, list) else [data]:
        once = json.dumps(rec, separators=(",", ":"), ensure_ascii=False)
        again = json.dumps(json.loads(once), separators=(",", ":"), ensure_ascii=False)
        expect(once == again, "re-emitted record differs")
    emitted = json.dumps(data, separators=(",", ":"), ensure_ascii=False)
    expect(emitted == text.strip(), "JSON output is not in canonical form")
    return data


example = "E:1 x=2,y=2,z=2 a=1,2 c=3,2 b=3,1"
r = run("count", example, "--method", "both", "--json")
expect(r.returncode == 0, f"count exit {r.returncode}")
recs = roundtrip(r.stdout)
expect(len(recs) == 2 and recs[0]["count"] == recs[1]["count"], "count methods disagree")
expect(recs[0]["spec"] == example, "spec text not preserved")

r = run("count", recs[0]["spec"], "--method", "formula", "--json")
expect(roundtrip(r.stdout)[0]["count"] == recs[0]["count"], "spec from JSON does not reproduce the count")

r = run("count", "E:1 x=1,y=1,z=2 a=1 c=1 b=1")
expect(r.returncode == 2, f"parity error exit {r.returncode}")
r = run("count", "garbage")
expect(r.returncode == 2, f"parse error exit {r.returncode}")
r = run("count", "E:1 x=3,y=3,z=3 a=1 c=1 b=1", "--method", "enumerate", "--limit-states", "2")
expect(r.returncode == 3, f"resource limit exit {r.returncode}")
r = run("recur", "Q1-lt", example)
expect(r.returncode == 2, f"unknown recurrence exit {r.returncode}")
r = run("bogus-subcommand")
expect(r.returncode == 2, f"usage error exit {r.returncode}")

r = run("recur", "E1-le", example, "--json")
expect(r.returncode == 0, f"recur exit {r.returncode}")
roundtrip(r.stdout)

r = run("verify", "--families", "E", "--max-x", "1", "--max-z", "1", "--max-fern", "1", "--json")
expect(r.returncode == 0, f"verify exit {r.returncode}")
roundtrip(r.stdout)

r = run("sweep", "--families", "K", "--max-x", "1", "--max-z", "1", "--max-fern", "1", "--csv")
expect(r.returncode == 0 and r.stdout.count("\n") > 2, "sweep csv")

r = run("recur", "--list", "--json")
expect(r.returncode == 0 and len(roundtrip(r.stdout)) == 66, "recurrence list")

r = run("selftest")
expect(r.returncode == 0, f"selftest exit {r.returncode}")

for f in failures:
    print("FAIL:", f)
print("cli checks:", "FAIL" if failures else "PASS")
sys.exit(1 if failures else 0)
