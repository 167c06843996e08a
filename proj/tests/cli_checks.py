#!/usr/bin/env python3
"""End-to-end checks of the resheight CLI: exit codes, JSON/CSV shapes,
environment overrides, and byte determinism."""
import json
import os
import subprocess
import sys

CLI = sys.argv[1]
checks = 0


def run(*args, env_extra=None, expect_rc=0):
    global checks
    env = os.environ.copy()
    env.pop("RESHEIGHT_NMAX", None)
    if env_extra:
        env.update(env_extra)
    p = subprocess.run([CLI, *args], capture_output=True, text=True, env=env)
    assert p.returncode == expect_rc, (
        f"{args}: expected rc {expect_rc}, got {p.returncode}\n"
        f"stdout: {p.stdout[:2000]}\nstderr: {p.stderr[:2000]}"
    )
    checks += 1
    return p


def jrun(*args, **kw):
    return json.loads(run(*args, **kw).stdout)


# --- usage errors ---------------------------------------------------------
run(expect_rc=2)  # a subcommand is required
run("bogus", expect_rc=2)
run("--help")  # help exits 0
run("expand", "--m", "2", expect_rc=2)  # missing required --n
run("verify", "bogus", expect_rc=2)  # unknown suite name rejected by the parser
run("cubic", "--n", "7", expect_rc=2)  # neither --l nor --all-l
p = run("quad", "--n", "2", expect_rc=2)  # below the n >= 3 domain
assert p.stderr.startswith("error:"), p.stderr

# --- feasibility exits ----------------------------------------------------
p = run("expand", "--m", "5", "--n", "2", expect_rc=3)
assert p.stderr.startswith("feasibility:"), p.stderr
run("cubic", "--n", "40", "--l", "7", expect_rc=3)  # mid layer beyond the slice envelope
run("cubic", "--n", "7", "--l", "3", "--method", "formula", expect_rc=3)  # formulas need n >= 10
run("conjecture", "--m", "5", "--n", "3", expect_rc=3)

# --- expand ---------------------------------------------------------------
j = jrun("expand", "--m", "2", "--n", "4")
assert j["m"] == 2 and j["n"] == 4
coeffs = [int(t["coeff"]) for t in j["terms"]]
assert all(len(t["exps"]) == 8 for t in j["terms"])
assert int(j["height"]) == max(abs(c) for c in coeffs) == 4
exps = [tuple(t["exps"]) for t in j["terms"]]
assert exps == sorted(exps), "terms must be in canonical order"
assert jrun("expand", "--m", "2", "--n", "3", "--engine", "naive") == jrun(
    "expand", "--m", "2", "--n", "3"
)
csv = run("--out", "csv", "expand", "--m", "1", "--n", "2").stdout
assert csv.splitlines()[0] == "f_0,f_1,g_0,g_1,g_2,coeff", csv

# --- quad -----------------------------------------------------------------
j = jrun("quad", "--n", "9")
assert j["n"] == 9 and j["A"] == 3 and j["height"] == "30"
assert j["extremal_exps"] == [3, 3, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]
j = jrun("quad", "--n", "8", "--profile")
assert [row["n_P_z"] for row in j["profile"]] == ["1", "8", "20", "16", "2"]
assert max(int(r["n_P_z"]) for r in j["profile"]) == int(j["height"])
csv = run("quad", "--n", "9", "--out", "csv").stdout  # global flag after the subcommand
assert csv.splitlines()[0] == "n,A,height" and csv.splitlines()[1] == "9,3,30", csv

# --- cubic ----------------------------------------------------------------
j = jrun("cubic", "--n", "7", "--l", "5")
assert j["n"] == 7 and j["layers"][0]["l"] == 5 and j["layers"][0]["value"] == "13"
j = jrun("cubic", "--n", "12", "--all-l")
vals = [int(layer["value"]) for layer in j["layers"]]
assert len(vals) == 13
assert vals == vals[::-1], "reciprocal symmetry H_l = H_(n-l)"
assert max(vals) == 252 and vals[0] == 252, "argmax layer at n=12 is l=0"
base = jrun("cubic", "--n", "12", "--l", "3")["layers"][0]
for method in ("formula", "expand"):
    alt = jrun("cubic", "--n", "12", "--l", "3", "--method", method)["layers"][0]
    assert alt == base, method
csv = run("--out", "csv", "cubic", "--n", "7", "--l", "5").stdout
assert csv.splitlines()[0] == "l,value,argmax"
assert csv.splitlines()[1].startswith("5,13,"), csv

# --- tables ---------------------------------------------------------------
j = jrun("tables", "an")
assert j[0] == {"A": 1, "n": [3, 4]}
assert j[-1]["A"] == 27 and j[-1]["n"][-1] == 99
j = jrun("tables", "an", env_extra={"RESHEIGHT_NMAX": "20"})
assert j[-1]["n"][-1] == 20, "env override should cap the table"
j = jrun("tables", "an", "--max", "10", env_extra={"RESHEIGHT_NMAX": "20"})
assert j[-1]["n"][-1] == 10, "explicit flag wins over the env override"
run("tables", "an", env_extra={"RESHEIGHT_NMAX": "junk"}, expect_rc=2)
csv = run("--out", "csv", "tables", "an", "--max", "10").stdout
assert csv.splitlines()[0] == "A_n,n" and csv.splitlines()[1] == "1,3 4", csv
csv = run("--out", "csv", "tables", "hl", "--max", "12").stdout
lines = csv.splitlines()
assert lines[0] == "n,l" and len(lines) == 13
assert lines[5] == "5,1 2" and lines[6] == "6,3", lines

# --- asym -----------------------------------------------------------------
j = jrun("asym", "--case", "quad", "--n-max", "400")
assert j["case"] == "quad" and len(j["grid"]) == 13
assert abs(1 - j["rho_end"]) < 0.05
assert int(j["grid"][-1]["n"]) == 400
csv = run("--out", "csv", "asym", "--case", "quad", "--n-max", "400").stdout
assert "# slope=" in csv and csv.splitlines()[0] == "n,exact,estimate,ratio"

# --- constants ------------------------------------------------------------
j = jrun("constants")
assert len(j["constants"]) == 8
values = [c["value"] for c in j["constants"]]
assert any(abs(v - 1.8392867552141611) < 1e-12 for v in values)
assert j["identities"]["pass"] is True
assert abs(j["identities"]["constraint"]) <= 1e-10

# --- verify ---------------------------------------------------------------
p1 = run("verify", "quad-oracle", "--n-max", "8")
p2 = run("verify", "quad-oracle", "--n-max", "8")
assert p1.stdout == p2.stdout, "verify output must be byte-deterministic"
j = json.loads(p1.stdout)
assert j[0]["suite"] == "quad-oracle" and j[0]["cases_run"] == 12
assert j[0]["failures"] == [] and j[0]["passed"] is True
assert "wall" not in p1.stdout
csv = run("--out", "csv", "verify", "quad-oracle", "cubic-oracle", "--n-max", "8").stdout
lines = csv.splitlines()
assert lines[0] == "suite,cases_run,failures,passed"
assert lines[1] == "quad-oracle,12,0,true" and lines[2].startswith("cubic-oracle,"), lines

# --- conjecture -----------------------------------------------------------
j = jrun("conjecture", "--m", "3", "--n", "10")
assert j == {"m": 3, "n": 10, "full_height": "105", "binomial_height": "100", "equal": False}
csv = run("--out", "csv", "conjecture", "--m", "2", "--n", "6").stdout
assert csv.splitlines()[0] == "m,n,full_height,binomial_height,equal"
assert csv.splitlines()[1] == "2,6,9,9,true", csv

# --- quiet ----------------------------------------------------------------
p = run("--quiet", "quad", "--n", "9")
assert p.stdout == ""
p = run("--quiet", "verify", "quad-oracle", "--n-max", "8")
assert p.stdout == ""

print(f"cli_checks: {checks} invocations OK")
