#!/usr/bin/env python3
# Copyright 2026 The fogplace Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Solves exported LP models with HiGHS and compares against expected optima.

Usage: lp_crosscheck.py DIR [--rel-tol 1e-6]

DIR holds *.lp files and expected.json mapping each file name to the
branch-and-bound objective. Exit status: 0 all match, 1 mismatch, 77 when
highspy is not installed.
"""

import argparse
import json
import pathlib
import sys


def solve(highspy, path):
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 1e-9)
    h.setOptionValue("mip_feasibility_tolerance", 1e-9)
    h.setOptionValue("primal_feasibility_tolerance", 1e-9)
    if h.readModel(str(path)) != highspy.HighsStatus.kOk:
        raise RuntimeError(f"{path.name}: HiGHS could not read the model")
    h.run()
    status = h.getModelStatus()
    if status != highspy.HighsModelStatus.kOptimal:
        raise RuntimeError(f"{path.name}: HiGHS status {h.modelStatusToString(status)}")
    return h.getInfo().objective_function_value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("dir", type=pathlib.Path)
    ap.add_argument("--rel-tol", type=float, default=1e-6)
    args = ap.parse_args()
    try:
        import highspy
    except ImportError:
        print("highspy not installed; skipping")
        return 77

    expected = json.loads((args.dir / "expected.json").read_text())
    failures = 0
    for name in sorted(expected):
        want = expected[name]
        try:
            got = solve(highspy, args.dir / name)
        except RuntimeError as e:
            print(f"FAIL {e}")
            failures += 1
            continue
        rel = abs(got - want) / max(1.0, abs(want))
        ok = rel <= args.rel_tol
        failures += not ok
        print(f"{'ok  ' if ok else 'FAIL'} {name}: highs {got:.9f} bnb {want:.9f} rel {rel:.2e}")
    print(f"{len(expected) - failures}/{len(expected)} models agree")
    return 0 if failures == 0 and expected else 1


if __name__ == "__main__":
    sys.exit(main())
