"""The formal classification pipeline, degree by degree: assemble the
singularity conditions over operator-monomial columns, reduce, change
variables, and compare against the transcribed fixture systems.

Degrees -1 and -2 run in about a second; -3, -4 and -5 take a few seconds
to half a minute each.
"""

import json

from ck6.classify import assemble_formal_system, reduce_and_substitute

print("== stage-1 shapes and ranks ==")
for degree in (-1, -2, -3):
    sys1 = assemble_formal_system(degree)
    red, rank = sys1.rref()
    print(f"  degree {degree}: {sys1.shape[0]} x {sys1.shape[1]}, rank {rank},"
          f" corank {sys1.shape[1] - rank}")

print("\n== the full pipeline at degree -1 ==")
report = reduce_and_substitute(-1)
print(json.dumps(report, indent=2, default=str))

print("\n== the degree -2 impossibility ==")
report = reduce_and_substitute(-2)
for check in report["checks"]:
    print(f"  {check['name']}: {'ok' if check['ok'] else 'FAIL'}")
print("  corank", report["stage1_corank"],
      "- every solution is forced onto a non-dominant weight, so no"
      " singular vectors exist at this degree")
