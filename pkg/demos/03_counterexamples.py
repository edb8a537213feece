"""
When the flag hypotheses fail
==============================

The determinant formulas need their flag conditions.  These three small
instances have no admissible RPPs at all, yet the determinants are nonzero.
"""

from rppjt.cli import REMARK_INSTANCES, remark_report
from rppjt.polyring import canonical_string

for title, kind, lam, mu, alpha, beta in REMARK_INSTANCES:
    rep = remark_report(kind, lam, mu, alpha, beta)
    print(title)
    print(f"  lambda={lam} mu={mu} alpha={alpha} beta={beta}")
    name, value = rep["predicate"]
    print(f"  {name} = {value}")
    for row in rep["matrix"]:
        print("   ", " | ".join(canonical_string(e) for e in row))
    print("  det =", canonical_string(rep["det"]), "  enumeration =", canonical_string(rep["enum"]))
    print()
