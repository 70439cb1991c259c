"""Locate a triple with nonzero Jacobiator under the twisted bracket.

Runs the witness search on the three-variable bracket jacobiator over
the size-2 twisted realization and prints the assignment it finds; the
result is frozen as a regression fixture in the test suite.
"""

from freegp.parsing import parse, to_gp
from freegp.realize import Realization, evaluate_gp, identity_witness_search

J3 = "{{t1,t2},t3} + {{t2,t3},t1} + {{t3,t1},t2}"


def main():
    f = to_gp(parse(J3))
    realization = Realization("gps", 2)
    witness = identity_witness_search(f, realization, budget=200, seed=0)
    if witness is None:
        raise SystemExit("no witness found; the bracket looks Poisson, which is wrong")
    print(f"method   : {witness.method} (attempt {witness.attempts})")
    for v, r in sorted(witness.assignment.items()):
        print(f"  {v.name} = {r!r}")
    print(f"  value  = {witness.value!r}")
    check = evaluate_gp(f, witness.assignment, realization)
    assert not check.is_zero()
    print("verified : jacobiator of the assigned triple is nonzero")


if __name__ == "__main__":
    main()
