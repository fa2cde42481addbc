#!/usr/bin/env python3
"""Solve a DIMACS CNF file with python-sat and print SAT-competition output."""
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main() -> int:
    if len(sys.argv) != 2:
        print("usage: pysat_solve.py FILE.cnf", file=sys.stderr)
        return 2
    cnf = CNF(from_file=sys.argv[1])
    with Solver(name="cadical153", bootstrap_with=cnf.clauses) as s:
        if not s.solve():
            print("s UNSATISFIABLE")
            return 20
        print("s SATISFIABLE")
        model = s.get_model()
        for i in range(0, len(model), 20):
            print("v " + " ".join(str(x) for x in model[i:i + 20]))
        print("v 0")
        return 10


if __name__ == "__main__":
    sys.exit(main())
