# src/core_logic/__main__.py

import sys

from src.core_logic.cli import run


def main():
    if len(sys.argv) > 1:
        sys.exit(run(sys.argv[1:]))
    print("Available commands in src.core_logic:")
    print("  Real     : rank | index | pinv | ginv | dinv | coreinv   --input FILE")
    print("  Dual     : mpdgi | dmpgi | dggi | dcgi | ddgi | ddmpgi   --input FILE [--batch DIR --summary FILE]")
    print("  Solver   : solve --input FILE --rhs FILE [--z FILE]")
    print("  Verify   : verify --kind KIND --input FILE --candidate FILE [--k K]")
    print("  Laws     : law --kind {mp,group,drazin,core,absorption} --input A --input C [--form general]")
    print("  Orders   : order --kind {group,core} --input X --input Y")
    print("  Fixtures : gen --family {ddgi,group,ordered,chain,commuting,absorption} --n N --r R --seed S")
    print("")
    print("Or use the wrapper:")
    print("  python main.py ddgi --input datasets/ddgi_index2.json")


if __name__ == "__main__":
    main()
