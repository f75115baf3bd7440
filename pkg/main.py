# main.py

import sys

from src.core_logic.cli import run

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
