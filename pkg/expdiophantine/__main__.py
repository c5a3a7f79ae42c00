import sys

from expdiophantine.main import run

sys.exit(run())
