import sys

from monoid_bench.cli import main

sys.exit(main())
