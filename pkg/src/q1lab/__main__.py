import sys

from q1lab.cli import main

sys.exit(main())
