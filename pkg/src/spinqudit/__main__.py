import sys

from spinqudit.cli import main

sys.exit(main())
