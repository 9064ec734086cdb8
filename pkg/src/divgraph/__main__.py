import sys

from divgraph.cli import main

sys.exit(main())
