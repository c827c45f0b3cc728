import sys

from divstar.cli import main

sys.exit(main())
