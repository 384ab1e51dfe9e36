import sys

from nhv.cli import main

sys.exit(main())
