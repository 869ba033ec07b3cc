import sys

from sylow2.cli import main

sys.exit(main())
