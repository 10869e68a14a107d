import sys

from autowave.cli.main import main

sys.exit(main())
