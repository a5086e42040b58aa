import sys

from hyperboloid_cli.main import main

sys.exit(main())
