import sys

from genus2ap.cli import main

sys.exit(main())
