import sys

from distlap.cli import main

sys.exit(main())
