import sys

from fibhess.cli import main

sys.exit(main())
