import sys

from gekr.main import main

sys.exit(main())
