import sys

from toruscolor._cli import main

sys.exit(main())
