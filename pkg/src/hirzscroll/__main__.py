import sys

from hirzscroll.cli import main

sys.exit(main())
