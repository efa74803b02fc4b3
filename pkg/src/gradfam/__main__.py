import sys

from gradfam.cli import main

sys.exit(main())
