import sys

from pyequipart.cli import main

sys.exit(main())
