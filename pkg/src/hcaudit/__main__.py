from hcaudit.cli import main
import sys

sys.exit(main())
