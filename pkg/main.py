import sys

import common
from clone_entanglement.cli import main


if __name__ == "__main__":
    common.setup_logging()
    sys.exit(main())
