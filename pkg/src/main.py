import sys
from pathlib import Path

# Add src directory to Python path
src_dir = Path(__file__).parent
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

import logging

from infrastructure.config import LOG_FORMAT
from presentation import cli_main


# Configure logging; records go to stderr, stdout carries the summary
logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, stream=sys.stderr)


if __name__ == "__main__":
    sys.exit(cli_main(sys.argv[1:]))
