"""Configuration settings for the tightmaps enumeration engine."""

import os
from typing import Final

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Oracle size limits
MAX_EDGES: Final[int] = int(os.getenv("TIGHTMAPS_MAX_EDGES", "8"))
MAX_EDGES_FAST: Final[int] = int(os.getenv("TIGHTMAPS_MAX_EDGES_FAST", "5"))
MAX_BLOSSOMING: Final[int] = int(os.getenv("TIGHTMAPS_MAX_BLOSSOMING", "3"))
MAX_TREE_HALF_DEGREE_SUM: Final[int] = int(os.getenv("TIGHTMAPS_MAX_TREE_HALF_DEGREE_SUM", "6"))
MAX_TWO_FACE_EDGES: Final[int] = int(os.getenv("TIGHTMAPS_MAX_TWO_FACE_EDGES", "8"))

# Series and memoization
SERIES_ORDER: Final[int] = int(os.getenv("TIGHTMAPS_SERIES_ORDER", "6"))
U_CACHE_SIZE: Final[int] = int(os.getenv("TIGHTMAPS_U_CACHE_SIZE", "4096"))

# Execution
WORKERS: Final[int] = int(os.getenv("TIGHTMAPS_WORKERS", "1"))
LOG_LEVEL: Final[str] = os.getenv("TIGHTMAPS_LOG_LEVEL", "INFO")
OUTPUT_FORMAT: Final[str] = os.getenv("TIGHTMAPS_OUTPUT_FORMAT", "table")
MAX_ATTACHING_POINTS: Final[int] = int(os.getenv("TIGHTMAPS_MAX_ATTACHING_POINTS", "6"))
