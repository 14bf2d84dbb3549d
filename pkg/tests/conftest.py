import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# Scale factor for the acceptance corpora (1.0 = full published scale).
ACCEPT_SCALE = float(os.environ.get("BRAIDRELAX_ACCEPT_SCALE", "1.0"))


def scaled(count: int, minimum: int = 5) -> int:
    return max(minimum, int(round(count * ACCEPT_SCALE)))
