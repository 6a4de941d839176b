import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sameorder import eval_expr, parse_group_expr


@pytest.fixture
def build():
    """Build a group from its expression text."""
    return lambda text: eval_expr(parse_group_expr(text))
