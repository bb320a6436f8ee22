import pytest

from christmas_lights import TranspositionTable, parse_position

LEFT = "bbsssbbbbbsbbbbssbb"   # 2̄ |3| 5̄ |1| 4̄ |2| 2̄
RIGHT = "bbsbbbsbsssb"         # 2̄ |1| 3̄ |1| 1̄ |3| 1̄
WORKED_SUM = "b2s3b5s1b4s2b2 + b2s1b3s1b1s3b1"


@pytest.fixture(scope="session")
def table():
    return TranspositionTable()


@pytest.fixture
def worked_position():
    return parse_position(WORKED_SUM)
