import pytest

from oddwheel.wheel import WheelLengths


@pytest.fixture
def drawn_w5():
    """The W5 embedding with characteristics 7, 7, 2, 7, 2."""
    return WheelLengths((4, 6, 6, 5, 6), (4, 9, 9, 4, 6))


@pytest.fixture
def rectangle_corner():
    """W3 with hub at a corner of the 3x4 rectangle."""
    return WheelLengths((4, 5, 3), (3, 4, 5))


@pytest.fixture
def unit_w5():
    return WheelLengths((1,) * 5, (1,) * 5)


@pytest.fixture
def unit_w6():
    return WheelLengths((1,) * 6, (1,) * 6)
