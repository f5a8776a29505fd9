import pytest

from paracr.rootsys import AlgebraType

# Every algebra within the enumeration range of the tool.
ALGEBRAS = (
    [AlgebraType("A", n) for n in range(1, 9)]
    + [AlgebraType("B", n) for n in range(2, 9)]
    + [AlgebraType("C", n) for n in range(3, 9)]
    + [AlgebraType("D", n) for n in range(4, 9)]
    + [AlgebraType("E", n) for n in (6, 7, 8)]
    + [AlgebraType("F", 4), AlgebraType("G", 2)]
)

SMALL_ALGEBRAS = [a for a in ALGEBRAS if a.rank <= 5]


@pytest.fixture(params=ALGEBRAS, ids=str)
def algebra(request):
    return request.param


@pytest.fixture(params=SMALL_ALGEBRAS, ids=str)
def small_algebra(request):
    return request.param
