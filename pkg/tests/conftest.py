import pytest

from kernel.builtin import get_builtin
from kernel.extended import Special
from ladder.ladder import Ladder

T_STAR, L_STAR, R_STAR = Special.T, Special.L, Special.R


@pytest.fixture
def chain2():
    return get_builtin("orthodox-chain2")


@pytest.fixture
def chain3():
    return get_builtin("orthodox-chain3")


@pytest.fixture
def div12():
    return get_builtin("orthodox-div12")


@pytest.fixture
def band():
    return get_builtin("demo-band")


@pytest.fixture
def cs():
    return get_builtin("cs-demo")


@pytest.fixture
def lro_g(chain3):
    """Root G, G at Tr, T* at every other nonempty word."""
    return Ladder(chain3, "G", (T_STAR, T_STAR), ("G", T_STAR))


@pytest.fixture
def p6_gap(cs):
    """Passes the two literal single-letter instances below Tℓ and Tr but fails P6 deeper."""
    return Ladder(cs, "CS", ("CS", "CSA", T_STAR), ("CS", "CSA", T_STAR))
