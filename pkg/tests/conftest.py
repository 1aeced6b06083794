import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from carebridge.knowledge import fixture_graph, load_graph

MINI_GRAPH_DOC = """\
# two-node fixture
N\tc-metformin\tmetformin\tmetformin|glucophage\tdrug\tThe usual first tablet for type 2 diabetes.
N\tc-t2dm\ttype 2 diabetes mellitus\ttype 2 diabetes mellitus|type 2 diabetes|T2DM|diabetes\tcondition\tA long-term condition where sugar builds up in the blood.
E\tc-metformin\ttreats\tc-t2dm
"""

CHAIN_GRAPH_DOC = """\
N\ta\talpha\talpha\tcondition\tFirst node in the chain.
N\tb\tbeta\tbeta\tsymptom\tSecond node in the chain.
N\tc\tgamma\tgamma\tmetric\tThird node in the chain.
N\td\tdelta\tdelta\tdrug\tIsolated node.
E\ta\trelated_to\tb
E\tb\tsymptom_of\tc
"""


@pytest.fixture(scope="session")
def mini_graph():
    return load_graph(MINI_GRAPH_DOC)


@pytest.fixture(scope="session")
def chain_graph():
    return load_graph(CHAIN_GRAPH_DOC)


@pytest.fixture(scope="session")
def big_graph():
    return fixture_graph()
