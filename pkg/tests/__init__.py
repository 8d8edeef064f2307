# type: ignore

from tests.biregular import *

from tests.test_utils import TestUtils
from tests.test_matrix import TestMatrix
from tests.test_network import TestNetwork
from tests.test_potential import TestPotential
from tests.test_classify import TestClassify
from tests.test_search import TestSearch
from tests.test_cli import TestCli
