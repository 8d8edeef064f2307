# type: ignore

import dbrglib.constants as constants
import dbrglib.errors as errors
import dbrglib.utils as utils
import dbrglib.network as network
import dbrglib.potential as potential
import dbrglib.biregular as biregular
import dbrglib.classify as classify
import dbrglib.search as search

from dbrglib.network import Network, DistanceTable, build_network, parse_edge_list, read_edge_list
from dbrglib.matrix import RationalMatrix
from dbrglib.biregular import BiregularArray, DbrgEquilibrium
from dbrglib.errors import DbrgError
