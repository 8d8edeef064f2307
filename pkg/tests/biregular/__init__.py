# type: ignore

from tests.biregular.test_array import TestBiregularArray
from tests.biregular.test_feasibility import TestFeasibility
from tests.biregular.test_closed_form import TestClosedForm
from tests.biregular.test_detection import TestDetection
