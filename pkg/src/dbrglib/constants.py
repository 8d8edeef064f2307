from typing import Dict

VERIFY_SIZE_CAP: int = 5000
""" Largest graph the ``verify`` command accepts without ``--force`` (n exact solves of O(n^3)) """

DEFAULT_DECIMAL_DIGITS: int = 12
""" Digits used by the display-only decimal columns when ``--decimal`` is given without a value """

QSD_SWEEP_LIMIT: int = 20
""" Default upper bound on r and k when sweeping quasi-symmetric design parameters """

BIPARTITE_DRG_SWEEP_LIMIT: int = 12
""" Default upper bound on k when sweeping the arrays {k; 1, mu, k} """

EXIT_CODES: Dict[str, int] = {
    "success": 0,
    "verdict_false": 1,
    "input_error": 2,
}
