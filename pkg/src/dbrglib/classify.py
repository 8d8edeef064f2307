"""
Case analysis of the distance-biregular graphs that may have the M-property.

Only small eccentricities are possible: ``D0 <= 3`` and ``D1 <= 4``. What remains is the digon,
the stars, the complete bipartite graphs, the bipartite distance-regular graphs of diameter 3 and
the incidence graphs of quasi-symmetric designs with ``D0 = 3`` and ``D1 = 4``; the last two
families get exact criteria of their own.
"""

from dbrglib.biregular.array import BiregularArray
from dbrglib.biregular.closed_form import m_property_array
from dbrglib.biregular.families import bipartite_drg_d3_array
from dbrglib.errors import DbrgError, InvalidArray, ParamOutOfRange, InconsistentParams
from dbrglib.serializable import Serializable
from dataclasses import dataclass
from typing import Dict, Any, List, Optional
from fractions import Fraction
from math import isqrt
from enum import Enum
import logging

logger: logging.Logger = logging.getLogger(__name__)

class CaseLabel(Enum):
    """ The cases of distance-biregular graphs by eccentricities """

    DIGON = "Digon"
    STAR = "Star"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    BIPARTITE_DRG_D3 = "BipartiteDRG_D3"
    QSD_D3D4 = "QSD_D3D4"
    OUT_OF_BOUNDS = "OutOfBounds"

def classify_case(a: BiregularArray) -> CaseLabel:
    """ Maps a validated array to its case.

    Arrays with ``D0 > 3`` or ``D1 > 4`` are OutOfBounds: they can not have the M-property.

    Raises:
        InvalidArray: Raised for eccentricity and degree combinations that no validated array has.
    """

    if a.D0 > 3 or a.D1 > 4:
        return CaseLabel.OUT_OF_BOUNDS

    cases: Dict[tuple, CaseLabel] = {
        (1, 1, True): CaseLabel.DIGON,
        (1, 2, False): CaseLabel.STAR,
        (2, 2, True): CaseLabel.COMPLETE_BIPARTITE,
        (2, 2, False): CaseLabel.COMPLETE_BIPARTITE,
        (3, 3, True): CaseLabel.BIPARTITE_DRG_D3,
        (3, 4, False): CaseLabel.QSD_D3D4,
    }
    label: Optional[CaseLabel] = cases.get((a.D0, a.D1, a.k0 == a.k1))
    if label is None or (a.k0 < a.k1):
        raise InvalidArray(f"No case covers D0={a.D0}, D1={a.D1}, k0={a.k0}, k1={a.k1}")
    return label

def bipartite_drg_d3_m(k: int, mu: int) -> bool:
    """ M-property of the bipartite distance-regular graph ``{k; 1, mu, k}``: ``4k/5 <= mu <= k - 1``

    Raises:
        ParamOutOfRange: Raised unless ``1 <= mu <= k - 1``.
    """

    if not 1 <= mu <= k - 1:
        raise ParamOutOfRange(f"The array {{k; 1, mu, k}} needs 1 <= mu <= k - 1 but got k={k}, mu={mu}")
    return Fraction(4 * k, 5) <= mu

def bipartite_drg_d3_report(k: int, mu: int) -> Dict[str, Any]:
    """ The M-property verdict of ``{k; 1, mu, k}`` along with two realizability flags.

    ``antipodal`` marks ``mu = k - 1``. Otherwise an incidence graph of a symmetric design needs
    ``k - mu`` to be a perfect square, which ``k_minus_mu_square`` reports; neither flag changes the
    verdict.
    """

    return {
        "k": k,
        "mu": mu,
        "m_property": bipartite_drg_d3_m(k, mu),
        "antipodal": mu == k - 1,
        "k_minus_mu_square": isqrt(k - mu) ** 2 == k - mu
    }

@dataclass(frozen = True)
class QsdParams():
    """ Parameters of a quasi-symmetric 2-design with intersection numbers 0 and y.

    Args:
        r (int): The replication number, the number of blocks through a point.
        k (int): The block size.
        lam (int): The number of blocks through two points.
        y (int): The nonzero intersection number of two blocks.
    """
    r: int
    k: int
    lam: int
    y: int

    def violations(self) -> List[str]:
        """ The parameter relations that do not hold, empty for a consistent set """

        failed: List[str] = []
        if min(self.r, self.k, self.lam, self.y) < 1:
            failed.append("r, k, lambda and y must be positive")
        if not self.r > self.lam:
            failed.append(f"r > lambda fails: r={self.r}, lambda={self.lam}")
        if (self.y - 1) * (self.r - 1) != (self.k - 1) * (self.lam - 1):
            failed.append(f"(y-1)(r-1) = (k-1)(lambda-1) fails: {(self.y - 1) * (self.r - 1)} != {(self.k - 1) * (self.lam - 1)}")
        if self.y >= 1 and (self.k * self.lam) % self.y != 0:
            failed.append(f"y must divide k lambda: y={self.y}, k lambda={self.k * self.lam}")
        if not 0 < self.y < self.k:
            failed.append(f"0 < y < k fails: y={self.y}, k={self.k}")
        return failed

    def require_consistent(self) -> None:
        """ Raises InconsistentParams naming the first violated relation """
        failed: List[str] = self.violations()
        if failed:
            raise InconsistentParams(f"Inconsistent design parameters {self}: {failed[0]}")

    def to_dict(self) -> Dict[str, Any]:
        """ Converts the parameters to a dictionary """
        return {"r": self.r, "k": self.k, "lambda": self.lam, "y": self.y}

    @classmethod
    def from_dict(cls, dictionary: Dict[str, Any]) -> 'QsdParams':
        """ Loads the parameters from a dictionary with the keys r, k, lambda and y """
        return cls(
            r = int(dictionary['r']),
            k = int(dictionary['k']),
            lam = int(dictionary['lambda']),
            y = int(dictionary['y'])
        )

def qsd_m_condition(p: QsdParams) -> bool:
    """ M-property of the incidence graph with ``D0 = 3`` and ``D1 = 4`` of a quasi-symmetric design:
    ``(k - 1)(r - lambda)((k + r)^2 - lambda k) <= k^2 lambda^2``

    Raises:
        InconsistentParams: Raised when the parameters violate one of their relations.
    """

    p.require_consistent()
    lhs: int = (p.k - 1) * (p.r - p.lam) * ((p.k + p.r) ** 2 - p.lam * p.k)
    return lhs <= p.k ** 2 * p.lam ** 2

def build_case5_array(p: QsdParams) -> BiregularArray:
    """ The array ``{r; 1, lambda, k | k; 1, y, k lambda / y, k}`` of the design incidence graph

    Raises:
        InconsistentParams: Raised when the parameters violate one of their relations.
    """

    p.require_consistent()
    return BiregularArray(
        k0 = p.r,
        k1 = p.k,
        D0 = 3,
        D1 = 4,
        c0 = [1, p.lam, p.k],
        c1 = [1, p.y, p.k * p.lam // p.y, p.k]
    )

class QsdSweepEntry(Serializable):
    """ Both M-property verdicts for one consistent set of design parameters.

    ``array_verdict`` is None when the counts of the array can not be derived, so that the array
    criterion does not apply.
    """

    def __init__(
        self,
        params: QsdParams,
        condition: bool,
        array_verdict: Optional[bool]
    ) -> None:
        """ Instantiates a new QsdSweepEntry """
        self.params: QsdParams = params
        self.condition: bool = condition
        self.array_verdict: Optional[bool] = array_verdict

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"""QsdSweepEntry({", ".join(map(lambda x: "%s=%s" % x, self.to_dict().items()))})"""

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return self.to_dict() == other.to_dict() if isinstance(other, QsdSweepEntry) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return {
            "params": self.params.to_dict(),
            "condition": self.condition,
            "array_verdict": self.array_verdict
        }

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'QsdSweepEntry':
        """ Loads a QsdSweepEntry from a Python dictionary """
        return cls(
            params = QsdParams.from_dict(dictionary['params']),
            condition = bool(dictionary['condition']),
            array_verdict = dictionary.get('array_verdict')
        )

def qsd_sweep(max_value: int) -> List[QsdSweepEntry]:
    """ Evaluates both M-property criteria on every consistent parameter set with r, k <= max_value.

    Args:
        max_value (int): The bound on r and k (and hence on lambda < r and y < k).

    Returns:
        List[QsdSweepEntry]: The entries ordered by (r, k, lambda, y).
    """

    entries: List[QsdSweepEntry] = []
    for r in range(2, max_value + 1):
        for k in range(2, max_value + 1):
            for lam in range(1, r):
                for y in range(1, k):
                    params: QsdParams = QsdParams(r = r, k = k, lam = lam, y = y)
                    if params.violations():
                        continue

                    array_verdict: Optional[bool]
                    try:
                        array_verdict = m_property_array(build_case5_array(params)).verdict
                    except DbrgError as error:
                        logger.debug("No array verdict for %s: %s", params, error)
                        array_verdict = None

                    entries.append(QsdSweepEntry(params, qsd_m_condition(params), array_verdict))

    logger.info("Swept %d consistent design parameter sets up to %d", len(entries), max_value)
    return entries

def bipartite_drg_d3_sweep(max_k: int) -> List[Dict[str, Any]]:
    """ Both M-property criteria for every ``{k; 1, mu, k}`` with k <= max_k.

    The ``array_verdict`` is None when the counts of the array are not integers.
    """

    rows: List[Dict[str, Any]] = []
    for k in range(2, max_k + 1):
        for mu in range(1, k):
            row: Dict[str, Any] = bipartite_drg_d3_report(k, mu)
            try:
                row["array_verdict"] = m_property_array(bipartite_drg_d3_array(k, mu)).verdict
            except DbrgError as error:
                logger.debug("No array verdict for k=%d, mu=%d: %s", k, mu, error)
                row["array_verdict"] = None
            rows.append(row)
    return rows
