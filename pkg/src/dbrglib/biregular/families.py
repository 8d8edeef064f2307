"""
Intersection arrays of well known families of distance-biregular graphs.
"""

from dbrglib.biregular.array import BiregularArray
from dbrglib.errors import ParamOutOfRange

def digon_array() -> BiregularArray:
    """ The single edge K_2: ``{1; 1 | 1; 1}`` """
    return BiregularArray(k0 = 1, k1 = 1, D0 = 1, D1 = 1, c0 = [1], c1 = [1])

def star_array(k: int) -> BiregularArray:
    """ The star K_{1,k}, k >= 2, with the center on side 0: ``{k; 1 | 1; 1, 1}`` """

    if k < 2:
        raise ParamOutOfRange(f"A star needs at least two leaves but got k={k}")
    return BiregularArray(k0 = k, k1 = 1, D0 = 1, D1 = 2, c0 = [1], c1 = [1, 1])

def complete_bipartite_array(k0: int, k1: int) -> BiregularArray:
    """ The array of K_{k1,k0}, whose side 0 vertices have degree k0 >= k1.

    ``{k0; 1, k0 | k1; 1, k1}`` in general, with the digon and the stars as the degenerate cases
    ``k0 = k1 = 1`` and ``k1 = 1``.

    Raises:
        ParamOutOfRange: Raised unless ``k0 >= k1 >= 1``.
    """

    if not k0 >= k1 >= 1:
        raise ParamOutOfRange(f"A complete bipartite array needs k0 >= k1 >= 1 but got k0={k0}, k1={k1}")
    if k0 == 1:
        return digon_array()
    if k1 == 1:
        return star_array(k0)
    return BiregularArray(k0 = k0, k1 = k1, D0 = 2, D1 = 2, c0 = [1, k0], c1 = [1, k1])

def even_cycle_array(m: int) -> BiregularArray:
    """ The cycle C_{2m}, m >= 2: ``{2; 1, ..., 1, 2}`` on both sides with diameter m """

    if m < 2:
        raise ParamOutOfRange(f"An even cycle C_2m needs m >= 2 but got m={m}")
    sequence = [1] * (m - 1) + [2]
    return BiregularArray(k0 = 2, k1 = 2, D0 = m, D1 = m, c0 = sequence, c1 = sequence)

def subdivided_complete_array(r: int) -> BiregularArray:
    """ The subdivision graph S(K_{r+1}), r >= 2: ``{r; 1, 1, 2 | 2; 1, 1, 2, 2}``.

    For r = 2 the subdivision of the triangle is the hexagon, whose array is the one of C_6.
    """

    if r < 2:
        raise ParamOutOfRange(f"S(K_(r+1)) needs r >= 2 but got r={r}")
    if r == 2:
        return even_cycle_array(3)
    return BiregularArray(k0 = r, k1 = 2, D0 = 3, D1 = 4, c0 = [1, 1, 2], c1 = [1, 1, 2, 2])

def affine_plane_array(m: int) -> BiregularArray:
    """ The point-line incidence graph of the affine plane of order m >= 2:
    ``{m + 1; 1, 1, m | m; 1, 1, m, m}`` with the points on side 0 """

    if m < 2:
        raise ParamOutOfRange(f"An affine plane needs order m >= 2 but got m={m}")
    return BiregularArray(k0 = m + 1, k1 = m, D0 = 3, D1 = 4, c0 = [1, 1, m], c1 = [1, 1, m, m])

def bipartite_drg_d3_array(k: int, mu: int) -> BiregularArray:
    """ The bipartite distance-regular graph of diameter 3 with array ``{k; 1, mu, k}`` on both sides

    Raises:
        ParamOutOfRange: Raised unless ``1 <= mu <= k - 1``.
    """

    if not 1 <= mu <= k - 1:
        raise ParamOutOfRange(f"The array {{k; 1, mu, k}} needs 1 <= mu <= k - 1 but got k={k}, mu={mu}")
    return BiregularArray(k0 = k, k1 = k, D0 = 3, D1 = 3, c0 = [1, mu, k], c1 = [1, mu, k])
