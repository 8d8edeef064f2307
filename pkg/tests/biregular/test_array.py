from dbrglib.biregular import (
    BiregularArray,
    DerivedCounts,
    derive_counts,
    subdivided_complete_array,
    affine_plane_array,
    complete_bipartite_array,
)
from dbrglib.errors import InvalidArray, NegativeB, NonIntegralCount, TotalMismatch, DistanceOutOfRange
import unittest

class TestBiregularArray(unittest.TestCase):
    """ Unit tests for double intersection arrays and their derived counts """

    ArrayDict = {"k0": 3, "k1": 2, "D0": 3, "D1": 4, "c0": [1, 1, 2], "c1": [1, 1, 2, 2]}

    def test_from_dict(self):
        """ Tests the loading of the subdivided K_4 array """

        array: BiregularArray = BiregularArray.from_dict(self.ArrayDict)

        self.assertEqual(array, subdivided_complete_array(3))
        self.assertEqual(array.notation(), "{3;1,1,2 | 2;1,1,2,2}")
        self.assertEqual(array.to_dict(), self.ArrayDict)
        self.assertEqual(len({array, subdivided_complete_array(3), affine_plane_array(3)}), 2)

    def test_parity_rule(self):
        """ Tests the b numbers derived from the c numbers """

        array: BiregularArray = subdivided_complete_array(3)
        self.assertEqual([array.b(0, i) for i in range(4)], [3, 1, 2, 0])
        self.assertEqual([array.b(1, i) for i in range(5)], [2, 2, 1, 1, 0])
        self.assertEqual(array.c(1, 0), 0)

        with self.assertRaises(DistanceOutOfRange):
            array.b(0, 4)
        with self.assertRaises(DistanceOutOfRange):
            array.c(2, 1)

    def test_invalid_arrays(self):
        """ Tests the structural checks of the constructor """

        with self.assertRaises(InvalidArray):
            BiregularArray(k0 = 2, k1 = 2, D0 = 3, D1 = 2, c0 = [1, 1, 2], c1 = [1, 2])
        with self.assertRaises(InvalidArray):
            BiregularArray(k0 = 2, k1 = 2, D0 = 2, D1 = 2, c0 = [1, 2, 2], c1 = [1, 2])
        with self.assertRaises(InvalidArray):
            BiregularArray(k0 = 2, k1 = 2, D0 = 2, D1 = 2, c0 = [2, 2], c1 = [1, 2])
        with self.assertRaises(InvalidArray):
            BiregularArray(k0 = 0, k1 = 2, D0 = 2, D1 = 2, c0 = [1, 2], c1 = [1, 2])
        with self.assertRaises(InvalidArray):
            BiregularArray(k0 = True, k1 = 1, D0 = 1, D1 = 1, c0 = [1], c1 = [1])
        with self.assertRaises(InvalidArray):
            BiregularArray.from_dict({"k0": 2, "k1": 2, "D0": 2, "c0": [1, 2], "c1": [1, 2]})

    def test_derive_counts(self):
        """ Tests the sphere sizes of the subdivided K_4 and of the affine plane of order 3 """

        counts: DerivedCounts = derive_counts(subdivided_complete_array(3))
        self.assertEqual(counts.spheres, ((1, 3, 3, 3), (1, 2, 4, 2, 1)))
        self.assertEqual(counts.n, 10)
        self.assertEqual(counts.ball(1, 2), 7)

        counts = derive_counts(affine_plane_array(3))
        self.assertEqual(counts.spheres, ((1, 4, 8, 8), (1, 3, 9, 6, 2)))
        self.assertEqual(counts.n, 21)
        self.assertEqual(counts.to_dict(), {
            "k0": [1, 4, 8, 8],
            "k1": [1, 3, 9, 6, 2],
            "B0": [1, 5, 13, 21],
            "B1": [1, 4, 13, 19, 21],
            "n": 21
        })

    def test_complete_bipartite_counts(self):
        """ Tests the counts of K_{2,3} """

        counts: DerivedCounts = derive_counts(complete_bipartite_array(3, 2))
        self.assertEqual(counts.spheres, ((1, 3, 1), (1, 2, 2)))
        self.assertEqual(counts.n, 5)

    def test_count_errors(self):
        """ Tests the three ways the counts can fail to exist """

        with self.assertRaises(NegativeB):
            derive_counts(BiregularArray(k0 = 2, k1 = 2, D0 = 2, D1 = 2, c0 = [1, 3], c1 = [1, 3]))
        with self.assertRaises(NonIntegralCount):
            derive_counts(BiregularArray(k0 = 5, k1 = 5, D0 = 3, D1 = 3, c0 = [1, 3, 5], c1 = [1, 3, 5]))
        with self.assertRaises(TotalMismatch):
            derive_counts(BiregularArray(k0 = 2, k1 = 2, D0 = 2, D1 = 3, c0 = [1, 2], c1 = [1, 1, 2]))
