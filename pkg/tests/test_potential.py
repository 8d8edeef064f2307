from dbrglib.network import (
    Network,
    build_network,
    distances,
    laplacian,
    make_path,
    make_complete_graph,
    make_k3,
    make_cycle,
    make_complete_bipartite,
    make_subdivision,
    make_petersen,
)
from dbrglib.matrix import RationalMatrix
from dbrglib.potential import (
    MReport,
    EquilibriumMeasure,
    solve_equilibrium,
    equilibrium_measures,
    equilibrium_array,
    capacities,
    group_inverse,
    check_group_inverse,
    check_penrose,
    effective_resistance,
    resistance_matrix,
    m_property_general,
    sufficient_m_test,
    k3_m_property,
)
from dbrglib.errors import DbrgError, SameVertex, UnknownVertex
from fractions import Fraction
from typing import Dict, List, Tuple
import networkx as nx
import unittest
import random

def random_network(seed: int) -> Network:
    """ A connected network on 4 to 12 vertices with random rational conductances """

    rng: random.Random = random.Random(seed)
    n: int = rng.randint(4, 12)
    pairs = {(rng.randrange(i), i) for i in range(1, n)}
    pairs |= {tuple(sorted(edge)) for edge in nx.gnp_random_graph(n, 0.4, seed = seed).edges}

    edges: List[Tuple[int, int, Fraction]] = [
        (u, v, Fraction(rng.randint(1, 5), rng.randint(1, 3))) for u, v in sorted(pairs)
    ]
    return build_network(edges, vertices = range(n))

class TestPotential(unittest.TestCase):
    """ Unit tests for the equilibrium measures, the group inverse and the M-property tests """

    def test_path_equilibrium(self):
        """ Tests the equilibrium measure of an end of the path on three vertices """

        measure: EquilibriumMeasure = solve_equilibrium(make_path(3), "0")

        self.assertEqual(measure.values, {"0": Fraction(0), "1": Fraction(2), "2": Fraction(3)})
        self.assertEqual(measure.capacity, Fraction(5))
        self.assertEqual(EquilibriumMeasure.from_json_string(measure.to_json_string()), measure)

    def test_equilibrium_array(self):
        """ Tests the grouping of a measure into levels """

        net: Network = make_path(3)
        array = equilibrium_array(solve_equilibrium(net, "0"), distances(net))
        self.assertEqual(array.levels, [Fraction(0), Fraction(2), Fraction(3)])
        self.assertEqual(array.multiplicities, [1, 1, 1])
        self.assertEqual(array.length, 2)

        middle = equilibrium_array(solve_equilibrium(net, "1"), distances(net))
        self.assertEqual(middle.multiplicities, [1, 2])
        self.assertEqual(middle.length, 1)

    def test_unknown_base_vertex(self):
        """ Tests that an unknown base vertex raises """

        with self.assertRaises(UnknownVertex):
            solve_equilibrium(make_path(3), "x")

    def test_weighted_triangle(self):
        """ Tests the closed forms of the equilibrium measure of the weighted triangle """

        measure: EquilibriumMeasure = solve_equilibrium(make_k3(1, 1, 5), "x1")
        self.assertEqual(measure["x2"], Fraction(7, 11))
        self.assertEqual(measure["x3"], Fraction(3, 11))
        self.assertEqual(measure.capacity, Fraction(10, 11))

        for c1, c2, c3 in ((2, 3, Fraction(1, 2)), (1, 4, 7), (Fraction(5, 3), 1, 1)):
            c1, c2, c3 = Fraction(c1), Fraction(c2), Fraction(c3)
            delta: Fraction = c1 * c2 + c2 * c3 + c3 * c1
            measure = solve_equilibrium(make_k3(c1, c2, c3), "x1")
            self.assertEqual(measure["x2"], (2 * c2 + c3) / delta)
            self.assertEqual(measure["x3"], (2 * c2 + c1) / delta)
            self.assertEqual(measure.capacity, (4 * c2 + c1 + c3) / delta)

    def test_digon_group_inverse(self):
        """ Tests the group inverse of a single edge """

        self.assertEqual(group_inverse(make_path(2)), RationalMatrix([["1/4", "-1/4"], ["-1/4", "1/4"]]))

    def test_triangle_group_inverse(self):
        """ Tests the group inverse and the resistances of the unit triangle """

        net: Network = make_complete_graph(3)
        g: RationalMatrix = group_inverse(net)
        for i in range(3):
            for j in range(3):
                self.assertEqual(g[i, j], Fraction(2, 9) if i == j else Fraction(-1, 9))

        self.assertEqual(effective_resistance(net, "x1", "x2"), Fraction(2, 3))
        self.assertEqual(capacities(net), {"x1": Fraction(2), "x2": Fraction(2), "x3": Fraction(2)})

    def test_same_vertex_resistance(self):
        """ Tests that the resistance of a vertex with itself is refused """

        with self.assertRaises(SameVertex):
            effective_resistance(make_path(3), "1", "1")

    def test_identities_on_random_networks(self):
        """ Tests the group inverse identities, the resistance identity and the tests agreement on
        seeded random networks """

        for seed in range(50):
            net: Network = random_network(seed)
            g: RationalMatrix = group_inverse(net)
            l: RationalMatrix = laplacian(net)

            self.assertEqual(check_group_inverse(net, g), [], f"seed {seed}")
            self.assertEqual(check_penrose(g, l), [], f"seed {seed}")

            r: RationalMatrix = resistance_matrix(net)
            self.assertTrue(r.is_symmetric())
            for i in range(net.n):
                self.assertEqual(r[i, i], 0)
                for j in range(net.n):
                    self.assertEqual(r[i, j], g[i, i] + g[j, j] - 2 * g[i, j], f"seed {seed}")

            table = distances(net)
            arrays = [equilibrium_array(solve_equilibrium(net, y), table) for y in net.vertices]
            general: MReport = m_property_general(net)
            if sufficient_m_test(arrays).verdict:
                self.assertTrue(general.verdict, f"seed {seed}")

    def test_threads_do_not_change_results(self):
        """ Tests that the thread pool gives the same matrix as the sequential solves """

        net: Network = random_network(7)
        self.assertEqual(group_inverse(net, 4), group_inverse(net, 1))
        self.assertEqual(resistance_matrix(net, 3), resistance_matrix(net))

    def test_equilibrium_and_group_inverse_agree(self):
        """ Tests cap(y) = n^2 L#(y, y), n nu^y(x) = n^2 (L#(y, y) - L#(x, y)) and
        cap(y) - n nu^y(x) = cap(x) - n nu^x(y) on the families and on seeded random networks """

        fixtures: List[Tuple[str, Network]] = [
            ("P3", make_path(3)),
            ("C12", make_cycle(12)),
            ("K3", make_complete_graph(3)),
            ("K3(1, 1, 5)", make_k3(1, 1, 5)),
            ("K2,3", make_complete_bipartite(2, 3)),
            ("S(K4)", make_subdivision(make_complete_graph(4))),
            ("Petersen", make_petersen()),
        ]
        fixtures += [(f"seed {seed}", random_network(seed)) for seed in range(50)]
        self.assertEqual(max(net.n for _, net in fixtures), 12)

        for name, net in fixtures:
            n: int = net.n
            measures: List[EquilibriumMeasure] = equilibrium_measures(net)
            g: RationalMatrix = group_inverse(net, measures = measures)
            caps: Dict[str, Fraction] = capacities(net)

            for j, y in enumerate(net.vertices):
                self.assertEqual(measures[j].capacity, n * n * g[j, j], name)
                self.assertEqual(caps[y], n * n * g[j, j], name)
                for i, x in enumerate(net.vertices):
                    self.assertEqual(measures[j][x], n * (g[j, j] - g[i, j]), f"{name}: nu^{y}({x})")
                    self.assertEqual(
                        measures[j].capacity - n * measures[j][x],
                        measures[i].capacity - n * measures[i][y],
                        f"{name}: {x}, {y}"
                    )

    def test_group_inverse_from_held_measures(self):
        """ Tests that measures solved on threads give the same group inverse and that measures in
        the wrong order are refused """

        net: Network = random_network(11)
        measures: List[EquilibriumMeasure] = equilibrium_measures(net, 3)

        self.assertEqual([measure.base_vertex for measure in measures], list(net.vertices))
        self.assertEqual(measures, equilibrium_measures(net))
        self.assertEqual(group_inverse(net, measures = measures), group_inverse(net))
        with self.assertRaises(DbrgError):
            group_inverse(net, measures = list(reversed(measures)))

    def test_check_group_inverse_detects_errors(self):
        """ Tests that a wrong matrix is reported """

        net: Network = make_path(2)
        self.assertIn("LGL=L", check_group_inverse(net, RationalMatrix.identity(2)))
        self.assertIn("G1=0", check_group_inverse(net, RationalMatrix.identity(2)))

    def test_k3_m_property(self):
        """ Tests the boundary of the triangle criterion against the general test """

        self.assertTrue(k3_m_property(1, 1, 4))
        self.assertFalse(k3_m_property(1, 1, 5))
        self.assertTrue(m_property_general(make_k3(1, 1, 4)).verdict)

        report: MReport = m_property_general(make_k3(1, 1, 5))
        self.assertFalse(report.verdict)
        self.assertEqual(report.method, "minimum-principle")
        self.assertEqual(report.witness["vertices"], ["x1", "x3"])
        self.assertEqual(report.to_dict()["witness"], {"vertices": ["x1", "x3"], "capacity": "10/11", "bound": "9/11"})

    def test_paths(self):
        """ Tests that the path on three vertices has the M-property and the one on four does not """

        net: Network = make_path(3)
        table = distances(net)
        self.assertTrue(m_property_general(net).verdict)
        self.assertTrue(sufficient_m_test([equilibrium_array(solve_equilibrium(net, y), table) for y in net.vertices]).verdict)

        net = make_path(4)
        table = distances(net)
        self.assertFalse(m_property_general(net).verdict)
        report: MReport = sufficient_m_test([equilibrium_array(solve_equilibrium(net, y), table) for y in net.vertices])
        self.assertFalse(report.verdict)
        self.assertEqual(report.to_dict()["witness"], {"base_vertex": "0", "lhs": "5", "rhs": "3"})

    def test_even_cycles(self):
        """ Tests the M-property of the small even cycles """

        self.assertTrue(m_property_general(make_cycle(4)).verdict)
        self.assertFalse(m_property_general(make_cycle(8)).verdict)

    def test_negative_report_needs_witness(self):
        """ Tests that a negative verdict without a witness is refused """

        with self.assertRaises(DbrgError):
            MReport(False, "minimum-principle")
        self.assertEqual(MReport(True, "green-sign").to_dict(), {"verdict": True, "method": "green-sign"})
