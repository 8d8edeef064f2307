"""
The ``dbrglib`` command line frontend.

Every verb reads a graph (edge list, or network JSON when the file ends in ``.json``), an
intersection array JSON or plain parameters, runs one operation of the library and writes a
deterministic report to standard output or to ``--out``. Rationals are always written as ``p/q``
strings; ``--decimal N`` adds display-only decimal columns next to them.

Exit codes: 0 for success (or a positive verdict), 1 for a negative verdict or an infeasible
array, 2 for any input error.
"""

from dbrglib.network import Network, read_edge_list, distances
from dbrglib.matrix import RationalMatrix
from dbrglib.potential import (
    solve_equilibrium,
    equilibrium_array,
    group_inverse,
    effective_resistance,
    resistance_matrix,
    m_property_general,
    sufficient_m_test,
)
from dbrglib.biregular import (
    BiregularArray,
    DbrgEquilibrium,
    derive_counts,
    validate,
    equilibrium_arrays,
    cross_relation_check,
    dbrg_capacity,
    group_inverse_entry,
    dbrg_effective_resistance,
    m_property_array,
    necessary_condition,
    recover_array,
    detect_dbrg,
    verify_closed_form,
)
from dbrglib.classify import QsdParams, classify_case, qsd_m_condition, build_case5_array, qsd_sweep
from dbrglib.search import SearchBounds, DEFAULT_BOUNDS, search_arrays
from dbrglib.utils import add_decimal_columns, convert_to_dict_recursively, rational_to_string
from dbrglib.errors import DbrgError, DiameterTooSmall, InvalidArray, ParseError
import dbrglib.constants as constants
from typing import Dict, Any, List, Tuple, Optional, Union, Callable
import argparse
import logging
import json
import csv
import io
import sys

logger: logging.Logger = logging.getLogger(__name__)

Payload = Union[Dict[str, Any], List[Dict[str, Any]], str]

VERBS: Tuple[str, ...] = (
    "validate", "derive", "equil", "green", "resist", "check-m",
    "classify", "recover", "detect", "verify", "search", "qsd",
)

def build_parser() -> argparse.ArgumentParser:
    """ Builds the argument parser with one sub-command per verb """

    common: argparse.ArgumentParser = argparse.ArgumentParser(add_help = False)
    common.add_argument("--out", metavar = "PATH", help = "write the report to PATH instead of standard output")
    common.add_argument(
        "--decimal", metavar = "N", type = int, nargs = "?", const = constants.DEFAULT_DECIMAL_DIGITS,
        help = "add display-only decimal columns with N digits"
    )
    common.add_argument("--threads", metavar = "N", type = int, default = 1, help = "worker threads for the exact solves")
    common.add_argument("--format", choices = ("json", "csv"), default = "json", help = "matrix and resistance output format")
    common.add_argument("-v", "--verbose", action = "count", default = 0, help = "-v for info, -vv for debug logs")

    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog = "dbrglib",
        description = "Exact equilibrium measures, Green functions and M-property checks on networks "
                      "and distance-biregular intersection arrays."
    )
    verbs = parser.add_subparsers(dest = "verb", metavar = "VERB")
    verbs.required = True

    def graph_or_array(sub: argparse.ArgumentParser) -> None:
        source = sub.add_mutually_exclusive_group(required = True)
        source.add_argument("--graph", metavar = "PATH", help = "edge list (or network JSON) file")
        source.add_argument("--array", metavar = "PATH", help = "intersection array JSON file")

    sub = verbs.add_parser("validate", parents = [common], help = "feasibility conditions of an array")
    sub.add_argument("--array", metavar = "PATH", required = True)

    sub = verbs.add_parser("derive", parents = [common], help = "sphere and ball sizes of an array")
    sub.add_argument("--array", metavar = "PATH", required = True)

    sub = verbs.add_parser("equil", parents = [common], help = "equilibrium measures or equilibrium arrays")
    graph_or_array(sub)
    sub.add_argument("--vertex", metavar = "Y", help = "base vertex (default: every vertex)")

    sub = verbs.add_parser("green", parents = [common], help = "group inverse of the Laplacian")
    graph_or_array(sub)
    sub.add_argument("--side", type = int, choices = (0, 1), help = "side of the base vertex (with --array)")

    sub = verbs.add_parser("resist", parents = [common], help = "effective resistances")
    graph_or_array(sub)
    sub.add_argument("--pair", nargs = 2, action = "append", metavar = ("X", "Y"), help = "vertex pair (with --graph)")
    sub.add_argument("--side", type = int, choices = (0, 1), help = "side of the base vertex (with --array)")
    sub.add_argument("--distance", type = int, action = "append", help = "distance (with --array)")

    sub = verbs.add_parser("check-m", parents = [common], help = "M-property of a graph or an array")
    graph_or_array(sub)

    sub = verbs.add_parser("classify", parents = [common], help = "case of an array")
    sub.add_argument("--array", metavar = "PATH", required = True)

    sub = verbs.add_parser("recover", parents = [common], help = "array from equilibrium arrays and multiplicities")
    sub.add_argument("--equilibrium", metavar = "PATH", required = True, help = 'JSON with "q0", "q1", "m0" and "m1"')

    sub = verbs.add_parser("detect", parents = [common], help = "recognize a distance-biregular graph")
    sub.add_argument("--graph", metavar = "PATH", required = True)

    sub = verbs.add_parser("verify", parents = [common], help = "closed forms against the dense oracle")
    sub.add_argument("--graph", metavar = "PATH", required = True)
    sub.add_argument("--force", action = "store_true", help = f"accept graphs above {constants.VERIFY_SIZE_CAP} vertices")

    sub = verbs.add_parser("search", parents = [common], help = "bounded exhaustive search over arrays (JSON lines)")
    sub.add_argument("--max-k", type = int, default = DEFAULT_BOUNDS.max_k)
    sub.add_argument("--max-d", type = int, default = DEFAULT_BOUNDS.max_d)
    sub.add_argument("--max-n", type = int, default = DEFAULT_BOUNDS.max_n)

    sub = verbs.add_parser("qsd", parents = [common], help = "quasi-symmetric design M-property condition")
    sub.add_argument("--r", type = int)
    sub.add_argument("--k", type = int)
    sub.add_argument("--lambda", dest = "lam", type = int)
    sub.add_argument("--y", type = int)
    sub.add_argument("--range", dest = "max_value", type = int, help = "sweep every consistent set with r, k up to this value")

    return parser

class CommandRunner():
    """ Runs one parsed command line and turns its outcome into a payload and an exit code.

    ``run`` acts only as a router: it looks up the method ``run_<verb>`` (dashes replaced by
    underscores) and calls it with the parsed arguments.
    """

    def __init__(self, arguments: argparse.Namespace) -> None:
        self.arguments: argparse.Namespace = arguments

    def run(self) -> Tuple[Payload, int]:
        """ Routes the command to its ``run_<verb>`` method """

        function_name: str = f"run_{self.arguments.verb.replace('-', '_')}"
        handler: Callable[[], Tuple[Payload, int]] = getattr(self, function_name)
        logger.info("Running %s", self.arguments.verb)
        return handler()

    # ---------- inputs ----------

    def read_text(self, path: str) -> str:
        """ Reads a UTF-8 input file, raising ParseError when it is not valid UTF-8 """
        with open(path, "r", encoding = "utf-8") as file:
            try:
                return file.read()
            except UnicodeDecodeError as error:
                raise ParseError(f"{path} is not UTF-8 text: {error.reason} at byte {error.start}") from error

    def load_graph(self) -> Network:
        """ Reads the --graph file """
        path: str = self.arguments.graph
        if not path.endswith(".json"):
            return read_edge_list(path)

        try:
            return Network.from_json_string(self.read_text(path))
        except (KeyError, TypeError) as error:
            raise ParseError(f"{path} is not a network document: missing or malformed {error}") from error

    def load_array(self) -> BiregularArray:
        """ Reads the --array file """
        try:
            return BiregularArray.from_json_string(self.read_text(self.arguments.array))
        except (KeyError, TypeError) as error:
            raise InvalidArray(f"{self.arguments.array} is not an array document: missing or malformed {error}") from error

    def side(self) -> int:
        """ The --side argument, required by the array forms of green and resist """
        if self.arguments.side is None:
            raise DbrgError("--side is required together with --array")
        return int(self.arguments.side)

    # ---------- verbs ----------

    def run_validate(self) -> Tuple[Payload, int]:
        report = validate(self.load_array())
        return report.to_dict(), self.__verdict(report.passed)

    def run_derive(self) -> Tuple[Payload, int]:
        return derive_counts(self.load_array()).to_dict(), constants.EXIT_CODES["success"]

    def run_equil(self) -> Tuple[Payload, int]:
        if self.arguments.array is not None:
            array: BiregularArray = self.load_array()
            equilibrium: DbrgEquilibrium = equilibrium_arrays(array)
            return {
                "array": array.to_dict(),
                "equilibrium": equilibrium.to_dict(),
                "capacities": [rational_to_string(dbrg_capacity(array, side)) for side in (0, 1)],
                "cross_relation": cross_relation_check(equilibrium, array)
            }, constants.EXIT_CODES["success"]

        net: Network = self.load_graph()
        table = distances(net)
        vertices: List[str] = [self.arguments.vertex] if self.arguments.vertex is not None else list(net.vertices)
        measures: List[Dict[str, Any]] = []
        for y in vertices:
            measure = solve_equilibrium(net, y)
            measures.append({
                "measure": measure.to_dict(),
                "array": equilibrium_array(measure, table).to_dict()
            })
        return {"measures": measures}, constants.EXIT_CODES["success"]

    def run_green(self) -> Tuple[Payload, int]:
        if self.arguments.array is not None:
            array: BiregularArray = self.load_array()
            side: int = self.side()
            entries = [group_inverse_entry(array, side, j) for j in range(array.D(side) + 1)]
            if self.arguments.format == "csv":
                return self.__csv([["distance", "entry"]] + [[str(j), rational_to_string(e)] for j, e in enumerate(entries)]), constants.EXIT_CODES["success"]
            return {
                "array": array.to_dict(),
                "side": side,
                "entries": [rational_to_string(entry) for entry in entries]
            }, constants.EXIT_CODES["success"]

        net: Network = self.load_graph()
        matrix: RationalMatrix = group_inverse(net, self.arguments.threads)
        return self.__matrix(net, matrix), constants.EXIT_CODES["success"]

    def run_resist(self) -> Tuple[Payload, int]:
        if self.arguments.array is not None:
            array: BiregularArray = self.load_array()
            side: int = self.side()
            wanted: List[int] = self.arguments.distance or list(range(1, array.D(side) + 1))
            rows: List[Tuple[int, str]] = [
                (d, rational_to_string(dbrg_effective_resistance(array, side, d))) for d in wanted
            ]
            if self.arguments.format == "csv":
                return self.__csv([["distance", "resistance"]] + [[str(d), r] for d, r in rows]), constants.EXIT_CODES["success"]
            return {
                "array": array.to_dict(),
                "side": side,
                "resistances": [{"distance": d, "resistance": r} for d, r in rows]
            }, constants.EXIT_CODES["success"]

        net: Network = self.load_graph()
        if not self.arguments.pair:
            return self.__matrix(net, resistance_matrix(net, self.arguments.threads)), constants.EXIT_CODES["success"]

        pairs: List[Tuple[str, str, str]] = [
            (x, y, rational_to_string(effective_resistance(net, x, y))) for x, y in self.arguments.pair
        ]
        if self.arguments.format == "csv":
            return self.__csv([["x", "y", "resistance"]] + [list(pair) for pair in pairs]), constants.EXIT_CODES["success"]
        return {"resistances": [{"x": x, "y": y, "resistance": r} for x, y, r in pairs]}, constants.EXIT_CODES["success"]

    def run_check_m(self) -> Tuple[Payload, int]:
        if self.arguments.array is not None:
            array: BiregularArray = self.load_array()
            report = m_property_array(array)
            payload: Dict[str, Any] = {"array": array.to_dict(), "m_property": report.to_dict()}
            try:
                payload["necessary_condition"] = necessary_condition(array)
            except DiameterTooSmall:
                logger.debug("The necessary condition does not apply to D0 = %d", array.D0)
            return payload, self.__verdict(report.verdict)

        net: Network = self.load_graph()
        general = m_property_general(net, self.arguments.threads)
        table = distances(net)
        sufficient = sufficient_m_test([equilibrium_array(solve_equilibrium(net, y), table) for y in net.vertices])
        return {
            "m_property": general.to_dict(),
            "equilibrium_array_test": sufficient.to_dict()
        }, self.__verdict(general.verdict)

    def run_classify(self) -> Tuple[Payload, int]:
        array: BiregularArray = self.load_array()
        return {"array": array.to_dict(), "case": classify_case(array).value}, constants.EXIT_CODES["success"]

    def run_recover(self) -> Tuple[Payload, int]:
        path: str = self.arguments.equilibrium
        document: Any = json.loads(self.read_text(path))
        if not isinstance(document, dict):
            raise ParseError(f"{path} must hold a JSON object but holds a {type(document).__name__}")
        missing: List[str] = [key for key in ("q0", "q1", "m0", "m1") if key not in document]
        if missing:
            raise DbrgError(f"The equilibrium document is missing the keys {missing}")

        try:
            equilibrium: DbrgEquilibrium = DbrgEquilibrium.from_dict(document)
            mults: Tuple[List[int], List[int]] = (
                [int(m) for m in document['m0']],
                [int(m) for m in document['m1']]
            )
        except DbrgError:
            raise
        except (ValueError, TypeError) as error:
            raise ParseError(f"{path} has malformed equilibrium arrays or multiplicities: {error}") from error

        return recover_array(equilibrium, mults).to_dict(), constants.EXIT_CODES["success"]

    def run_detect(self) -> Tuple[Payload, int]:
        array: Optional[BiregularArray] = detect_dbrg(self.load_graph(), self.arguments.threads)
        if array is None:
            return {"detected": False, "summary": "not distance-biregular"}, constants.EXIT_CODES["verdict_false"]
        return {"detected": True, "array": array.to_dict()}, constants.EXIT_CODES["success"]

    def run_verify(self) -> Tuple[Payload, int]:
        net: Network = self.load_graph()
        if net.n > constants.VERIFY_SIZE_CAP and not self.arguments.force:
            raise DbrgError(f"The graph has {net.n} vertices, above the cap of {constants.VERIFY_SIZE_CAP}; pass --force")
        report = verify_closed_form(net, self.arguments.threads)
        return report.to_dict(), self.__verdict(report.matched)

    def run_search(self) -> Tuple[Payload, int]:
        bounds: SearchBounds = SearchBounds(
            max_k = self.arguments.max_k,
            max_d = self.arguments.max_d,
            max_n = self.arguments.max_n
        )
        return [result.to_dict() for result in search_arrays(bounds, self.arguments.threads)], constants.EXIT_CODES["success"]

    def run_qsd(self) -> Tuple[Payload, int]:
        if self.arguments.max_value is not None:
            return [entry.to_dict() for entry in qsd_sweep(self.arguments.max_value)], constants.EXIT_CODES["success"]

        values = (self.arguments.r, self.arguments.k, self.arguments.lam, self.arguments.y)
        if any(value is None for value in values):
            raise DbrgError("qsd needs either --range or all of --r, --k, --lambda and --y")

        params: QsdParams = QsdParams(*values)
        condition: bool = qsd_m_condition(params)
        array: BiregularArray = build_case5_array(params)
        return {
            "params": params.to_dict(),
            "array": array.to_dict(),
            "condition": condition
        }, self.__verdict(condition)

    # ---------- outputs ----------

    def __verdict(self, verdict: bool) -> int:
        return constants.EXIT_CODES["success"] if verdict else constants.EXIT_CODES["verdict_false"]

    def __matrix(self, net: Network, matrix: RationalMatrix) -> Payload:
        if self.arguments.format == "csv":
            return self.__csv([[""] + list(net.vertices)] + [
                [x] + [rational_to_string(value) for value in row] for x, row in zip(net.vertices, matrix.rows())
            ])
        return {"vertices": list(net.vertices), **matrix.to_dict()}

    def __csv(self, rows: List[List[str]]) -> str:
        buffer: io.StringIO = io.StringIO()
        csv.writer(buffer, lineterminator = "\n").writerows(rows)
        return buffer.getvalue()

def render(payload: Payload, decimal: Optional[int]) -> str:
    """ Serializes a payload: CSV text as is, a list as JSON lines, a dictionary as indented JSON """

    if isinstance(payload, str):
        return payload
    if isinstance(payload, list):
        return "".join(json.dumps(__annotate(item, decimal)) + "\n" for item in payload)
    return json.dumps(__annotate(payload, decimal), indent = 2) + "\n"

def __annotate(document: Dict[str, Any], decimal: Optional[int]) -> Dict[str, Any]:
    document = convert_to_dict_recursively(document)
    return add_decimal_columns(document, decimal) if decimal is not None else document

def configure_logging(verbosity: int) -> None:
    """ Sends the library logs to standard error at WARNING, INFO (-v) or DEBUG (-vv) """
    level: int = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level = level,
        format = "%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream = sys.stderr
    )

def run(argv: Optional[List[str]] = None) -> int:
    """ Runs the command line and returns the exit code.

    Args:
        argv (:obj:`list`, optional): The arguments, without the program name. Defaults to
            ``sys.argv[1:]``.

    Returns:
        int: 0 on success or a positive verdict, 1 on a negative verdict, 2 on an input error.
    """

    parser: argparse.ArgumentParser = build_parser()
    try:
        arguments: argparse.Namespace = parser.parse_args(argv)
    except SystemExit as stop:
        return int(stop.code) if isinstance(stop.code, int) else constants.EXIT_CODES["input_error"]

    configure_logging(arguments.verbose)

    try:
        payload, code = CommandRunner(arguments).run()
        text: str = render(payload, arguments.decimal)
        if arguments.out is not None:
            with open(arguments.out, "w", encoding = "utf-8") as file:
                file.write(text)
        else:
            sys.stdout.write(text)
    except (DbrgError, OSError, json.JSONDecodeError) as error:
        sys.stderr.write(f"dbrglib: error: {error}\n")
        return constants.EXIT_CODES["input_error"]

    return code

def main() -> int:
    """ Console entry point """
    return run()

if __name__ == "__main__":
    sys.exit(main())
