"""
The exceptions raised by dbrglib.

Every error derives from :class:`DbrgError`, which is itself a ``ValueError`` so that callers that
already guard against bad input with ``except ValueError`` keep working.
"""


class DbrgError(ValueError):
    """ Base class of every error raised by the library """


# ---------- network construction ----------

class DisconnectedGraph(DbrgError):
    """ Raised when the edges given do not form a connected graph """


class InvalidConductance(DbrgError):
    """ Raised when a conductance is zero, negative or not a rational number """


class DuplicateEdge(DbrgError):
    """ Raised when the same unordered pair of vertices appears twice in an edge list """


class SelfLoop(DbrgError):
    """ Raised when an edge joins a vertex to itself """


class UnknownVertex(DbrgError):
    """ Raised when a vertex id is not part of the network """


class ParseError(DbrgError):
    """ Raised when an edge list or a JSON document can not be read """


# ---------- exact linear algebra and potentials ----------

class SingularSystem(DbrgError):
    """ Raised when the reduced Laplacian system has no pivot in some column """


class DepthViolation(DbrgError):
    """ Raised when an equilibrium measure does not reflect the graph depth around its base """


class SameVertex(DbrgError):
    """ Raised when an operation on a pair of vertices receives the same vertex twice """


class IdentityViolation(DbrgError):
    """ Raised when a computed group inverse fails one of its defining identities """


# ---------- intersection arrays ----------

class InvalidArray(DbrgError):
    """ Raised when an intersection array is malformed (lengths, signs, c_{l,1} != 1) """


class NegativeB(DbrgError):
    """ Raised when the parity rule gives a negative or premature zero b_{l,i} """


class NonIntegralCount(DbrgError):
    """ Raised when a sphere size k_{l,i} is not an integer """


class TotalMismatch(DbrgError):
    """ Raised when both sides of an array do not count the same number of vertices """


class FormMismatch(DbrgError):
    """ Raised when two closed forms that must coincide give different values """


class DistanceOutOfRange(DbrgError):
    """ Raised when a distance is outside of 0..D for the side asked for """


class DiameterTooSmall(DbrgError):
    """ Raised when a condition that needs D_0 >= 2 is asked for a smaller array """


class NonIntegralRecovery(DbrgError):
    """ Raised when an intersection number recovered from equilibrium data is not an integer """


class RecoveryMismatch(DbrgError):
    """ Raised when recovered b-numbers disagree with the ones implied by the recovered c-numbers """


# ---------- classification ----------

class ParamOutOfRange(DbrgError):
    """ Raised when a parameter is outside of the range an operation is defined for """


class InconsistentParams(DbrgError):
    """ Raised when design parameters violate one of their defining relations """
