"""Exception hierarchy shared by the library and the CLI."""


class AtkitError(Exception):
    """Base class for every error raised by atkit."""


class InvalidVertex(AtkitError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


class InvalidTriple(AtkitError, ValueError):
    pass


class DisconnectedGraph(AtkitError):
    def __init__(self, unreachable):
        self.unreachable = tuple(unreachable)
        super().__init__(f"graph is disconnected; unreachable: {' '.join(map(str, self.unreachable))}")


class PermutationMismatch(AtkitError, ValueError):
    pass


class ConvexChoiceUnavailable(AtkitError):
    """No queued vertex keeps the visited set convex; the graph has an asteroidal triple."""

    def __init__(self, step, queue, trace=None):
        self.step = step
        self.queue = tuple(queue)
        self.trace = trace
        super().__init__(
            f"no convex choice at step {step}; queue: {' '.join(map(str, self.queue))}"
        )


class NotAdmissible(AtkitError):
    def __init__(self, vertex, triple=None):
        self.vertex = vertex
        self.triple = triple
        msg = f"vertex {vertex!r} is not admissible"
        if triple is not None:
            msg += f" (between {triple[0]!r} and {triple[2]!r})"
        super().__init__(msg)


class NotClawFree(AtkitError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"graph contains a claw: {witness}")


class BadClawPresent(AtkitError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"graph contains a bad claw: {witness}")


class NotDominatingPair(AtkitError):
    def __init__(self, s, t):
        self.pair = (s, t)
        super().__init__(f"({s!r}, {t!r}) is not a dominating pair")


class TooLarge(AtkitError):
    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"graph has {n} vertices; brute-force cap is {cap} (set ATKIT_BRUTE_CAP)")


class ParseError(AtkitError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(reason if line is None else f"line {line}: {reason}")


class DuplicateEdge(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class FilterTooRestrictive(AtkitError):
    pass
