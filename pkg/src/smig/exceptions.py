class GraphInputError(ValueError):
    """Malformed graph input or an argument outside the graph."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CycleError(GraphInputError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("arcs contain the directed cycle " + "->".join(map(str, self.cycle)))


class NotSMIGError(GraphInputError):
    """Raised when an operation needs a graph that some DAG is faithful to."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"graph has no faithful DAG: edge {witness[0]}-{witness[1]} lies in no simplex")


class NotTriviallyPerfectError(GraphInputError):
    def __init__(self, witness, kind):
        self.witness = tuple(witness)
        self.kind = kind
        super().__init__(f"graph is not trivially perfect: induced {kind} on {self.witness}")


class CapacityError(RuntimeError):
    """Instance exceeds the configured size limit of an exhaustive routine."""
