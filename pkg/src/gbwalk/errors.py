"""Exception types shared across the package."""


class GroebnerError(Exception):
    """Base class for all errors raised by gbwalk."""


class ArityError(GroebnerError, ValueError):
    """Operands live in rings (or orders) with different variable counts."""


class StepCapExceeded(GroebnerError):
    """A reduction ran past its configured step budget."""

    def __init__(self, cap, what="reduction"):
        super().__init__(f"{what} exceeded step cap of {cap}")
        self.cap = cap


class EmptyIdeal(GroebnerError, ValueError):
    """No nonzero generators were supplied."""


class NotATermOrder(GroebnerError, ValueError):
    """A group order was used where a term order is required."""


class InvalidInputBasis(GroebnerError, ValueError):
    """The basis handed to a walk is not a marked reduced Groebner basis."""


class InvalidOrder(GroebnerError, ValueError):
    pass


class W0NotInCone(GroebnerError, ValueError):
    """The starting weight of the classical walk is outside the current cone."""


class NonMonomialNormalForm(GroebnerError):
    """Normal form modulo a toric basis was not a monomial (broken basis)."""


class ParseError(GroebnerError, ValueError):
    def __init__(self, message, column=None, line=None):
        self.message = message
        self.column = column
        self.line = line
        super().__init__(self._render())

    def _render(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        return f"{', '.join(where)}: {self.message}" if where else self.message

    def at_line(self, line):
        return ParseError(self.message, self.column, line)


class DegenerateCrossing(GroebnerError):
    """A truncated walk crossed a face that is not a facet and lost track."""


class InconsistentMarkings(GroebnerError):
    """The markings of a set of polynomials do not come from a common order."""
