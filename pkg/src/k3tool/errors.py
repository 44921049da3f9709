"""Exception hierarchy. Every error carries a short machine-readable code."""


class K3ToolError(Exception):
    code = "Error"


class ZeroPolynomialError(K3ToolError, ValueError):
    code = "ZeroPolynomial"


class PrecisionExhausted(K3ToolError, ArithmeticError):
    code = "PrecisionExhausted"


class NotAnEllipticFibration(K3ToolError, ValueError):
    code = "NotAnEllipticFibration"


class NonMinimalModel(K3ToolError, ValueError):
    code = "NonMinimalModel"

    def __init__(self, triple, where=""):
        self.triple = tuple(triple)
        super().__init__(f"valuation triple {self.triple} is outside the Kodaira table{where}")


class NotSingularAtInfinity(K3ToolError, ValueError):
    code = "NotSingularAtInfinity"


class PreconditionError(K3ToolError, ValueError):
    code = "PreconditionViolation"


class InvolutionCheckFailed(K3ToolError, AssertionError):
    code = "InvolutionCheckFailed"

    def __init__(self, message, residual=None):
        self.residual = residual
        super().__init__(message)


class DegenerateLegendre(K3ToolError, ValueError):
    code = "DegenerateLegendre"


class SingularConic(K3ToolError, ValueError):
    code = "SingularConic"


class DegenerateMatch(K3ToolError, ValueError):
    code = "DegenerateMatch"


class IndefiniteLattice(K3ToolError, ValueError):
    code = "IndefiniteLattice"


class DegenerateLattice(K3ToolError, ValueError):
    code = "DegenerateLattice"
