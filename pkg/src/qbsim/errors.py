"""Exception types raised by the library."""


class QbsimError(Exception):
    """Base class for library errors."""


class NonHermitian(QbsimError):
    """Input matrix is not Hermitian within tolerance."""


class ConvergenceFailure(QbsimError):
    """Eigensolver failed to reach the off-diagonal target within the sweep budget."""


class DimensionMismatch(QbsimError):
    """Operands have incompatible dimensions."""


class DimensionGuard(QbsimError):
    """Requested chain length exceeds the dense-matrix guard."""


class RegimeError(QbsimError):
    """Closed-form expression used outside its validity regime (axis/B)."""


class NotDefined(QbsimError):
    """Quantity undefined for the given inputs (e.g. efficiency at xi = 0)."""


class NoThreshold(QbsimError):
    """Series never collapses below the detection fraction of its peak."""


class UnknownFigure(QbsimError):
    """Figure preset id is not known."""


class UnclassifiedModel(QbsimError, ValueError):
    """Couplings fall outside the model-class table conventions."""


class SchemaError(QbsimError):
    """Sweep config file violates the schema; message lists every invalid key."""


class EfficiencyContractWarning(UserWarning):
    """Efficiency exceeded 1 beyond tolerance."""
