"""Exception hierarchy shared across the package."""


class MvkmError(Exception):
    """Base class for all package-specific errors."""


class KernelViewMismatchError(MvkmError):
    """Kernel kind is incompatible with the view kind (e.g. IBS on a numeric view)."""


class InvalidParameterError(MvkmError):
    """A kernel or test parameter is outside its valid range."""


class InsufficientDataError(MvkmError):
    """Too few subjects for the requested operation."""


class InvalidGenotypeError(MvkmError):
    """A genotype matrix contains entries outside {0, 1, 2}."""


class MissingKernelError(MvkmError):
    """A required Gram matrix is absent from the kernel family."""


class DomainError(MvkmError):
    """Link-function input outside the valid domain.

    Carries the first offending index in ``index``.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class SingularDesignError(MvkmError):
    """Design matrix (or weighted cross-product) is rank deficient."""


class SeparationError(MvkmError):
    """Logistic fit diverged, indicating (quasi-)complete separation."""


class NoConvergenceError(MvkmError):
    """Iterative fit exhausted its iteration budget.

    The best iterate reached is attached as ``last_fit``.
    """

    def __init__(self, message, last_fit=None):
        super().__init__(message)
        self.last_fit = last_fit


class NotPositiveDefiniteError(MvkmError):
    """A covariance matrix that must be positive definite is not."""


class DegenerateDistributionError(MvkmError):
    """Moment matching received a nonpositive mean or variance."""


class InvalidRocError(MvkmError):
    """ROC construction needs at least one null and one alternative label."""


class ConfigError(MvkmError):
    """Run configuration is missing, malformed, or inconsistent."""


class DataError(MvkmError):
    """Input data files are missing, malformed, or inconsistent."""
