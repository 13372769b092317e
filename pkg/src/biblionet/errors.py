"""Exception types raised across the package."""


class BiblioError(Exception):
    """Base class for all package errors."""


class IncompatibleNetworks(BiblioError, ValueError):
    """Two networks (or a network and a vector) do not share the required node set."""


class NotBinaryError(BiblioError, ValueError):
    """An operation that counts co-occurrences received a weighted network."""


class PajekFormatError(BiblioError, ValueError):
    """Malformed Pajek / table input. ``lineno`` is 1-based, or None."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ExplosionRefused(BiblioError):
    """A guarded product would exceed its work budget.

    Carries the full :class:`~biblionet.sparsity.SparsityReport` and the
    intermediate nodes contributing the most work, as ``(label, work)``
    pairs sorted by decreasing work.
    """

    def __init__(self, report, worst, max_work):
        self.report = report
        self.worst = worst
        self.max_work = max_work
        head = ", ".join(f"{label}={work}" for label, work in worst[:3])
        super().__init__(
            f"product work {report.exact_work} exceeds limit {max_work}; worst: {head}"
        )
