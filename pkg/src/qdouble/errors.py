"""Exception types shared across the toolkit."""


class QDoubleError(Exception):
    """Base class for all toolkit errors."""


class PoleError(QDoubleError):
    """Requested evaluation point sits on (or too close to) a pole/zero lattice."""


class DomainError(QDoubleError):
    """Arguments outside the validity window of an identity or branch cut."""


class QuadratureError(QDoubleError):
    """A numerical integration failed to reach the requested accuracy."""


class TruncationOverflow(QDoubleError):
    """A truncated series/basis computation exceeded its term budget."""


class DegenerateBase(QDoubleError):
    """q-Pochhammer denominator vanished (base is a low-order root of unity)."""


class SpectralRangeError(QDoubleError):
    """A grid state or operator argument leaves the reliable evaluation window."""


class MemoryBudgetError(QDoubleError):
    """A requested tensor grid would exceed the configured memory budget."""


class ConfigError(QDoubleError):
    """Invalid suite/CLI configuration."""
