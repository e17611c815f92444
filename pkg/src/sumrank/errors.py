"""Exception types raised by the library.

Validation problems subclass ``ValueError`` so callers can catch them
generically; ``TooLarge`` is separate because it signals a budget, not bad input.
"""


class SumRankError(Exception):
    """Base class for every error raised here."""


class ValidationError(SumRankError, ValueError):
    pass


class TooLarge(SumRankError):
    """An enumeration would exceed its configured budget."""


# fields
class NotPrime(ValidationError):
    pass


class ReducibleModulus(ValidationError):
    pass


class FieldTooLarge(ValidationError):
    pass


# linear algebra
class BasisNotIndependent(ValidationError):
    pass


class AmbientMismatch(ValidationError):
    pass


# skew polynomials
class SigmaMismatch(ValidationError):
    pass


class InvalidPair(ValidationError):
    pass


class DegreeTooLarge(ValidationError):
    pass


class ZeroPolynomial(ValidationError):
    pass


# codes and systems
class ProfileMismatch(ValidationError):
    pass


class FullSpace(ValidationError):
    pass


class IllegalPermutation(ValidationError):
    pass


class DegenerateCode(ValidationError):
    pass


class BadDimension(ValidationError):
    pass


class ZeroExtension(ValidationError):
    pass


# constructions
class BadCharacteristic(ValidationError):
    pass


class DeltaInH(ValidationError):
    pass


class NormSubgroupViolation(ValidationError):
    pass


class NotScattered(ValidationError):
    pass


class ReduciblePolynomial(ValidationError):
    pass


class NotPrimitive(ValidationError):
    pass


class NotFqrSubspace(ValidationError):
    pass


class WrongDimension(ValidationError):
    pass
