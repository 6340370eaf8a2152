"""Exception hierarchy shared by every kext module."""


class KextError(Exception):
    """Base class for all errors raised by kext."""


class UnsupportedField(KextError):
    """The requested computation has no algorithm over this field."""


class NonPrimeCharacteristic(KextError, ValueError):
    pass


class ReducibleMinPoly(KextError, ValueError):
    pass


class DuplicateVariable(KextError, ValueError):
    pass


class MixedFields(KextError, ValueError):
    pass


class FieldMismatch(KextError, ValueError):
    pass


class NotAssociative(KextError, ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"structure constants are not associative at basis triple {witness}")


class BadUnit(KextError, ValueError):
    pass


class NotAGroup(KextError, ValueError):
    pass


class BadParameters(KextError, ValueError):
    pass


class BadModule(KextError, ValueError):
    pass


class DifferentAlgebras(KextError, ValueError):
    pass


class NotAGroupAlgebra(KextError, ValueError):
    pass


class NotSimple(KextError, ValueError):
    pass


class TooLarge(KextError):
    pass


class UnknownCheck(KextError, KeyError):
    pass


class Undecidable(KextError):
    pass
