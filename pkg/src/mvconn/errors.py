"""Exception hierarchy.

Every error that is caused by a concrete counterexample carries it in
``witness`` so callers can print or re-check it.
"""


class LatticeError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MalformedDocument(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class NotDistributive(LatticeError):
    pass


class BadNegation(LatticeError):
    pass


class ForeignElement(LatticeError):
    pass


class EmptyOperand(LatticeError):
    pass


class InfiniteCarrier(LatticeError):
    pass


class UnsupportedCarrier(LatticeError):
    pass


class ModeUnsupported(LatticeError):
    pass


class OrderViolation(LatticeError):
    pass
