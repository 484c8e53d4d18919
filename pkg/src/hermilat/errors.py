"""Exception hierarchy shared by every hermilat module."""


class HermilatError(Exception):
    """Base class for all workbench errors."""


class CapError(HermilatError):
    """A size or feasibility cap was exceeded."""


# fields
class NonPrime(HermilatError, ValueError):
    pass


class ReducibleModulus(HermilatError, ValueError):
    pass


class OddDegreeFrobenius(HermilatError, ValueError):
    pass


class FieldTooLarge(CapError):
    pass


class DivisionByZero(HermilatError, ZeroDivisionError):
    pass


class FieldMismatch(HermilatError, ValueError):
    pass


# spaces
class NonSquareGram(HermilatError, ValueError):
    pass


class DimensionCap(CapError):
    pass


class LengthMismatch(HermilatError, ValueError):
    pass


class DegenerateSpace(HermilatError, ValueError):
    pass


class NotOrthosymmetric(HermilatError, ValueError):
    pass


class ZeroScale(HermilatError, ValueError):
    pass


class Infeasible(CapError):
    pass


class EnumerationCap(CapError):
    pass


# rings
class NotRegularElement(HermilatError, ValueError):
    pass


class NotRegular(HermilatError, ValueError):
    pass


class NotStarRegular(HermilatError, ValueError):
    pass


class NotASummand(HermilatError, ValueError):
    pass


class KernelNotRegular(HermilatError, ValueError):
    pass


class PreimageMismatch(HermilatError, ValueError):
    pass


class BadIdempotent(HermilatError, ValueError):
    pass


class RankNotOne(HermilatError, ValueError):
    pass


class NotAHom(HermilatError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# lattices
class CongruenceCap(CapError):
    pass


class SizeCap(CapError):
    pass


class PrimeIncompatibleCongruence(HermilatError, ValueError):
    pass


class NotPolarityCML(HermilatError, ValueError):
    pass


class NotALattice(HermilatError, ValueError):
    pass


class NotAtomic(HermilatError, ValueError):
    pass


# constructions
class NoCompatibleEmbedding(HermilatError, ValueError):
    pass


class EpsilonMismatch(HermilatError, ValueError):
    pass
