"""Exception hierarchy. Every error carries enough context to reproduce the failure."""
from __future__ import annotations


class CharzeroError(Exception):
    """Base class for all package errors."""


# ---- group construction / validation ----

class EmptyGeneratorList(CharzeroError):
    """No generators and no degree to build a trivial group on."""


class ClosureCapExceeded(CharzeroError):
    def __init__(self, cap: int, reached: int):
        self.cap = cap
        self.reached = reached
        super().__init__(f"closure exceeded cap {cap} (reached {reached} elements)")


class NoIdentity(CharzeroError):
    """Cayley table has no two-sided identity at index 0."""


class NoInverse(CharzeroError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no inverse")


class NotAssociative(CharzeroError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(f"associativity fails at triple {triple}")


class NotNormal(CharzeroError):
    def __init__(self, conjugator: int, member: int):
        self.conjugator = conjugator
        self.member = member
        super().__init__(
            f"subgroup not normal: conjugate of member {member} by {conjugator} escapes"
        )


class NotSubgroup(CharzeroError):
    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(f"member set not closed: product of {witness} escapes")


class CapExceeded(CharzeroError):
    def __init__(self, what: str, cap: int, size: int):
        self.what = what
        self.cap = cap
        self.size = size
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class QuotientNotAbelian(CharzeroError):
    """Bottom subgroup does not contain the derived subgroup."""


# ---- character table engine ----

class NoSuitablePrime(CharzeroError):
    def __init__(self, exponent: int, cap: int):
        self.exponent = exponent
        self.cap = cap
        super().__init__(f"no prime = 1 mod {exponent} below cap {cap}")


class EigenspaceSplitFailure(CharzeroError):
    """All class matrices processed and some common eigenspace still has dim > 1."""


class NotIrreducible(CharzeroError):
    """A class function expected to be an irreducible character is not."""


# ---- statistics ----

class EmptySubset(CharzeroError):
    """anz over an empty character subset is undefined."""


# ---- structure detectors ----

class DegenerateDerived(CharzeroError):
    """Camina condition undefined: derived subgroup is trivial or the whole group."""


class NotCamina(CharzeroError):
    """Dark-Scoppola case analysis applies to Camina groups only."""


class UniquenessFailure(CharzeroError):
    """More than one maximal extendible intermediate subgroup (must never fire)."""


# ---- families ----

class InvalidParameters(CharzeroError):
    """Family parameters violate the constructor's arithmetic preconditions."""


class EvenInvariant(CharzeroError):
    """Generalized dihedral kernel invariants must all be odd."""


class InvalidVariant(CharzeroError):
    """Unknown extraspecial variant for the given parity of p."""


class UnknownName(CharzeroError):
    def __init__(self, name: str, known: tuple[str, ...]):
        self.name = name
        self.known = known
        super().__init__(f"unknown group name {name!r}; known: {', '.join(known)}")


# ---- classify ----

class AbelianInput(CharzeroError):
    """Classification applies to nonabelian groups only."""


class EvenOrder(CharzeroError):
    """This verdict applies to odd-order groups only."""


# ---- io ----

class ParseError(CharzeroError):
    def __init__(self, source: str, detail: str):
        self.source = source
        self.detail = detail
        super().__init__(f"{source}: {detail}")
