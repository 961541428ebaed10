"""Exception types shared across genlab."""


class GenlabError(Exception):
    pass


class SizeLimit(GenlabError):
    """Raised when a request exceeds an enumeration or materialization cap."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class IntegralityFailure(GenlabError):
    pass


class ElementNotInLattice(GenlabError):
    pass


class NegativeResult(GenlabError):
    pass


class NotIDTree(GenlabError):
    pass


class NotWWord(GenlabError):
    pass


class NotInGSet(GenlabError):
    pass


def check_cap(what, size, cap):
    if size > cap:
        raise SizeLimit(what, size, cap)
