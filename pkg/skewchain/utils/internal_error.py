from skewchain.errors import SkewchainError


class InternalError(SkewchainError):
    """Internal error for 'should not have happened' situations"""
