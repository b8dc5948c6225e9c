import types

from skewchain.utils.internal_error import InternalError

VIOLATION_CODES = types.MappingProxyType({
    101: 'gamma -> gamma.r is not strictly increasing.',
    102: 'Composition fails: (gamma.r).s differs from gamma.(rs).',
    103: 'Min-inequality fails: gamma.(r + s) < min(gamma.r, gamma.s).',
    104: 'Min-inequality fails: gamma.(r - s) < min(gamma.r, gamma.s).',
    105: 'Separation fails: a higher-degree monomial is <= a lower-degree one at gamma, but not < below gamma.',
    106: 'Separation fails (dual): a higher-degree monomial is >= a lower-degree one at gamma, but not > above gamma.',
    107: 'inf.r is not inf.',

    201: 'gamma -> gamma.t is not onto.',
    202: 'A monomial comparison set is empty or the whole chain.',
    203: 'gamma.t^n = gamma.a has no solution.',
})


class AxiomViolation:
    """A failed chain-axiom or fullness check, with its witness"""

    def __init__(
            self,
            code: int,
            witness: str = '',
    ) -> None:
        if code not in VIOLATION_CODES:
            raise InternalError('Invalid violation code')

        self.code = code
        self.witness = witness
        self.msg = VIOLATION_CODES[code] + (' ' + witness if witness else '')

    @property
    def fullErrorCode(self) -> str:
        """Full error code, including the 'CHN' prefix"""
        return 'CHN' + f'{self.code}'.zfill(3)

    def __repr__(self) -> str:
        return self.__str__()

    def __str__(self) -> str:
        return f'{self.fullErrorCode}: {self.msg}'
