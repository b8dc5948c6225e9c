from lark import Lark
from lark.exceptions import (
    LarkError,
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
)

from skewchain.errors import ParseError


def _countTokens(parser: Lark, text: str) -> int:
    try:
        return sum(1 for _ in parser.lex(text))
    except LarkError:
        return 0


def toParseError(
        exc: UnexpectedInput, parser: Lark, text: str, what: str
) -> ParseError:
    """
    Translate a lark error into a ParseError with a 1-based token index
    (counted by lexing the text before the offending position) and column.
    """
    if isinstance(exc, UnexpectedEOF):
        return ParseError(
            f'Unexpected end of {what}',
            column=len(text) + 1,
            tokenIndex=_countTokens(parser, text) + 1,
        )

    if isinstance(exc, UnexpectedToken):
        atEnd = exc.token.type == '$END'
        # $END borrows the position of the last real token
        position = len(text) if atEnd else exc.token.start_pos
        found = 'end of input' if atEnd else repr(str(exc.token))
        message = f'Unexpected {found} in {what}'
    elif isinstance(exc, UnexpectedCharacters):
        position = exc.pos_in_stream
        message = f'Unexpected character {text[position]!r} in {what}'
    else:
        position = getattr(exc, 'pos_in_stream', None) or 0
        message = f'Cannot parse {what}'

    return ParseError(
        message,
        column=position + 1,
        tokenIndex=_countTokens(parser, text[:position]) + 1,
    )
