import contextlib
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

import click

from skewchain import __version__
from skewchain.chain import (
    TropPoly,
    chainEval,
    chainInverse,
    envelope,
    potentialJumps,
)
from skewchain.errors import (
    ConfigError,
    DomainError,
    InputError,
    PreconditionError,
)
from skewchain.field import DEFAULT_TOWER_LIMIT, GroundConfig
from skewchain.logic.ast import Exists, ForAll, isQuantifierFree, toJson
from skewchain.logic.decision import decide
from skewchain.logic.parser import parseFormula, parseTropPoly
from skewchain.logic.printer import formatFormula
from skewchain.logic.qe import eliminate, qeExists, qeForAll
from skewchain.logic.simplify import simplify
from skewchain.notation import parseOrePoly, parseSeries
from skewchain.ore import tropicalize
from skewchain.parse_config import (
    injectDefaultOptionsFromUserSpecifiedTomlFilePath,
)
from skewchain.render import (
    envelopeToJson,
    fieldElemToJson,
    formatEnvelope,
    formatFieldElem,
    formatJumps,
    formatSeries,
    jumpsToJson,
    seriesToJson,
    tropPolyToJson,
)
from skewchain.utils.generic import (
    formatChainValue,
    formatRational,
    formatRationalList,
    parseChainValue,
    parseRational,
)
from skewchain.vmod import (
    DEFAULT_BUDGET,
    DEFAULT_PREC,
    ApproximationTrace,
    kernelBasis,
    regularDecomposition,
    regularity,
    solveRegular,
)

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 2
EXIT_DOMAIN_ERROR = 3


@dataclass(frozen=True)
class SessionConfig:
    """Settings shared by the subcommands of one invocation"""

    ground: GroundConfig
    prec: Fraction = DEFAULT_PREC
    budget: int = DEFAULT_BUDGET
    outputMode: str = 'text'

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise ConfigError('The term budget must be at least 1')

        if self.outputMode not in {'text', 'json'}:
            raise ConfigError('Output mode must be "text" or "json"')

    @property
    def asJson(self) -> bool:
        return self.outputMode == 'json'


def validatePrimePower(
        ctx: click.Context,
        param: click.Parameter,
        value: int,
) -> int:
    """Validate the value of the '--q' option"""
    try:
        GroundConfig.fromPrimePower(value)
    except InputError as exc:
        raise click.BadParameter(str(exc)) from exc

    return value


def validatePrecision(
        ctx: click.Context,
        param: click.Parameter,
        value: Optional[Any],
) -> Optional[Fraction]:
    """Parse '--prec' values such as ``3/2``; ``inf`` is not allowed"""
    if value is None:
        return None

    try:
        return parseRational(str(value))
    except InputError as exc:
        raise click.BadParameter(str(exc)) from exc


def _emit(session: SessionConfig, payload: Dict[str, Any], lines: List[str]) -> None:
    if session.asJson:
        click.echo(json.dumps(payload, indent=2))
        return

    for line in lines:
        click.echo(line)


@contextlib.contextmanager
def _exitCodes(ctx: click.Context) -> Iterator[None]:
    """Map library errors to the documented exit codes"""
    try:
        yield
    except InputError as exc:
        click.echo(f'Input error: {exc}', err=True)
        ctx.exit(EXIT_INPUT_ERROR)
    except DomainError as exc:
        click.echo(f'{type(exc).__name__}: {exc}', err=True)
        ctx.exit(EXIT_DOMAIN_ERROR)


def _session(ctx: click.Context) -> SessionConfig:
    return ctx.find_object(SessionConfig)


@click.group(
    context_settings={'help_option_names': ['-h', '--help']},
    help=(
        'Skewchain: exact computations with twisted polynomials, their'
        ' tropical chains and valued modules'
    ),
)
@click.option(
    '--q',
    type=int,
    show_default=True,
    default=2,
    callback=validatePrimePower,
    help='The order q = p^e of the field fixed by the twist x -> x^q',
)
@click.option(
    '--prec',
    type=str,
    show_default=True,
    default=str(DEFAULT_PREC),
    callback=validatePrecision,
    help='Default precision target, a rational such as 3/2',
)
@click.option(
    '--budget',
    type=click.IntRange(min=1),
    show_default=True,
    default=DEFAULT_BUDGET,
    help='Default maximal number of terms added by the solver',
)
@click.option(
    '--json',
    is_flag=True,
    default=False,
    help='Print JSON instead of text',
)
@click.option(
    '--tower-limit',
    type=click.IntRange(min=1),
    show_default=True,
    default=DEFAULT_TOWER_LIMIT,
    help='Largest F_p-degree of the finite fields searched for roots',
)
@click.option(
    '--generator-degree',
    type=click.IntRange(min=0),
    show_default=True,
    default=0,
    help='F_p-degree of the field whose generator is written "w" (0: max(e, 2))',
)
@click.option(
    '-v',
    '--verbose',
    is_flag=True,
    default=False,
    help='Log solver steps and case splits to stderr',
)
@click.option(
    '--config',
    type=click.Path(
        exists=True,
        file_okay=True,
        dir_okay=False,
        readable=True,
        allow_dash=False,
        path_type=str,
    ),
    is_eager=True,
    callback=injectDefaultOptionsFromUserSpecifiedTomlFilePath,
    help=(
        'The full path of a .toml file with a [tool.skewchain] section;'
        ' command line options take precedence over the file'
    ),
)
@click.version_option(__version__)
@click.pass_context
def main(
        ctx: click.Context,
        q: int,
        prec: Fraction,
        budget: int,
        json: bool,
        tower_limit: int,
        generator_degree: int,
        verbose: bool,
        config: Optional[str],  # don't remove it b/c it's required by `click`
) -> None:
    """Command-line entry point of skewchain"""
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            stream=sys.stderr,
            format='%(name)s: %(message)s',
        )

    with _exitCodes(ctx):
        ground = GroundConfig.fromPrimePower(
            q, generatorDegree=generator_degree, towerLimit=tower_limit
        )

    ctx.obj = SessionConfig(
        ground=ground,
        prec=prec,
        budget=budget,
        outputMode='json' if json else 'text',
    )
    logger.debug('Session: %r', ctx.obj)


def _readTropPoly(text: str, ground: GroundConfig) -> TropPoly:
    """``{(i,v),...}`` is read as a tropical polynomial, else as an Ore one"""
    if text.lstrip().startswith('{'):
        return parseTropPoly(text, q=ground.q)

    return tropicalize(parseOrePoly(text, ground))


@dataclass(frozen=True)
class TropRequest:
    session: SessionConfig
    poly: TropPoly


@main.group(help='Tropical analysis of a polynomial')
@click.argument('poly', type=str)
@click.pass_context
def trop(ctx: click.Context, poly: str) -> None:
    session = _session(ctx)
    with _exitCodes(ctx):
        ctx.obj = TropRequest(session, _readTropPoly(poly, session.ground))


def _tropArgs(ctx: click.Context) -> Tuple[SessionConfig, TropPoly]:
    request = ctx.find_object(TropRequest)
    return request.session, request.poly


@trop.command(name='eval', help='gamma.r for a rational gamma or inf')
@click.argument('gamma', type=str)
@click.pass_context
def tropEval(ctx: click.Context, gamma: str) -> None:
    session, r = _tropArgs(ctx)
    with _exitCodes(ctx):
        value = chainEval(parseChainValue(gamma), r)

    text = formatChainValue(value)
    _emit(session, {'poly': tropPolyToJson(r), 'value': text}, [text])


@trop.command(name='jumps', help='The potential jump values, ascending')
@click.pass_context
def tropJumps(ctx: click.Context) -> None:
    session, r = _tropArgs(ctx)
    jumps = potentialJumps(r)
    lines = [formatJumps(jumps)] if len(jumps) > 0 else []
    _emit(session, {'poly': tropPolyToJson(r), 'jumps': jumpsToJson(jumps)}, lines)


@trop.command(name='envelope', help='The pieces U_i on which gamma.r is linear')
@click.pass_context
def tropEnvelope(ctx: click.Context) -> None:
    session, r = _tropArgs(ctx)
    profile = envelope(r)
    _emit(
        session,
        {'poly': tropPolyToJson(r), 'envelope': envelopeToJson(profile)},
        formatEnvelope(profile),
    )


@trop.command(name='inverse', help='The unique gamma with gamma.r = delta')
@click.argument('delta', type=str)
@click.pass_context
def tropInverse(ctx: click.Context, delta: str) -> None:
    session, r = _tropArgs(ctx)
    with _exitCodes(ctx):
        value = chainInverse(parseChainValue(delta), r)

    text = formatChainValue(value)
    _emit(session, {'poly': tropPolyToJson(r), 'value': text}, [text])


def _precOption(func: Any) -> Any:
    return click.option(
        '--prec',
        type=str,
        default=None,
        callback=validatePrecision,
        help='Precision target for this command (overrides the global one)',
    )(func)


def _budgetOption(func: Any) -> Any:
    return click.option(
        '--budget',
        type=click.IntRange(min=1),
        default=None,
        help='Term budget for this command (overrides the global one)',
    )(func)


def _traceLines(y: Any, trace: ApproximationTrace) -> List[str]:
    return [
        f'y = {formatSeries(y)}',
        f'residuals: {formatRationalList(trace.residualValuations)}',
        f'termination: {trace.reason.value}',
        f'tower degree: {trace.towerDegree}',
    ]


def _traceJson(y: Any, trace: ApproximationTrace) -> Dict[str, Any]:
    return {
        'y': seriesToJson(y),
        'approximants': [seriesToJson(_) for _ in trace.approximants],
        'residuals': [formatChainValue(_) for _ in trace.residualValuations],
        'termination': trace.reason.value,
        'towerDegree': trace.towerDegree,
    }


@main.command(help='Approximate a regular y with y.r = z')
@click.argument('poly', type=str)
@click.argument('rhs', type=str)
@_precOption
@_budgetOption
@click.pass_context
def solve(
        ctx: click.Context,
        poly: str,
        rhs: str,
        prec: Optional[Fraction],
        budget: Optional[int],
) -> None:
    session = _session(ctx)
    with _exitCodes(ctx):
        r = parseOrePoly(poly, session.ground)
        z = parseSeries(rhs, session.ground)
        y, trace = solveRegular(
            r,
            z,
            prec=session.prec if prec is None else prec,
            budget=session.budget if budget is None else budget,
        )

    _emit(session, _traceJson(y, trace), _traceLines(y, trace))
    if not trace.succeeded:
        click.echo(
            'Budget exhausted before the precision target was reached',
            err=True,
        )
        ctx.exit(EXIT_DOMAIN_ERROR)


@main.command(help='Kernel of x -> x.r stratified by valuation')
@click.argument('poly', type=str)
@_precOption
@_budgetOption
@click.pass_context
def kernel(
        ctx: click.Context,
        poly: str,
        prec: Optional[Fraction],
        budget: Optional[int],
) -> None:
    session = _session(ctx)
    with _exitCodes(ctx):
        r = parseOrePoly(poly, session.ground)
        result = kernelBasis(
            r,
            prec=session.prec if prec is None else prec,
            budget=session.budget if budget is None else budget,
        )

    lines = []
    strata = []
    for stratum in result.strata:
        basis = ', '.join(formatSeries(_) for _ in stratum.basis)
        lines.append(
            f'stratum gamma={formatRational(stratum.gamma)}:'
            f' basis {{{basis}}}, |A_gamma| = {stratum.size}'
        )
        for pair in stratum.pairs:
            lines.append(
                f'  {formatFieldElem(pair.reducedRoot, session.ground)}:'
                f' {formatSeries(pair.rootOfR)}'
                f' (distance {formatChainValue(pair.distance)})'
            )

        strata.append(
            {
                'gamma': formatRational(stratum.gamma),
                'size': stratum.size,
                'towerDegree': stratum.towerDegree,
                'basis': [seriesToJson(_) for _ in stratum.basis],
                'pairs': [
                    {
                        'reducedRoot': fieldElemToJson(pair.reducedRoot),
                        'rootOfSubpoly': seriesToJson(pair.rootOfSubpoly),
                        'rootOfR': seriesToJson(pair.rootOfR),
                        'distance': formatChainValue(pair.distance),
                    }
                    for pair in stratum.pairs
                ],
            }
        )

    verdict = 'holds' if result.productFormulaHolds else 'fails'
    lines.append(f'|A| = {result.size}')
    lines.append(f'product formula: {verdict}')
    payload = {
        'strata': strata,
        'size': result.size,
        'expectedSize': result.expectedSize,
        'productFormulaHolds': result.productFormulaHolds,
    }
    _emit(session, payload, lines)


@main.command(help='Write x = a + eps with a near the kernel and eps regular')
@click.argument('x', type=str)
@click.argument('poly', type=str)
@_precOption
@_budgetOption
@click.pass_context
def decompose(
        ctx: click.Context,
        x: str,
        poly: str,
        prec: Optional[Fraction],
        budget: Optional[int],
) -> None:
    session = _session(ctx)
    with _exitCodes(ctx):
        r = parseOrePoly(poly, session.ground)
        result = regularDecomposition(
            parseSeries(x, session.ground),
            r,
            prec=session.prec if prec is None else prec,
            budget=session.budget if budget is None else budget,
        )

    payload = {
        'a': seriesToJson(result.a),
        'eps': seriesToJson(result.epsilon),
        'rounds': result.rounds,
    }
    lines = [f'a = {formatSeries(result.a)}', f'eps = {formatSeries(result.epsilon)}']
    _emit(session, payload, lines)


@main.command(help='Whether v(x.r) = v(x).r')
@click.argument('x', type=str)
@click.argument('poly', type=str)
@click.pass_context
def regular(ctx: click.Context, x: str, poly: str) -> None:
    session = _session(ctx)
    with _exitCodes(ctx):
        verdict = regularity(
            parseSeries(x, session.ground), parseOrePoly(poly, session.ground)
        )

    actual = formatChainValue(verdict.actual)
    predicted = formatChainValue(verdict.predicted)
    if verdict.regular:
        line = 'regular'
    else:
        bound = '>=' if not verdict.certain else '='
        line = f'irregular: v(x.r) {bound} {actual}, v(x).r = {predicted}'

    payload = {
        'regular': verdict.regular,
        'actual': actual,
        'predicted': predicted,
        'certain': verdict.certain,
    }
    _emit(session, payload, [line])


@main.group(help='Formulas over the chain Q + {inf}')
def logic() -> None:
    pass


def _qe(formula: Any) -> Any:
    """Eliminate the outermost quantifier of E x. phi or A x. phi"""
    if isinstance(formula, Exists):
        return qeExists(formula.body, formula.var)

    if isinstance(formula, ForAll):
        return qeForAll(formula.body, formula.var)

    if isQuantifierFree(formula):
        return simplify(formula)

    raise PreconditionError('qe expects a formula of the form E x. phi or A x. phi')


@logic.command(name='decide', help='Truth value of a sentence')
@click.argument('formula', type=str)
@click.pass_context
def logicDecide(ctx: click.Context, formula: str) -> None:
    session = _session(ctx)
    with _exitCodes(ctx):
        sentence = parseFormula(formula, q=session.ground.q)
        value = decide(sentence)

    text = 'true' if value else 'false'
    _emit(session, {'formula': toJson(sentence), 'value': value}, [text])


@logic.command(name='qe', help='Eliminate the outermost quantifier')
@click.argument('formula', type=str)
@click.option(
    '--all',
    'all_',
    is_flag=True,
    default=False,
    help='Eliminate every quantifier, innermost first',
)
@click.pass_context
def logicQe(ctx: click.Context, formula: str, all_: bool) -> None:
    session = _session(ctx)
    with _exitCodes(ctx):
        parsed = parseFormula(formula, q=session.ground.q)
        result = eliminate(parsed) if all_ else _qe(parsed)

    text = formatFormula(result)
    _emit(session, {'formula': toJson(result), 'text': text}, [text])


@logic.command(name='simplify', help='Equivalent simpler formula')
@click.argument('formula', type=str)
@click.pass_context
def logicSimplify(ctx: click.Context, formula: str) -> None:
    session = _session(ctx)
    with _exitCodes(ctx):
        result = simplify(parseFormula(formula, q=session.ground.q))

    text = formatFormula(result)
    _emit(session, {'formula': toJson(result), 'text': text}, [text])


if __name__ == '__main__':
    main()
