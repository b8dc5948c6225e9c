import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click

from skewchain.errors import ConfigError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

logger = logging.getLogger(__name__)

KNOWN_OPTIONS = frozenset(
    {
        'q',
        'prec',
        'budget',
        'json',
        'tower_limit',
        'generator_degree',
        'verbose',
    }
)


def injectDefaultOptionsFromUserSpecifiedTomlFilePath(
        ctx: click.Context,
        param: click.Parameter,
        value: Optional[str],
) -> Optional[str]:
    """
    Inject default options from a user-specified .toml file path.

    Parameters
    ----------
    ctx : click.Context
        The "click" context
    param : click.Parameter
        The "click" parameter; not used in this function; just a placeholder
    value : Optional[str]
        The full path of the .toml file. (It needs to be named ``value``
        so that ``click`` can correctly use it as a callback function.)

    Returns
    -------
    Optional[str]
        The full path of the .toml file

    Raises
    ------
    click.BadParameter
        If the file is not valid TOML or names an unknown option
    """
    if not value:
        return None

    logger.info('Loading config from user-specified .toml file: %s', value)
    try:
        config = parseOneTomlFile(tomlFilename=Path(value))
    except ConfigError as exc:
        raise click.BadParameter(str(exc), ctx=ctx, param=param) from exc

    updateCtxDefaultMap(ctx=ctx, config=config)
    return value


def parseOneTomlFile(tomlFilename: Path) -> Dict[str, Any]:
    """
    Read the ``[tool.skewchain]`` section of a .toml file, with dashes in
    option names mapped to underscores. A missing file or section gives
    an empty config.
    """
    if not tomlFilename.exists():
        logger.info('File "%s" does not exist; nothing to load.', tomlFilename)
        return {}

    try:
        with open(tomlFilename, 'rb') as fp:
            rawConfig = tomllib.load(fp)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f'{tomlFilename} is not valid TOML: {exc}') from exc

    section = rawConfig.get('tool', {}).get('skewchain', {})
    finalConfig = {k.replace('-', '_'): v for k, v in section.items()}

    unknown = sorted(set(finalConfig) - KNOWN_OPTIONS)
    if unknown:
        raise ConfigError(
            f'Unknown options in {tomlFilename}: {", ".join(unknown)}'
        )

    if 'prec' in finalConfig:
        # click parses '--prec' from text such as "3/2"
        finalConfig['prec'] = str(finalConfig['prec'])

    if len(finalConfig) > 0:
        logger.info('Found options defined in %s: %s', tomlFilename, finalConfig)
    else:
        logger.info('No config found in %s.', tomlFilename)

    return finalConfig


def updateCtxDefaultMap(ctx: click.Context, config: Dict[str, Any]) -> None:
    """Update the ``click`` context default map with the provided ``config``"""
    default_map: Dict[str, Any] = {}
    if ctx.default_map:
        default_map.update(ctx.default_map)

    default_map.update(config)
    ctx.default_map = default_map
