from pathlib import Path
from typing import Any, Dict

import pytest

from skewchain.errors import ConfigError
from skewchain.parse_config import parseOneTomlFile

THIS_DIR = Path(__file__).parent
DATA_DIR = THIS_DIR / 'data'


@pytest.mark.parametrize(
    'filename, expected',
    [
        (Path('a_path_that_doesnt_exist.toml'), {}),
        (
            DATA_DIR / 'example_config.toml',
            {'q': 4, 'prec': '3/2', 'tower_limit': 8},
        ),
    ],
)
def testParseOneTomlFile(filename: Path, expected: Dict[str, Any]) -> None:
    tomlConfig = parseOneTomlFile(filename)
    assert tomlConfig == expected


def testFileWithoutSection(tmp_path: Path) -> None:
    filename = tmp_path / 'pyproject.toml'
    filename.write_text('[tool.other]\nq = 3\n')
    assert parseOneTomlFile(filename) == {}


def testNumericPrecisionIsKeptAsText(tmp_path: Path) -> None:
    filename = tmp_path / 'pyproject.toml'
    filename.write_text('[tool.skewchain]\nprec = 3\ngenerator-degree = 2\n')
    assert parseOneTomlFile(filename) == {'prec': '3', 'generator_degree': 2}


@pytest.mark.parametrize(
    'content',
    [
        '[tool.skewchain]\nstyle = "numpy"\n',
        '[tool.skewchain\nq = 2\n',
        '[tool.skewchain]\nq = \n',
    ],
)
def testInvalidConfig(tmp_path: Path, content: str) -> None:
    filename = tmp_path / 'pyproject.toml'
    filename.write_text(content)
    with pytest.raises(ConfigError):
        parseOneTomlFile(filename)
