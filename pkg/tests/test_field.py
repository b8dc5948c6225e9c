import random
from typing import Any, Dict, Tuple

import pytest

from skewchain.errors import (
    ConfigError,
    FieldMismatchError,
    PreconditionError,
    TowerLimitError,
)
from skewchain.field import (
    FieldElem,
    GroundConfig,
    additiveSolve,
    fieldElements,
    fqBasis,
    fqSpan,
    fqSpanContains,
    towerModulus,
)

W2 = FieldElem.generator(2, 2)  # w^2 = w + 1
ONE2 = FieldElem.fromInt(2, 1)


@pytest.mark.parametrize(
    'q, kwargs, expected',
    [
        (2, {}, (2, 1, 2)),
        (3, {}, (3, 1, 2)),
        (4, {}, (2, 2, 2)),
        (8, {}, (2, 3, 3)),
        (9, {'generatorDegree': 4}, (3, 2, 4)),
    ],
)
def testFromPrimePower(
        q: int, kwargs: Dict[str, Any], expected: Tuple[int, int, int]
) -> None:
    ground = GroundConfig.fromPrimePower(q, **kwargs)
    assert (ground.p, ground.e, ground.generatorDegree) == expected
    assert ground.q == q


@pytest.mark.parametrize('q', [0, 1, 6, 12, 100])
def testFromPrimePowerRejects(q: int) -> None:
    with pytest.raises(ConfigError):
        GroundConfig.fromPrimePower(q)


@pytest.mark.parametrize(
    'kwargs',
    [
        {'p': 4},
        {'p': 2, 'e': 0},
        {'p': 2, 'e': 3, 'towerLimit': 2},
        {'p': 2, 'generatorDegree': -1},
    ],
)
def testGroundConfigRejects(kwargs: Dict[str, int]) -> None:
    with pytest.raises(ConfigError):
        GroundConfig(**kwargs)


@pytest.mark.parametrize(
    'p, n, expected',
    [
        (2, 1, (1, 1)),
        (2, 2, (1, 1, 1)),
        (2, 3, (1, 0, 1, 1)),
        (3, 1, (1, 1)),
        (3, 2, (1, 1, 2)),
    ],
)
def testTowerModulus(p: int, n: int, expected: Tuple[int, ...]) -> None:
    assert towerModulus(p, n) == expected


def testArithmeticInF4() -> None:
    assert W2 * W2 == W2 + 1
    assert W2**3 == 1
    assert W2 + W2 == 0
    assert W2.inverse() == W2 + 1
    assert (W2 + 1) / W2 == W2
    assert -W2 == W2
    assert 1 - W2 == W2 + 1


def testArithmeticInF9() -> None:
    w = FieldElem.generator(3, 2)  # w^2 = 2w + 1
    assert w * w == w * 2 + 1
    assert FieldElem.fromInt(3, 2) * FieldElem.fromInt(3, 2) == 1
    assert w**8 == 1
    assert w**4 == 2


def testInverseOfZero() -> None:
    with pytest.raises(ZeroDivisionError):
        FieldElem.fromInt(2, 0).inverse()


def testMixedCharacteristics() -> None:
    with pytest.raises(FieldMismatchError):
        FieldElem.fromInt(2, 1) + FieldElem.fromInt(3, 1)


@pytest.mark.parametrize(
    'k, expected',
    [
        (0, W2),
        (1, W2 + 1),
        (2, W2),
        (-1, W2 + 1),
    ],
)
def testFrobenius(k: int, expected: FieldElem) -> None:
    assert W2.frobenius(1, k) == expected


def testFrobeniusFixesTheGroundField() -> None:
    # F_4 is fixed by x -> x^4
    assert W2.frobenius(2) == W2
    assert ONE2.frobenius(1, 5) == ONE2


@pytest.mark.parametrize('p, degree', [(2, 4), (2, 6), (3, 2), (3, 3), (5, 2)])
def testFieldAxiomsOnRandomTriples(p: int, degree: int) -> None:
    rng = random.Random(100 * p + degree)

    def draw() -> FieldElem:
        return FieldElem(p, degree, [rng.randrange(p) for _ in range(degree)])

    for _ in range(200):
        a, b, c = draw(), draw(), draw()
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == 0
        assert (a - b) + b == a
        if not a.isZero():
            assert a * a.inverse() == 1
            assert (b / a) * a == b


@pytest.mark.parametrize('q, m', [(2, 3), (2, 5), (4, 2), (4, 3), (3, 2), (9, 2)])
def testTowerElementsAreFixedByFrobeniusPowers(q: int, m: int) -> None:
    ground = GroundConfig.fromPrimePower(q)
    degree = ground.e * m
    rng = random.Random(10 * q + m)
    for _ in range(50):
        coords = [rng.randrange(ground.p) for _ in range(degree)]
        x = FieldElem(ground.p, degree, coords)
        assert x ** (q**m) == x
        assert x.frobenius(ground.e, m) == x

    for c in fieldElements(ground.p, ground.e):
        assert c ** q == c


def testEmbeddingIsAHomomorphism() -> None:
    image = W2.embed(4)
    assert image.degree == 4
    assert (W2 * W2).embed(4) == image * image
    assert (W2 + 1).embed(4) == image + 1
    assert image.minimalDegree() == 2
    assert image.descend().degree == 2
    assert image.descend() == W2


def testEqualityAcrossTheTower() -> None:
    assert FieldElem(2, 2, [1, 0]) == ONE2
    assert FieldElem(2, 3, [1]) == 1
    assert W2 != FieldElem.generator(2, 3)
    assert hash(W2.embed(4)) == hash(W2)


def testMinimalDegree() -> None:
    w4 = FieldElem.generator(2, 4)
    assert w4.minimalDegree() == 4
    assert (w4**5).minimalDegree() == 2  # the image of w_2
    assert FieldElem.fromInt(2, 1).embed(4).minimalDegree() == 1


def testFieldElements() -> None:
    elements = fieldElements(2, 2)
    assert len(elements) == 4
    assert elements[0] == 0
    assert len({_ for _ in fieldElements(3, 2)}) == 9


def testFqSpanAndBasis() -> None:
    ground = GroundConfig()
    assert fqBasis([W2, W2 + 1, ONE2], ground) == [W2, W2 + 1]
    assert fqSpan([W2], ground) == [FieldElem.fromInt(2, 0), W2]
    assert fqSpanContains([W2, ONE2], W2 + 1, ground)
    assert not fqSpanContains([W2], ONE2, ground)


def testFqBasisOverF4() -> None:
    ground = GroundConfig(p=2, e=2)
    # over F_4 the element w already spans 1 and w + 1
    assert fqBasis([W2, ONE2, W2 + 1], ground) == [W2]


def testAdditiveSolveKernel() -> None:
    ground = GroundConfig()
    # c^2 + c = 0
    solution = additiveSolve([(1, ONE2), (0, ONE2)], FieldElem.fromInt(2, 0), ground)
    assert solution.roots == (FieldElem.fromInt(2, 0), ONE2)
    assert solution.towerDegree == 1
    assert solution.nonzeroRoots == (ONE2,)


def testAdditiveSolveNeedsAnExtension() -> None:
    ground = GroundConfig()
    # c^2 + c = 1 has its roots in F_4
    solution = additiveSolve([(1, ONE2), (0, ONE2)], ONE2, ground)
    assert solution.degree == 2
    assert solution.towerDegree == 2
    assert solution.roots == (W2, W2 + 1)
    for root in solution.roots:
        assert root * root + root == 1


def testAdditiveSolveFullKernel() -> None:
    ground = GroundConfig()
    coeffs = [(2, ONE2), (0, ONE2)]  # c^4 + c
    zero = FieldElem.fromInt(2, 0)

    full = additiveSolve(coeffs, zero, ground)
    assert full.degree == 2
    assert len(full.roots) == 4

    first = additiveSolve(coeffs, zero, ground, fullKernel=False)
    assert first.degree == 1
    assert first.roots == (zero, ONE2)


def testAdditiveSolveInseparable() -> None:
    ground = GroundConfig()
    # c^2 = 0 has only the zero root
    solution = additiveSolve([(1, ONE2)], FieldElem.fromInt(2, 0), ground)
    assert solution.roots == (FieldElem.fromInt(2, 0),)
    assert solution.nonzeroRoots == ()


def testAdditiveSolveOverGroundF4() -> None:
    ground = GroundConfig(p=2, e=2)
    # c^4 + c = 0 with q = 4: the kernel is all of F_4
    solution = additiveSolve([(1, ONE2), (0, ONE2)], FieldElem.fromInt(2, 0), ground)
    assert solution.degree == 2
    assert solution.towerDegree == 1
    assert len(solution.roots) == 4


def testAdditiveSolveTowerLimit() -> None:
    ground = GroundConfig(towerLimit=1)
    with pytest.raises(TowerLimitError):
        additiveSolve([(1, ONE2), (0, ONE2)], ONE2, ground)


def testAdditiveSolveWithoutTerms() -> None:
    zero = FieldElem.fromInt(2, 0)
    with pytest.raises(PreconditionError):
        additiveSolve([(0, zero), (1, zero)], ONE2, GroundConfig())
