import pytest

from scg.perm import parse_cycles
from scg.words import WordError, evaluate

N = 5
GENS = [parse_cycles(c, N) for c in ("(1,2)", "(2,3)", "(3,4)", "(4,5)")]


def P(text):
    return parse_cycles(text, N)


@pytest.mark.parametrize(
    "word, expected",
    [
        ("r0 r1", "(1,3,2)"),
        ("r0*r1", "(1,3,2)"),
        ("rho0 ρ1", "(1,3,2)"),
        ("r_0 r_{1}", "(1,3,2)"),
        ("(r0 r1)^3", "()"),
        ("(r0 r1)^-1", "(1,2,3)"),
        ("(r0 r1)^{2}", "(1,2,3)"),
        ("r0^r1", "(1,3)"),
        ("r0^{r1 r2}", "(1,4)"),
        ("r3 (1,2)(3,4)", "(1,2)(3,4,5)"),
        ("id", "()"),
        ("", "()"),
    ],
)
def test_words(word, expected):
    assert evaluate(word, GENS) == P(expected)


def test_named_words():
    env = {"a": evaluate("r0 r1", GENS)}
    assert evaluate("a^3", GENS, env).is_identity()
    assert evaluate("a r1", GENS, env) == GENS[0]


@pytest.mark.parametrize("word", ["r9", "b", "(r0", "r0)", "r0 ^", "r0 $"])
def test_bad_words(word):
    with pytest.raises(WordError):
        evaluate(word, GENS)
