import pytest
from hypothesis import given
from hypothesis import strategies as st

from models.morphism import BinaryMorphism, Generator, GeneratorWord
from services import morphisms
from utils.errors import ClosureCapExceeded, EmptyInput, InputError

four_generators = st.sampled_from([Generator.LA, Generator.LB, Generator.RA, Generator.RB])
generator_words = st.lists(
    st.sampled_from(list(Generator)), max_size=6,
).map(lambda gens: GeneratorWord(tuple(gens)))
core_words = st.lists(four_generators, max_size=5).map(lambda gens: GeneratorWord(tuple(gens)))


@pytest.mark.parametrize('generator, image_a, image_b', [
    (Generator.E, 'b', 'a'),
    (Generator.LA, 'a', 'ab'),
    (Generator.LB, 'ba', 'b'),
    (Generator.RA, 'a', 'ba'),
    (Generator.RB, 'ab', 'b'),
])
def test_generator_images(generator, image_a, image_b):
    assert morphisms.generator_image(generator) == BinaryMorphism.from_images(image_a, image_b)


def test_morphisms_are_non_erasing():
    with pytest.raises(EmptyInput):
        BinaryMorphism.from_images('', 'b')


@pytest.mark.parametrize('text, image_a, image_b', [
    ('Id', 'a', 'b'),
    ('La Lb', 'aba', 'ab'),
    ('La Ra', 'a', 'aba'),
    ('Ra La La Rb', 'aaaba', 'aaba'),
    ('E E', 'a', 'b'),
])
def test_morphism_of_composes_rightmost_first(gw, text, image_a, image_b):
    assert morphisms.morphism_of(gw(text)) == BinaryMorphism.from_images(image_a, image_b)


def test_apply(gw):
    assert morphisms.apply(morphisms.morphism_of(gw('La Lb')), 'ab').letters == 'abaab'
    assert morphisms.apply(morphisms.morphism_of(gw('La')), '').is_empty


@given(left=generator_words, right=generator_words)
def test_composition_is_concatenation(left, right):
    composed = morphisms.compose(morphisms.morphism_of(left), morphisms.morphism_of(right))
    assert composed == morphisms.morphism_of(left + right)


@pytest.mark.parametrize('text, core, flip', [
    ('E La', ['Lb'], True),
    ('E E', [], False),
    ('La E Ra', ['La', 'Rb'], True),
    ('E La E', ['Lb'], False),
    ('Ra Rb', ['Ra', 'Rb'], False),
])
def test_normalize_E(gw, text, core, flip):
    normalized = morphisms.normalize_E(gw(text))
    assert normalized.to_dict() == {'core': core, 'flip': flip}


@given(word=generator_words)
def test_normalization_preserves_the_morphism(word):
    normalized = morphisms.normalize_E(word)
    assert not normalized.core.has_e
    assert morphisms.morphisms_equal(word, normalized.as_generator_word())


@given(word=core_words)
def test_exchange_conjugate_is_E_f_E(word):
    conjugated = GeneratorWord((Generator.E,)) + word + GeneratorWord((Generator.E,))
    assert morphisms.morphisms_equal(conjugated, morphisms.exchange_conjugate(word))


def test_rewrite_neighbours():
    assert set(morphisms.rewrite_neighbours('ABC')) == {'CDA'}
    assert set(morphisms.rewrite_neighbours('AC')) == {'CA'}
    assert set(morphisms.rewrite_neighbours('ABBC')) == {'CDDA'}
    assert list(morphisms.rewrite_neighbours('AD')) == []


@pytest.mark.parametrize('code, expected', [
    ('CAD', {'CAD', 'ACD'}),
    ('AC', {'AC', 'CA'}),
    ('ABC', {'ABC', 'CDA'}),
    ('AD', {'AD'}),
    ('', {''}),
])
def test_closure_codes(code, expected):
    assert set(morphisms.closure_codes(code, 1000)) == expected


def test_closure_starts_with_the_input(gw):
    closure = morphisms.relation_closure(gw('Ra La Rb'))
    assert closure[0] == gw('Ra La Rb')
    assert gw('La Ra Rb') in closure


@given(word=core_words)
def test_closure_members_denote_the_same_morphism(word):
    closure = morphisms.relation_closure(word, cap=10_000)
    for member in closure:
        assert len(member) == len(word)
        assert morphisms.morphisms_equal(member, word)


def test_closure_cap(gw):
    with pytest.raises(ClosureCapExceeded) as excinfo:
        morphisms.relation_closure(gw('La Ra'), cap=1)
    assert excinfo.value.exit_code == 3


def test_closure_rejects_E(gw):
    with pytest.raises(InputError):
        morphisms.relation_closure(gw('La E'))


def test_morphisms_equal(gw):
    assert morphisms.morphisms_equal(gw('La Lb Ra'), gw('Ra Rb La'))
    assert morphisms.morphisms_equal(gw('E La'), gw('Lb E'))
    assert not morphisms.morphisms_equal(gw('La Ra'), gw('Ra Rb'))
