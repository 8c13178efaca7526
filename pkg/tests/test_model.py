"""Count arithmetic and corpus validation."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tangibility import (
    Application,
    Corpus,
    Count,
    Entity,
    Role,
    Severity,
    Tangibility,
    validate,
)

counts = st.one_of(st.integers(0, 30).map(Count), st.just(Count.MANY))


def _entity(name: str = "thing", count: Count = Count(1)) -> Entity:
    return Entity(name=name, role=Role.DATUM, tangibility=Tangibility.TANGIBLE, count=count)


def _app(app_id: int = 1, name: str = "App", entities=None) -> Application:
    if entities is None:
        entities = (_entity(),)
    return Application(id=app_id, name=name, entities=tuple(entities))


class TestCount:
    def test_exact_addition(self):
        assert Count(2) + Count(3) == Count(5)
        assert Count(0) + Count(0) == Count(0)

    def test_many_absorbs(self):
        assert Count.MANY + Count(3) == Count.MANY
        assert Count(3) + Count.MANY == Count.MANY
        assert Count.MANY + Count.MANY == Count.MANY

    def test_many_equals_only_many(self):
        assert Count.MANY == Count.MANY
        assert Count.MANY != Count(1)
        assert Count.MANY != Count(0)

    def test_negative_rejected_zero_allowed(self):
        with pytest.raises(ValueError):
            Count(-1)
        assert Count(0).value == 0
        assert not Count(0).is_positive
        assert Count.MANY.is_positive

    def test_non_int_rejected(self):
        with pytest.raises(TypeError):
            Count("3")  # type: ignore[arg-type]
        with pytest.raises(TypeError):
            Count(True)  # type: ignore[arg-type]

    def test_str(self):
        assert str(Count(4)) == "4"
        assert str(Count.MANY) == "many"

    @given(st.integers(0, 1000), st.integers(0, 1000))
    def test_addition_matches_integers(self, a, b):
        assert Count(a) + Count(b) == Count(a + b)

    @given(counts, counts)
    def test_addition_commutes(self, a, b):
        assert a + b == b + a

    @given(counts, counts, counts)
    def test_addition_associates(self, a, b, c):
        assert (a + b) + c == a + (b + c)


class TestValidate:
    def test_empty_corpus_is_valid(self):
        assert validate(Corpus()) == []

    def test_clean_application(self):
        assert validate(Corpus((_app(),))) == []

    def test_duplicate_id(self):
        corpus = Corpus((_app(1, "A"), _app(1, "B")))
        findings = validate(corpus)
        assert any("duplicate application id 1" in f.message for f in findings)
        assert all(f.severity is Severity.ERROR for f in findings)

    def test_duplicate_name_case_insensitive(self):
        corpus = Corpus((_app(1, "Urp"), _app(2, "URP")))
        findings = validate(corpus)
        assert len(findings) == 1
        assert "duplicate application name" in findings[0].message

    def test_id_must_be_positive(self):
        findings = validate(Corpus((_app(0),)))
        assert any("id must be positive" in f.message for f in findings)

    def test_zero_count_rejected(self):
        corpus = Corpus((_app(entities=[_entity(count=Count(0))]),))
        findings = validate(corpus)
        assert len(findings) == 1
        assert "count must be positive" in findings[0].message
        assert findings[0].is_error

    def test_many_count_accepted(self):
        corpus = Corpus((_app(entities=[_entity(count=Count.MANY)]),))
        assert validate(corpus) == []

    def test_blank_entity_name(self):
        corpus = Corpus((_app(entities=[_entity(name="   ")]),))
        findings = validate(corpus)
        assert any("name must be non-empty" in f.message for f in findings)

    def test_no_entities_is_a_warning(self):
        findings = validate(Corpus((_app(entities=()),)))
        assert len(findings) == 1
        assert findings[0].severity is Severity.WARNING
        assert not findings[0].is_error

    def test_ordered_by_application(self):
        corpus = Corpus(
            (
                _app(1, "A", entities=[_entity(count=Count(0))]),
                _app(2, "B", entities=[_entity(name=" ")]),
            )
        )
        findings = validate(corpus)
        assert "application 1" in findings[0].message
        assert "application 2" in findings[1].message

    def test_idempotent(self):
        corpus = Corpus((_app(1, "A"), _app(1, "A")))
        assert validate(corpus) == validate(corpus)
