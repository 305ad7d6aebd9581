"""Sanity checks for the engine-independent oracles."""
import oracles


def test_closure_from():
    edges = {("a", "b"), ("b", "c"), ("d", "e")}
    assert oracles.closure_from(edges, "a") == {"a", "b", "c"}
    assert oracles.closure_from(edges, "c") == {"c"}


def test_acyclicity():
    assert oracles.is_acyclic({("a", "b"), ("b", "c")})
    assert not oracles.is_acyclic({("a", "b"), ("b", "a")})
    assert not oracles.is_acyclic({("a", "a")})


def test_transitive_reduction():
    assert oracles.is_transitive_reduction({("a", "b"), ("b", "c")})
    assert not oracles.is_transitive_reduction(
        {("a", "b"), ("b", "c"), ("a", "c")})
    # two incomparable paths are fine
    assert oracles.is_transitive_reduction(
        {("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")})


def test_dma_closure_taxonomy():
    memberships = {("Science", "Doc1"), ("Engineering", "Doc1"),
                   ("ArtificialIntelligence", "Doc2"), ("Philosophy", "Doc3")}
    subclasses = {("Science", "TopLevel"), ("Engineering", "TopLevel"),
                  ("Humanities", "TopLevel"), ("ComputerScience", "Science"),
                  ("ComputerScience", "Engineering"),
                  ("Philosophy", "Humanities"),
                  ("ArtificialIntelligence", "ComputerScience")}
    got = oracles.dma_closure(memberships, subclasses)
    assert got == memberships | {
        ("TopLevel", "Doc1"),
        ("ComputerScience", "Doc2"), ("Science", "Doc2"),
        ("Engineering", "Doc2"), ("TopLevel", "Doc2"),
        ("Humanities", "Doc3"), ("TopLevel", "Doc3"),
    }


def test_mis_expected_specificity():
    kinds, literals = oracles.mis_expected(
        {("B", "Tweety"), ("P", "Opus")},
        {("P", "B")},
        {("B", "CF", False), ("P", "CF", True)})
    assert kinds == {("B", "Tweety"), ("P", "Opus"), ("B", "Opus")}
    # the more specific negative occurrence wins for Opus
    assert literals == {("CF", "Tweety", False), ("CF", "Opus", True)}


def test_mis_expected_incomparable():
    # two incomparable opposite occurrences both survive the filter; the
    # oracle describes support, not consistency
    _, literals = oracles.mis_expected(
        {("Q", "Nixon"), ("R", "Nixon")}, set(),
        {("Q", "P", False), ("R", "P", True)})
    assert literals == {("P", "Nixon", False), ("P", "Nixon", True)}
