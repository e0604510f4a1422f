import itertools

import pytest

from afkit.charlogic import (
    FiniteLogic,
    all_afs_over,
    canonical_characterization,
    canonical_consequence,
    consequence_properties,
    galois_check,
    has_intersection_property,
    is_antimonotone,
    is_characterization,
    make_logic,
    random_logic,
    rho_logic,
    strong_eq_classes,
)
from afkit.core import AFError, union_af
from afkit.kernels import kernel


def fs(*xs):
    return frozenset(xs)


def three_atom_demo() -> FiniteLogic:
    """Explicit table realizing the five-class walkthrough: distinct models for
    the empty theory and each singleton, no models from size two up."""
    table = {
        (): {"i0"}, ("a",): {"i1"}, ("b",): {"i2"}, ("c",): {"i3"},
        ("a", "b"): set(), ("a", "c"): set(), ("b", "c"): set(), ("a", "b", "c"): set(),
    }
    return make_logic("abc", ["i0", "i1", "i2", "i3"], table)


def monotone_strong_example() -> FiniteLogic:
    return make_logic(
        "ab", ["1", "2"],
        {(): {"1", "2"}, ("a",): {"1", "2"}, ("b",): {"2"}, ("a", "b"): set()},
    )


class TestStrongEquivalence:
    def test_five_classes(self):
        part = strong_eq_classes(three_atom_demo())
        blocks = [set(b) for b in part.blocks]
        assert blocks == [
            {fs()},
            {fs("a")},
            {fs("b")},
            {fs("c")},
            {fs("a", "b"), fs("a", "c"), fs("b", "c"), fs("a", "b", "c")},
        ]

    def test_constant_logic_single_class(self):
        table = {t: {"1"} for t in [(), ("a",), ("b",), ("a", "b")]}
        part = strong_eq_classes(make_logic("ab", ["1"], table))
        assert len(part.blocks) == 1

    def test_ordinary_but_not_strong(self):
        part = strong_eq_classes(monotone_strong_example())
        assert part.block_of(()) != part.block_of(("a",))

    def test_cover_and_convexity(self):
        for seed in range(60):
            logic = random_logic(seed)
            part = strong_eq_classes(logic)
            for block in part.blocks:
                members = set(block)
                cover = frozenset().union(*members)
                assert cover in members  # join-semilattice / covered
                for t1 in members:
                    for t3 in members:
                        for mid in logic.theories:
                            if t1 <= mid <= t3:
                                assert mid in members  # convex


class TestCanonicalCharacterization:
    def test_walkthrough_table(self):
        logic = three_atom_demo()
        char = canonical_characterization(logic)
        legend = char.legend
        def models_as_theories(t):
            return {legend[i] for i in char.models(t)}
        everything = {"{}", "{a}", "{b}", "{c}", "{a,b}", "{a,c}", "{b,c}", "{a,b,c}"}
        assert models_as_theories(fs()) == everything
        assert models_as_theories(fs("a")) == {"{a}", "{a,b}", "{a,c}", "{b,c}", "{a,b,c}"}
        assert models_as_theories(fs("a", "b", "c")) == {"{a,b}", "{a,c}", "{b,c}", "{a,b,c}"}

    def test_intersection_demo(self):
        char = canonical_characterization(three_atom_demo())
        assert char.models(fs("a")) & char.models(fs("b")) == char.models(fs("a", "b"))

    def test_is_characterization(self):
        logic = three_atom_demo()
        assert is_characterization(canonical_characterization(logic), logic)

    def test_constant_logic_constant_characterization(self):
        table = {t: {"1"} for t in [(), ("a",)]}
        logic = make_logic("a", ["1"], table)
        char = canonical_characterization(logic)
        assert char.models(fs()) == char.models(fs("a"))

    def test_random_logics(self):
        for seed in range(40):
            logic = random_logic(seed)
            char = canonical_characterization(logic)
            assert is_characterization(char, logic), seed
            assert has_intersection_property(char)

    def test_absorption_against_characterization(self):
        logic = three_atom_demo()
        char = canonical_characterization(logic)
        for t in logic.theories:
            cn = canonical_consequence(logic, t)
            cnp = canonical_consequence(char, t)
            assert cnp <= cn  # sublogic
            assert canonical_consequence(char, cn) == cn  # left absorption
            assert canonical_consequence(logic, cnp) == cn  # right absorption


class TestIntersectionAndGalois:
    def test_monotone_strong_counterexample(self):
        logic = monotone_strong_example()
        assert logic.models(fs("a", "b")) != logic.models(fs("a")) & logic.models(fs("b"))
        assert not has_intersection_property(logic)
        props = consequence_properties(logic)
        assert props == {"increasing": True, "monotone": True, "idempotent": True}

    def test_one_atom_consequence(self):
        logic = make_logic("a", ["1"], {(): set(), ("a",): {"1"}})
        assert canonical_consequence(logic, ()) == fs("a")
        assert canonical_consequence(logic, ("a",)) == fs("a")
        assert not galois_check(logic)
        assert not has_intersection_property(logic)

    def test_non_idempotent_consequence(self):
        table = {}
        for r in range(4):
            for combo in itertools.combinations("abc", r):
                table[combo] = (
                    {"1"} if frozenset(combo) in ({fs(), fs("a"), fs("b")}) else set()
                )
        logic = make_logic("abc", ["1"], table)
        cn0 = canonical_consequence(logic, ())
        assert cn0 == fs("a", "b")
        assert canonical_consequence(logic, cn0) == fs("a", "b", "c")
        assert consequence_properties(logic)["idempotent"] is False

    def test_constant_full_logic(self):
        table = {t: {"1"} for t in [(), ("a",), ("b",), ("a", "b")]}
        logic = make_logic("ab", ["1"], table)
        assert has_intersection_property(logic)
        assert galois_check(logic)

    def test_constant_non_full_logic_fails_empty_theory(self):
        table = {t: {"1"} for t in [(), ("a",)]}
        logic = make_logic("a", ["1", "2"], table)
        assert not has_intersection_property(logic)

    def test_galois_iff_intersection(self):
        for seed in range(60):
            logic = random_logic(seed)
            assert galois_check(logic) == has_intersection_property(logic), seed

    def test_implication_chain(self):
        for seed in range(60):
            logic = random_logic(seed)
            inter = has_intersection_property(logic)
            anti = is_antimonotone(logic)
            mono = consequence_properties(logic)["monotone"]
            if inter:
                assert anti
            if anti:
                assert mono


class TestValidation:
    def test_table_must_be_total(self):
        with pytest.raises(AFError):
            make_logic("ab", ["1"], {(): {"1"}})

    def test_language_cap(self):
        atoms = "abcdefghijklm"  # 13 atoms
        table = {
            c: set()
            for r in range(len(atoms) + 1)
            for c in itertools.combinations(atoms, r)
        }
        with pytest.raises(AFError):
            make_logic(atoms, [], table)

    def test_undeclared_interpretation(self):
        with pytest.raises(AFError):
            make_logic("a", ["1"], {(): {"9"}, ("a",): set()})


class TestRhoLogic:
    def test_single_argument_universe(self):
        rho = rho_logic(["a"], "stb")
        assert len(rho.afs) == 3
        values = [rho.rho_prime[f] for f in rho.afs]
        assert len(set(values)) == 3  # pairwise non-equivalent, injective

    def test_two_argument_intersection(self):
        rho = rho_logic(["a", "b"], "stb")
        for f in rho.afs:
            for g in rho.afs:
                assert rho.rho_prime[union_af(f, g)] == rho.rho_prime[f] & rho.rho_prime[g]

    def test_two_argument_characterization(self):
        rho = rho_logic(["a", "b"], "stb")
        for f in rho.afs:
            for g in rho.afs:
                same_rho = rho.rho_prime[f] == rho.rho_prime[g]
                same_kernel = kernel(f, "k_stb") == kernel(g, "k_stb")
                assert same_rho == same_kernel

    def test_af_count_over_two(self):
        assert len(all_afs_over(["a", "b"])) == 21

    def test_universe_cap(self):
        with pytest.raises(AFError):
            rho_logic(["a", "b", "c", "d"], "stb")

    def test_requires_kernel(self):
        with pytest.raises(AFError):
            rho_logic(["a"], "cf")
