import pytest

from afkit.core import AF, AFError
from afkit.semantics import (
    EnumerationLimitError,
    Labelling,
    extensions,
    grounded_iteration,
    labellings,
    strongly_admissible,
)

from oracles import ORACLES, all_afs, cf_oracle, nav_oracle, random_af, sad_selfref_oracle


def fs(*xs):
    return frozenset(xs)


def as_set(exts):
    return set(exts)


class TestExamples:
    def test_six_af_stable(self, f_six, g_six):
        assert as_set(extensions(f_six, "stb")) == {fs("b", "d")}
        assert as_set(extensions(g_six, "stb")) == {fs("b", "d")}

    def test_self_attacker_stable_vs_stage(self):
        f = AF(["a1"], [("a1", "a1")])
        assert extensions(f, "stb") == ()
        assert as_set(extensions(f, "stg")) == {fs()}

    def test_three_cycle_stage(self, three_cycle):
        assert as_set(extensions(three_cycle, "stg")) == {fs("a1"), fs("a2"), fs("a3")}

    def test_empty_preferred(self):
        assert as_set(extensions(AF([], []), "prf")) == {fs()}

    def test_three_cycle_cf2_base_case(self, three_cycle):
        assert extensions(three_cycle, "cf2") == extensions(three_cycle, "nav")

    def test_ordering_is_by_size_then_lex(self):
        f = AF("ab", [])
        assert extensions(f, "cf") == (fs(), fs("a"), fs("b"), fs("a", "b"))

    def test_unknown_semantics(self):
        with pytest.raises(AFError):
            extensions(AF("a", []), "weird")


class TestGroundedIteration:
    def test_empty(self):
        assert grounded_iteration(AF([], [])) == (fs(), [fs()])

    def test_layered_example(self, f_layers):
        ext, trace = grounded_iteration(f_layers)
        assert trace[1] == fs("a", "d")
        assert trace[2] == fs("a", "d", "c", "f")
        assert ext == fs("a", "c", "d", "f")
        assert as_set(extensions(f_layers, "grd")) == {ext}

    def test_self_attacker(self):
        assert grounded_iteration(AF(["a"], [("a", "a")])) == (fs(), [fs()])


class TestStronglyAdmissible:
    def test_layered_example(self, f_layers):
        expected = {
            fs(), fs("a"), fs("d"), fs("a", "d"), fs("a", "c"), fs("d", "f"),
            fs("a", "d", "c"), fs("a", "d", "f"), fs("a", "c", "f"), fs("a", "d", "c", "f"),
        }
        assert as_set(strongly_admissible(f_layers)) == expected

    def test_empty(self):
        assert as_set(strongly_admissible(AF([], []))) == {fs()}

    def test_mutual_attack(self):
        # frozen from the self-referential oracle over all subsets
        f = AF("ab", [("a", "b"), ("b", "a")])
        assert sad_selfref_oracle(f) == {fs()}
        assert as_set(strongly_admissible(f)) == {fs()}

    def test_matches_oracle_on_all_two_arg_afs(self):
        for f in all_afs(["a", "b"]):
            assert as_set(strongly_admissible(f)) == sad_selfref_oracle(f)

    def test_grounded_is_greatest(self, f_layers):
        sad = as_set(strongly_admissible(f_layers))
        (grd,) = extensions(f_layers, "grd")
        assert grd in sad and all(s <= grd for s in sad)


class TestLabellings:
    def test_walkthrough_pair(self):
        f = AF("ab", [("a", "b"), ("b", "b")])
        g = AF("ab", [("b", "b")])
        assert labellings(f, "prf") == (Labelling(fs("a"), fs("b"), fs()),)
        assert labellings(g, "prf") == (Labelling(fs("a"), fs(), fs("b")),)

    def test_empty_grounded(self):
        assert labellings(AF([], []), "grd") == (Labelling(fs(), fs(), fs()),)

    def test_partition_invariant(self):
        for f in all_afs(["a", "b"]):
            for sigma in ("stb", "semi", "eag", "prf", "id", "grd", "com"):
                for lab in labellings(f, sigma):
                    union = lab.in_set | lab.out_set | lab.undec_set
                    assert union == f.args
                    assert not (lab.in_set & lab.out_set)
                    assert not (lab.in_set & lab.undec_set)
                    assert not (lab.out_set & lab.undec_set)

    def test_cardinality_matches_extensions(self):
        for f in all_afs(["a", "b"]):
            for sigma in ("stb", "semi", "eag", "prf", "id", "grd", "com"):
                assert len(labellings(f, sigma)) == len(extensions(f, sigma))

    def test_admissible_unsupported(self):
        with pytest.raises(AFError):
            labellings(AF("a", []), "adm")


class TestStructuralProperties:
    def test_oracle_agreement_two_args(self):
        for f in all_afs(["a", "b"]):
            for sigma, oracle in ORACLES.items():
                assert as_set(extensions(f, sigma)) == oracle(f), (sigma, f)

    def test_prf_equals_max_adm_equals_max_com(self):
        for f in all_afs(["a", "b"]):
            adm = as_set(extensions(f, "adm"))
            com = as_set(extensions(f, "com"))
            prf = as_set(extensions(f, "prf"))
            assert prf == {s for s in adm if not any(s < t for t in adm)}
            assert prf == {s for s in com if not any(s < t for t in com)}

    def test_dcl_of_naive_is_cf(self):
        for f in all_afs(["a", "b"]):
            dcl = set()
            for s in nav_oracle(f):
                members = sorted(s)
                for i in range(1 << len(members)):
                    dcl.add(fs(*(members[j] for j in range(len(members)) if i >> j & 1)))
            assert dcl == cf_oracle(f)

    def test_uniqueness_statuses(self):
        for f in all_afs(["a", "b"]):
            for sigma in ("grd", "id", "eag"):
                assert len(extensions(f, sigma)) == 1
            for sigma in ("nav", "prf", "com", "stg", "semi", "cf2", "stg2"):
                assert len(extensions(f, sigma)) >= 1


class TestSampledLargerFrameworks:
    CHAINS = [
        ("stb", "semi"), ("semi", "prf"), ("prf", "com"), ("com", "adm"), ("adm", "cf"),
        ("stb", "stg"), ("stg", "nav"), ("nav", "cf"),
        ("stb", "stg2"), ("stg2", "cf2"), ("cf2", "nav"),
        ("grd", "com"), ("id", "com"), ("eag", "com"),
    ]

    def test_subset_diagram_on_random_four_and_five_arg_afs(self):
        import random

        rng = random.Random(42)
        for _ in range(150):
            f = random_af(rng, "abcd", 0.3)
            ext = {s: as_set(extensions(f, s)) for s, _ in self.CHAINS} | {
                t: as_set(extensions(f, t)) for _, t in self.CHAINS
            }
            for small, large in self.CHAINS:
                assert ext[small] <= ext[large], (small, large, f)
        for _ in range(40):
            f = random_af(rng, "abcde", 0.25)
            for small, large in self.CHAINS:
                assert as_set(extensions(f, small)) <= as_set(extensions(f, large))

    def test_oracles_on_random_four_arg_afs(self):
        import random

        rng = random.Random(43)
        for _ in range(80):
            f = random_af(rng, "abcd", 0.3)
            for sigma, oracle in ORACLES.items():
                assert as_set(extensions(f, sigma)) == oracle(f), (sigma, f)


class TestEnumerationCap:
    def test_cap_refuses(self, monkeypatch):
        monkeypatch.setenv("AFKIT_MAX_ARGS", "2")
        with pytest.raises(EnumerationLimitError):
            extensions(AF("abc", []), "cf")

    def test_self_attackers_do_not_count(self, monkeypatch):
        monkeypatch.setenv("AFKIT_MAX_ARGS", "2")
        f = AF("abc", [("c", "c")])
        assert fs("a", "b") in as_set(extensions(f, "cf"))
