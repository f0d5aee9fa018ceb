"""Core permutation operations against independent brute-force oracles."""

import itertools

import pytest

from permspec import (
    DecompTree,
    Perm,
    contains,
    decompose,
    embeddings,
    enumerate_avoiders,
    gen_substitute,
    indecomposability,
    is_simple,
    pattern_of,
    rebuild,
    substitute,
    tree_text,
)
from permspec.perms import ROOT_12, ROOT_21

from conftest import pc, perms_of_size


# --- pattern containment ---------------------------------------------------

def test_contains_worked_examples():
    assert contains(pc("316452"), pc("2431"))
    assert not contains(pc("316452"), pc("2413"))


@pytest.mark.parametrize("n", range(1, 6))
def test_every_permutation_contains_one(n):
    for p in perms_of_size(n):
        assert contains(p, Perm((1,)))


def subsequence_patterns(sigma: Perm, max_len: int) -> set[Perm]:
    """Index-subset oracle: the set of patterns of all short subsequences."""
    out = set()
    for k in range(1, max_len + 1):
        for idxs in itertools.combinations(range(len(sigma)), k):
            out.add(pattern_of([sigma.values[i] for i in idxs]))
    return out


def test_contains_matches_index_subset_oracle():
    patterns = [p for k in range(1, 5) for p in perms_of_size(k)]
    for n in range(1, 8):
        for sigma in perms_of_size(n):
            present = subsequence_patterns(sigma, 4)
            for pi in patterns:
                assert contains(sigma, pi) == (pi in present), (sigma, pi)


# --- simplicity ------------------------------------------------------------

def test_is_simple_examples():
    assert is_simple(pc("3142"))
    assert not is_simple(pc("21"))
    assert not is_simple(pc("132"))
    assert not is_simple(Perm((1,)))


def scan_is_simple(p: Perm) -> bool:
    """Independent oracle: check every index window for consecutive values."""
    n = len(p)
    if n < 4:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if j - i + 1 == n:
                continue
            window = p.values[i:j + 1]
            if max(window) - min(window) == j - i:
                return False
    return True


def test_is_simple_matches_interval_scan_through_size_8():
    for n in range(1, 9):
        for p in perms_of_size(n):
            assert is_simple(p) == scan_is_simple(p), p


def test_simple_counts_by_size():
    counts = {n: sum(1 for p in perms_of_size(n) if is_simple(p))
              for n in (4, 5, 6)}
    assert counts == {4: 2, 5: 6, 6: 46}


# --- substitution ----------------------------------------------------------

def test_substitute_worked_example():
    got = substitute(pc("132"), [pc("21"), pc("132"), Perm((1,))])
    assert got == pc("214653")


def test_substitute_identities():
    assert substitute(pc("12"), [Perm((1,)), Perm((1,))]) == pc("12")
    assert substitute(pc("2413"), [Perm((1,))] * 4) == pc("2413")


def test_substitute_arity_checked():
    with pytest.raises(ValueError):
        substitute(pc("12"), [Perm((1,))])


def test_substitute_result_contains_skeleton():
    args = [pc("21"), pc("12"), Perm((1,))]
    for skel in perms_of_size(3):
        assert contains(substitute(skel, args), skel)


def test_gen_substitute_examples():
    assert gen_substitute(pc("132"), [pc("21"), None, Perm((1,))]) == pc("213")
    assert gen_substitute(pc("132"), [None, None, Perm((1,))]) == Perm((1,))
    assert gen_substitute(pc("12"), [None, None]) is None


def test_gen_substitute_can_avoid_skeleton():
    got = gen_substitute(pc("132"), [pc("21"), None, Perm((1,))])
    assert not contains(got, pc("132"))


# --- decomposition ---------------------------------------------------------

def test_decompose_worked_example():
    p = Perm((8, 9, 5, 11, 7, 6, 10, 17, 2, 1, 3, 4, 14, 16, 13, 15, 12))
    tree = decompose(p)
    assert tree_text(tree) == (
        "2413[31524[12[1,1],1,1,21[1,1],1],1,"
        "12[21[1,1],12[1,1]],21[2413[1,1,1,1],1]]")
    assert rebuild(tree) == p


def test_decompose_simple_permutation_is_flat():
    tree = decompose(pc("2413"))
    assert tree.root == pc("2413")
    assert all(child == DecompTree(None) for child in tree.children)


def test_decompose_increasing_run_nests_to_the_right():
    assert tree_text(decompose(pc("123"))) == "12[1,12[1,1]]"


def check_canonical(tree: DecompTree):
    if tree.root is None:
        assert tree.children == ()
        return
    if tree.root in (ROOT_12, ROOT_21):
        assert len(tree.children) == 2
        assert tree.children[0].root != tree.root
    else:
        assert is_simple(tree.root)
        assert len(tree.children) == len(tree.root)
    for child in tree.children:
        check_canonical(child)


def test_decompose_round_trip_and_canonicity_through_size_7():
    for n in range(1, 8):
        for p in perms_of_size(n):
            tree = decompose(p)
            assert rebuild(tree) == p
            check_canonical(tree)


def test_indecomposability_flags():
    assert indecomposability(Perm((1,))) == (True, True)
    assert indecomposability(pc("123")) == (False, True)
    assert indecomposability(pc("3142")) == (True, True)


def test_indecomposability_matches_prefix_split_scan():
    def splittable(p, rising):
        for k in range(1, len(p)):
            head, tail = p.values[:k], p.values[k:]
            if rising and max(head) < min(tail):
                return True
            if not rising and min(head) > max(tail):
                return True
        return False

    for n in range(1, 7):
        for p in perms_of_size(n):
            sum_indec, skew_indec = indecomposability(p)
            assert sum_indec == (not splittable(p, True))
            assert skew_indec == (not splittable(p, False))


# --- embeddings ------------------------------------------------------------

def oracle_embedding_count(gamma: Perm, pi: Perm) -> int:
    """Independent oracle: tile gamma into consecutive value-interval
    blocks and count occurrences of the block quotient in the host."""
    gv, pv = gamma.values, pi.values

    def tilings(start):
        if start == len(gv):
            yield []
            return
        for length in range(1, len(gv) - start + 1):
            window = gv[start:start + length]
            if max(window) - min(window) + 1 == length:
                for rest in tilings(start + length):
                    yield [(start, length)] + rest

    total = 0
    for tiling in tilings(0):
        if len(tiling) > len(pv):
            continue
        quotient = pattern_of([min(gv[s:s + L]) for s, L in tiling])
        for idxs in itertools.combinations(range(len(pv)), len(tiling)):
            if pattern_of([pv[i] for i in idxs]) == quotient:
                total += 1
    return total


def test_embedding_counts():
    # The complete enumeration of the defining conditions yields 12 for the
    # first pair; the independent tiling oracle below agrees.
    assert len(embeddings(pc("546312"), pc("3142"))) == 12
    assert len(embeddings(pc("3214"), pc("2413"))) == 9
    assert len(embeddings(Perm((1,)), pc("12"))) == 2


def test_embeddings_satisfy_substitution_identity():
    for gamma, pi in [(pc("546312"), pc("3142")), (pc("3214"), pc("2413")),
                      (pc("1243"), pc("3142"))]:
        for emb in embeddings(gamma, pi):
            args = [emb.induced(gamma, i) for i in range(len(pi))]
            assert gen_substitute(pi, args) == gamma


def test_embeddings_complete_against_tiling_oracle():
    hosts = [p for k in (2, 3, 4) for p in perms_of_size(k)]
    for g in range(1, 6):
        for gamma in perms_of_size(g):
            for pi in hosts:
                assert len(embeddings(gamma, pi)) == \
                    oracle_embedding_count(gamma, pi), (gamma, pi)


def test_embeddings_sorted_by_boundaries():
    embs = embeddings(pc("546312"), pc("3142"))
    boundaries = [tuple(start for start, _ in e.blocks) for e in embs]
    assert boundaries == sorted(boundaries)
    assert len(set(embs)) == len(embs)


# --- enumeration oracle ----------------------------------------------------

def test_enumerate_avoiders_examples():
    assert len(enumerate_avoiders([pc("132")], 4)) == 14
    assert enumerate_avoiders([pc("12")], 3) == [pc("321")]
    big = [pc("1243"), pc("2413"), Perm((5, 3, 1, 6, 4, 2)), Perm((4, 1, 3, 5, 2))]
    assert len(enumerate_avoiders(big, 3)) == 6


def test_enumerate_avoiders_sorted_and_capped():
    out = enumerate_avoiders([pc("132")], 5)
    assert out == sorted(out, key=lambda p: p.values)
    with pytest.raises(ValueError):
        enumerate_avoiders([pc("132")], 11)


# --- values ----------------------------------------------------------------

def test_perm_validation_and_text():
    with pytest.raises(ValueError):
        Perm((1, 3))
    with pytest.raises(ValueError):
        Perm(())
    p = Perm.from_text("10 1 2 3 4 5 6 7 8 9")
    assert len(p) == 10 and str(p).startswith("10 1")
