import json

import amp2


def test_word_and_length():
    assert amp2.word_to_perm([1, 3, 2], 4) == [2, 4, 1, 3]
    assert amp2.length([2, 4, 1, 3]) == 3
    assert amp2.wj_word([3, 4], 2, 5) == [3, 2, 1, 4, 3, 2]


def test_positive_subexpression():
    # s3 inside 1 3 2
    assert amp2.positive_subexpression([1, 2, 4, 3], [1, 3, 2]) == [False, True, False]


def test_positroid_of_small_cell():
    assert amp2.positroid(".1 3 2", 4, 2) == [[1, 2], [2, 3], [2, 4]]
    assert amp2.positroid("1 .3 2", 4, 2) == [[1, 2], [1, 4], [2, 4]]


def test_dotted_round_trip():
    cell = amp2.parse_dotted("3 .2 1 4 .3 2", 5, 2)
    assert amp2.render_dotted(cell["word"], cell["mask"], 5, 2) == "3 .2 1 4 .3 2"


def test_collection_counts():
    for n, k, want in [(5, 2, 3), (6, 2, 6), (7, 3, 10)]:
        coll = amp2.generate_collection(n, k)
        assert len(coll["cells"]) == want
        assert coll["variant"] == "twisted"
        expl = amp2.enumerate_explicit(n, k)
        key = lambda c: sorted(map(tuple, c["bases"]))
        assert sorted(map(key, coll["cells"])) == sorted(map(key, expl["cells"]))


def test_identity_report():
    rep = amp2.verify_recursive_identity(6, 2)
    assert rep["holds"] and rep["pre_branch"] == 3 and rep["sigma_branch"] == 3


def test_cli_round_trip():
    code, out, _ = amp2.cli(["gen", "--n", "4", "--k", "1", "--format", "dotted"])
    assert code == 0
    assert out.split("\n")[:2] == ["2 1", "3 .2 1"]
    code, out, _ = amp2.cli(["verify", "--n", "6", "--k", "2", "--checks", "cardinality"])
    assert code == 0 and json.loads(out)["pass"]
    code, _, _ = amp2.cli(["gen", "--n", "5"])
    assert code == 2
