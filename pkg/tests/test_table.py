from pathlib import Path

from orthoschubert.table import coset_factor, render_row, row_word, table_json, table_rows
from orthoschubert.weyl import SignedPermutation

GOLDEN = Path(__file__).parent / "golden" / "table_n3.txt"


def test_table_matches_golden():
    assert table_rows(3) == GOLDEN.read_text().splitlines()


def test_coset_factor():
    w = SignedPermutation.parse("2,-1,-3")
    v, pi = coset_factor(w)
    assert v.entries == (-3, -1, 2)
    assert v * pi.signed() == w


def test_row_rendering():
    assert row_word(SignedPermutation.identity(3)) == "id"
    assert render_row(SignedPermutation.parse("-3,-2,1")) == "-3,-2,1 | 1 2 0 | P21"


def test_json_rows():
    rows = table_json(2)
    assert len(rows) == 4
    assert rows[0] == {"w": "1,2", "word": "id", "terms": [{"lambda": [], "pi": "12", "coef": "1"}]}
