from __future__ import annotations

import io

import pytest

from riordan.cli import EXIT_INPUT, EXIT_NO, EXIT_OK, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue().strip()


def test_bseq_type1_rna():
    code, text = call("bseq", "--type", "1", "--name", "rna_R", "--order", "12")
    assert code == EXIT_OK
    assert text == "B = 1,1,1,1,1,1 (EXISTS to order 12)"


def test_bseq_type2_rna_is_no():
    code, text = call("bseq", "--type", "2", "--name", "rna_R")
    assert code == EXIT_NO
    assert text.startswith("NO: z_1 = 1 != 0")


def test_check_r02_pascal():
    assert call("check", "--subgroup", "R02", "--name", "pascal") == (EXIT_OK, "MEMBER to order 16")


def test_check_failure_prints_witness():
    code, text = call("check", "--subgroup", "Appell", "--name", "pascal")
    assert code == EXIT_NO and "witness index 2" in text


def test_expand_inline_pair():
    code, text = call("expand", "g: 1,1,1,1\\nf: 0,1,1,1", "--order", "4")
    assert code == EXIT_OK
    assert text.splitlines() == ["1", "1 1", "1 2 1", "1 3 3 1"]


def test_aseq_from_triangle_file(tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("1\n1 1\n1 2 1\n1 3 3 1\n")
    code, text = call("aseq", str(f))
    assert code == EXIT_OK and text.startswith("A = 1,1,0")
    code, text = call("zseq", str(f), "--format", "structured")
    assert "Z: 1,0,0" in text


def test_structured_output_is_deterministic():
    a = call("mul", "--name", "pascal", "--name", "rna_Rstar", "--format", "structured", "--order", "8")
    b = call("mul", "--name", "pascal", "--name", "rna_Rstar", "--format", "structured", "--order", "8")
    assert a == b and a[0] == EXIT_OK
    assert "formula_check: agree" in a[1]


def test_inv_and_roundtrip():
    code, text = call("inv", "--name", "catalan_C0", "--order", "6")
    assert code == EXIT_OK and "g: 1, 0, -1, 0, 1, 0, -1" in text
    assert call("roundtrip", "--random", "R111", "--seed", "4")[0] == EXIT_OK


def test_verify():
    code, text = call("verify", "--name", "rna_Rstarstar", "--type", "1", "--b", "1,1,1,1,1,1,1,1")
    assert code == EXIT_OK and text.startswith("VERIFIED")
    code, text = call("verify", "--name", "rna_Rstarstar", "--type", "2")
    assert code == EXIT_NO and "FAILS at (2,0)" in text


def test_check_pascal_like():
    code, text = call("check", "--subgroup", "PascalLike", "--name", "appell_A0", "--order", "8")
    assert code == EXIT_OK and "(1/(1-t), t)" in text
    code, text = call("check", "--subgroup", "PascalLike", "--name", "rna_R")
    assert code == EXIT_NO


def test_catalog_listing():
    code, text = call("catalog")
    assert code == EXIT_OK and "rna_Rstarstar" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["aseq", "1, 1/0"],
        ["expand", "--name", "nope"],
        ["bseq", "--order", "3", "--name", "pascal"],
        ["mul", "--name", "pascal"],
        ["frobnicate"],
        ["check", "--name", "pascal"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    assert run(argv, out=io.StringIO()) == EXIT_INPUT
