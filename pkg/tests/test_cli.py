import io
import json
import subprocess
import sys

from skewschub.cli import EXIT_MISMATCH, Instance, main, verify
from skewschub.nilcoxeter import schubert_B, schubert_C, schubert_D
from skewschub.poly import Polynomial, scale_pow2
from skewschub.shapes import TypedPartition, grassmannian
from skewschub.weyl import GroupTag, SignedPermutation


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_compute_type_C_word():
    code, text = run("compute", "--type", "C", "--word", "1,2", "--k", "1", "--z", "2", "--method", "tableau")
    assert code == 0
    code2, text2 = run("compute", "--type", "C", "--word", "1,2", "--z", "2", "--method", "nilcoxeter")
    assert code2 == 0 and text == text2


def test_compute_shape_C_matches_library():
    code, text = run("compute", "--type", "C", "--shape", "3,1", "--k", "1", "--n", "3", "--z", "2", "--format", "json")
    assert code == 0
    obj = json.loads(text)
    p = Polynomial.from_json_obj(obj["polynomial"])
    assert p == schubert_C(grassmannian((3, 1), 1, GroupTag.BC), 3, 2)
    assert obj["element"] == [3, -2, 1]


def test_compute_type_D_example():
    code, text = run("compute", "--type", "D", "--shape", "3,1", "--shape-type", "1", "--k", "1",
                     "--n", "3", "--z", "2", "--format", "json")
    assert code == 0
    p = Polynomial.from_json_obj(json.loads(text)["polynomial"])
    w = grassmannian(TypedPartition((3, 1), 1, 1), 1, GroupTag.D)
    assert p == schubert_D(w, 3, 2)


def test_compute_type_B_is_scaled_type_C():
    code, text = run("compute", "--type", "B", "--element=-1,-2", "--method", "nilcoxeter")
    _, c_text = run("compute", "--type", "C", "--element=-1,-2", "--method", "nilcoxeter")
    assert code == 0 and text != c_text
    code, js = run("compute", "--type", "B", "--element=-1,-2", "--method", "nilcoxeter", "--format", "json")
    assert Polynomial.from_json_obj(json.loads(js)["polynomial"]) == schubert_B(SignedPermutation((-1, -2), GroupTag.BC))
    c = schubert_C(SignedPermutation((-1, -2), GroupTag.BC))
    assert Polynomial.from_json_obj(json.loads(js)["polynomial"]) == scale_pow2(c, -2)


def test_compute_stanley():
    code, text = run("compute", "--type", "C", "--word", "0", "--z", "1", "--stanley")
    assert code == 0 and text.strip() == "2*z1"


def test_output_is_deterministic():
    argv = ("compute", "--type", "D", "--shape", "3,1", "--shape-type", "2", "--k", "1", "--n", "3", "--format", "json")
    assert run(*argv) == run(*argv)
    argv = ("tableaux", "--type", "C", "--shape", "3,1", "--k", "1", "--n", "3")
    assert run(*argv) == run(*argv)


def test_parse_errors_exit_2():
    assert run("compute", "--type", "Q", "--word", "1")[0] == 2
    assert run("compute", "--type", "C", "--word", "1,x")[0] == 2
    assert run("compute", "--type", "C", "--shape", "3,1")[0] == 2
    assert run("compute", "--type", "D", "--shape", "3,1", "--k", "1")[0] == 2
    assert run("compute", "--type", "C")[0] == 2
    assert run("compute", "--type", "C", "--element", "1,1")[0] == 2
    assert run("verify", "--types", "A,Q")[0] == 2
    assert run("bogus")[0] == 2


def test_precondition_errors_exit_3():
    # (3,1)/(3) is not a compatible pair at k=1
    assert run("compute", "--type", "C", "--shape", "3,1", "--inner-shape", "3", "--k", "1")[0] == 3
    assert run("compute", "--type", "C", "--element", "3,2,1", "--n", "2")[0] == 3
    assert run("compute", "--type", "A", "--word", "1", "--stanley")[0] == 3


def test_tableaux_histogram_C():
    code, text = run("tableaux", "--type", "C", "--shape", "3,1", "--k", "1", "--n", "3", "--z", "2", "--count-only")
    assert code == 0
    assert "without double-primed letters: 12" in text
    assert "with double-primed letters: 16" in text
    assert "n=3: 1, n=2: 7, n=1: 8" in text


def test_tableaux_histogram_D_type2():
    code, text = run("tableaux", "--type", "D", "--shape", "3,1", "--shape-type", "2", "--k", "1",
                     "--n", "3", "--count-only", "--format", "json")
    assert code == 0
    summary = json.loads(text)["summary"]
    assert summary["without_second_alphabet"] == 6 and summary["with_second_alphabet"] == 23
    assert summary["n_histogram"] == {"1": 3, "0": 20}


def test_tableaux_empty_shape():
    code, text = run("tableaux", "--type", "C", "--shape", "", "--k", "1")
    assert code == 0 and "total: 1" in text and "(empty)" in text


def test_tableaux_listing_json():
    code, text = run("tableaux", "--type", "A", "--shape", "1", "--k", "1", "--n", "2", "--format", "json")
    obj = json.loads(text)
    assert code == 0 and len(obj["tableaux"]) == 2
    rows = sorted(t["rows"][0] for t in obj["tableaux"])
    assert rows == ["1", "1'"]


def test_verify_small_bound():
    code, text = run("verify", "--bound", "2,1", "--nmax", "3", "--zmax", "1")
    assert code == 0
    assert text.strip().splitlines()[-1].startswith("OK, ")


def test_verify_empty_bound():
    code, text = run("verify", "--bound", "")
    assert code == 0 and "OK, per-type identity checks" in text


def test_verify_counts():
    counts, failures = verify(["C"], (2, 1), 1, 3, 1)
    assert counts["C"] > 0 and failures == []


def test_instance_description():
    inst = Instance("C", 1, 3, 2, (3, 1), ())
    assert "k=1" in inst.describe() and "n=3" in inst.describe()
    assert EXIT_MISMATCH == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "skewschub", "compute", "--type", "A", "--word", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "x1 - y1"
