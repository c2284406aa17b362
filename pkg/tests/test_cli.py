import json
import subprocess
import sys

import pytest

from youngflip import arcs, cluster, flipgraph, laurent, partitions, repcc, triangulation
from youngflip.cli import COVERAGE, DISPATCH, SUITES, build_parser, run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bijection_example(capsys):
    code, out, _ = call(capsys, "bijection", "--to-partition", "8; (4,6),(2,4),(2,6),(0,2),(0,6)")
    assert (code, out) == (0, "[4,2,2]\n")
    code, out, _ = call(capsys, "bijection", "--to-triangulation", "[4,2,2]", "--n", "6")
    assert out == "8; (4,6),(2,4),(2,6),(0,2),(0,6)\n"


def test_flip_example(capsys):
    code, out, _ = call(capsys, "flip", "--partition", "[4,2,2]", "--row", "2")
    assert (code, out) == (0, "[4,3,2]\n")
    code, out, _ = call(capsys, "flip", "--triangulation", "4; (0,2)", "--diagonal", "(0,2)")
    assert out == "4; (1,3)\n"


def test_exchange_graph_example(capsys):
    code, out, _ = call(capsys, "exchange-graph", "--type", "A", "--n", "2", "--format", "edge-list")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].endswith("vertices=5 edges=5")
    assert len(lines) == 6


def test_structured_output_has_schema(capsys):
    for argv in (
        ("bijection", "--to-partition", "5; (0,2),(0,3)", "--format", "structured"),
        ("neighbors", "--partition", "[2,1]", "--format", "structured"),
        ("dihedral", "--partition", "[2]", "--word", "ab", "--format", "structured"),
        ("faces", "--n", "3", "--format", "structured"),
        ("mutate", "--type", "A-ice", "--n", "2", "--sequence", "1,2", "--format", "structured"),
        ("cc", "--n", "3", "--format", "structured"),
        ("arcs", "reachability", "--family", "fountain:0", "--lo", "-3", "--hi", "3", "--format", "structured"),
    ):
        code, out, _ = call(capsys, *argv)
        assert code == 0, argv
        data = json.loads(out)
        assert data["schema"] == f"youngflip/{argv[0]}@1"


def test_human_outputs(capsys):
    assert call(capsys, "neighbors", "--partition", "[]", "--n", "3")[1] == "[1]\n[2]\n"
    assert call(capsys, "dihedral", "--partition", "[4,2,2]", "--n", "6", "--word", "a")[1] == "[5,3,1,1,1]\n"
    assert call(capsys, "faces", "--n", "2")[1] == "5 5 1\n"
    assert call(capsys, "faces", "--n", "2", "--k", "1")[1] == "5\n"
    assert call(capsys, "graph", "--n", "3")[1].startswith("n=3 vertices=5 edges=5")
    out = call(capsys, "mutate", "--type", "A", "--n", "2", "--sequence", "1,2")[1]
    assert "u2 = (1 + x1 + x2)/(x1·x2)" in out
    assert call(capsys, "cc", "--n", "2", "--interval", "1,2")[1] == "M[1,2]@R (1 + x1 + x2)/(x1·x2)\n"
    assert call(capsys, "arcs", "classify", "--family", "fountain:5")[1] == "fountain(5)\n"
    assert call(capsys, "arcs", "materialize", "--family", "fountain:0", "--lo", "-3", "--hi", "3")[1] == (
        "{(-3,0), (-2,0), (0,2), (0,3)}\n"
    )


def test_lazy_mutation_verb(capsys):
    code, out, _ = call(capsys, "mutate", "--type", "Ainf", "--sequence", "1")
    assert code == 0 and "u1 = (1 + x2)/x1" in out


def test_domain_errors_exit_2(capsys):
    code, _, err = call(capsys, "flip", "--partition", "[2,4]", "--row", "1")
    assert code == 2 and err.startswith("ParseError")
    code, _, err = call(capsys, "neighbors", "--partition", "[3]", "--n", "3")
    assert code == 2 and err.startswith("NotInYn")
    code, _, err = call(capsys, "flip", "--triangulation", "5; (0,2),(0,3)", "--diagonal", "(1,3)")
    assert code == 2 and err.startswith("DiagonalAbsent")
    code, _, err = call(capsys, "arcs", "flip", "--family", "explicit:(0,2)", "--lo", "0", "--hi", "3", "--arc", "(0,2)", "--strict")
    assert code == 2 and err.startswith("NoUniqueReplacement")


def test_usage_errors_exit_1(capsys):
    assert call(capsys, "nonsense")[0] == 1
    assert call(capsys, "graph", "--n", "3", "--bogus")[0] == 1
    assert call(capsys, "flip", "--partition", "[1]")[0] == 1
    assert call(capsys, "bijection", "--to-triangulation", "[1]")[0] == 1


def test_verify_pass_and_fail(capsys):
    code, out, _ = call(capsys, "verify", "cc", "--n", "3")
    assert code == 0 and out.strip().endswith("3/3 passed")
    code, out, err = call(capsys, "verify", "extension", "--n", "3")
    assert code == 2 and err.startswith("VerificationFailed")
    assert "FAIL padding leaves CC unchanged n=1 N=2" in out
    assert "PASS padding stable from n+1 n=1 N=2" in out


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_every_suite_runs(capsys, suite):
    code, out, _ = call(capsys, "verify", suite, "--n", "3")
    assert code == (2 if suite == "extension" else 0), out


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "youngflip", "exchange-graph", "--type", "A", "--n", "3", "--format", "adjacency-json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["schema"] == "youngflip/graph@1"


def test_dispatch_matches_parser():
    sub = next(a for a in build_parser()._actions if a.dest == "verb")
    assert set(sub.choices) == set(DISPATCH) == set(COVERAGE)


OPERATIONS = {
    "fits_in": partitions.fits_in,
    "flip_row": partitions.flip_row,
    "flip_neighbors": partitions.flip_neighbors,
    "heads": partitions.heads,
    "transpose": partitions.transpose,
    "act_alpha": partitions.act_alpha,
    "act_beta": partitions.act_beta,
    "act": partitions.act,
    "validate": triangulation.validate,
    "lambda_map": triangulation.lambda_map,
    "lambda_inverse": triangulation.lambda_inverse,
    "diag_order": triangulation.diag_order,
    "flip_diagonal": triangulation.flip_diagonal,
    "rotate": triangulation.rotate,
    "reflect": triangulation.reflect,
    "enumerate_triangulations": triangulation.enumerate_triangulations,
    "build_flip_graph": flipgraph.build_flip_graph,
    "embedding_check": flipgraph.embedding_check,
    "count_faces": flipgraph.count_faces,
    "transpose_edge_defect": flipgraph.transpose_edge_defect,
    "export_graph": flipgraph.export_graph,
    "add": laurent.LaurentPoly.__add__,
    "mul": laurent.LaurentPoly.__mul__,
    "div_exact": laurent.div_exact,
    "eval": laurent.evaluate,
    "mutate_quiver": cluster.mutate_quiver,
    "mutate_seed": cluster.mutate_seed,
    "initial_seed_An": cluster.initial_seed_An,
    "initial_seed_An_ice": cluster.initial_seed_An_ice,
    "initial_seed_Dinfty_window": cluster.initial_seed_Dinfty_window,
    "triangulation_to_ice_quiver": cluster.triangulation_to_ice_quiver,
    "exchange_graph": cluster.exchange_graph,
    "exchange_graph_is_associahedron": cluster.exchange_graph_is_associahedron,
    "mutate_lazy": cluster.mutate_lazy,
    "quiver_isomorphic": cluster.quiver_isomorphic,
    "alt_equivalence_check": cluster.alt_equivalence_check,
    "positive_roots_An": repcc.positive_roots_An,
    "grassmannian_chi": repcc.grassmannian_chi,
    "cc_map": repcc.cc_map,
    "verify_cc_theorem": repcc.verify_cc_theorem,
    "denominator_vector": repcc.denominator_vector,
    "infinite_extension_check": repcc.infinite_extension_check,
    "crossing": arcs.crossing,
    "materialize": arcs.materialize,
    "classify": arcs.classify,
    "flip_arc": arcs.flip_arc,
    "reachability_window_check": arcs.reachability_window_check,
}


@pytest.mark.parametrize("name", sorted(OPERATIONS))
def test_every_operation_is_reachable_from_a_verb(name):
    reached = {fn for fns in COVERAGE.values() for fn in fns}
    assert OPERATIONS[name] in reached
