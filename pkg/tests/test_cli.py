import json

from normtower.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_find_prime_text_and_json(capsys):
    code, out, _ = run(capsys, "find-prime", "--p", "2", "--n", "2")
    assert code == 0 and out == "5\n"
    code, out, _ = run(capsys, "find-prime", "--p", "3", "--n", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"p": 3, "n": 1, "q": 13}


def test_hilbert_single_place(capsys):
    code, out, _ = run(capsys, "hilbert", "--a", "-1", "--b", "-1", "--place", "2")
    assert code == 0 and out == "-1\n"
    code, out, _ = run(
        capsys, "hilbert", "--a", "-1", "--b", "-1", "--place", "inf", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["symbol"] == -1 and data["place"] == "inf"


def test_hilbert_all_places(capsys):
    code, out, _ = run(
        capsys, "hilbert", "--a", "-1", "--b", "-1", "--place", "all", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["splits"] is False
    assert sorted(data["ramified"]) == ["2", "inf"]
    symbols = dict(tuple(pair) for pair in data["symbols"])
    product = 1
    for s in symbols.values():
        product *= s
    assert product == 1


def test_synthesize_decompose_pipeline(capsys, tmp_path):
    code, out, _ = run(
        capsys,
        "synthesize",
        "--p", "2", "--n", "2", "--free-ranks", "0,0,1",
        "--exceptional", "1", "--format", "json",
    )
    assert code == 0
    module_file = tmp_path / "mod.json"
    module_file.write_text(out)
    code, out, _ = run(capsys, "decompose", str(module_file), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["profile"] == [4, 3]
    assert data["free_ranks"] == [0, 0, 1]
    assert data["exceptional"] == 1
    assert data["m"] == "1"


def test_decompose_identity_module(capsys, tmp_path):
    module_file = tmp_path / "id.json"
    module_file.write_text(
        json.dumps({"p": 2, "n": 1, "sigma": [[1, 0], [0, 1]]})
    )
    code, out, _ = run(capsys, "decompose", str(module_file))
    assert code == 0
    assert "m = undetermined" in out


def test_decompose_not_realizable_exits_2(capsys, tmp_path):
    # two exceptional blocks of size 3 for p = 2, n = 2
    sigma = [
        [1, 1, 0, 0, 0, 0],
        [0, 1, 1, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1],
    ]
    module_file = tmp_path / "bad.json"
    module_file.write_text(json.dumps({"p": 2, "n": 2, "sigma": sigma}))
    code, _, err = run(capsys, "decompose", str(module_file))
    assert code == 2
    assert "NotRealizable" in err


def test_decompose_order_violation_exits_2(capsys, tmp_path):
    module_file = tmp_path / "order.json"
    module_file.write_text(
        json.dumps({"p": 3, "n": 1, "sigma": [[0, 1], [1, 0]]})
    )
    code, _, err = run(capsys, "decompose", str(module_file))
    assert code == 2
    assert "OrderViolation" in err


def test_parse_errors_exit_1(capsys, tmp_path):
    code, _, err = run(capsys, "decompose", str(tmp_path / "missing.json"))
    assert code == 1
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "decompose", str(bad))
    assert code == 1 and "invalid JSON" in err
    incomplete = tmp_path / "incomplete.json"
    incomplete.write_text(json.dumps({"p": 3}))
    code, _, err = run(capsys, "decompose", str(incomplete))
    assert code == 1


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "no-such-command")[0] == 1
    assert run(capsys, "find-prime", "--p", "2")[0] == 1  # missing --n
    assert run(capsys, "find-prime", "--p", "four", "--n", "1")[0] == 1
    assert run(capsys)[0] == 1


def test_domain_verdicts_exit_2(capsys):
    code, _, err = run(capsys, "find-prime", "--p", "3", "--n", "1", "--limit", "12")
    assert code == 2 and "NotFoundBelowLimit" in err


def test_m_compute_biquadratic(capsys, tmp_path):
    spec_file = tmp_path / "biq.json"
    spec_file.write_text(json.dumps({"variant": "biquadratic", "a": 17, "d": -1}))
    code, out, _ = run(capsys, "m-compute", "--spec", str(spec_file))
    assert code == 0
    assert out.splitlines()[0] == "m = 1"
    code, out, _ = run(capsys, "m-compute", "--spec", str(spec_file), "--format", "json")
    data = json.loads(out)
    assert data["m"] == "1" and len(data["evidence"]) >= 3


def test_m_compute_all_variants(capsys, tmp_path):
    cases = (
        ({"variant": "brauer_rowen", "p": 2, "n": 3, "t": 1}, "1"),
        ({"variant": "local_cyclotomic", "p": 2, "n": 2, "q": 5}, "0"),
        ({"variant": "local_kummer", "p": 3, "n": 2, "l": 5}, "-inf"),
        (
            {
                "variant": "function_field",
                "p": 2,
                "n": 3,
                "base": {"kind": "cyclotomic", "conductor": 8},
            },
            "0",
        ),
    )
    for payload, expected in cases:
        spec_file = tmp_path / "spec.json"
        spec_file.write_text(json.dumps(payload))
        code, out, _ = run(
            capsys, "m-compute", "--spec", str(spec_file), "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["m"] == expected


def test_cocycle_check(capsys):
    code, out, _ = run(
        capsys, "cocycle-check", "--a", "8", "--b", "2", "--r", "4", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["isomorphic"] is True
    assert data["invariant"] == 0  # q = 4 = 0 mod gcd(8, 4)
    assert data["cocycle_block"] and data["cocycle_scaled"]


def test_algebra_certificate(capsys):
    code, out, _ = run(
        capsys, "algebra", "--l", "3", "--r", "2", "--b", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["norm_preimage"] == 4
    code, _, err = run(capsys, "algebra", "--l", "3", "--r", "2", "--b", "0")
    assert code == 1


def test_ufd_check(capsys):
    code, out, _ = run(
        capsys, "ufd-check", "--l", "3", "--n", "2", "--deg", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["consistent"] is True
    assert data["unit_norms"] == [1]


def test_verify_paper_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "c08")
    assert code == 0
    assert "ladder-index-centralizer" in out and "pass" in out
    code, out, _ = run(
        capsys, "verify-paper", "--only", "c08", "--format", "json"
    )
    data = json.loads(out)
    assert data["passed"] is True and len(data["checks"]) == 1
    code, _, err = run(capsys, "verify-paper", "--only", "zzz")
    assert code == 1


def test_internal_invariant_violation_exits_3(capsys, monkeypatch, tmp_path):
    from normtower import cli
    from normtower.errors import InternalCheckError

    def boom(spec, precision=None):
        raise InternalCheckError("certificate oracles disagree")

    monkeypatch.setattr(cli.m_invariant, "explain_m", boom)
    spec = tmp_path / "spec.json"
    spec.write_text('{"variant": "biquadratic", "a": 17, "d": -1}')
    code, _, err = run(capsys, "m-compute", "--spec", str(spec))
    assert code == 3
    assert "certificate oracles disagree" in err


def test_output_is_deterministic(capsys):
    # c09 draws from the seeded generator, so two runs must agree exactly
    first = run(capsys, "verify-paper", "--only", "c09", "--format", "json")
    second = run(capsys, "verify-paper", "--only", "c09", "--format", "json")
    a, b = json.loads(first[1]), json.loads(second[1])
    for record in a["checks"] + b["checks"]:
        record.pop("seconds")
    assert a == b
    assert first[0] == second[0] == 0
