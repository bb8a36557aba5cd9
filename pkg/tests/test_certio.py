"""Canonical JSON round trips and file validation."""

from __future__ import annotations

import json

import pytest

from ladderzpd.certificates import gl_certificate, verify_certificate
from ladderzpd.certio import (CertificateFormatError, certificate_bytes,
                              certificate_from_json, certificate_to_json,
                              dumps_canonical, field_from_json, field_to_json,
                              read_certificate, write_certificate)
from ladderzpd.fields import PrimeField, QQ
from ladderzpd.onestep import assemble_one_step_certificate


def write_verified(cert, path):
    assert verify_certificate(cert).proven
    write_certificate(cert, str(path), verified=True)


def test_round_trip_is_byte_exact(tmp_path):
    cert = assemble_one_step_certificate(4, 3, 2)
    path = tmp_path / "cert.json"
    write_verified(cert, path)
    reread = read_certificate(str(path))
    assert reread == cert
    assert certificate_bytes(reread) == path.read_bytes()


def test_file_layout_is_canonical(tmp_path):
    cert = assemble_one_step_certificate(3, 2, 2)
    path = tmp_path / "cert.json"
    write_verified(cert, path)
    raw = path.read_bytes()
    assert raw.endswith(b"\n")
    assert b" " not in raw.split(b"\n")[0]
    obj = json.loads(raw)
    assert list(obj) == sorted(obj)
    assert obj["format_version"] == 1
    assert obj["algebra"] == {"kind": "ladder-lie", "n": 3, "steps": [[2, 2]]}
    assert obj["field"] == {"kind": "rational"}
    # zero-count families are kept so the family list is always complete
    assert {"label": "T", "count": 0} in obj["families"]
    # entries are 1-based [row, col, text] triples sorted row-major
    first_u = obj["tensors"][0]["u"]
    assert all(isinstance(e[0], int) and isinstance(e[2], str)
               for e in first_u)
    assert first_u == sorted(first_u, key=lambda e: (e[0], e[1]))


def test_write_requires_verification_flag(tmp_path):
    cert = gl_certificate(2)
    path = tmp_path / "cert.json"
    with pytest.raises(ValueError):
        write_certificate(cert, str(path))
    assert not path.exists()
    write_certificate(cert, str(path), mark_unverified=True)
    assert read_certificate(str(path)) == cert


def test_write_is_deterministic(tmp_path):
    cert = gl_certificate(2)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    write_certificate(cert, str(a), verified=True)
    write_certificate(cert, str(b), verified=True)
    assert a.read_bytes() == b.read_bytes()


def test_prime_field_round_trip(tmp_path):
    cert = assemble_one_step_certificate(3, 2, 2, field=PrimeField(101))
    path = tmp_path / "cert.json"
    write_verified(cert, path)
    reread = read_certificate(str(path))
    assert reread == cert
    assert reread.field == PrimeField(101)
    assert certificate_bytes(reread) == path.read_bytes()


def test_field_descriptors():
    assert field_to_json(QQ) == {"kind": "rational"}
    assert field_to_json(PrimeField(7)) == {"kind": "prime-field", "p": 7}
    assert field_from_json({"kind": "rational"}) == QQ
    assert field_from_json({"kind": "prime-field", "p": 101}) == PrimeField(101)
    for bad in ({"kind": "real"}, {"kind": "rational", "p": 3},
                {"kind": "prime-field"}, {"kind": "prime-field", "p": 6},
                {"kind": "prime-field", "p": True}, "rational"):
        with pytest.raises(CertificateFormatError):
            field_from_json(bad)


def corrupt(cert, mutate):
    obj = certificate_to_json(cert)
    mutate(obj)
    with pytest.raises(CertificateFormatError):
        certificate_from_json(obj)


def test_rejects_structural_damage():
    cert = gl_certificate(2)

    def set_version(obj):
        obj["format_version"] = 2

    def drop_key(obj):
        del obj["kernel_dim"]

    def extra_key(obj):
        obj["verdict"] = "proven-zpd"

    def zero_based_entry(obj):
        obj["tensors"][0]["u"] = [[0, 1, "1"]]

    def out_of_range_entry(obj):
        obj["tensors"][0]["u"] = [[1, 3, "1"]]

    def duplicate_entry(obj):
        obj["tensors"][0]["u"] = [[1, 1, "1"], [1, 1, "2"]]

    def zero_entry(obj):
        obj["tensors"][0]["u"] = [[1, 1, "0"]]

    def bad_scalar(obj):
        obj["tensors"][0]["u"] = [[1, 1, "1.5"]]

    def empty_factor(obj):
        obj["tensors"][0]["u"] = []

    def count_drift(obj):
        obj["families"][0]["count"] += 1

    def negative_count(obj):
        obj["families"][0]["count"] = -13

    def bad_family_shape(obj):
        obj["families"][0] = {"label": "gl"}

    def bad_steps(obj):
        obj["algebra"] = {"kind": "ladder-lie", "n": 2, "steps": [[1]]}

    def bad_algebra_kind(obj):
        obj["algebra"] = {"kind": "su", "m": 2}

    def bool_kernel_dim(obj):
        obj["kernel_dim"] = True

    for mutate in (set_version, drop_key, extra_key, zero_based_entry,
                   out_of_range_entry, duplicate_entry, zero_entry,
                   bad_scalar, empty_factor, count_drift, negative_count,
                   bad_family_shape, bad_steps, bad_algebra_kind,
                   bool_kernel_dim):
        corrupt(cert, mutate)


def test_rejects_non_json_file(tmp_path):
    path = tmp_path / "junk.json"
    path.write_bytes(b"{not json")
    with pytest.raises(CertificateFormatError):
        read_certificate(str(path))
    path.write_bytes(b'["certificate"]\n')
    with pytest.raises(CertificateFormatError):
        read_certificate(str(path))


def test_dumps_canonical_shape():
    assert dumps_canonical({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}\n'


def test_rational_scalars_survive_round_trip(tmp_path):
    # factors with non-integer rational coordinates serialize as num/den
    from fractions import Fraction

    from ladderzpd.certificates import Certificate, gl_algebra_descriptor
    from ladderzpd.tensors import RankOneTensor, TensorSpace

    space = TensorSpace.gl(2)
    u = space.basis_matrix(0).scale(Fraction(2, 3))
    cert = Certificate(gl_algebra_descriptor(2), QQ, 1,
                       [("x", 1)], [RankOneTensor(u, u, "x")])
    obj = certificate_to_json(cert)
    assert obj["tensors"][0]["u"] == [[1, 1, "2/3"]]
    path = tmp_path / "frac.json"
    write_certificate(cert, str(path), mark_unverified=True)
    assert read_certificate(str(path)) == cert
