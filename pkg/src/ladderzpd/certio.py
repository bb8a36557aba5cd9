"""Canonical JSON persistence for certificates.

The on-disk form is deterministic down to the byte: sorted object keys,
no whitespace, a single trailing newline, matrix entries sorted
row-major, scalars in canonical text ("num/den" with the denominator
omitted when 1; the reduced representative for prime fields).  Files
carry format_version 1 and no verdicts: a certificate is a claim, and
every reader re-verifies from scratch.
"""

from __future__ import annotations

import json
from typing import List, Tuple

from .certificates import Certificate
from .fields import Field, PrimeField, QQ, RationalField
from .matrices import SparseMatrix
from .tensors import RankOneTensor

FORMAT_VERSION = 1

_TOP_KEYS = {"format_version", "algebra", "field", "kernel_dim",
             "families", "tensors"}


class CertificateFormatError(ValueError):
    """A certificate file violates the canonical format."""


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def field_to_json(field: Field) -> dict:
    if isinstance(field, RationalField):
        return {"kind": "rational"}
    if isinstance(field, PrimeField):
        return {"kind": "prime-field", "p": field.p}
    raise CertificateFormatError(f"unserializable field: {field!r}")


def field_from_json(obj) -> Field:
    if not isinstance(obj, dict):
        raise CertificateFormatError("field descriptor must be an object")
    kind = obj.get("kind")
    if kind == "rational":
        if set(obj) != {"kind"}:
            raise CertificateFormatError("rational field takes no parameters")
        return QQ
    if kind == "prime-field":
        if set(obj) != {"kind", "p"} or not _is_int(obj["p"]):
            raise CertificateFormatError("prime field needs integer p only")
        try:
            return PrimeField(obj["p"])
        except ValueError as exc:
            raise CertificateFormatError(str(exc)) from None
    raise CertificateFormatError(f"unknown field kind: {kind!r}")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _matrix_to_entries(mat: SparseMatrix, field: Field) -> List[list]:
    return [[i, j, field.format(c)]
            for (i, j), c in sorted(mat.entries.items())]


def _matrix_from_entries(obj, n: int, field: Field,
                         what: str) -> SparseMatrix:
    if not isinstance(obj, list) or not obj:
        raise CertificateFormatError(f"{what}: entry list must be nonempty")
    entries = {}
    for item in obj:
        if (not isinstance(item, list) or len(item) != 3
                or not _is_int(item[0]) or not _is_int(item[1])
                or not isinstance(item[2], str)):
            raise CertificateFormatError(
                f"{what}: each entry must be [row, col, scalar-text]")
        i, j, text = item
        if not (1 <= i <= n and 1 <= j <= n):
            raise CertificateFormatError(
                f"{what}: entry index ({i},{j}) out of range (1-based, n={n})")
        if (i, j) in entries:
            raise CertificateFormatError(
                f"{what}: duplicate entry at ({i},{j})")
        try:
            c = field.parse(text)
        except ValueError as exc:
            raise CertificateFormatError(f"{what}: {exc}") from None
        if not c:
            raise CertificateFormatError(
                f"{what}: stored entry at ({i},{j}) is zero")
        entries[(i, j)] = c
    return SparseMatrix(n, field, entries)


def _algebra_to_json(descriptor: dict) -> dict:
    kind = descriptor.get("kind")
    if kind == "ladder-lie":
        return {"kind": "ladder-lie", "n": descriptor["n"],
                "steps": [list(s) for s in descriptor["steps"]]}
    if kind == "gl-lie":
        return {"kind": "gl-lie", "m": descriptor["m"]}
    raise CertificateFormatError(f"unknown algebra kind: {kind!r}")


def _algebra_from_json(obj) -> Tuple[dict, int]:
    """Validated descriptor plus the ambient matrix size."""
    if not isinstance(obj, dict):
        raise CertificateFormatError("algebra descriptor must be an object")
    kind = obj.get("kind")
    if kind == "ladder-lie":
        if set(obj) != {"kind", "n", "steps"} or not _is_int(obj["n"]):
            raise CertificateFormatError(
                "ladder-lie algebra needs integer n and steps")
        steps = obj["steps"]
        if (not isinstance(steps, list) or not steps
                or any(not isinstance(s, list) or len(s) != 2
                       or not _is_int(s[0]) or not _is_int(s[1])
                       for s in steps)):
            raise CertificateFormatError(
                "steps must be a nonempty list of [i, j] integer pairs")
        return ({"kind": "ladder-lie", "n": obj["n"],
                 "steps": [list(s) for s in steps]}, obj["n"])
    if kind == "gl-lie":
        if set(obj) != {"kind", "m"} or not _is_int(obj["m"]):
            raise CertificateFormatError("gl-lie algebra needs integer m")
        return ({"kind": "gl-lie", "m": obj["m"]}, obj["m"])
    raise CertificateFormatError(f"unknown algebra kind: {kind!r}")


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "algebra": _algebra_to_json(cert.algebra),
        "field": field_to_json(cert.field),
        "kernel_dim": cert.kernel_dim,
        "families": [{"label": label, "count": count}
                     for label, count in cert.families],
        "tensors": [{"family": t.label,
                     "u": _matrix_to_entries(t.u, cert.field),
                     "v": _matrix_to_entries(t.v, cert.field)}
                    for t in cert.tensors],
    }


def certificate_from_json(obj) -> Certificate:
    if not isinstance(obj, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    if set(obj) != _TOP_KEYS:
        missing = _TOP_KEYS - set(obj)
        extra = set(obj) - _TOP_KEYS
        raise CertificateFormatError(
            f"certificate keys wrong: missing {sorted(missing)}, "
            f"unexpected {sorted(extra)}")
    if obj["format_version"] != FORMAT_VERSION:
        raise CertificateFormatError(
            f"unsupported format_version: {obj['format_version']!r} "
            f"(expected {FORMAT_VERSION})")
    algebra, n = _algebra_from_json(obj["algebra"])
    field = field_from_json(obj["field"])
    if not _is_int(obj["kernel_dim"]) or obj["kernel_dim"] < 0:
        raise CertificateFormatError("kernel_dim must be a nonnegative integer")
    families_json = obj["families"]
    if not isinstance(families_json, list):
        raise CertificateFormatError("families must be a list")
    families = []
    for fam in families_json:
        if (not isinstance(fam, dict) or set(fam) != {"label", "count"}
                or not isinstance(fam["label"], str)
                or not _is_int(fam["count"]) or fam["count"] < 0):
            raise CertificateFormatError(
                "each family must be {label: str, count: nonneg int}")
        families.append((fam["label"], fam["count"]))
    tensors_json = obj["tensors"]
    if not isinstance(tensors_json, list):
        raise CertificateFormatError("tensors must be a list")
    tensors = []
    for idx, tj in enumerate(tensors_json):
        if (not isinstance(tj, dict) or set(tj) != {"family", "u", "v"}
                or not isinstance(tj["family"], str)):
            raise CertificateFormatError(
                f"tensor {idx}: must be {{family: str, u: ..., v: ...}}")
        u = _matrix_from_entries(tj["u"], n, field, f"tensor {idx} factor u")
        v = _matrix_from_entries(tj["v"], n, field, f"tensor {idx} factor v")
        tensors.append(RankOneTensor(u, v, tj["family"]))
    try:
        return Certificate(algebra, field, obj["kernel_dim"], families,
                           tensors)
    except ValueError as exc:
        raise CertificateFormatError(str(exc)) from None


def certificate_bytes(cert: Certificate) -> bytes:
    return dumps_canonical(certificate_to_json(cert)).encode("utf-8")


def write_certificate(cert: Certificate, path: str, *,
                      verified: bool = False,
                      mark_unverified: bool = False) -> None:
    """Write canonical JSON.  The caller must either have verified the
    certificate or say explicitly that it is writing an unverified one;
    files themselves never embed a verdict."""
    if not verified and not mark_unverified:
        raise ValueError(
            "refusing to write an unverified certificate; verify it first "
            "or pass mark_unverified=True")
    data = certificate_bytes(cert)
    with open(path, "wb") as fh:
        fh.write(data)


def read_certificate(path: str) -> Certificate:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        obj = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CertificateFormatError(f"not valid JSON: {exc}") from None
    return certificate_from_json(obj)
