"""JSON artifact serialization.

One structured document per artifact with sections {meta, labels, dims,
S, T, ...}: dims carry floats plus optional exact "p+q*sqrt(m)" strings,
S is row-major [re, im] pairs, and T entries are exact fractions "k/N"
(meaning exp(2*pi*i*k/N)) when snapped, else [re, im].  Writes are atomic
(write-temp-rename).
"""
from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction

import numpy as np

from .center import ModularData
from .exact import QuadIrr, snap_phase


def _phase_to_kn(r: Fraction) -> str:
    # T = exp(i pi r) = exp(2 pi i k/N)
    f = Fraction(r) / 2 % 1
    return f"{f.numerator}/{f.denominator}"


def _kn_to_complex(text: str) -> complex:
    f = Fraction(text)
    return complex(np.exp(2j * np.pi * float(f)))


def modular_to_dict(md: ModularData, meta: dict | None = None) -> dict:
    if md.T_phases is None:
        md.snap_T()
    dims = []
    for i in range(md.rank):
        exact = None
        if md.dims_exact is not None and md.dims_exact[i] is not None:
            exact = str(md.dims_exact[i])
        dims.append([float(md.dims[i]), exact])
    T = []
    for i, t in enumerate(md.T):
        r = md.T_phases[i] if md.T_phases else None
        T.append(_phase_to_kn(r) if r is not None else [float(t.real), float(t.imag)])
    return {
        "meta": {**md.meta, **(meta or {})},
        "labels": [_label_to_json(l) for l in md.labels],
        "dims": dims,
        "S": [[[float(v.real), float(v.imag)] for v in row] for row in md.S],
        "T": T,
    }


def modular_from_dict(doc: dict) -> ModularData:
    S = np.array([[complex(re, im) for re, im in row] for row in doc["S"]])
    T = np.array(
        [
            _kn_to_complex(t) if isinstance(t, str) else complex(t[0], t[1])
            for t in doc["T"]
        ]
    )
    T_phases = [2 * Fraction(t) if isinstance(t, str) else None for t in doc["T"]]
    dims_exact = [QuadIrr.parse(e) if e else None for _, e in doc["dims"]]
    if any(d is None for d in dims_exact):
        dims_exact = None
    labels = [_label_from_json(l) for l in doc["labels"]]
    md = ModularData(labels, S, T, dims_exact=dims_exact, meta=dict(doc.get("meta", {})))
    md.T_phases = T_phases if all(p is not None for p in T_phases) else None
    return md


def _label_to_json(label):
    if isinstance(label, tuple):
        return list(_label_to_json(x) for x in label)
    return label


def _label_from_json(label):
    if isinstance(label, list):
        return tuple(_label_from_json(x) for x in label)
    return label


def neargroup_to_dict(data) -> dict:
    """The solved (a, b, c) tuple as the "neargroup" artifact section."""
    exps = [[str(f) for f in row] for row in data.bichar.exponents]
    return {
        "group": list(data.spec.factors),
        "bichar_exponents": exps,
        "a_phases": {";".join(map(str, k)): str(v) for k, v in data.a.phases.items()},
        "c": _phase_to_kn(data.c_phase) if data.c_phase is not None else [data.c.real, data.c.imag],
        "b": [[float(v.real), float(v.imag)] for v in data.b],
        "d": str(data.d),
    }


def neargroup_from_dict(doc: dict):
    from .groups import Bicharacter, GroupSpec, QuadraticForm
    from .solver import NearGroupData, dim_d

    spec = GroupSpec(tuple(doc["group"]))
    bichar = Bicharacter(spec, [[Fraction(v) for v in row] for row in doc["bichar_exponents"]])
    phases = {
        tuple(int(p) for p in k.split(";")): Fraction(v) for k, v in doc["a_phases"].items()
    }
    a = QuadraticForm(bichar, phases)
    c_raw = doc["c"]
    c_phase = None
    if isinstance(c_raw, str):
        c = _kn_to_complex(c_raw)
        c_phase = 2 * Fraction(c_raw)
    else:
        c = complex(c_raw[0], c_raw[1])
    b = np.array([complex(re, im) for re, im in doc["b"]])
    return NearGroupData(spec, bichar, a, c, b, dim_d(spec.order), c_phase=c_phase)


def triples_to_dict(triples) -> list:
    out = []
    for t in triples:
        out.append(
            {
                "tau": list(t.tau),
                "omega": [float(t.omega.real), float(t.omega.imag)],
                "omega_exponent": list(t.omega_exponent) if t.omega_exponent else None,
                "omega_sq_exponent": list(t.omega_sq_exponent) if t.omega_sq_exponent else None,
                "xi": [[float(v.real), float(v.imag)] for v in t.xi],
            }
        )
    return out


def triples_from_dict(docs: list):
    from .halfbraiding import HalfBraidingTriple

    out = []
    for d in docs:
        out.append(
            HalfBraidingTriple(
                tau=tuple(d["tau"]),
                omega=complex(d["omega"][0], d["omega"][1]),
                xi=np.array([complex(re, im) for re, im in d["xi"]]),
                omega_exponent=tuple(d["omega_exponent"]) if d["omega_exponent"] else None,
                omega_sq_exponent=tuple(d["omega_sq_exponent"]) if d["omega_sq_exponent"] else None,
            )
        )
    return out


def write_json(path: str, doc) -> None:
    """Atomic write (temp file + rename)."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, indent=1)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_json(path: str):
    with open(path) as fh:
        return json.load(fh)
