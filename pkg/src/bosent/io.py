"""State-file parsing and serialization.

Complex numbers are [re, im] pairs; density files carry "matrix", pure files
"amplitudes", sector mixtures a "sectors" list of weighted single-state
entries sharing one (M, m).  Floats round-trip exactly (shortest-repr JSON);
infinity is encoded as the string "inf".
"""

from __future__ import annotations

import json

import numpy as np

from .fock import Bipartition, enumerate_basis, DEFAULT_DIM_CAP
from .linalg import ValidationError
from .states import (
    DensityMatrix,
    PureState,
    SectoredState,
    superselection_mixture,
    to_density,
    validate_density,
)


def _complex_to_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _pair_to_complex(pair) -> complex:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValidationError(f"expected an [re, im] pair, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def matrix_to_json(mat: np.ndarray) -> list:
    return [[_complex_to_pair(z) for z in row] for row in np.asarray(mat, dtype=complex)]


def matrix_from_json(data) -> np.ndarray:
    return np.array([[_pair_to_complex(z) for z in row] for row in data], dtype=complex)


def vector_to_json(vec: np.ndarray) -> list:
    return [_complex_to_pair(z) for z in np.asarray(vec, dtype=complex)]


def vector_from_json(data) -> np.ndarray:
    return np.array([_pair_to_complex(z) for z in data], dtype=complex)


def state_to_json_dict(state) -> dict:
    if isinstance(state, DensityMatrix):
        b = state.basis
        return {"N": b.N, "M": b.M, "m": b.m, "matrix": matrix_to_json(state.mat)}
    if isinstance(state, PureState):
        b = state.basis
        return {"N": b.N, "M": b.M, "m": b.m, "amplitudes": vector_to_json(state.amplitudes)}
    if isinstance(state, SectoredState):
        first = state.components[0].basis
        return {
            "M": first.M,
            "m": first.m,
            "sectors": [
                {"weight": w, **state_to_json_dict(comp)}
                for w, comp in zip(state.weights, state.components)
            ],
        }
    raise TypeError(f"cannot serialize {type(state).__name__}")


def _require_int(data: dict, key: str) -> int:
    if key not in data:
        raise ValidationError(f"state file is missing the {key!r} field")
    value = data[key]
    if not isinstance(value, int):
        raise ValidationError(f"field {key!r} must be an integer, got {value!r}")
    return value


def state_from_json_dict(data: dict, cap: int = DEFAULT_DIM_CAP):
    if "sectors" in data:
        M = _require_int(data, "M")
        m = _require_int(data, "m")
        components = []
        for entry in data["sectors"]:
            if "weight" not in entry:
                raise ValidationError("each sector entry needs a 'weight' field")
            comp = state_from_json_dict({k: v for k, v in entry.items() if k != "weight"}, cap=cap)
            if isinstance(comp, PureState):
                comp = to_density(comp)
            if (comp.basis.M, comp.basis.m) != (M, m):
                raise ValidationError(
                    f"sector with (M, m) = ({comp.basis.M}, {comp.basis.m}) does not match "
                    f"the mixture's ({M}, {m})"
                )
            components.append((float(entry["weight"]), comp))
        return superselection_mixture(components)

    bp = Bipartition(N=_require_int(data, "N"), M=_require_int(data, "M"), m=_require_int(data, "m"))
    basis = enumerate_basis(bp, cap=cap)
    if "matrix" in data:
        mat = matrix_from_json(data["matrix"])
        problems = validate_density(basis, mat)
        if problems:
            raise ValidationError("invalid density matrix: " + "; ".join(problems))
        return DensityMatrix(basis=basis, mat=mat)
    if "amplitudes" in data:
        amps = vector_from_json(data["amplitudes"])
        if amps.shape != (basis.dim,):
            raise ValidationError(
                f"amplitude vector has length {amps.shape[0]}, basis dimension is {basis.dim}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-6:
            raise ValidationError(f"amplitude norm {norm} differs from 1 by {abs(norm - 1.0):.3e}")
        return PureState(basis=basis, amplitudes=amps / norm)
    raise ValidationError("state file needs a 'matrix', 'amplitudes' or 'sectors' field")


def parse_state(path: str, cap: int = DEFAULT_DIM_CAP):
    """Load and validate a state file; raises ValidationError listing every problem."""
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as err:
            raise ValidationError(f"malformed JSON in {path}: {err}") from err
    if not isinstance(data, dict):
        raise ValidationError(f"state file {path} must hold a JSON object")
    return state_from_json_dict(data, cap=cap)


def unitary_from_json_dict(data: dict) -> np.ndarray:
    M = _require_int(data, "M")
    if "matrix" not in data:
        raise ValidationError("unitary file needs a 'matrix' field")
    mat = matrix_from_json(data["matrix"])
    if mat.shape != (M, M):
        raise ValidationError(f"unitary matrix has shape {mat.shape}, expected ({M}, {M})")
    return mat


def parse_unitary(path: str) -> np.ndarray:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as err:
            raise ValidationError(f"malformed JSON in {path}: {err}") from err
    return unitary_from_json_dict(data)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)
