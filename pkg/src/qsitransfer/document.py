"""JSON state documents.

    {
      "subsystems": [{"label": "q1", "dim": 2, "role": "transfer"}, ...],
      "state": {"kind": "ghz", "params": {}, "amplitudes": [[re, im], ...],
                "matrix": [[[re, im], ...], ...]}
    }

``kind`` is one of bell, ghz, w, werner, pure, density, random_pure,
random_mixed. ``params`` holds ``p`` (werner), ``n`` (ghz, w; optional),
``rank`` (random_mixed) and ``seed`` (random kinds). Complex numbers are
``[re, im]`` pairs. Roles must name exactly one ``transfer`` subsystem.
"""
import hashlib
import json

import numpy as np

from . import hilbert
from .costs import PartitionSpec
from .hilbert import ROLES, Layout, MultipartiteState, PureState, Subsystem, density_from_pure

KINDS = ("bell", "ghz", "w", "werner", "pure", "density", "random_pure", "random_mixed")


class DocumentError(ValueError):
    """Schema or validation failure in a state document."""


def canonical(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def document_digest(doc) -> str:
    return "sha256:" + hashlib.sha256(canonical(doc).encode("ascii")).hexdigest()


def _fail(field, constraint):
    raise DocumentError(f"{field}: {constraint}")


def _int(value, field):
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(field, f"must be an integer, got {value!r}")
    return value


def _subsystems(doc):
    subs = doc.get("subsystems")
    if not isinstance(subs, list) or not subs:
        _fail("subsystems", "must be a non-empty list")
    out = []
    for k, s in enumerate(subs):
        where = f"subsystems[{k}]"
        if not isinstance(s, dict):
            _fail(where, "must be an object with label, dim, role")
        label = s.get("label")
        if not isinstance(label, str) or not label:
            _fail(f"{where}.label", "must be a non-empty string")
        dim = _int(s.get("dim"), f"{where}.dim")
        if dim < 2:
            _fail(f"{where}.dim", "dim must be ≥ 2")
        role = s.get("role")
        if role not in ROLES:
            _fail(f"{where}.role", f"must be one of {', '.join(ROLES)}")
        out.append(Subsystem(label, dim, role))
    labels = [s.label for s in out]
    if len(set(labels)) != len(labels):
        _fail("subsystems", "labels must be unique")
    n_transfer = sum(s.role == "transfer" for s in out)
    if n_transfer != 1:
        _fail("subsystems", f"roles must include exactly one transfer subsystem, found {n_transfer}")
    return Layout(tuple(out))


def _complex(pair, field):
    if (
        not isinstance(pair, (list, tuple))
        or len(pair) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
    ):
        _fail(field, "complex numbers must be [re, im] pairs")
    return complex(pair[0], pair[1])


def _qubits(layout, kind, count=None):
    if any(d != 2 for d in layout.dims):
        _fail("subsystems", f"{kind} states need every dim = 2")
    if count is not None and len(layout.dims) != count:
        _fail("subsystems", f"{kind} states need exactly {count} subsystems")


def _build(layout, state_doc, seed):
    kind = state_doc.get("kind")
    if kind not in KINDS:
        _fail("state.kind", f"must be one of {', '.join(KINDS)}")
    params = state_doc.get("params", {}) or {}
    if not isinstance(params, dict):
        _fail("state.params", "must be an object")
    labels, roles = layout.labels, [s.role for s in layout.subsystems]
    n = len(labels)

    if kind == "bell":
        _qubits(layout, kind, 2)
        return hilbert.bell(labels, roles)
    if kind in ("ghz", "w"):
        _qubits(layout, kind)
        if n < 2:
            _fail("subsystems", f"{kind} states need n ≥ 2")
        if "n" in params and _int(params["n"], "state.params.n") != n:
            _fail("state.params.n", f"must equal the number of subsystems ({n})")
        return (hilbert.ghz if kind == "ghz" else hilbert.w)(n, labels, roles)
    if kind == "werner":
        _qubits(layout, kind, 2)
        p = params.get("p")
        if isinstance(p, bool) or not isinstance(p, (int, float)) or not 0 <= p <= 1:
            _fail("state.params.p", "must be a number in [0, 1]")
        return hilbert.werner(float(p), labels, roles)
    if kind == "pure":
        amps = state_doc.get("amplitudes")
        if not isinstance(amps, list) or len(amps) != layout.total_dim:
            _fail("state.amplitudes", f"must list {layout.total_dim} [re, im] pairs")
        psi = np.array([_complex(a, f"state.amplitudes[{k}]") for k, a in enumerate(amps)])
        try:
            return density_from_pure(PureState(layout, psi))
        except ValueError as exc:
            _fail("state.amplitudes", str(exc))
    if kind == "density":
        rows = state_doc.get("matrix")
        d = layout.total_dim
        if not isinstance(rows, list) or len(rows) != d or any(
            not isinstance(r, list) or len(r) != d for r in rows
        ):
            _fail("state.matrix", f"must be a {d}x{d} nested list of [re, im] pairs")
        rho = np.array(
            [[_complex(x, f"state.matrix[{a}][{b}]") for b, x in enumerate(r)] for a, r in enumerate(rows)]
        )
        try:
            return MultipartiteState(layout, rho)
        except ValueError as exc:
            _fail("state.matrix", str(exc))

    # random kinds
    s = params.get("seed", seed)
    if s is None:
        _fail("state.params.seed", "random states need a seed (in params or via --seed)")
    s = _int(s, "state.params.seed")
    if kind == "random_pure":
        return hilbert.random_pure(layout.dims, s, labels, roles)
    rank = _int(params.get("rank"), "state.params.rank")
    if rank < 1:
        _fail("state.params.rank", "must be ≥ 1")
    return hilbert.random_mixed(layout.dims, rank, s, labels, roles)


def load_document(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"document: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        _fail("document", "must be a JSON object")
    return doc


def build_state(doc, seed=None):
    """State and partition from an already-decoded document."""
    layout = _subsystems(doc)
    state_doc = doc.get("state")
    if not isinstance(state_doc, dict):
        _fail("state", "must be an object with a kind")
    state = _build(layout, state_doc, seed)
    return state, PartitionSpec.from_layout(state.layout)


def parse_state_document(text, seed=None):
    """Parse document text into ``(MultipartiteState, PartitionSpec)``.

    ``seed`` is used by random kinds whose params carry no seed.
    """
    return build_state(load_document(text), seed)
