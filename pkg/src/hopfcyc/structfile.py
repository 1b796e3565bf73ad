"""Structure-constant JSON files: canonical serialization, content hashes,
and validated parsing.

Every file carries a schema tag, the field, basis labels, and sparse tensors
as ``[row, col, "p/q"]`` triples (vectors as ``[i, "p/q"]`` pairs).  Carrier
and coefficient files reference their Hopf algebra file by content hash, so
multi-file scenarios are auditable.  Serialization is canonical: identical
objects produce byte-identical files.
"""

from __future__ import annotations

import hashlib
import json

from .fields import FieldError, field_from_name
from .linalg import LinMap, Space, Vector, tensor_space, unit_space
from .hopf import HopfAlgebra
from .symmetries import (
    ComoduleAlgebra,
    ComoduleCoalgebra,
    ModuleAlgebra,
    ModuleComodule,
)

SCHEMA = "hopfcyc/1"


class ParseError(ValueError):
    pass


def canonical_bytes(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, indent=1, ensure_ascii=False) + "\n").encode("utf-8")


def content_hash(obj) -> str:
    return hashlib.sha256(canonical_bytes(obj)).hexdigest()


def _map_entries(m, field):
    return [[r, c, field.format(v)] for (r, c), v in sorted(m.entries.items())]


def _vec_entries(v, field):
    return [[i, field.format(x)] for i, x in sorted(v.entries.items())]


def _map_from_entries(entries, domain, codomain, field, what):
    out = {}
    for item in entries:
        if len(item) != 3:
            raise ParseError("%s: malformed entry %r" % (what, item))
        r, c, lit = item
        if not (isinstance(r, int) and isinstance(c, int)):
            raise ParseError("%s: non-integer index in %r" % (what, item))
        if not (0 <= r < codomain.dim and 0 <= c < domain.dim):
            raise ParseError("%s: index out of range in %r" % (what, item))
        try:
            out[(r, c)] = field.parse(lit)
        except FieldError as err:
            raise ParseError("%s: %s" % (what, err))
    return LinMap(domain, codomain, out)


def _vec_from_entries(entries, space, field, what):
    out = {}
    for item in entries:
        if len(item) != 2:
            raise ParseError("%s: malformed entry %r" % (what, item))
        i, lit = item
        if not isinstance(i, int) or not (0 <= i < space.dim):
            raise ParseError("%s: index out of range in %r" % (what, item))
        try:
            out[i] = field.parse(lit)
        except FieldError as err:
            raise ParseError("%s: %s" % (what, err))
    return Vector(space, out)


def hopf_to_dict(H: HopfAlgebra, name):
    f = H.field
    return {
        "schema": SCHEMA,
        "kind": "hopf",
        "name": name,
        "field": f.name,
        "dim": H.dim,
        "basis": list(H.space.labels),
        "tensors": {
            "mult": _map_entries(H.mult, f),
            "unit": _vec_entries(H.unit, f),
            "comult": _map_entries(H.comult, f),
            "counit": _map_entries(H.counit, f),
            "antipode": _map_entries(H.antipode, f),
        },
    }


def hopf_from_dict(d, validate=True) -> HopfAlgebra:
    _check_header(d, "hopf")
    field = field_from_name(d["field"])
    labels = tuple(d["basis"])
    if len(labels) != d["dim"]:
        raise ParseError("dim %d does not match %d basis labels" % (d["dim"], len(labels)))
    H = Space(labels, field)
    HH = tensor_space(H, H)
    k = unit_space(field)
    t = d["tensors"]
    return HopfAlgebra(
        H,
        _map_from_entries(t["mult"], HH, H, field, "mult"),
        _vec_from_entries(t["unit"], H, field, "unit"),
        _map_from_entries(t["comult"], H, HH, field, "comult"),
        _map_from_entries(t["counit"], H, k, field, "counit"),
        _map_from_entries(t["antipode"], H, H, field, "antipode"),
        name=d.get("name", "H"),
        validate=validate,
    )


def _check_header(d, kind=None):
    if d.get("schema") != SCHEMA:
        raise ParseError("unsupported schema %r (expected %r)" % (d.get("schema"), SCHEMA))
    if kind is not None and d.get("kind") != kind:
        raise ParseError("expected kind %r, found %r" % (kind, d.get("kind")))


def _hopf_ref(hopf_dict):
    return {"name": hopf_dict.get("name", "H"), "sha256": content_hash(hopf_dict)}


def comodule_algebra_to_dict(A: ComoduleAlgebra, name, hopf_dict):
    f = A.space.field
    return {
        "schema": SCHEMA,
        "kind": "comodule-algebra",
        "name": name,
        "field": f.name,
        "dim": A.dim,
        "basis": list(A.space.labels),
        "side": A.side,
        "hopf": _hopf_ref(hopf_dict),
        "tensors": {
            "mult": _map_entries(A.mult, f),
            "unit": _vec_entries(A.unit, f),
            "coaction": _map_entries(A.coaction, f),
        },
    }


def comodule_coalgebra_to_dict(C: ComoduleCoalgebra, name, hopf_dict):
    f = C.space.field
    return {
        "schema": SCHEMA,
        "kind": "comodule-coalgebra",
        "name": name,
        "field": f.name,
        "dim": C.dim,
        "basis": list(C.space.labels),
        "hopf": _hopf_ref(hopf_dict),
        "tensors": {
            "comult": _map_entries(C.comult, f),
            "counit": _map_entries(C.counit, f),
            "coaction": _map_entries(C.coaction, f),
        },
    }


def module_algebra_to_dict(A: ModuleAlgebra, name, hopf_dict):
    f = A.space.field
    return {
        "schema": SCHEMA,
        "kind": "module-algebra",
        "name": name,
        "field": f.name,
        "dim": A.dim,
        "basis": list(A.space.labels),
        "hopf": _hopf_ref(hopf_dict),
        "tensors": {
            "mult": _map_entries(A.mult, f),
            "unit": _vec_entries(A.unit, f),
            "action": _map_entries(A.action, f),
        },
    }


def module_comodule_to_dict(M: ModuleComodule, name, hopf_dict):
    f = M.space.field
    return {
        "schema": SCHEMA,
        "kind": "module-comodule",
        "name": name,
        "field": f.name,
        "dim": M.dim,
        "basis": list(M.space.labels),
        "hopf": _hopf_ref(hopf_dict),
        "tensors": {
            "action": _map_entries(M.action, f),
            "coaction": _map_entries(M.coaction, f),
        },
    }


def cochain_to_dict(vec, name, degree, complex_kind, basis_labels, refs):
    field = vec.space.field
    return {
        "schema": SCHEMA,
        "kind": "cochain",
        "name": name,
        "field": field.name,
        "complex": complex_kind,
        "degree": degree,
        "basis": list(basis_labels),
        "refs": refs,
        "coordinates": _vec_entries(vec, field),
    }


def _verify_hopf_ref(d, hopf_dict, what):
    ref = d.get("hopf", {})
    want = ref.get("sha256")
    have = content_hash(hopf_dict)
    if want != have:
        raise ParseError(
            "%s: hopf content hash mismatch (file says %s…, supplied %s…)"
            % (what, str(want)[:12], have[:12]))


def object_from_dict(d, hopf_dict=None, hopf=None, validate=True):
    """Parse any structure file.  Carrier/coefficient kinds need the Hopf
    file's dict (for the hash check) and the parsed HopfAlgebra."""
    _check_header(d)
    kind = d.get("kind")
    if kind == "hopf":
        return hopf_from_dict(d, validate=validate)
    if hopf_dict is None or hopf is None:
        raise ParseError("%s file needs its Hopf algebra file" % kind)
    _verify_hopf_ref(d, hopf_dict, kind)
    field = field_from_name(d["field"])
    if field.name != hopf.field.name:
        raise ParseError("field %s does not match the Hopf file's %s"
                         % (field.name, hopf.field.name))
    labels = tuple(d["basis"])
    if len(labels) != d["dim"]:
        raise ParseError("dim %d does not match %d basis labels" % (d["dim"], len(labels)))
    X = Space(labels, field)
    Hs = hopf.space
    t = d["tensors"]
    if kind == "comodule-algebra":
        side = d.get("side", "left")
        cod = tensor_space(Hs, X) if side == "left" else tensor_space(X, Hs)
        return ComoduleAlgebra(
            hopf, X,
            _map_from_entries(t["mult"], tensor_space(X, X), X, field, "mult"),
            _vec_from_entries(t["unit"], X, field, "unit"),
            _map_from_entries(t["coaction"], X, cod, field, "coaction"),
            side=side, name=d.get("name", "A"), validate=validate)
    if kind == "comodule-coalgebra":
        return ComoduleCoalgebra(
            hopf, X,
            _map_from_entries(t["comult"], X, tensor_space(X, X), field, "comult"),
            _map_from_entries(t["counit"], X, unit_space(field), field, "counit"),
            _map_from_entries(t["coaction"], X, tensor_space(X, Hs), field, "coaction"),
            name=d.get("name", "C"), validate=validate)
    if kind == "module-algebra":
        return ModuleAlgebra(
            hopf, X,
            _map_from_entries(t["mult"], tensor_space(X, X), X, field, "mult"),
            _vec_from_entries(t["unit"], X, field, "unit"),
            _map_from_entries(t["action"], tensor_space(Hs, X), X, field, "action"),
            name=d.get("name", "A"), validate=validate)
    if kind == "module-comodule":
        return ModuleComodule(
            hopf, X,
            _map_from_entries(t["action"], tensor_space(X, Hs), X, field, "action"),
            _map_from_entries(t["coaction"], X, tensor_space(Hs, X), field, "coaction"),
            name=d.get("name", "M"), validate=validate)
    raise ParseError("unknown kind %r" % kind)


def load_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            d = json.load(fh)
    except OSError as err:
        raise ParseError("cannot read %s: %s" % (path, err))
    except json.JSONDecodeError as err:
        raise ParseError("%s is not valid JSON: %s" % (path, err))
    if not isinstance(d, dict):
        raise ParseError("%s: top level must be an object" % path)
    _check_header(d)
    return d


def write_file(path, d):
    data = canonical_bytes(d)
    with open(path, "wb") as fh:
        fh.write(data)
    return data


# ---------------------------------------------------------------------------
# emittable example registry
# ---------------------------------------------------------------------------


def example_names():
    from . import corpus

    names = []
    for h in corpus.hopf_names():
        names.append(h)
    for h in ["trivial", "kZ2", "kZ3", "kS3", "sweedler-h4"]:
        names.append("%s.regular-comodule-algebra" % h)
        names.append("%s.adjoint-comodule-coalgebra" % h)
    names += [
        "trivial.coeff-eps-unit",
        "sweedler-h4.coeff-eps-unit",
        "sweedler-h4.coeff-eps-g",
        "sweedler-h4.coeff-sgn-unit",
        "kZ2.coeff-eps-unit",
        "kZ2.translation-module-algebra",
        "bicrossed-s3-f3.function-comodule-algebra",
        "bicrossed-s3-f2.function-comodule-algebra",
        "bicrossed-s3-f3.group-comodule-coalgebra",
        "bicrossed-s3-f2.group-comodule-coalgebra",
    ]
    return names


def build_example(name):
    """Return (dict, [extra (filename, dict) dependencies]) for a name."""
    from . import corpus
    from .hopf import counit_character, unit_group_like, GroupLike
    from .symmetries import (
        adjoint_comodule_coalgebra,
        bicrossed_function_comodule_algebra,
        bicrossed_group_comodule_coalgebra,
        regular_comodule_algebra,
        scalar_coefficients,
        translation_module_algebra,
    )
    from .groups import cyclic_group

    if name in corpus.hopf_names():
        return hopf_to_dict(corpus.get_hopf(name), name), []
    if "." not in name:
        raise KeyError("unknown example %r" % name)
    hname, _, rest = name.partition(".")
    H = corpus.get_hopf(hname)
    hd = hopf_to_dict(H, hname)
    deps = [("%s.json" % hname, hd)]
    if rest == "regular-comodule-algebra":
        return comodule_algebra_to_dict(regular_comodule_algebra(H), name, hd), deps
    if rest == "adjoint-comodule-coalgebra":
        return comodule_coalgebra_to_dict(adjoint_comodule_coalgebra(H), name, hd), deps
    if rest == "coeff-eps-unit":
        M = scalar_coefficients(H, counit_character(H), unit_group_like(H))
        return module_comodule_to_dict(M, name, hd), deps
    if rest == "coeff-eps-g" and hname == "sweedler-h4":
        g = GroupLike(H, H.space.basis_vector(1), name="g")
        M = scalar_coefficients(H, counit_character(H), g)
        return module_comodule_to_dict(M, name, hd), deps
    if rest == "coeff-sgn-unit" and hname == "sweedler-h4":
        sgn = corpus.sweedler_sign_character(H)
        M = scalar_coefficients(H, sgn, unit_group_like(H))
        return module_comodule_to_dict(M, name, hd), deps
    if rest == "translation-module-algebra" and hname == "kZ2":
        _, A = translation_module_algebra(cyclic_group(2))
        return module_algebra_to_dict(A, name, hd), deps
    if rest == "function-comodule-algebra" and hname in corpus.bicrossed_names():
        A = bicrossed_function_comodule_algebra(corpus.get_bicrossed(hname))
        return comodule_algebra_to_dict(A, name, hd), deps
    if rest == "group-comodule-coalgebra" and hname in corpus.bicrossed_names():
        C = bicrossed_group_comodule_coalgebra(corpus.get_bicrossed(hname))
        return comodule_coalgebra_to_dict(C, name, hd), deps
    raise KeyError("unknown example %r" % name)
