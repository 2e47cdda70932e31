"""
JSON command-line front end.

    genschur SUBCOMMAND [--input FILE] [--output FILE] [--seed INT]
                        [--cutoff INT] [--truncation INT]

The request payload is a JSON object read from ``--input`` or standard input;
its ``"op"`` field picks the operation within the subcommand (each subcommand
has a default).  Results are printed as canonical JSON (sorted keys, two-space
indent, trailing newline).  Exit status: 0 success, 1 domain error, 2 invalid
request, 3 a ``verify`` identity failed.
"""

import argparse
import json
import sys

from jsonschema import Draft202012Validator

from . import characters, moments, partitions, polybasis, schurgen, symfun, tauseries, walks
from .errors import GenSchurError
from .kernel import Matrix, det, exp_nilpotent, format_rational, invert_unitriangular, to_rational
from .partitions import Partition

__all__ = ["main", "run", "dumps", "SUBCOMMANDS", "OPERATION_MAP", "HANDLERS", "RequestError"]

EXIT_OK, EXIT_DOMAIN, EXIT_SCHEMA, EXIT_VERIFY = 0, 1, 2, 3


class RequestError(Exception):
    """Request does not match the schema; ``path`` is a JSON pointer."""

    def __init__(self, message, path=""):
        super().__init__(message)
        self.path = path


# --------------------------------------------------------------------------
# schemas

RATIONAL = {
    "oneOf": [
        {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"},
        {"type": "integer"},
    ]
}
RATIONALS = {"type": "array", "items": RATIONAL}
NONEMPTY_RATIONALS = {"type": "array", "items": RATIONAL, "minItems": 1}
PARTITION = {"type": "array", "items": {"type": "integer", "minimum": 0}}
COUNT = {"type": "integer", "minimum": 0}
POSITIVE = {"type": "integer", "minimum": 1}
MATRIX = {"type": "array", "items": RATIONALS, "minItems": 1}
BASIS = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": list(polybasis.BASIS_KINDS)},
        "N": POSITIVE,
        "data": {"type": "array", "items": RATIONALS},
    },
    "additionalProperties": False,
}
GROUP = {"enum": sorted(characters.GROUPS)}
MEASURE = {
    "type": "object",
    "required": ["nodes", "weights"],
    "properties": {"nodes": RATIONALS, "weights": RATIONALS},
    "additionalProperties": False,
}
BIMEASURE = {
    "type": "object",
    "required": ["points"],
    "properties": {
        "points": {"type": "array", "items": {"type": "array", "items": RATIONAL,
                                              "minItems": 3, "maxItems": 3}},
    },
    "additionalProperties": False,
}
COORDS = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["mu", "value"],
        "properties": {"mu": PARTITION, "value": RATIONAL},
        "additionalProperties": False,
    },
}


def _schema(required, **props):
    props.setdefault("op", {"type": "string"})
    return {
        "type": "object",
        "required": list(required),
        "properties": props,
        "additionalProperties": False,
    }


# --------------------------------------------------------------------------
# payload helpers


def _q(v):
    return to_rational(v)


def _qs(vs):
    return [to_rational(v) for v in vs]


def _s(v):
    return format_rational(v)


def _ss(vs):
    return [format_rational(v) for v in vs]


def _part(v):
    return Partition(v)


def _basis(spec, need, opts):
    """Basis from its JSON spec; ``N`` defaults to ``--truncation`` or the smallest sufficient size."""
    N = opts.get("truncation") or spec.get("N")
    if spec["kind"] in ("coeffs",) and N is None:
        return polybasis.basis_from_spec(spec)
    if N is None:
        N = max(need, 1)
        if spec["kind"] == "recursion":
            N = min(N, len(spec.get("data", ())) + 1)
    return polybasis.basis_from_spec(spec, N)


def _cutoff(p, opts, default=None):
    c = opts.get("cutoff")
    if c is None:
        c = p.get("cutoff", default)
    if c is None:
        raise RequestError("a cutoff is required (payload field or --cutoff)", "/cutoff")
    return c


def _points(p, n, opts, count=3):
    if "x" in p:
        return [schurgen.as_point(_qs(p["x"]))]
    seed = opts.get("seed")
    if seed is None:
        seed = p.get("seed")
    return schurgen.eval_points(n, p.get("points", count), seed)


def _routes_json(routes):
    return {k: _s(v) for k, v in routes.items()}


def _expansion_json(ex):
    return {"n": ex.n, "weight_bound": ex.weight_bound, "coefficients": ex.to_json()}


def _verdict(name, holds, **extra):
    out = {"check": name, "holds": bool(holds)}
    out.update(extra)
    return out


# --------------------------------------------------------------------------
# schur: evaluation routes, H/E matrices, basis data and matrix primitives


def _need_lam_x(p):
    # enough rows for every route: Jacobi-Trudi reaches lambda_1 + l(lambda) - 1 + n
    lam = _part(p["lambda"])
    return lam, lam.part(1) + len(lam) + len(p["x"])


def schur_routes(p, opts):
    lam, need = _need_lam_x(p)
    x = schurgen.as_point(_qs(p["x"]))
    phi = _basis(p["basis"], need, opts)
    routes = schurgen.all_routes(phi, lam, x)
    return {
        "partition": list(lam),
        "n": len(x),
        "routes": _routes_json(routes),
        "agree": len(set(routes.values())) == 1,
    }


def _single_route(fn):
    def handler(p, opts):
        lam, need = _need_lam_x(p)
        phi = _basis(p["basis"], need, opts)
        return {"value": _s(fn(phi, lam, _qs(p["x"])))}

    return handler


def schur_build_H(p, opts):
    n, depth = len(p["x"]), p["depth"]
    phi = _basis(p["basis"], depth + n - 1, opts)
    H = schurgen.build_H(phi, _qs(p["x"]), depth)
    out = {"n": n, "depth": depth, "matrix": H.matrix().to_json()}
    if depth >= n:
        out["H0"] = H.block(0).to_json()
    return out


def schur_build_E(p, opts):
    depth = p["depth"]
    phi = _basis(p["basis"], depth, opts)
    E = schurgen.build_E(phi, _qs(p["x"]), depth)
    return {"n": len(p["x"]), "depth": depth, "matrix": E.matrix().to_json()}


def schur_evaluate(p, opts):
    phi = _basis(p["basis"], p["i"] + 1, opts)
    return {"value": _s(polybasis.evaluate(phi, p["i"], _q(p["x"])))}


def schur_window(p, opts):
    k = p.get("k", 0)
    phi = _basis(p["basis"], len(p["x"]) + k, opts)
    return {"matrix": polybasis.window(phi, _qs(p["x"]), k).to_json()}


def schur_coefficients(p, opts):
    phi = _basis(p["basis"], 1, opts)
    return {"kind": phi.kind, "N": phi.N, "coeffs": phi.coeffs.to_json()}


def schur_recursion(p, opts):
    phi = _basis(p["basis"], 1, opts)
    rec = polybasis.recursion_of(phi)
    return {"J": rec.J.to_json(), "Jtilde": rec.Jtilde.to_json(), "window": rec.window}


def _matrix(p):
    return Matrix(p["matrix"])


def schur_det(p, opts):
    return {"value": _s(det(_matrix(p)))}


def schur_invert(p, opts):
    return {"matrix": invert_unitriangular(_matrix(p)).to_json()}


def schur_exp(p, opts):
    return {"matrix": exp_nilpotent(_matrix(p), _q(p.get("t", 1))).to_json()}


# --------------------------------------------------------------------------
# expand: Schur coefficients and flow-variable symmetric functions


def expand_coeffs(p, opts):
    lam = _part(p["lambda"])
    phi = _basis(p["basis"], lam.part(1) + p["n"], opts)
    return _expansion_json(schurgen.expansion_coeffs(phi, lam, p["n"]))


def expand_monomial_sums(p, opts):
    return {"t": _ss(symfun.monomial_sums(_qs(p["x"]), p["K"]))}


def expand_complete_h(p, opts):
    return {"value": _s(symfun.complete_h(_qs(p["t"]), p["k"]))}


def expand_schur_t(p, opts):
    return {"value": _s(symfun.schur_t(_part(p["lambda"]), _qs(p["t"])))}


# --------------------------------------------------------------------------
# partitions


def part_enumerate(p, opts):
    ps = partitions.enumerate_partitions(p["max_weight"], p.get("max_length"), p.get("max_part"))
    return {"count": len(ps), "partitions": [list(x) for x in ps]}


def part_conjugate(p, opts):
    return {"partition": list(partitions.conjugate(p["lambda"]))}


def part_particle_coords(p, opts):
    return {"coords": list(partitions.particle_coords(p["lambda"], p["n"], p.get("length")))}


def part_frobenius(p, opts):
    fr = partitions.frobenius(p["lambda"])
    return {"arms": list(fr.arms), "legs": list(fr.legs), "rank": fr.rank}


def part_from_frobenius(p, opts):
    return {"partition": list(partitions.from_frobenius(p["arms"], p["legs"]))}


def part_doubles(p, opts):
    d, dp = partitions.doubles(p["alpha"])
    return {"D": list(d), "D_prime": list(dp)}


def part_lr(p, opts):
    return {"value": symfun.littlewood_richardson(p["mu"], p["nu"], p["lambda"])}


# --------------------------------------------------------------------------
# character / littlewood


def char_character(p, opts):
    pt = characters.TorusPoint(_qs(p["x"]))
    value = characters.character(p["group"], _part(p["lambda"]), pt, p.get("method", "auto"))
    return {"group": p["group"], "z": _ss(pt.z), "value": _s(value)}


def char_expansion(p, opts):
    ex = characters.schur_expansion_z(p["group"], _part(p["lambda"]), p["n"])
    out = _expansion_json(ex)
    out["group"] = p["group"]
    return out


def littlewood(p, opts):
    lam = _part(p["lambda"])
    cutoff = opts.get("cutoff") or p.get("cutoff") or lam.weight
    pt = characters.TorusPoint(_qs(p["x"]))
    rhs = characters.littlewood_rhs(p["group"], lam, pt, cutoff)
    chi = characters.character(p["group"], lam, pt)
    return {"group": p["group"], "cutoff": cutoff, "value": _s(rhs), "character": _s(chi),
            "agree": rhs == chi}


# --------------------------------------------------------------------------
# tau


def _tau_json(res):
    return {"value": _s(res["value"]), "terms": res["terms"], "cutoff": res["cutoff"]}


def tau_phi(p, opts):
    cutoff = _cutoff(p, opts)
    phi = _basis(p["basis"], cutoff + p["n"], opts)
    return _tau_json(tauseries.tau_phi(phi, p["n"], _qs(p["t"]), _qs(p["s"]), cutoff))


def tau_pair(p, opts):
    cutoff = _cutoff(p, opts)
    need = cutoff + p["n"]
    phi, theta = _basis(p["basis"], need, opts), _basis(p["theta"], need, opts)
    return _tau_json(tauseries.tau_pair(phi, theta, p["n"], _qs(p["t"]), _qs(p["s"]), cutoff))


# --------------------------------------------------------------------------
# moments


def _measure(p):
    return moments.DiscreteMeasure.from_json(p["measure"])


def _bimeasure(p):
    return moments.BiMeasure.from_json(p["bimeasure"])


def mom_hankel(p, opts):
    return {"matrix": moments.hankel(_measure(p), p["size"]).to_json()}


def mom_B(p, opts):
    return {"value": _s(moments.B_coefficient(_measure(p), _part(p["lambda"]), p["n"]))}


def mom_eigen(p, opts):
    cutoff = _cutoff(p, opts, 0)
    es = moments.eigenvalue_sum(_measure(p), p["n"], _qs(p.get("t", [])), cutoff)
    return {
        "value": _s(es.value),
        "value_at_zero": _s(es.value_at_zero),
        "cutoff": cutoff,
        "coefficients": [{"lambda": list(k), "coeff": _s(v)} for k, v in es.coefficients.items()],
    }


def mom_bimoment(p, opts):
    return {"matrix": moments.bimoment(_bimeasure(p), p["size"]).to_json()}


def mom_B2(p, opts):
    value = moments.B2_coefficient(_bimeasure(p), _part(p["lambda"]), _part(p["nu"]), p["n"])
    return {"value": _s(value)}


def mom_orthogonal(p, opts):
    basis = moments.monic_orthogonal(_measure(p), p["k"])
    return {"polys": [_ss(basis.poly(i)) for i in range(basis.N)]}


# --------------------------------------------------------------------------
# walk


def _rates(p):
    return walks.RateSpec(tuple(p["rates"]))


def walk_weights(p, opts):
    r, n, mu, t = _rates(p), p["n"], _part(p.get("mu", [])), _q(p["t"])
    E = exp_nilpotent(walks.generator(r), t)
    table = []
    for lam in walks.states(r, n):
        w = walks.transition_weight(r, lam, mu, n, t, E)
        if w:
            table.append({"lambda": list(lam), "weight": _s(w)})
    return {"mu": list(mu), "n": n, "t": _s(t), "normalized": False, "weights": table}


def walk_transition(p, opts):
    r = _rates(p)
    w = walks.transition_weight(r, _part(p["lambda"]), _part(p.get("mu", [])), p["n"], _q(p["t"]))
    return {"value": _s(w), "normalized": False}


def walk_generator(p, opts):
    return {"matrix": walks.generator(_rates(p)).to_json()}


def walk_discrete(p, opts):
    dw = walks.discrete_time_weights(_rates(p), _part(p.get("mu", [])), p["n"], p["steps"])
    return dw.to_json()


# --------------------------------------------------------------------------
# verify: identity checks (exit 3 on failure)


def verify_routes(p, opts):
    lam = _part(p["lambda"])
    n = p["n"] if "n" in p else len(p["x"])
    phi = _basis(p["basis"], lam.part(1) + len(lam) + n, opts)
    pts = []
    agree = True
    for x in _points(p, n, opts):
        routes = schurgen.all_routes(phi, lam, x)
        ex = schurgen.expansion_coeffs(phi, lam, n).evaluate_at(x)
        same = len(set(routes.values())) == 1 and ex == routes["bialternant"]
        agree &= same
        pts.append({"x": _ss(x), "routes": _routes_json(routes), "expansion": _s(ex),
                    "value": _s(routes["bialternant"])})
    return _verdict("routes", agree, agree=agree, value=pts[0]["value"], points=pts)


def _window_check(fn, need):
    def handler(p, opts):
        n = p["n"] if "n" in p else len(p["x"])
        depth = p.get("depth")
        phi = _basis(p["basis"], need(n, depth), opts)
        results = [fn(phi, x, depth) for x in _points(p, n, opts, count=1)]
        holds = all(results)
        return _verdict(results[0].name, holds, window=min(r.window for r in results))

    return handler


def verify_boundary(p, opts):
    n = p["n"] if "n" in p else len(p["x"])
    depth = p.get("depth") or n
    phi = _basis(p["basis"], depth + n - 1, opts)
    holds = all(schurgen.boundary_check(schurgen.build_H(phi, x, depth))
                for x in _points(p, n, opts, count=1))
    return _verdict("boundary", holds)


def verify_orthogonality(p, opts):
    n = p["n"] if "n" in p else len(p["x"])
    size = p["size"]
    holds = all(schurgen.classical_orthogonality_check(x, size) for x in _points(p, n, opts, 1))
    return _verdict("classical_orthogonality", holds, window=size)


def verify_intertwining(p, opts):
    phi = _basis(p["basis"], 2, opts)
    return _verdict("intertwining", polybasis.intertwining_holds(phi), window=phi.N - 1)


def verify_pluecker(p, opts):
    coords = {_part(c["mu"]): _q(c["value"]) for c in p["coords"]}
    return _verdict("pluecker", schurgen.pluecker_check(coords, _part(p["lambda"])))


def verify_kp(p, opts):
    lam = _part(p["lambda"])
    phi = _basis(p["basis"], lam.part(1) + p["n"], opts)
    holds = tauseries.kp_coefficient_check(phi, p["n"], lam, p.get("max_rank"))
    return _verdict("kp_coefficients", holds)


def verify_semigroup(p, opts):
    r = _rates(p)
    holds = walks.semigroup_check(r, _part(p["lambda"]), _part(p.get("mu", [])), p["n"], _q(p["t"]))
    return _verdict("semigroup", holds)


def verify_chapman(p, opts):
    r = _rates(p)
    holds = walks.chapman_kolmogorov_check(
        r, _part(p["lambda"]), _part(p.get("mu", [])), p["n"], _q(p["s"]), _q(p["t"])
    )
    return _verdict("chapman_kolmogorov", holds)


# --------------------------------------------------------------------------
# registry

_X = NONEMPTY_RATIONALS
_POINT_OPTS = {"x": _X, "n": POSITIVE, "seed": {"type": "integer"}, "points": POSITIVE}


def _op(handler, required, **props):
    return (handler, _schema(required, **props))


HANDLERS = {
    "schur": {
        "routes": _op(schur_routes, ["basis", "lambda", "x"], basis=BASIS, **{"lambda": PARTITION}, x=_X),
        "bialternant": _op(_single_route(schurgen.bialternant), ["basis", "lambda", "x"],
                           basis=BASIS, **{"lambda": PARTITION}, x=_X),
        "jacobi_trudi": _op(_single_route(schurgen.jacobi_trudi), ["basis", "lambda", "x"],
                            basis=BASIS, **{"lambda": PARTITION}, x=_X),
        "dual_jacobi_trudi": _op(_single_route(schurgen.dual_jacobi_trudi), ["basis", "lambda", "x"],
                                 basis=BASIS, **{"lambda": PARTITION}, x=_X),
        "giambelli": _op(_single_route(schurgen.giambelli), ["basis", "lambda", "x"],
                         basis=BASIS, **{"lambda": PARTITION}, x=_X),
        "build_H": _op(schur_build_H, ["basis", "x", "depth"], basis=BASIS, x=_X, depth=POSITIVE),
        "build_E": _op(schur_build_E, ["basis", "x", "depth"], basis=BASIS, x=_X, depth=POSITIVE),
        "evaluate": _op(schur_evaluate, ["basis", "i", "x"], basis=BASIS, i=COUNT, x=RATIONAL),
        "window": _op(schur_window, ["basis", "x"], basis=BASIS, x=_X, k=COUNT),
        "coefficients": _op(schur_coefficients, ["basis"], basis=BASIS),
        "recursion": _op(schur_recursion, ["basis"], basis=BASIS),
        "det": _op(schur_det, ["matrix"], matrix=MATRIX),
        "invert_unitriangular": _op(schur_invert, ["matrix"], matrix=MATRIX),
        "exp_nilpotent": _op(schur_exp, ["matrix"], matrix=MATRIX, t=RATIONAL),
    },
    "expand": {
        "expansion_coeffs": _op(expand_coeffs, ["basis", "lambda", "n"],
                                basis=BASIS, **{"lambda": PARTITION}, n=POSITIVE),
        "monomial_sums": _op(expand_monomial_sums, ["x", "K"], x=RATIONALS, K=POSITIVE),
        "complete_h": _op(expand_complete_h, ["t", "k"], t=RATIONALS, k=COUNT),
        "schur_t": _op(expand_schur_t, ["lambda", "t"], **{"lambda": PARTITION}, t=RATIONALS),
    },
    "partitions": {
        "enumerate": _op(part_enumerate, ["max_weight"], max_weight=COUNT, max_length=COUNT,
                         max_part=COUNT),
        "conjugate": _op(part_conjugate, ["lambda"], **{"lambda": PARTITION}),
        "particle_coords": _op(part_particle_coords, ["lambda", "n"], **{"lambda": PARTITION},
                               n=COUNT, length=COUNT),
        "frobenius": _op(part_frobenius, ["lambda"], **{"lambda": PARTITION}),
        "from_frobenius": _op(part_from_frobenius, ["arms", "legs"], arms=PARTITION, legs=PARTITION),
        "doubles": _op(part_doubles, ["alpha"], alpha=PARTITION),
        "littlewood_richardson": _op(part_lr, ["mu", "nu", "lambda"], mu=PARTITION, nu=PARTITION,
                                     **{"lambda": PARTITION}),
    },
    "character": {
        "character": _op(char_character, ["group", "lambda", "x"], group=GROUP,
                         **{"lambda": PARTITION}, x=_X,
                         method={"enum": ["auto", "bialternant", "expansion"]}),
        "schur_expansion_z": _op(char_expansion, ["group", "lambda", "n"], group=GROUP,
                                 **{"lambda": PARTITION}, n=POSITIVE),
    },
    "littlewood": {
        "littlewood_rhs": _op(littlewood, ["group", "lambda", "x"], group=GROUP,
                              **{"lambda": PARTITION}, x=_X, cutoff=COUNT),
    },
    "tau": {
        "tau_phi": _op(tau_phi, ["basis", "n", "t", "s"], basis=BASIS, n=POSITIVE,
                       t=RATIONALS, s=RATIONALS, cutoff=COUNT),
        "tau_pair": _op(tau_pair, ["basis", "theta", "n", "t", "s"], basis=BASIS, theta=BASIS,
                        n=POSITIVE, t=RATIONALS, s=RATIONALS, cutoff=COUNT),
    },
    "moments": {
        "hankel": _op(mom_hankel, ["measure", "size"], measure=MEASURE, size=POSITIVE),
        "B_coefficient": _op(mom_B, ["measure", "lambda", "n"], measure=MEASURE,
                             **{"lambda": PARTITION}, n=POSITIVE),
        "eigenvalue_sum": _op(mom_eigen, ["measure", "n"], measure=MEASURE, n=POSITIVE,
                              t=RATIONALS, cutoff=COUNT),
        "bimoment": _op(mom_bimoment, ["bimeasure", "size"], bimeasure=BIMEASURE, size=POSITIVE),
        "B2_coefficient": _op(mom_B2, ["bimeasure", "lambda", "nu", "n"], bimeasure=BIMEASURE,
                              **{"lambda": PARTITION}, nu=PARTITION, n=POSITIVE),
        "monic_orthogonal": _op(mom_orthogonal, ["measure", "k"], measure=MEASURE, k=COUNT),
    },
    "walk": {
        "weights": _op(walk_weights, ["rates", "n", "t"], rates=RATIONALS, n=POSITIVE,
                       mu=PARTITION, t=RATIONAL),
        "transition_weight": _op(walk_transition, ["rates", "n", "lambda", "t"], rates=RATIONALS,
                                 n=POSITIVE, mu=PARTITION, **{"lambda": PARTITION}, t=RATIONAL),
        "generator": _op(walk_generator, ["rates"], rates=RATIONALS),
        "discrete": _op(walk_discrete, ["rates", "n", "steps"], rates=RATIONALS, n=POSITIVE,
                        mu=PARTITION, steps=COUNT),
    },
    "verify": {
        "routes": _op(verify_routes, ["basis", "lambda"], basis=BASIS, **{"lambda": PARTITION},
                      **_POINT_OPTS),
        "grassmannian": _op(
            _window_check(schurgen.grassmannian_check,
                          lambda n, d: (d or 8) + n - 1),
            ["basis"], basis=BASIS, depth=POSITIVE, **_POINT_OPTS),
        "dressing": _op(
            _window_check(lambda phi, x, d: schurgen.dressing_check(phi, x, d),
                          lambda n, d: (d or 8) + n - 1),
            ["basis"], basis=BASIS, depth=POSITIVE, **_POINT_OPTS),
        "duality": _op(
            _window_check(lambda phi, x, d: schurgen.duality_check(phi, x, d),
                          lambda n, d: (d or 6) + n - 1),
            ["basis"], basis=BASIS, depth=POSITIVE, **_POINT_OPTS),
        "boundary": _op(verify_boundary, ["basis"], basis=BASIS, depth=POSITIVE, **_POINT_OPTS),
        "classical_orthogonality": _op(verify_orthogonality, ["size"], size=POSITIVE,
                                       **_POINT_OPTS),
        "intertwining": _op(verify_intertwining, ["basis"], basis=BASIS),
        "pluecker": _op(verify_pluecker, ["coords", "lambda"], coords=COORDS,
                        **{"lambda": PARTITION}),
        "kp_coefficients": _op(verify_kp, ["basis", "n", "lambda"], basis=BASIS, n=POSITIVE,
                               **{"lambda": PARTITION}, max_rank=COUNT),
        "semigroup": _op(verify_semigroup, ["rates", "n", "lambda", "t"], rates=RATIONALS,
                         n=POSITIVE, mu=PARTITION, **{"lambda": PARTITION}, t=RATIONAL),
        "chapman_kolmogorov": _op(verify_chapman, ["rates", "n", "lambda", "s", "t"],
                                  rates=RATIONALS, n=POSITIVE, mu=PARTITION,
                                  **{"lambda": PARTITION}, s=RATIONAL, t=RATIONAL),
    },
}

for _name in ("routes", "grassmannian", "dressing", "duality", "boundary", "classical_orthogonality"):
    # evaluation points are either given as x or generated for n variables
    HANDLERS["verify"][_name][1]["anyOf"] = [{"required": ["x"]}, {"required": ["n"]}]

DEFAULT_OP = {
    "schur": "routes",
    "expand": "expansion_coeffs",
    "partitions": "enumerate",
    "character": "character",
    "littlewood": "littlewood_rhs",
    "tau": "tau_phi",
    "moments": "B_coefficient",
    "walk": "weights",
    "verify": "routes",
}

SUBCOMMANDS = tuple(HANDLERS)

# library operation -> (subcommand, op); each operation has exactly one entry point
OPERATION_MAP = {
    "kernel.det": ("schur", "det"),
    "kernel.invert_unitriangular": ("schur", "invert_unitriangular"),
    "kernel.exp_nilpotent": ("schur", "exp_nilpotent"),
    "partitions.conjugate": ("partitions", "conjugate"),
    "partitions.particle_coords": ("partitions", "particle_coords"),
    "partitions.frobenius": ("partitions", "frobenius"),
    "partitions.from_frobenius": ("partitions", "from_frobenius"),
    "partitions.enumerate": ("partitions", "enumerate"),
    "partitions.doubles": ("partitions", "doubles"),
    "polybasis.monomial_basis": ("schur", "coefficients"),
    "polybasis.from_recursion": ("schur", "coefficients"),
    "polybasis.recursion_of": ("schur", "recursion"),
    "polybasis.evaluate": ("schur", "evaluate"),
    "polybasis.window": ("schur", "window"),
    "schurgen.bialternant": ("schur", "bialternant"),
    "schurgen.expansion_coeffs": ("expand", "expansion_coeffs"),
    "schurgen.build_H": ("schur", "build_H"),
    "schurgen.jacobi_trudi": ("schur", "jacobi_trudi"),
    "schurgen.build_E": ("schur", "build_E"),
    "schurgen.dual_jacobi_trudi": ("schur", "dual_jacobi_trudi"),
    "schurgen.giambelli": ("schur", "giambelli"),
    "schurgen.pluecker_check": ("verify", "pluecker"),
    "symfun.monomial_sums": ("expand", "monomial_sums"),
    "symfun.complete_h": ("expand", "complete_h"),
    "symfun.schur_t": ("expand", "schur_t"),
    "symfun.littlewood_richardson": ("partitions", "littlewood_richardson"),
    "characters.character": ("character", "character"),
    "characters.littlewood_rhs": ("littlewood", "littlewood_rhs"),
    "characters.schur_expansion_z": ("character", "schur_expansion_z"),
    "tauseries.tau_phi": ("tau", "tau_phi"),
    "tauseries.tau_pair": ("tau", "tau_pair"),
    "tauseries.kp_coefficient_check": ("verify", "kp_coefficients"),
    "moments.hankel": ("moments", "hankel"),
    "moments.B_coefficient": ("moments", "B_coefficient"),
    "moments.eigenvalue_sum": ("moments", "eigenvalue_sum"),
    "moments.bimoment": ("moments", "bimoment"),
    "moments.B2_coefficient": ("moments", "B2_coefficient"),
    "moments.monic_orthogonal": ("moments", "monic_orthogonal"),
    "walks.generator": ("walk", "generator"),
    "walks.transition_weight": ("walk", "transition_weight"),
    "walks.semigroup_check": ("verify", "semigroup"),
    "walks.discrete_time_weights": ("walk", "discrete"),
}


# --------------------------------------------------------------------------
# driver


def _pointer(path):
    return "/" + "/".join(str(p) for p in path) if path else ""


def _validate(sub, payload):
    if not isinstance(payload, dict):
        raise RequestError("request must be a JSON object", "")
    ops = HANDLERS[sub]
    op = payload.get("op", DEFAULT_OP[sub])
    if op not in ops:
        raise RequestError(f"unknown op {op!r} for {sub}; expected one of {sorted(ops)}", "/op")
    handler, schema = ops[op]
    errors = sorted(Draft202012Validator(schema).iter_errors(payload),
                    key=lambda e: (list(map(str, e.absolute_path)), e.message))
    if errors:
        err = errors[0]
        raise RequestError(err.message, _pointer(err.absolute_path))
    return handler


def dumps(obj):
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run(sub, payload, **opts):
    """Execute one request; returns ``(result, exit_status)``."""
    if sub not in HANDLERS:
        return _error("RequestError", f"unknown subcommand {sub!r}", ""), EXIT_SCHEMA
    try:
        handler = _validate(sub, payload)
        result = handler(payload, opts)
    except RequestError as e:
        return _error("RequestError", str(e), e.path), EXIT_SCHEMA
    except (GenSchurError, ValueError, ArithmeticError, KeyError) as e:
        return _error(type(e).__name__, str(e)), EXIT_DOMAIN
    if sub == "verify" and not result.get("holds", True):
        return result, EXIT_VERIFY
    return result, EXIT_OK


def _error(kind, message, path=None):
    err = {"type": kind, "message": message}
    if path is not None:
        err["path"] = path
    return {"error": err}


def _parser():
    ap = argparse.ArgumentParser(prog="genschur", description="Generalized Schur function toolkit.")
    ap.add_argument("subcommand", choices=SUBCOMMANDS)
    ap.add_argument("--input", metavar="FILE", help="request JSON (default: standard input)")
    ap.add_argument("--output", metavar="FILE", help="write the result here instead of stdout")
    ap.add_argument("--seed", type=int, help="seed for generated evaluation points")
    ap.add_argument("--cutoff", type=int, help="series cutoff overriding the request")
    ap.add_argument("--truncation", type=int, help="basis truncation N overriding the request")
    return ap


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        payload = json.loads(text) if text.strip() else {}
    except (OSError, json.JSONDecodeError) as e:
        result, status = _error("RequestError", f"cannot read request: {e}", ""), EXIT_SCHEMA
    else:
        opts = {k: getattr(args, k) for k in ("seed", "cutoff", "truncation")
                if getattr(args, k) is not None}
        result, status = run(args.subcommand, payload, **opts)
    text = dumps(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
