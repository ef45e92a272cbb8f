"""Constant-term sequences A(n) = ct[P^n Q] and their Lucas-type congruences."""

import json

from . import _lucasx
from ._lucasx import (
    HypothesisError,
    ParseError,
    canonical,
    catalan_mod,
    constant_term,
    ct_sequence,
    kronecker,
    never_divisible_primes,
    newton,
    oracle,
    oracle_names,
    run_cli,
    s_mod5,
)

__all__ = [
    "HypothesisError",
    "ParseError",
    "canonical",
    "catalan_mod",
    "constant_term",
    "ct_sequence",
    "dwork_verify",
    "glc_simple_verify",
    "glc_verify",
    "kronecker",
    "lucas_verify",
    "never_divisible_primes",
    "newton",
    "oracle",
    "oracle_names",
    "run_cli",
    "s_mod5",
    "scheme_evaluate",
    "scheme_verify",
    "synthesize",
]


def lucas_verify(P, vars, p, n_max, Q="1"):
    return json.loads(_lucasx.lucas_verify(P, Q, vars, p, n_max))


def dwork_verify(P, vars, p, r, m_max, n_max, Q="1"):
    return json.loads(_lucasx.dwork_verify(P, Q, vars, p, r, m_max, n_max))


def glc_verify(P, Q, vars, p, n_max):
    return json.loads(_lucasx.glc_verify(P, Q, vars, p, n_max, False))


def glc_simple_verify(P, Q, vars, p, n_max):
    return json.loads(_lucasx.glc_verify(P, Q, vars, p, n_max, True))


def synthesize(P, vars, p, r=1, Q="1", max_states=64):
    """Scheme as a dict with keys p, r, states, matrices, init, labels."""
    return json.loads(_lucasx.synthesize(P, Q, vars, p, r, max_states))


def scheme_evaluate(scheme, n):
    text = scheme if isinstance(scheme, str) else json.dumps(scheme)
    return _lucasx.scheme_evaluate(text, n)


def scheme_verify(scheme, P, vars, n_max, Q="1"):
    text = scheme if isinstance(scheme, str) else json.dumps(scheme)
    return json.loads(_lucasx.scheme_verify(text, P, Q, vars, n_max))
