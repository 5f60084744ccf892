"""Exact S5 character computations, quintic field data and partial Euler products."""

import json
from fractions import Fraction

from . import _s5artin
from ._s5artin import DomainError, Error, run_cli, section_names

DEFAULT_QUINTIC = (1, 1, -1, -1, 0, 1)

__all__ = [
    "DEFAULT_QUINTIC",
    "DomainError",
    "Error",
    "chebotarev_counts",
    "density_sum",
    "field_profile",
    "frobenius",
    "local_factor",
    "mu_omega",
    "partial_L",
    "phi_average",
    "run_cli",
    "s5_table",
    "satake_scenarios",
    "section_names",
    "taylor_coefficients",
    "verify",
]


def verify():
    """Reports of every verify section, as dicts."""
    return json.loads(_s5artin.verify_json())


def s5_table():
    """{character name: {class label: value string}}"""
    labels = _s5artin.s5_labels()
    return {name: dict(zip(labels, row)) for name, row in _s5artin.s5_table()}


def local_factor(rep, label):
    """Coefficients of det(1 - rep(x) X) on the labelled class, low degree first."""
    return [Fraction(c) for c in _s5artin.local_factor(rep, label)]


def taylor_coefficients(n):
    return [Fraction(c) for c in _s5artin.taylor_coefficients(n)]


def satake_scenarios(label, nu):
    return json.loads(_s5artin.scenarios_json(label, nu))


def density_sum(nu):
    return Fraction(_s5artin.density_sum(nu))


def field_profile(coeffs=DEFAULT_QUINTIC):
    return json.loads(_s5artin.field_profile_json(list(coeffs)))


def frobenius(p, coeffs=DEFAULT_QUINTIC):
    return json.loads(_s5artin.frobenius_json(list(coeffs), p))


def chebotarev_counts(bound, coeffs=DEFAULT_QUINTIC):
    """(counts in class-label order, primes processed, within tolerance)"""
    return _s5artin.chebotarev_counts(list(coeffs), bound)


def partial_L(rep, s, bound, coeffs=DEFAULT_QUINTIC):
    return json.loads(_s5artin.partial_L_json(rep, list(coeffs), s, bound))


def phi_average(bound, nu, coeffs=DEFAULT_QUINTIC, source="computed"):
    return Fraction(_s5artin.phi_average(list(coeffs), bound, nu, source))


def mu_omega(primes, s):
    """Decimal string of prod ((1 + p^-s) / (1 - p^-s))^2 over the given primes."""
    return _s5artin.mu_omega(list(primes), s)
