"""Exact Q-bound certificates for (2,r)-generation of finite simple classical groups.

Rationals are exact "num/den" strings; use fractions.Fraction to compute with them.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DomainError, __version__

__all__ = [
    "DomainError",
    "__version__",
    "certificate_checksum_ok",
    "classify",
    "fraction",
    "primitive_prime_divisors",
    "psl34_bound",
    "psp4_bound",
    "select_r",
    "sweep",
    "verify",
]


def fraction(text):
    """Parses an exact "num/den" field."""
    return Fraction(text)


def verify(family, n, q, method="auto", drop_sigma0=True, table5=False, r=None):
    """Certificate dict for one group, as emitted by `gencert verify`."""
    return json.loads(_core.verify(family, n, str(q), method, drop_sigma0, table5, None if r is None else str(r)))


def sweep(family, n, q, threads=1, use_small_n=True, drop_sigma0=True, table5=False):
    """List of points for a family; n is "a..b" or "a", q a list or range string."""
    if not isinstance(q, str):
        q = ",".join(str(v) for v in q)
    return json.loads(_core.sweep(family, str(n), q, threads, use_small_n, drop_sigma0, table5))


def classify(name):
    return json.loads(_core.classify(name))


def psp4_bound(q):
    return json.loads(_core.psp4_bound(str(q)))


def psl34_bound():
    return Fraction(_core.psl34_bound())


def select_r(family, n, q):
    return json.loads(_core.select_r(family, n, str(q)))


def primitive_prime_divisors(q, e):
    """Primes r with ord_r(q) = e, as decimal strings in increasing order."""
    return _core.primitive_prime_divisors(str(q), e)


def certificate_checksum_ok(certificate):
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate)
    return _core.certificate_checksum_ok(certificate)
