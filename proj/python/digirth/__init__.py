"""Acyclic homomorphisms, circular colourings and high-girth witnesses for digraphs."""

from fractions import Fraction

from . import _digirth
from ._digirth import (
    Digraph,
    Error,
    InvalidArgument,
    LimitExceeded,
    ParseError,
    PreconditionFailed,
    all_homs,
    blowup,
    check_acyclic_hom,
    construct,
    count_homs,
    find_cycle,
    find_hom,
    gen_ckd,
    girth,
    is_acyclic,
    is_colourable,
    is_core,
    is_uniquely_colourable,
    quotient_hom,
    run,
    sample,
    short_cycle_repair,
    short_cycles,
    verify,
)

__version__ = "0.1.0"


def chi_c(d, cap=None):
    """Circular chromatic number as a Fraction, with a witness colouring."""
    num, den, colouring = _digirth.chi_c(d, cap)
    return Fraction(num, den), colouring


def _bound(fn, *args, p):
    p = Fraction(p)
    num, den = fn(*args, str(p.numerator), str(p.denominator))
    return Fraction(int(num), int(den))


def expected_cycles_bound(kn, ell, p):
    """C(kn, ell) (ell-1)! p^ell, exactly."""
    return _bound(_digirth.expected_cycles_bound, kn, ell, p=p)


def double_cycle_bound(k, n, ell1, ell2, p):
    """ell1 (kn)^ell1 (kn)^(ell2-1) p^(ell1+ell2), exactly."""
    return _bound(_digirth.double_cycle_bound, k, n, ell1, ell2, p=p)


def bad_pair_bound(q, n, w, p):
    """q C(n,w)^2 (1-p)^(w^2), exactly."""
    return _bound(_digirth.bad_pair_bound, q, n, w, p=p)
