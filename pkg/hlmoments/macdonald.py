#!/usr/bin/env python

"""
Macdonald symmetric functions over exact rationals.

Symmetric functions are stored as finite coefficient maps in either the
monomial or the power-sum basis. Arithmetic is carried out in the power-sum
basis, where the (q,t) scalar product is diagonal; Macdonald P functions are
built by Gram-Schmidt over the monomial basis of each degree, and skew
functions are read off from the power-sum coproduct.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import itertools
import logging
import numbers
import threading
from collections import OrderedDict, defaultdict, namedtuple
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .hall_littlewood import ParameterDomainError
from .partitions import EMPTY, Partition, as_partition, conjugate, contains, \
    interval, multiplicities, partitions_of
from .qseries import to_rational
from .utils import DomainError, timed

logger = logging.getLogger(__name__)

DEFAULT_DEGREE_CAP = 8
GRAM_CACHE_SIZE = 32

BASES = ('monomial', 'powersum')

class DegreeCapError(DomainError):
    """Requested degree exceeds the configured cap"""
    pass

class BasisConversionError(DomainError):
    """Change of basis is not defined for the requested number of variables"""
    pass

class DegenerateGramError(ArithmeticError):
    """Gram-Schmidt met a vector of zero norm"""
    pass

class MacdonaldParams(namedtuple('MacdonaldParams', ['q', 't'])):
    """
    Macdonald parameters ``(q, t)`` with ``|q| < 1`` and ``|t| < 1``.

    Examples
    --------
    >>> MacdonaldParams('1/3', '1/2').swapped()
    MacdonaldParams(q=Fraction(1, 2), t=Fraction(1, 3))
    """

    __slots__ = ()

    def __new__(cls, q, t):
        q = to_rational(q)
        t = to_rational(t)
        if abs(q) >= 1 or abs(t) >= 1:
            raise ParameterDomainError('Macdonald parameters must satisfy '
                                       '|q| < 1 and |t| < 1, got q = {}, '
                                       't = {}'.format(q, t))
        return super().__new__(cls, q, t)

    def swapped(self):
        """
        Parameters ``(t, q)``.
        """

        return MacdonaldParams(self.t, self.q)

class SymmetricFunction(object):
    """
    Finite linear combination of monomial or power-sum basis elements.

    Parameters
    ----------
    coefficients : dict
        Maps partitions to rational coefficients. Zero coefficients are
        dropped.
    basis : str
        Either 'monomial' or 'powersum'.

    Notes
    -----
    Equality holds between functions in different bases when they are the
    same symmetric function.
    """

    def __init__(self, coefficients=None, basis='powersum'):
        if basis not in BASES:
            raise DomainError('unknown basis {!r}'.format(basis))
        self.basis = basis
        self.coefficients = {}
        for lam, c in (coefficients or {}).items():
            c = to_rational(c)
            if c != 0:
                lam = as_partition(lam)
                self.coefficients[lam] = self.coefficients.get(lam, 0) + c
                if self.coefficients[lam] == 0:
                    del self.coefficients[lam]

    @classmethod
    def zero(cls, basis='powersum'):
        return cls({}, basis)

    @classmethod
    def one(cls):
        return cls({EMPTY: 1})

    @classmethod
    def powersum(cls, lam):
        """
        ``p_lam = p_{lam_1} p_{lam_2} ...``.
        """

        return cls({as_partition(lam): 1}, 'powersum')

    @classmethod
    def monomial(cls, lam):
        """
        Monomial symmetric function ``m_lam``.
        """

        return cls({as_partition(lam): 1}, 'monomial')

    @property
    def degree(self):
        """
        Largest degree carried by a nonzero coefficient; 0 for the zero function.
        """

        return max((sum(lam) for lam in self.coefficients), default=0)

    def is_homogeneous(self):
        return len(set(sum(lam) for lam in self.coefficients)) <= 1

    def coefficient(self, lam):
        return self.coefficients.get(as_partition(lam), Fraction(0))

    def items(self):
        return self.coefficients.items()

    def to_powersum(self, num_vars=None):
        if self.basis == 'powersum':
            return self
        return monomial_to_powersum(self, num_vars)

    def to_monomial(self, num_vars=None):
        if self.basis == 'monomial':
            return self
        return powersum_to_monomial(self, num_vars)

    def _coerce(self, other):
        if isinstance(other, SymmetricFunction):
            return other.to_powersum()
        return SymmetricFunction({EMPTY: to_rational(other)})

    def __add__(self, other):
        a = self.to_powersum()
        b = self._coerce(other)
        result = dict(a.coefficients)
        for lam, c in b.items():
            result[lam] = result.get(lam, 0) + c
        return SymmetricFunction(result)

    __radd__ = __add__

    def __neg__(self):
        return SymmetricFunction({lam: -c for lam, c in self.items()}, self.basis)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SymmetricFunction):
            c = to_rational(other)
            return SymmetricFunction({lam: c*v for lam, v in self.items()},
                                     self.basis)
        result = defaultdict(Fraction)
        for lam, a in self.to_powersum().items():
            for mu, b in other.to_powersum().items():
                rho = Partition(sorted(lam + mu, reverse=True))
                result[rho] += a*b
        return SymmetricFunction(result)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / to_rational(other))

    def __eq__(self, other):
        if isinstance(other, numbers.Rational):
            other = SymmetricFunction({EMPTY: other})
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        if self.basis == other.basis:
            return self.coefficients == other.coefficients
        return self.to_powersum().coefficients == other.to_powersum().coefficients

    def __hash__(self):
        return hash(frozenset(self.to_powersum().coefficients.items()))

    def __bool__(self):
        return bool(self.coefficients)

    def __repr__(self):
        symbol = 'p' if self.basis == 'powersum' else 'm'
        if not self.coefficients:
            return 'SymmetricFunction(0)'
        terms = ' + '.join('({})*{}{}'.format(c, symbol, tuple(lam))
                           for lam, c in sorted(self.items()))
        return 'SymmetricFunction({})'.format(terms)

@lru_cache(maxsize=2**16)
def _assignment_count(parts, bins):
    """
    Number of maps from `parts` to bin positions filling every bin exactly.

    The count only depends on the multiset of remaining room, so `bins` is
    kept sorted.
    """

    if not parts:
        return 1 if not any(bins) else 0
    head, rest = parts[0], parts[1:]
    total = 0
    for j, room in enumerate(bins):
        if room >= head:
            total += _assignment_count(
                rest, tuple(sorted(bins[:j] + (room-head,) + bins[j+1:])))
    return total

@lru_cache(maxsize=4096)
def _powersum_row(lam):
    """
    Monomial expansion ``p_lam = sum_mu L[lam, mu] m_mu``.
    """

    row = {}
    for mu in partitions_of(sum(lam)):
        c = _assignment_count(tuple(lam), tuple(sorted(mu)))
        if c:
            row[mu] = c
    return row

def _check_num_vars(f, num_vars):
    if num_vars is None:
        return
    if num_vars < 1:
        raise BasisConversionError('number of variables must be positive, '
                                   'got {}'.format(num_vars))
    if num_vars < f.degree:
        raise BasisConversionError('{} variables cannot separate the monomial '
                                   'basis in degree {}'.format(num_vars, f.degree))

def powersum_to_monomial(f, num_vars=None):
    """
    Express `f` in the monomial basis.

    Parameters
    ----------
    f : SymmetricFunction
        Function in either basis.
    num_vars : int
        Number of variables; must be at least the degree of `f`. None stands
        for infinitely many variables.

    Returns
    -------
    result : SymmetricFunction
        Same function in the monomial basis.

    Examples
    --------
    >>> powersum_to_monomial(SymmetricFunction.powersum((1, 1))).coefficients
    {(2,): Fraction(1, 1), (1, 1): Fraction(2, 1)}
    """

    _check_num_vars(f, num_vars)
    if f.basis == 'monomial':
        return f
    result = defaultdict(Fraction)
    for lam, c in f.items():
        for mu, L in _powersum_row(lam).items():
            result[mu] += c*L
    return SymmetricFunction(result, 'monomial')

def monomial_to_powersum(f, num_vars=None):
    """
    Express `f` in the power-sum basis.

    The transition matrix is triangular in lexicographic order, since `p_lam`
    only involves `m_mu` for `mu` obtained by merging parts of `lam`, with
    diagonal entry ``prod_i m_i(lam)!``; the conversion is back substitution
    from the lexicographically smallest remaining term.
    """

    _check_num_vars(f, num_vars)
    if f.basis == 'powersum':
        return f
    remainder = dict(f.coefficients)
    result = {}
    while remainder:
        lam = min(remainder)
        c = remainder[lam]
        row = _powersum_row(lam)
        coeff = Fraction(c, row[lam])
        result[lam] = coeff
        for mu, L in row.items():
            value = remainder.get(mu, 0) - coeff*L
            if value:
                remainder[mu] = value
            else:
                remainder.pop(mu, None)
    return SymmetricFunction(result, 'powersum')

@lru_cache(maxsize=4096)
def _z(rho, q, t):
    result = Fraction(1)
    for part in rho:
        result *= (1 - q**part) / (1 - t**part)
    for i, m in enumerate(multiplicities(rho), start=1):
        result *= i**m * factorial(m)
    return result

def z_factor(rho, params):
    """
    ``<p_rho, p_rho>_{q,t} = prod_i (1-q^{rho_i})/(1-t^{rho_i}) prod_i i^{m_i} m_i!``.
    """

    return _z(as_partition(rho), params.q, params.t)

def scalar_product(f, g, params):
    """
    Macdonald (q,t) scalar product.

    Parameters
    ----------
    f, g : SymmetricFunction
        Functions in either basis.
    params : MacdonaldParams
        Parameters of the scalar product.

    Returns
    -------
    result : fractions.Fraction
        ``sum_rho f_rho g_rho z_rho(q,t)`` in the power-sum basis.
    """

    f = f.to_powersum()
    g = g.to_powersum()
    if len(g.coefficients) < len(f.coefficients):
        f, g = g, f
    result = Fraction(0)
    for rho, a in f.items():
        b = g.coefficients.get(rho)
        if b:
            result += a*b*_z(rho, params.q, params.t)
    return result

# Degree tables are read without the lock; each key is filled once under its own lock
_gram_cache = OrderedDict()
_gram_lock = threading.Lock()
_gram_key_locks = {}

@timed
def _gram_schmidt(n, params):
    """
    Macdonald P functions of degree `n` and their norms.
    """

    basis = sorted(partitions_of(n))
    P = {}
    norms = {}
    for lam in basis:
        m = monomial_to_powersum(SymmetricFunction.monomial(lam))
        v = m
        for mu in basis:
            if mu == lam:
                break
            c = scalar_product(m, P[mu], params)
            if c:
                v = v - P[mu] * (c / norms[mu])
        norm = scalar_product(v, v, params)
        if norm == 0:
            raise DegenerateGramError('P_{} has zero norm at {}'.format(lam, params))
        P[lam] = v
        norms[lam] = norm
    logger.debug('cached %d Macdonald functions of degree %d at %s',
                 len(basis), n, params)
    return P, norms

def _degree_table(n, params):
    key = (n, params.q, params.t)
    entry = _gram_cache.get(key)
    if entry is not None:
        return entry
    with _gram_lock:
        key_lock = _gram_key_locks.setdefault(key, threading.Lock())
    with key_lock:
        entry = _gram_cache.get(key)
        if entry is None:
            entry = _gram_schmidt(n, params)
            with _gram_lock:
                _gram_cache[key] = entry
                while len(_gram_cache) > GRAM_CACHE_SIZE:
                    evicted, _ = _gram_cache.popitem(last=False)
                    _gram_key_locks.pop(evicted, None)
    return entry

def _check_degree(lam, degree_cap):
    if sum(lam) > degree_cap:
        raise DegreeCapError('|{}| = {} exceeds the degree cap {}'.format(
            lam, sum(lam), degree_cap))

def macdonald_P(lam, params, degree_cap=DEFAULT_DEGREE_CAP):
    """
    Macdonald P function in the power-sum basis.

    Parameters
    ----------
    lam : Partition
        Index partition with ``|lam| <= degree_cap``.
    params : MacdonaldParams
        Parameters ``(q, t)``.
    degree_cap : int
        Largest degree for which Gram-Schmidt is attempted.

    Returns
    -------
    result : SymmetricFunction
        ``m_lam`` plus lexicographically smaller monomials, orthogonal to
        every other P function of the same degree.
    """

    lam = as_partition(lam)
    _check_degree(lam, degree_cap)
    P, _ = _degree_table(sum(lam), params)
    return P[lam]

def macdonald_norm(lam, params, degree_cap=DEFAULT_DEGREE_CAP):
    """
    ``<P_lam, P_lam>_{q,t}``.
    """

    lam = as_partition(lam)
    _check_degree(lam, degree_cap)
    _, norms = _degree_table(sum(lam), params)
    return norms[lam]

def macdonald_Q(lam, params, degree_cap=DEFAULT_DEGREE_CAP):
    """
    ``Q_lam = P_lam / <P_lam, P_lam>_{q,t}``.
    """

    return macdonald_P(lam, params, degree_cap) / \
        macdonald_norm(lam, params, degree_cap)

def skew_function(kind, lam, mu, params, degree_cap=DEFAULT_DEGREE_CAP):
    """
    Skew Macdonald function ``P_{lam/mu}`` or ``Q_{lam/mu}``.

    Parameters
    ----------
    kind : str
        'P' or 'Q'.
    lam, mu : Partition
        Outer and inner partitions.
    params : MacdonaldParams
        Parameters ``(q, t)``.
    degree_cap : int
        Largest ``|lam|`` accepted.

    Returns
    -------
    result : SymmetricFunction
        Function of degree ``|lam| - |mu|`` in the power-sum basis; zero if
        `mu` is not contained in `lam`.

    Notes
    -----
    ``P_lam(x, y) = sum_mu P_{lam/mu}(y) P_mu(x)``. Each ``p_rho`` in
    ``P_lam`` splits under ``p_k -> p_k(x) + p_k(y)`` into a sum over subsets
    of its parts; the x-factor is paired with ``Q_mu`` (resp. ``P_mu`` for
    kind Q) to extract the coefficient.
    """

    if kind not in ('P', 'Q'):
        raise DomainError('kind must be P or Q, got {!r}'.format(kind))
    lam = as_partition(lam)
    mu = as_partition(mu)
    _check_degree(lam, degree_cap)
    if not contains(mu, lam):
        return SymmetricFunction.zero()
    if kind == 'P':
        outer = macdonald_P(lam, params, degree_cap)
        dual = macdonald_Q(mu, params, degree_cap)
    else:
        outer = macdonald_Q(lam, params, degree_cap)
        dual = macdonald_P(mu, params, degree_cap)
    k = sum(mu)
    result = defaultdict(Fraction)
    for rho, c in outer.items():
        for mask in itertools.product((False, True), repeat=len(rho)):
            inner = [x for x, b in zip(rho, mask) if b]
            if sum(inner) != k:
                continue
            inner = Partition(inner)
            d = dual.coefficient(inner)
            if d:
                rest = Partition([x for x, b in zip(rho, mask) if not b])
                result[rest] += c * d * _z(inner, params.q, params.t)
    return SymmetricFunction(result)

class Specialization(object):
    """
    Ring homomorphism from symmetric functions to rationals.

    Parameters
    ----------
    values : callable
        Maps ``k >= 1`` to the image of the power sum ``p_k``.
    provenance : tuple
        Description of how the specialization was built, e.g.
        ``('geometric-alpha', u, ratio)``.
    """

    def __init__(self, values, provenance):
        self._values = values
        self._cache = {}
        self.provenance = provenance

    def __call__(self, k):
        if k < 1:
            raise DomainError('power sums are indexed by k >= 1, got {}'.format(k))
        if k not in self._cache:
            self._cache[k] = to_rational(self._values(k))
        return self._cache[k]

    def __add__(self, other):
        """
        Union of alphabets: ``p_k`` maps to the sum of both images.
        """

        if not isinstance(other, Specialization):
            return NotImplemented
        return Specialization(lambda k: self(k) + other(k),
                              ('sum', self.provenance, other.provenance))

    def __repr__(self):
        return 'Specialization{}'.format(self.provenance)

def make_specialization(alphas=(), betas=(), tau=0, params=None):
    """
    Specialization with finitely many alpha and beta parameters.

    Parameters
    ----------
    alphas, betas : list of Fraction
        Usual and dual parameters.
    tau : Fraction
        Plancherel parameter.
    params : MacdonaldParams
        Needed whenever `betas` or `tau` are nonzero.

    Returns
    -------
    result : Specialization
        ``p_k -> sum alpha^k + (-1)^{k-1} (1-q^k)/(1-t^k) sum beta^k``, with
        ``(1-q)/(1-t) tau`` added to the image of ``p_1``.
    """

    alphas = [to_rational(a) for a in alphas]
    betas = [to_rational(b) for b in betas]
    tau = to_rational(tau)
    if (betas or tau) and params is None:
        raise DomainError('beta and Plancherel parameters need Macdonald parameters')

    def values(k):
        value = sum((a**k for a in alphas), Fraction(0))
        if betas:
            value += (-1)**(k-1) * (1 - params.q**k) / (1 - params.t**k) * \
                sum(b**k for b in betas)
        if k == 1 and tau:
            value += (1 - params.q) / (1 - params.t) * tau
        return value

    return Specialization(values, ('finite', tuple(alphas), tuple(betas), tau))

def plancherel(tau, params):
    """
    Pure Plancherel specialization: ``p_1 -> (1-q)/(1-t) tau``, ``p_k -> 0`` otherwise.
    """

    tau = to_rational(tau)
    spec = make_specialization((), (), tau, params)
    spec.provenance = ('plancherel', tau)
    return spec

def _check_ratio(ratio):
    ratio = to_rational(ratio)
    if abs(ratio) >= 1:
        raise ParameterDomainError('geometric ratio must satisfy |r| < 1, '
                                   'got {}'.format(ratio))
    return ratio

def geometric_alpha(u, ratio):
    """
    Alpha parameters ``(u, u r, u r^2, ...)``: ``p_k -> u^k / (1 - r^k)``.
    """

    u = to_rational(u)
    ratio = _check_ratio(ratio)
    return Specialization(lambda k: u**k / (1 - ratio**k),
                          ('geometric-alpha', u, ratio))

def geometric_beta(u, ratio, params):
    """
    Beta parameters ``(u, u r, u r^2, ...)``:
    ``p_k -> (-1)^{k-1} (1-q^k)/(1-t^k) u^k/(1-r^k)``.
    """

    u = to_rational(u)
    ratio = _check_ratio(ratio)
    return Specialization(
        lambda k: (-1)**(k-1) * (1 - params.q**k) / (1 - params.t**k) *
        u**k / (1 - ratio**k),
        ('geometric-beta', u, ratio))

def specialize(f, spec):
    """
    Apply a specialization to a symmetric function.

    Examples
    --------
    >>> specialize(SymmetricFunction.powersum((1, 1)), geometric_alpha(1, Fraction(1, 2)))
    Fraction(4, 1)
    """

    result = Fraction(0)
    for rho, c in f.to_powersum().items():
        term = c
        for part in rho:
            term *= spec(part)
        result += term
    return result

def evaluate(f, variables):
    """
    Substitute finitely many variables into `f`.
    """

    return specialize(f, make_specialization(variables))

def specs_cancel_check(lam, mu, u, params, degree_cap=DEFAULT_DEGREE_CAP):
    """
    Sum over ``mu ⊂ nu ⊂ lam`` of the alpha-beta cancelling products.

    Parameters
    ----------
    lam, mu : Partition
        Outer and inner partitions.
    u : Fraction
        Scale of both geometric alphabets.
    params : MacdonaldParams
        Parameters ``(q, t)``.

    Returns
    -------
    result : fractions.Fraction
        ``sum_nu P_{lam/nu}(alpha(u, ut, ...)) P_{nu/mu}(beta(-u, -uq, ...))``,
        which equals 1 if ``lam == mu`` and 0 otherwise.
    """

    lam = as_partition(lam)
    mu = as_partition(mu)
    _check_degree(lam, degree_cap)
    u = to_rational(u)
    alpha = geometric_alpha(u, params.t)
    beta = geometric_beta(-u, params.q, params)
    total = Fraction(0)
    for nu in interval(mu, lam):
        total += specialize(skew_function('P', lam, nu, params, degree_cap), alpha) * \
            specialize(skew_function('P', nu, mu, params, degree_cap), beta)
    return total

def beta_duality_sides(lam, mu, c, params, degree_cap=DEFAULT_DEGREE_CAP):
    """
    Both sides of ``P_{lam/mu}(beta(c); q, t) = Q_{lam'/mu'}(c; t, q)``.
    """

    lam = as_partition(lam)
    mu = as_partition(mu)
    left = specialize(skew_function('P', lam, mu, params, degree_cap),
                      make_specialization((), c, 0, params))
    right = evaluate(skew_function('Q', conjugate(lam), conjugate(mu),
                                   params.swapped(), degree_cap), c)
    return left, right

def beta_duality_check(lam, mu, c, params, degree_cap=DEFAULT_DEGREE_CAP):
    """
    True if the beta-specialized skew P function equals the dual skew Q function.
    """

    left, right = beta_duality_sides(lam, mu, c, params, degree_cap)
    return left == right
