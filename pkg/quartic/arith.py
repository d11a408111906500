"""
Exact integer arithmetic: the number-theoretic primitives used by the
rest of quartic.

Everything here works on Python integers and never touches floating
point. Values are immutable and every function is a pure function of
its arguments, so results may be shared freely between threads and
worker processes.

Primality is Miller-Rabin: exact below 2**64 with a fixed base set,
probabilistic above with a configurable number of rounds (bases are
drawn from a generator seeded with n, so answers are reproducible).
Factoring is trial division followed by Brent's variant of Pollard rho
under a step budget; the numbers quartic needs to factor are group
orders q**(k-1) * (q-1) of small q, which never reach the rho stage.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd as _gcd
from random import Random

from sympy import integer_nthroot, primerange

from quartic.log import debug
from quartic.util import InvalidArgument, QuarticError, Record


MR_ROUNDS = 40
TRIAL_LIMIT = 10 ** 6
RHO_BUDGET = 10 ** 8

# Miller-Rabin with the first twelve primes as bases is exact for n < 2**64
MR_BASES = ( 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37 )
MR_EXACT_LIMIT = 2 ** 64

# values of m processed per gcd in Brent's cycle search
RHO_BATCH = 128


class NotCoprime( QuarticError ):
    "Raised when an element is not invertible modulo n."


class NotPrime( QuarticError ):
    "Raised when an argument required to be prime is not."


class FactorizationExceededBudget( QuarticError ):
    "Raised when rho runs out of steps before splitting a cofactor."


class BudgetExceeded( QuarticError ):
    "Raised when an enumeration or search grid exceeds its budget."


@dataclass( frozen=True )
class Factorization( Record ):
    """Prime factorization of a positive integer.
       value: the factored integer
       factors: tuple of ( prime, exponent ), primes strictly increasing"""

    value: int
    factors: tuple

    def __post_init__( self ):
        product, last = 1, 1
        for prime, exponent in self.factors:
            if prime <= last or exponent < 1:
                raise InvalidArgument( 'malformed factorization of %d: %s' %
                                       ( self.value, self.factors ) )
            product *= prime ** exponent
            last = prime
        if product != self.value:
            raise InvalidArgument( 'factorization %s does not multiply '
                                   'to %d' % ( self.factors, self.value ) )

    @classmethod
    def fromCounts( cls, value, counts ):
        """Build from a { prime: exponent } mapping.
           value: the integer counts factors"""
        return cls( value, tuple( sorted( ( p, e ) for p, e in counts.items()
                                          if e > 0 ) ) )

    def __iter__( self ):
        return iter( self.factors )

    def __len__( self ):
        return len( self.factors )

    def primes( self ):
        "Distinct primes, increasing"
        return [ prime for prime, _ in self.factors ]

    def asDict( self ):
        return { 'value': self.value,
                 'factors': [ [ p, e ] for p, e in self.factors ] }

    @classmethod
    def fromDict( cls, d ):
        return cls( d[ 'value' ],
                    tuple( ( p, e ) for p, e in d[ 'factors' ] ) )


# Elementary operations

def gcd( a, b ):
    "Non-negative greatest common divisor; gcd( 0, 0 ) = 0."
    return _gcd( a, b )


def powMod( base, exp, modulus ):
    """base**exp reduced into [ 0, modulus ).
       exp: non-negative exponent (may be huge)
       modulus: integer >= 1"""
    if modulus < 1:
        raise InvalidArgument( 'powMod: modulus must be >= 1, got %d'
                               % modulus )
    if exp < 0:
        raise InvalidArgument( 'powMod: exponent must be >= 0, got %d' % exp )
    return pow( base, exp, modulus )


def integerNthRoot( n, x ):
    """Floor of the n-th root of x.
       n: root degree >= 1
       x: non-negative radicand
       returns: ( root, exact ) with exact = ( root**n == x )"""
    if n < 1:
        raise InvalidArgument( 'integerNthRoot: degree must be >= 1, '
                               'got %d' % n )
    if x < 0:
        raise InvalidArgument( 'integerNthRoot: radicand must be >= 0, '
                               'got %d' % x )
    root, exact = integer_nthroot( x, n )
    return int( root ), bool( exact )


def exactRoot( t, n ):
    """Signed integer n-th root of t, if t is a perfect n-th power.
       n: root degree; negative t is only accepted for odd n
       returns: the root, or None"""
    if t < 0:
        if n % 2 == 0:
            return None
        root = exactRoot( -t, n )
        return None if root is None else -root
    root, exact = integerNthRoot( n, t )
    return root if exact else None


# Primality

def _isWitness( a, n, d, s ):
    "Is a a Miller-Rabin witness for the compositeness of n = d*2**s + 1?"
    x = powMod( a, d, n )
    if x in ( 1, n - 1 ):
        return False
    for _ in range( s - 1 ):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def isPrime( n, rounds=MR_ROUNDS ):
    """Primality test.
       Exact for n < 2**64; above that, Miller-Rabin with `rounds`
       pseudo-random bases (error probability at most 4**-rounds)."""
    if n < 2:
        return False
    for p in MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < MR_EXACT_LIMIT:
        bases = MR_BASES
    else:
        rng = Random( n )
        bases = [ rng.randrange( 2, n - 1 ) for _ in range( rounds ) ]
    return not any( _isWitness( a, n, d, s ) for a in bases )


# Factoring

@lru_cache( maxsize=4 )
def _trialPrimes( limit ):
    "Primes <= limit, as a tuple"
    return tuple( primerange( 2, limit + 1 ) )


def _brentRho( n, budget, rng ):
    """Find a nontrivial factor of the odd composite n.
       budget: maximum number of polynomial steps
       rng: Random instance for the polynomial and starting point
       returns: ( factor, steps used )"""
    steps = 0
    while True:
        y, c = rng.randrange( 1, n ), rng.randrange( 1, n )
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range( r ):
                y = ( y * y + c ) % n
            steps += r
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range( min( RHO_BATCH, r - k ) ):
                    y = ( y * y + c ) % n
                    q = q * abs( x - y ) % n
                steps += min( RHO_BATCH, r - k )
                g = _gcd( q, n )
                k += RHO_BATCH
            r *= 2
            if steps > budget:
                raise FactorizationExceededBudget(
                    'rho exhausted %d steps on %d' % ( budget, n ) )
        if g == n:
            # batch overshot: backtrack one step at a time
            g = 1
            while g == 1:
                ys = ( ys * ys + c ) % n
                g = _gcd( abs( x - ys ), n )
                steps += 1
        if g != n:
            return g, steps
        debug( '*** rho: cycle without factor for %d, restarting\n' % n )


def _splitCofactor( m, rhoBudget, rounds ):
    """Split m (free of small factors) into primes.
       returns: list of primes with multiplicity"""
    primes, stack, budget = [], [ m ], rhoBudget
    rng = Random( m )
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if isPrime( m, rounds ):
            primes.append( m )
            continue
        root, exact = integerNthRoot( 2, m )
        if exact:
            stack += [ root, root ]
            continue
        if m % 2 == 0:
            stack += [ 2, m // 2 ]
            continue
        factor, used = _brentRho( m, budget, rng )
        budget -= used
        debug( '*** rho: %d = %d * %d (%d steps)\n' %
               ( m, factor, m // factor, used ) )
        stack += [ factor, m // factor ]
    return primes


def factorize( n, trialLimit=TRIAL_LIMIT, rhoBudget=RHO_BUDGET,
               rounds=MR_ROUNDS ):
    """Factor a positive integer.
       n: integer >= 1
       trialLimit: trial-divide by primes up to this bound
       rhoBudget: total rho steps allowed for what trial division leaves
       returns: Factorization
       raises FactorizationExceededBudget when rho runs out of steps"""
    if n < 1:
        raise InvalidArgument( 'factorize: n must be >= 1, got %d' % n )
    counts, remaining = {}, n
    for p in _trialPrimes( trialLimit ):
        if p * p > remaining:
            break
        if remaining % p:
            continue
        while remaining % p == 0:
            remaining //= p
            counts[ p ] = counts.get( p, 0 ) + 1
        if remaining > 1 and isPrime( remaining, rounds ):
            break
    if remaining > 1:
        for p in _splitCofactor( remaining, rhoBudget, rounds ):
            counts[ p ] = counts.get( p, 0 ) + 1
    return Factorization.fromCounts( n, counts )


# Groups of units

def eulerPhi( f ):
    """Euler's totient from a factorization.
       f: Factorization of n
       returns: phi( n )"""
    phi = 1
    for p, e in f:
        phi *= p ** ( e - 1 ) * ( p - 1 )
    return phi


@lru_cache( maxsize=64 )
def phiFactorization( f, **kwargs ):
    """Factorization of phi( n ), built from the factorization of n so
       that only the numbers p - 1 are ever factored.
       f: Factorization of n
       kwargs: passed on to factorize()"""
    counts = {}
    for p, e in f:
        if e > 1:
            counts[ p ] = counts.get( p, 0 ) + e - 1
        for s, k in factorize( p - 1, **kwargs ):
            counts[ s ] = counts.get( s, 0 ) + k
    return Factorization.fromCounts( eulerPhi( f ), counts )


def multiplicativeOrder( a, n, factorization=None, **kwargs ):
    """Least t >= 1 with a**t = 1 (mod n).
       a: integer coprime to n
       n: modulus >= 2
       factorization: Factorization of n, if already known
       kwargs: passed on to factorize()
       Starts from phi( n ) and strips prime factors while the power
       stays 1, so the cost is a few modular powers per prime of phi."""
    if n < 2:
        raise InvalidArgument( 'multiplicativeOrder: modulus must be >= 2, '
                               'got %d' % n )
    if _gcd( a, n ) != 1:
        raise NotCoprime( '%d is not invertible modulo %d' % ( a, n ) )
    if factorization is None:
        factorization = factorize( n, **kwargs )
    a %= n
    order = eulerPhi( factorization )
    for s, k in phiFactorization( factorization, **kwargs ):
        for _ in range( k ):
            if powMod( a, order // s, n ) != 1:
                break
            order //= s
    return order


def isGeneratorModPrimePower( a, q, k, lift=True, **kwargs ):
    """Does a generate the cyclic group U( Z/q**k )?
       a: integer coprime to q
       q: odd prime
       k: exponent >= 1
       lift: for k > 2 decide at q**2 instead; a primitive root mod q**2
             is one mod every higher power of q
       kwargs: passed on to factorize()"""
    if k < 1:
        raise InvalidArgument( 'isGeneratorModPrimePower: exponent must be '
                               '>= 1, got %d' % k )
    if q < 3 or not isPrime( q ):
        raise NotPrime( 'modulus base %d is not an odd prime' % q )
    if a % q == 0:
        raise NotCoprime( '%d is not invertible modulo %d**%d' % ( a, q, k ) )
    if lift and k > 2:
        debug( '*** generator test for %d mod %d**%d lifted to %d**2\n' %
               ( a, q, k, q ) )
        k = 2
    modulus = q ** k
    phi = q ** ( k - 1 ) * ( q - 1 )
    divisors = set( factorize( q - 1, **kwargs ).primes() )
    if k > 1:
        divisors.add( q )
    return all( powMod( a, phi // s, modulus ) != 1
                for s in sorted( divisors ) )


def liftedOrder( a, q, k, **kwargs ):
    """Order of a modulo q**k, lifted from its order modulo q.
       a: integer coprime to q
       q: odd prime
       k: exponent >= 1
       kwargs: passed on to factorize()
       With t = ord_q( a ) and v the power of q dividing a**t - 1, the
       order is t * q**max( 0, k - v ). Only a**t is ever reduced at
       q**k, and only when a**t = 1 (mod q**2)."""
    if k < 1:
        raise InvalidArgument( 'liftedOrder: exponent must be >= 1, got %d'
                               % k )
    if q < 3 or not isPrime( q ):
        raise NotPrime( 'modulus base %d is not an odd prime' % q )
    if a % q == 0:
        raise NotCoprime( '%d is not invertible modulo %d**%d' % ( a, q, k ) )
    t = multiplicativeOrder( a, q, **kwargs )
    if k == 1:
        return t
    if powMod( a, t, q * q ) != 1:
        return t * q ** ( k - 1 )
    rest = ( powMod( a, t, q ** k ) - 1 ) % q ** k
    v = 2
    while v < k and rest % q ** ( v + 1 ) == 0:
        v += 1
    debug( '*** liftedOrder: ord_%d( %d ) = %d, valuation %d\n' %
           ( q, a, t, v ) )
    return t * q ** ( k - v )
